#include <doctest.h>

#include <sstream>

#include "helpers.hpp"

using namespace preab;

TEST_CASE("records round-trip through their machine form") {
  IdentityRecord r;
  r.suite = "envelope";
  r.name = "kappa_compat1";
  r.anchor = "(id⊗κ)∘Δ = (-1)^{a-b+1} τ''23∘(id⊗κ)∘Δ";
  r.weight_cap = 3;
  r.inputs = 120;
  r.failures = 2;
  r.samples = {"E = x ⊗ 1: residual 1 * y", "E = y ⊗ 1: residual -2 * x"};
  r.note = "n";
  r.extension = true;
  const auto back = record_from_json(nlohmann::json::parse(to_json(r).dump()));
  CHECK(to_json(back) == to_json(r));
  r.informational = true;
  CHECK(record_from_json(to_json(r)).informational);
}

TEST_CASE("machine report has one record per line in a fixed field order") {
  const auto rep = check_axioms(pre_poisson_fixture());
  std::ostringstream os;
  emit_machine(os, rep);
  std::istringstream in(os.str());
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    const auto j = nlohmann::ordered_json::parse(line);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"suite", "identity", "anchor", "weight_cap", "inputs", "failures", "status",
                                           "extension", "note", "samples"});
    CHECK(record_from_json(j).name == rep.records[n].name);
    ++n;
  }
  CHECK(n == rep.records.size());
}

TEST_CASE("probe caps samples and merges shards in order") {
  Probe p({IdentityRecord{}}, 2);
  Probe a = p.fresh(), b = p.fresh();
  a.check(0, false, "a1");
  a.check(0, true, "-");
  b.check(0, false, "b1");
  b.check(0, false, "b2");
  p.merge(a);
  p.merge(b);
  const auto& r = p.records()[0];
  CHECK(r.inputs == 4);
  CHECK(r.failures == 3);
  CHECK(r.samples == std::vector<std::string>{"a1", "b1"});
}

TEST_CASE("text report names the failing identity") {
  SuiteReport s{"x", {}};
  IdentityRecord r;
  r.suite = "x";
  r.name = "broken";
  r.anchor = "a = b";
  r.inputs = 3;
  r.failures = 1;
  r.samples = {"sample"};
  s.records.push_back(r);
  std::ostringstream os;
  emit_text(os, s);
  CHECK(os.str().find("FAIL  broken  (1/3 failing") != std::string::npos);
  CHECK(os.str().find("- sample") != std::string::npos);
  CHECK_FALSE(s.passed());
  s.records[0].informational = true;
  CHECK(s.passed());
}
