#ifndef PREAB_REPORT_HPP
#define PREAB_REPORT_HPP

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <exception>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

namespace preab {

/// Outcome of one identity over every input of its slice.
struct IdentityRecord {
  std::string suite;
  std::string name;
  std::string anchor;  // the identity being checked, as a formula
  int weight_cap = 0;
  long inputs = 0;
  long failures = 0;
  std::vector<std::string> samples;
  std::string note;
  bool informational = false;  // never affects exit status
  bool extension = false;      // rule added on top of the stated axioms

  bool passed() const { return failures == 0; }
  bool counts() const { return !informational; }
};

struct SuiteReport {
  std::string suite;
  std::vector<IdentityRecord> records;

  bool passed() const {
    return std::all_of(records.begin(), records.end(),
                       [](const IdentityRecord& r) { return !r.counts() || r.passed(); });
  }
  const IdentityRecord* find(const std::string& name) const {
    for (const auto& r : records)
      if (r.name == name) return &r;
    return nullptr;
  }
};

/// Collects pass/fail outcomes for a fixed list of identities. A family evaluated in parallel
/// keeps one Probe per shard and merges them in shard order, so reports do not depend on the
/// thread count.
class Probe {
 public:
  Probe(std::vector<IdentityRecord> recs, std::size_t max_samples)
      : recs_(std::move(recs)), max_samples_(max_samples) {}

  std::size_t index(const std::string& name) const {
    for (std::size_t i = 0; i < recs_.size(); ++i)
      if (recs_[i].name == name) return i;
    throw std::logic_error("unknown identity " + name);
  }

  template <class Describe>
    requires std::invocable<Describe&>
  void check(std::size_t i, bool ok, Describe&& describe) {
    auto& r = recs_[i];
    ++r.inputs;
    if (!ok) {
      ++r.failures;
      if (r.samples.size() < max_samples_) r.samples.push_back(describe());
    }
  }
  void check(std::size_t i, bool ok, const std::string& what) {
    check(i, ok, [&] { return what; });
  }

  void merge(const Probe& o) {
    for (std::size_t i = 0; i < recs_.size(); ++i) {
      auto& r = recs_[i];
      const auto& s = o.recs_[i];
      r.inputs += s.inputs;
      r.failures += s.failures;
      for (const auto& x : s.samples)
        if (r.samples.size() < max_samples_) r.samples.push_back(x);
    }
  }

  Probe fresh() const {
    auto copy = recs_;
    for (auto& r : copy) {
      r.inputs = r.failures = 0;
      r.samples.clear();
    }
    return Probe(std::move(copy), max_samples_);
  }

  std::vector<IdentityRecord>& records() { return recs_; }

 private:
  std::vector<IdentityRecord> recs_;
  std::size_t max_samples_;
};

/// Run body(input, probe) over all inputs, split into contiguous shards.
template <class In, class Body>
void run_sharded(const std::vector<In>& inputs, Probe& probe, unsigned threads, Body&& body) {
  if (threads <= 1 || inputs.size() < 2 * static_cast<std::size_t>(threads)) {
    for (const auto& x : inputs) body(x, probe);
    return;
  }
  const std::size_t n = inputs.size();
  std::vector<Probe> shards;
  shards.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) shards.push_back(probe.fresh());
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        const std::size_t lo = n * t / threads, hi = n * (t + 1) / threads;
        for (std::size_t i = lo; i < hi; ++i) body(inputs[i], shards[t]);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (const auto& s : shards) probe.merge(s);
}

inline nlohmann::ordered_json to_json(const IdentityRecord& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["identity"] = r.name;
  j["anchor"] = r.anchor;
  j["weight_cap"] = r.weight_cap;
  j["inputs"] = r.inputs;
  j["failures"] = r.failures;
  j["status"] = r.informational ? "info" : (r.passed() ? "pass" : "fail");
  j["extension"] = r.extension;
  j["note"] = r.note;
  j["samples"] = r.samples;
  return j;
}

inline IdentityRecord record_from_json(const nlohmann::json& j) {
  IdentityRecord r;
  r.suite = j.at("suite").get<std::string>();
  r.name = j.at("identity").get<std::string>();
  r.anchor = j.at("anchor").get<std::string>();
  r.weight_cap = j.at("weight_cap").get<int>();
  r.inputs = j.at("inputs").get<long>();
  r.failures = j.at("failures").get<long>();
  r.informational = j.at("status").get<std::string>() == "info";
  r.extension = j.at("extension").get<bool>();
  r.note = j.at("note").get<std::string>();
  r.samples = j.at("samples").get<std::vector<std::string>>();
  return r;
}

inline void emit_text(std::ostream& os, const SuiteReport& s) {
  os << "[" << s.suite << "]\n";
  for (const auto& r : s.records) {
    const char* status = r.informational ? "INFO" : (r.passed() ? "PASS" : "FAIL");
    os << "  " << status << "  " << r.name << "  (" << r.failures << "/" << r.inputs << " failing, weight <= "
       << r.weight_cap << ")";
    if (r.extension) os << " [extension]";
    os << "\n      " << r.anchor << "\n";
    if (!r.note.empty()) os << "      note: " << r.note << "\n";
    for (const auto& x : r.samples) os << "      - " << x << "\n";
  }
}

inline void emit_machine(std::ostream& os, const SuiteReport& s) {
  for (const auto& r : s.records) os << to_json(r).dump() << "\n";
}

}  // namespace preab

#endif  // PREAB_REPORT_HPP
