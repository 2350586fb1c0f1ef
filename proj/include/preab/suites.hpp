#ifndef PREAB_SUITES_HPP
#define PREAB_SUITES_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "envelope.hpp"
#include "instances.hpp"
#include "prealgebra.hpp"
#include "prelie.hpp"
#include "symmetrized.hpp"
#include "tensor.hpp"

namespace preab {

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"axioms", "tensor", "prelie", "envelope", "symmetrized"};
  return names;
}

/// A single-sign mutant: the suite it targets and the sign it flips there.
struct Mutant {
  std::string name;
  std::string suite;
  SignTweaks tweaks;
};

inline const std::vector<Mutant>& mutants() {
  static const std::vector<Mutant> all = [] {
    std::vector<Mutant> m(5);
    m[0] = {"leibniz-twist", "axioms", {}};
    m[0].tweaks.leibniz_twist = true;
    m[1] = {"m2-swap", "tensor", {}};
    m[1].tweaks.m2_swap = true;
    m[2] = {"r2-ell", "prelie", {}};
    m[2].tweaks.r2_ell = true;
    m[3] = {"kappa-mirror", "envelope", {}};
    m[3].tweaks.kappa_mirror = true;
    m[4] = {"ell2-pair", "symmetrized", {}};
    m[4].tweaks.ell2_pair = true;
    return m;
  }();
  return all;
}

inline const Mutant& find_mutant(const std::string& name) {
  for (const auto& m : mutants())
    if (m.name == name) return m;
  throw std::invalid_argument("unknown mutant '" + name + "'");
}

struct RunConfig {
  std::string source = "builtin:zero-0-0";
  std::vector<std::string> suites{"all"};
  int weight = 4;
  int weight_pair = 3;
  std::size_t max_failures = 20;
  unsigned threads = 1;
  std::optional<std::string> mutant;

  /// Expands "all", drops duplicates, keeps the fixed suite order, and checks the caps.
  std::vector<std::string> resolved_suites() const {
    if (suites.empty()) throw std::invalid_argument("no suite selected");
    if (weight < 1 || weight_pair < 1) throw std::invalid_argument("weight caps must be >= 1");
    std::vector<std::string> out;
    for (const auto& n : suite_names()) {
      bool pick = false;
      for (const auto& s : suites) {
        if (s == "all" || s == n) pick = true;
        else if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
          throw std::invalid_argument("unknown suite '" + s + "'");
      }
      if (pick) out.push_back(n);
    }
    return out;
  }
};

/// Run one suite; a mutant only affects the suite it names.
inline SuiteReport run_suite(const std::string& name, const PreABInstance& I, const RunConfig& cfg) {
  SignTweaks tw;
  if (cfg.mutant) {
    const auto& m = find_mutant(*cfg.mutant);
    if (m.suite == name) tw = m.tweaks;
  }
  if (name == "axioms") return check_axioms(I, CheckOptions{cfg.max_failures, cfg.threads, tw});
  SuiteOptions o;
  o.weight = cfg.weight;
  o.weight_pair = std::min(cfg.weight_pair, cfg.weight);
  o.max_failures = cfg.max_failures;
  o.threads = cfg.threads;
  o.tweaks = tw;
  if (name == "tensor") return verify_Z_infinity(I, o);
  if (name == "prelie") return verify_prelie(I, o);
  if (name == "envelope") return verify_envelope(I, o);
  if (name == "symmetrized") return verify_symmetrized(I, o);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

inline std::vector<SuiteReport> run_suites(const PreABInstance& I, const RunConfig& cfg) {
  std::vector<SuiteReport> out;
  for (const auto& s : cfg.resolved_suites()) out.push_back(run_suite(s, I, cfg));
  return out;
}

inline bool all_passed(const std::vector<SuiteReport>& rs) {
  return std::all_of(rs.begin(), rs.end(), [](const SuiteReport& r) { return r.passed(); });
}

inline void emit_summary(std::ostream& os, const std::vector<SuiteReport>& rs) {
  long n = 0, bad = 0;
  for (const auto& s : rs)
    for (const auto& r : s.records)
      if (r.counts()) {
        ++n;
        if (!r.passed()) ++bad;
      }
  os << "summary: " << n << " identities, " << bad << " failing\n";
}

}  // namespace preab

#endif  // PREAB_SUITES_HPP
