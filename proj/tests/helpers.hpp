#ifndef PREAB_TESTS_HELPERS_HPP
#define PREAB_TESTS_HELPERS_HPP

#include <string>
#include <vector>

#include <preab/preab.hpp>

namespace th {

inline std::string data_path(const std::string& name) { return std::string(PREAB_SOURCE_DIR) + "/data/" + name; }

inline preab::Word W(std::vector<int> v) { return preab::Word(std::move(v)); }

inline const preab::IdentityRecord& get(const preab::SuiteReport& r, const std::string& name) {
  const auto* p = r.find(name);
  if (!p) throw std::runtime_error("missing identity " + name);
  return *p;
}

inline bool clean(const preab::SuiteReport& r, const std::string& name) {
  const auto& x = get(r, name);
  return x.passed() && x.inputs > 0;
}

inline preab::SuiteOptions opts(int w, int p = 3) {
  preab::SuiteOptions o;
  o.weight = w;
  o.weight_pair = std::min(w, p);
  return o;
}

// three letters of unshifted degrees 0, 1, 2 with zero products
inline preab::PreABInstance zero(int a, int b) { return preab::zero_instance(a, b); }

}  // namespace th

#endif
