#ifndef PREAB_INSTANCES_HPP
#define PREAB_INSTANCES_HPP

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "prealgebra.hpp"
#include "signs.hpp"

namespace preab {

struct PolyFormsConfig {
  int num_vars = 1;
  int max_poly_degree = 2;
};

namespace detail {

// exterior monomial as a sorted list of variable indices
using Ext = std::vector<int>;

// dx_S1 ∧ dx_S2 = sign dx_{S1 ∪ S2}, or sign 0 when they share a variable
inline std::pair<Ext, int> ext_merge(const Ext& s1, const Ext& s2) {
  std::vector<int> seq = s1;
  seq.insert(seq.end(), s2.begin(), s2.end());
  long inv = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] == seq[j]) return {{}, 0};
      if (seq[i] > seq[j]) ++inv;
    }
  std::sort(seq.begin(), seq.end());
  return {seq, sign_of(inv)};
}

inline std::string var_name(int i, int nv) {
  static const char* names[] = {"x", "y", "z", "w"};
  if (nv <= 4) return names[i];
  return "x" + std::to_string(i + 1);
}

}  // namespace detail

/// Polynomial differential forms in num_vars variables, coefficients of polynomial degree at most
/// max_poly_degree. |alpha| = 2k+3 for a k-form, alpha∧beta = (1/|beta|) alpha·dbeta and
/// alpha◊beta = alpha·beta, with a = -1 and b = -3. Products leaving the window are dropped, and
/// the window is recorded so that checks only combine letters whose weights fit.
inline PreABInstance build_forms_instance(const PolyFormsConfig& cfg) {
  if (cfg.num_vars < 1) throw std::invalid_argument("forms: need at least one variable");
  if (cfg.max_poly_degree < 0) throw std::invalid_argument("forms: negative polynomial degree");
  const int nv = cfg.num_vars, N = cfg.max_poly_degree;
  using Mono = std::vector<int>;
  std::vector<Mono> monos;
  {
    Mono e(static_cast<std::size_t>(nv), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
      if (i == nv) {
        monos.push_back(e);
        return;
      }
      for (int p = 0; p <= left; ++p) {
        e[static_cast<std::size_t>(i)] = p;
        rec(i + 1, left - p);
      }
      e[static_cast<std::size_t>(i)] = 0;
    };
    rec(0, N);
    std::sort(monos.begin(), monos.end());
  }
  std::vector<detail::Ext> exts;
  for (int k = 0; k <= nv; ++k)
    detail::for_each_subset(nv, k, [&](const std::vector<int>& c) { exts.push_back(c); });

  using Key = std::pair<Mono, detail::Ext>;
  std::vector<Key> keys;
  for (const auto& s : exts)
    for (const auto& m : monos) keys.emplace_back(m, s);
  std::map<Key, int> idx;
  for (std::size_t i = 0; i < keys.size(); ++i) idx[keys[i]] = static_cast<int>(i);

  PreABInstance I;
  I.a = -1;
  I.b = -3;
  I.label = "forms:" + std::to_string(nv) + "," + std::to_string(N);
  I.window = N;
  for (const auto& [m, s] : keys) {
    std::string poly, diff;
    int w = 0;
    for (int i = 0; i < nv; ++i) {
      const int p = m[static_cast<std::size_t>(i)];
      w += p;
      if (!p) continue;
      if (!poly.empty()) poly += "*";
      poly += detail::var_name(i, nv) + (p > 1 ? "^" + std::to_string(p) : "");
    }
    for (int v : s) {
      if (!diff.empty()) diff += "^";
      diff += "d" + detail::var_name(v, nv);
    }
    std::string nm = poly.empty() ? diff : (diff.empty() ? poly : poly + "*" + diff);
    if (nm.empty()) nm = "1";
    I.basis.push_back({nm, 2 * static_cast<int>(s.size()) + 3, w});
  }

  using Form = std::map<Key, Scalar>;
  auto mul = [&](const Form& u, const Form& v) {
    Form out;
    for (const auto& [k1, c1] : u)
      for (const auto& [k2, c2] : v) {
        auto [s, sg] = detail::ext_merge(k1.second, k2.second);
        if (!sg) continue;
        Mono e(static_cast<std::size_t>(nv));
        for (int i = 0; i < nv; ++i) e[static_cast<std::size_t>(i)] = k1.first[i] + k2.first[i];
        out[{e, s}] += c1 * c2 * sg;
      }
    return out;
  };
  auto d = [&](const Form& u) {
    Form out;
    for (const auto& [k, c] : u)
      for (int i = 0; i < nv; ++i) {
        if (k.first[static_cast<std::size_t>(i)] == 0) continue;
        auto [s, sg] = detail::ext_merge({i}, k.second);
        if (!sg) continue;
        Mono e = k.first;
        e[static_cast<std::size_t>(i)] -= 1;
        out[{e, s}] += c * sg * k.first[static_cast<std::size_t>(i)];
      }
    return out;
  };
  auto to_vec = [&](const Form& f, const Scalar& scale) {
    Vec<int> v;
    for (const auto& [k, c] : f) {
      auto it = idx.find(k);
      if (it != idx.end()) v.add(it->second, c * scale);
    }
    return v;
  };
  for (std::size_t i = 0; i < keys.size(); ++i)
    for (std::size_t j = 0; j < keys.size(); ++j) {
      Form fi{{keys[i], Scalar(1)}}, fj{{keys[j], Scalar(1)}};
      const int dj = I.basis[j].degree;
      auto w = to_vec(mul(fi, d(fj)), Scalar(1, dj));
      auto m = to_vec(mul(fi, fj), Scalar(1));
      if (!w.empty()) I.wedge_table[{static_cast<int>(i), static_cast<int>(j)}] = w;
      if (!m.empty()) I.diamond_table[{static_cast<int>(i), static_cast<int>(j)}] = m;
    }
  return I;
}

/// Zero products on letters e0, e1, ... with the given unshifted degrees.
inline PreABInstance zero_instance(int a, int b, std::vector<int> degrees = {0, 1, 2}) {
  PreABInstance I;
  I.a = a;
  I.b = b;
  I.label = "zero-" + std::to_string(a) + "-" + std::to_string(b);
  for (std::size_t i = 0; i < degrees.size(); ++i) I.basis.push_back({"e" + std::to_string(i), degrees[i], 0});
  return I;
}

/// Zero products with the differential e0 -> e1 (degrees 0, 1, 2), which exercises the d-terms.
inline PreABInstance zero_with_differential(int a, int b) {
  auto I = zero_instance(a, b);
  I.label = "zero-d-" + std::to_string(a) + "-" + std::to_string(b);
  I.has_diff = true;
  I.diff_table[0] = Vec<int>::unit(1);
  return I;
}

namespace detail {

// k[t]/(t^N) ⊗ Λ(xi, eta) with |t| = 0, |xi| = |eta| = 1. Basis keys are (t power, xi, eta).
struct GrassmannT {
  int N;
  using Key = std::tuple<int, int, int>;
  std::vector<Key> keys;
  std::map<Key, int> idx;

  explicit GrassmannT(int n) : N(n) {
    for (auto [p, q] : {std::pair{0, 0}, {1, 0}, {0, 1}, {1, 1}})
      for (int k = 0; k < N; ++k) {
        idx[{k, p, q}] = static_cast<int>(keys.size());
        keys.emplace_back(k, p, q);
      }
  }
  std::vector<BasisElement> basis() const {
    std::vector<BasisElement> out;
    for (auto [k, p, q] : keys) {
      std::vector<std::string> parts;
      if (k) parts.push_back(k == 1 ? "t" : "t^" + std::to_string(k));
      if (p) parts.push_back("xi");
      if (q) parts.push_back("eta");
      std::string nm;
      for (const auto& s : parts) nm += (nm.empty() ? "" : "*") + s;
      out.push_back({nm.empty() ? "1" : nm, p + q, 0});
    }
    return out;
  }
  // product of basis element i with sum c_k key_k
  Vec<int> mul(int i, const std::map<Key, Scalar>& v) const {
    auto [k1, p1, q1] = keys[static_cast<std::size_t>(i)];
    Vec<int> out;
    for (const auto& [key, c] : v) {
      auto [k2, p2, q2] = key;
      if (p1 + p2 > 1 || q1 + q2 > 1 || k1 + k2 >= N) continue;
      const int s = sign_of(static_cast<long>(q1) * p2);  // eta of the left factor passes xi of the right
      out.add(idx.at({k1 + k2, p1 + p2, q1 + q2}), c * s);
    }
    return out;
  }
  // phi(t^k xi) = t^{k+1}/(k+1) eta, zero on the other monomials
  std::map<Key, Scalar> phi(int j) const {
    auto [k, p, q] = keys[static_cast<std::size_t>(j)];
    if (p == 1 && q == 0 && k + 1 < N) return {{{k + 1, 0, 1}, Scalar(1, k + 1)}};
    return {};
  }
};

}  // namespace detail

/// Pre-Gerstenhaber fixture (a=0, b=-1): x∧y = x·phi(y) and x◊y = x·∂_xi(y).
inline PreABInstance pre_gerstenhaber_fixture(int N = 2) {
  detail::GrassmannT G(N);
  PreABInstance I;
  I.a = 0;
  I.b = -1;
  I.label = "pre-gerstenhaber-fixture";
  I.basis = G.basis();
  const int n = static_cast<int>(G.keys.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto w = G.mul(i, G.phi(j));
      auto [k, p, q] = G.keys[static_cast<std::size_t>(j)];
      std::map<detail::GrassmannT::Key, Scalar> dxi;
      if (p == 1) dxi[{k, 0, q}] = 1;
      auto m = G.mul(i, dxi);
      if (!w.empty()) I.wedge_table[{i, j}] = w;
      if (!m.empty()) I.diamond_table[{i, j}] = m;
    }
  return I;
}

/// Pre-Poisson fixture (a=b=0): x∧y = x·phi(y) and x◊y = x·L(y) with L = eta ∂_xi.
inline PreABInstance pre_poisson_fixture(int N = 2) {
  detail::GrassmannT G(N);
  PreABInstance I;
  I.a = 0;
  I.b = 0;
  I.label = "pre-poisson-fixture";
  I.basis = G.basis();
  const int n = static_cast<int>(G.keys.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto w = G.mul(i, G.phi(j));
      auto [k, p, q] = G.keys[static_cast<std::size_t>(j)];
      std::map<detail::GrassmannT::Key, Scalar> L;
      if (p == 1 && q == 0) L[{k, 0, 1}] = 1;
      auto m = G.mul(i, L);
      if (!w.empty()) I.wedge_table[{i, j}] = w;
      if (!m.empty()) I.diamond_table[{i, j}] = m;
    }
  return I;
}

/// Drop every letter not named in `keep` (products into dropped letters are dropped too).
inline PreABInstance restrict_alphabet(const PreABInstance& src, const std::vector<std::string>& keep) {
  std::map<int, int> remap;
  PreABInstance I;
  I.a = src.a;
  I.b = src.b;
  I.window = src.window;
  I.has_diff = src.has_diff;
  I.label = src.label + "|";
  for (const auto& nm : keep) {
    auto id = src.find(nm);
    if (!id) throw std::invalid_argument("restrict_alphabet: unknown letter '" + nm + "'");
    remap[*id] = I.size();
    I.basis.push_back(src.basis[static_cast<std::size_t>(*id)]);
    I.label += (I.basis.size() > 1 ? "," : "") + nm;
  }
  auto mapv = [&](const Vec<int>& v) {
    Vec<int> out;
    for (const auto& [k, c] : v)
      if (remap.count(k)) out.add(remap[k], c);
    return out;
  };
  for (const auto* t : {&src.wedge_table, &src.diamond_table})
    for (const auto& [key, v] : *t) {
      if (!remap.count(key.first) || !remap.count(key.second)) continue;
      auto mv = mapv(v);
      if (mv.empty()) continue;
      (t == &src.wedge_table ? I.wedge_table : I.diamond_table)[{remap[key.first], remap[key.second]}] = mv;
    }
  for (const auto& [k, v] : src.diff_table)
    if (remap.count(k)) {
      auto mv = mapv(v);
      if (!mv.empty()) I.diff_table[remap[k]] = mv;
    }
  return I;
}

// ---- instance documents ----

inline nlohmann::ordered_json save_instance(const PreABInstance& I) {
  using J = nlohmann::ordered_json;
  J doc;
  doc["label"] = I.label;
  doc["a"] = I.a;
  doc["b"] = I.b;
  if (I.window) doc["window"] = *I.window;
  J basis = J::array();
  for (const auto& e : I.basis) {
    J x;
    x["name"] = e.name;
    x["degree"] = e.degree;
    if (e.weight) x["weight"] = e.weight;
    basis.push_back(x);
  }
  doc["basis"] = basis;
  auto result = [&](const Vec<int>& v) {
    J r = J::array();
    for (const auto& [k, c] : v) r.push_back(J{{"basis", I.name(k)}, {"coeff", c.get_str()}});
    return r;
  };
  auto table = [&](const Table& t) {
    J arr = J::array();
    for (const auto& [key, v] : t)
      arr.push_back(J{{"left", I.name(key.first)}, {"right", I.name(key.second)}, {"result", result(v)}});
    return arr;
  };
  doc["wedge"] = table(I.wedge_table);
  doc["diamond"] = table(I.diamond_table);
  if (I.has_diff) {
    J arr = J::array();
    for (const auto& [k, v] : I.diff_table) arr.push_back(J{{"left", I.name(k)}, {"result", result(v)}});
    doc["differential"] = arr;
  }
  return doc;
}

/// Parse and validate an instance document. Errors name the offending location.
inline PreABInstance load_instance(const nlohmann::json& doc) {
  PreABInstance I;
  auto where = [](const std::string& path, const std::string& msg) { return std::invalid_argument(path + ": " + msg); };
  try {
    I.a = doc.at("a").get<int>();
    I.b = doc.at("b").get<int>();
    I.label = doc.value("label", std::string("document"));
    if (doc.contains("window")) I.window = doc.at("window").get<int>();
    const auto& basis = doc.at("basis");
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const auto& e = basis[i];
      I.basis.push_back({e.at("name").get<std::string>(), e.at("degree").get<int>(), e.value("weight", 0)});
    }
  } catch (const nlohmann::json::exception& ex) {
    throw where("header", ex.what());
  }
  auto letter = [&](const nlohmann::json& j, const std::string& path) {
    auto nm = j.get<std::string>();
    auto id = I.find(nm);
    if (!id) throw where(path, "unknown basis element '" + nm + "'");
    return *id;
  };
  auto result = [&](const nlohmann::json& arr, const std::string& path) {
    Vec<int> v;
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const std::string p = path + ".result[" + std::to_string(k) + "]";
      try {
        v.add(letter(arr[k].at("basis"), p), parse_scalar(arr[k].at("coeff").get<std::string>()));
      } catch (const nlohmann::json::exception& ex) {
        throw where(p, ex.what());
      } catch (const std::invalid_argument& ex) {
        const std::string msg = ex.what();
        throw msg.rfind(p, 0) == 0 ? ex : where(p, msg);
      }
    }
    return v;
  };
  for (const char* key : {"wedge", "diamond"}) {
    if (!doc.contains(key)) continue;
    const auto& arr = doc.at(key);
    Table& t = std::string(key) == "wedge" ? I.wedge_table : I.diamond_table;
    for (std::size_t n = 0; n < arr.size(); ++n) {
      const std::string p = std::string(key) + "[" + std::to_string(n) + "]";
      try {
        const int l = letter(arr[n].at("left"), p + ".left");
        const int r = letter(arr[n].at("right"), p + ".right");
        auto v = result(arr[n].at("result"), p);
        t[{l, r}].add(v);
      } catch (const nlohmann::json::exception& ex) {
        throw where(p, ex.what());
      }
    }
  }
  if (doc.contains("differential")) {
    I.has_diff = true;
    const auto& arr = doc.at("differential");
    for (std::size_t n = 0; n < arr.size(); ++n) {
      const std::string p = "differential[" + std::to_string(n) + "]";
      try {
        I.diff_table[letter(arr[n].at("left"), p + ".left")].add(result(arr[n].at("result"), p));
      } catch (const nlohmann::json::exception& ex) {
        throw where(p, ex.what());
      }
    }
  }
  for (auto* t : {&I.wedge_table, &I.diamond_table}) std::erase_if(*t, [](const auto& kv) { return kv.second.empty(); });
  std::erase_if(I.diff_table, [](const auto& kv) { return kv.second.empty(); });
  I.validate();
  return I;
}

inline PreABInstance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& ex) {
    throw std::invalid_argument(path + ": parse error at byte " + std::to_string(ex.byte) + ": " + ex.what());
  }
  try {
    return load_instance(doc);
  } catch (const std::invalid_argument& ex) {
    throw std::invalid_argument(path + ": " + ex.what());
  }
}

inline std::vector<std::string> builtin_names() {
  return {"zero-0-0",        "zero-0--1", "zero--1--3", "zero-d-0-0", "forms", "pre-gerstenhaber-fixture",
          "pre-poisson-fixture"};
}

/// Resolve builtin:NAME, forms:vars,maxdeg or a document path.
inline PreABInstance resolve_instance(const std::string& source) {
  auto starts = [&](const char* p) { return source.rfind(p, 0) == 0; };
  if (starts("builtin:")) {
    const std::string nm = source.substr(8);
    if (nm == "zero-0-0") return zero_instance(0, 0);
    if (nm == "zero-0--1") return zero_instance(0, -1);
    if (nm == "zero--1--3") return zero_instance(-1, -3);
    if (nm == "zero-d-0-0") return zero_with_differential(0, 0);
    if (nm == "forms") return build_forms_instance({1, 2});
    if (nm == "pre-gerstenhaber-fixture") return pre_gerstenhaber_fixture();
    if (nm == "pre-poisson-fixture") return pre_poisson_fixture();
    throw std::invalid_argument("unknown builtin '" + nm + "'");
  }
  if (starts("forms:")) {
    const std::string rest = source.substr(6);
    auto comma = rest.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("forms source must be forms:vars,maxdeg");
    std::size_t used1 = 0, used2 = 0;
    int v = 0, d = 0;
    try {
      v = std::stoi(rest.substr(0, comma), &used1);
      d = std::stoi(rest.substr(comma + 1), &used2);
    } catch (const std::exception&) {
      throw std::invalid_argument("forms source must be forms:vars,maxdeg");
    }
    if (used1 != comma || used2 != rest.size() - comma - 1)
      throw std::invalid_argument("forms source must be forms:vars,maxdeg");
    return build_forms_instance({v, d});
  }
  return load_instance_file(source);
}

}  // namespace preab

#endif  // PREAB_INSTANCES_HPP
