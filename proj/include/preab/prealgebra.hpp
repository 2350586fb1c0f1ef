#ifndef PREAB_PREALGEBRA_HPP
#define PREAB_PREALGEBRA_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "linear.hpp"
#include "report.hpp"
#include "scalar.hpp"

namespace preab {

/// Single-sign corruptions used to show that each suite can fail. Each flag flips exactly one
/// sign at one site, and the runner only enables it inside the suite that owns that site.
struct SignTweaks {
  bool leibniz_twist = false;  // axioms: sign of the second term of the bracket Leibniz rule
  bool m2_swap = false;        // tensor: sign of the swapped term of m2
  bool r2_ell = false;         // prelie: sign of the first ell-insertion term of R2
  bool kappa_mirror = false;   // envelope: sign of the mirror term of kappa
  bool ell2_pair = false;      // symmetrized: sign of the pair replacement in ell2
};

struct BasisElement {
  std::string name;
  int degree = 0;  // unshifted |alpha|
  int weight = 0;  // truncation weight (polynomial degree for forms), 0 otherwise
};

using Table = std::map<std::pair<int, int>, Vec<int>>;

class PreABInstance {
 public:
  std::string label;
  int a = 0;
  int b = 0;
  std::vector<BasisElement> basis;
  Table wedge_table;
  Table diamond_table;
  std::map<int, Vec<int>> diff_table;
  bool has_diff = false;
  std::optional<int> window;  // letters are combined only while their weights sum to <= window

  int size() const { return static_cast<int>(basis.size()); }
  int degree(int i) const { return basis.at(static_cast<std::size_t>(i)).degree; }
  const std::string& name(int i) const { return basis.at(static_cast<std::size_t>(i)).name; }

  std::optional<int> find(const std::string& nm) const {
    for (int i = 0; i < size(); ++i)
      if (basis[static_cast<std::size_t>(i)].name == nm) return i;
    return std::nullopt;
  }

  /// dg of a letter in A[-a+1].
  long dg(int i) const { return degree(i) + a - 1; }
  long dg(const Word& w) const {
    long s = 0;
    for (int x : w) s += dg(x);
    return s;
  }
  /// Grading of H[a-b-1].
  long dg1(const Word& w) const { return dg(w) - a + b + 1; }
  /// Grading of H[a-b].
  long dg2(const Word& w) const { return dg(w) - a + b; }

  long weight(const Word& w) const {
    long s = 0;
    for (int x : w) s += basis.at(static_cast<std::size_t>(x)).weight;
    return s;
  }
  bool in_window(const Word& w) const { return !window || weight(w) <= *window; }

  Vec<int> wedge(int i, int j) const { return lookup(wedge_table, i, j); }
  Vec<int> diamond(int i, int j) const { return lookup(diamond_table, i, j); }
  Vec<int> differential(int i) const {
    check_index(i);
    auto it = diff_table.find(i);
    return it == diff_table.end() ? Vec<int>() : it->second;
  }

  Vec<int> wedge(const Vec<int>& u, const Vec<int>& v) const {
    return bilinear(u, v, [&](int i, int j) { return wedge(i, j); });
  }
  Vec<int> diamond(const Vec<int>& u, const Vec<int>& v) const {
    return bilinear(u, v, [&](int i, int j) { return diamond(i, j); });
  }
  Vec<int> differential(const Vec<int>& u) const {
    return linear(u, [&](int i) { return differential(i); });
  }

  std::string format(const Vec<int>& v) const {
    return preab::format(v, [&](int i) { return name(i); });
  }

  /// Throws std::invalid_argument naming the first degree-inconsistent or out-of-range entry.
  void validate() const {
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j)
        if (basis[i].name == basis[j].name) throw std::invalid_argument("duplicate basis name '" + basis[i].name + "'");
    auto check_table = [&](const Table& t, const char* what, int deg) {
      for (const auto& [key, v] : t) {
        auto [l, r] = key;
        if (l < 0 || l >= size() || r < 0 || r >= size())
          throw std::invalid_argument(std::string(what) + ": entry refers to an unknown basis element");
        for (const auto& [k, c] : v) {
          if (k < 0 || k >= size())
            throw std::invalid_argument(std::string(what) + ": result refers to an unknown basis element");
          if (degree(k) != degree(l) + degree(r) + deg)
            throw std::invalid_argument(std::string(what) + " entry (" + name(l) + ", " + name(r) + ") -> " + name(k) +
                                        ": degree " + std::to_string(degree(k)) + " but expected " +
                                        std::to_string(degree(l) + degree(r) + deg));
        }
      }
    };
    check_table(wedge_table, "wedge", a);
    check_table(diamond_table, "diamond", b);
    for (const auto& [l, v] : diff_table) {
      if (l < 0 || l >= size()) throw std::invalid_argument("differential: unknown basis element");
      for (const auto& [k, c] : v) {
        if (k < 0 || k >= size()) throw std::invalid_argument("differential: result refers to an unknown basis element");
        if (degree(k) != degree(l) + 1)
          throw std::invalid_argument("differential entry " + name(l) + " -> " + name(k) + ": degree " +
                                      std::to_string(degree(k)) + " but expected " + std::to_string(degree(l) + 1));
      }
    }
  }

 private:
  void check_index(int i) const {
    if (i < 0 || i >= size()) throw std::out_of_range("basis element " + std::to_string(i) + " is not in the instance");
  }
  Vec<int> lookup(const Table& t, int i, int j) const {
    check_index(i);
    check_index(j);
    auto it = t.find({i, j});
    return it == t.end() ? Vec<int>() : it->second;
  }
};

/// The shifted laws on A[-a+1]: wedge' and diamond' and their antisymmetrizations m2 and ell.
/// Tables are computed once per instance.
class ShiftedLaws {
 public:
  explicit ShiftedLaws(const PreABInstance& inst, SignTweaks tw = {}) : I(inst) {
    const int n = I.size();
    const long e = I.b - I.a + 1;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Vec<int> w = Scalar(sign_of(I.dg(i))) * I.wedge(i, j);
        Vec<int> d = Scalar(sign_of(e * I.dg(i))) * I.diamond(i, j);
        if (!w.empty()) wp_[{i, j}] = w;
        if (!d.empty()) dp_[{i, j}] = d;
      }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const long ij = I.dg(i) * I.dg(j);
        Vec<int> m = wedge(i, j);
        m.add(wedge(j, i), Scalar(-sign_of(ij) * (tw.m2_swap ? -1 : 1)));
        Vec<int> l = diamond(i, j);
        l.add(diamond(j, i), Scalar(-sign_of(ij + e)));
        if (!m.empty()) m2_[{i, j}] = m;
        if (!l.empty()) ell_[{i, j}] = l;
      }
  }

  const PreABInstance& I;

  Vec<int> wedge(int i, int j) const { return get(wp_, i, j); }
  Vec<int> diamond(int i, int j) const { return get(dp_, i, j); }
  Vec<int> m2(int i, int j) const { return get(m2_, i, j); }
  Vec<int> ell(int i, int j) const { return get(ell_, i, j); }

  Vec<int> wedge(const Vec<int>& u, const Vec<int>& v) const {
    return bilinear(u, v, [&](int i, int j) { return wedge(i, j); });
  }
  Vec<int> diamond(const Vec<int>& u, const Vec<int>& v) const {
    return bilinear(u, v, [&](int i, int j) { return diamond(i, j); });
  }
  Vec<int> m2(const Vec<int>& u, const Vec<int>& v) const {
    return bilinear(u, v, [&](int i, int j) { return m2(i, j); });
  }
  Vec<int> ell(const Vec<int>& u, const Vec<int>& v) const {
    return bilinear(u, v, [&](int i, int j) { return ell(i, j); });
  }

 private:
  static Vec<int> get(const Table& t, int i, int j) {
    auto it = t.find({i, j});
    return it == t.end() ? Vec<int>() : it->second;
  }
  Table wp_, dp_, m2_, ell_;
};

/// Symmetrized (a,b)-algebra: product . and bracket [,], plus the shifted mu and ell on A[-a+1].
class ABInstance {
 public:
  explicit ABInstance(const PreABInstance& inst) : I(inst) {
    const int n = I.size();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Vec<int> p = I.wedge(i, j);
        p.add(I.wedge(j, i), Scalar(sign_of(static_cast<long>(I.degree(i) + I.a) * (I.degree(j) + I.a))));
        Vec<int> q = I.diamond(i, j);
        q.add(I.diamond(j, i), Scalar(-sign_of(static_cast<long>(I.degree(i) + I.b) * (I.degree(j) + I.b))));
        if (!p.empty()) prod_[{i, j}] = p;
        if (!q.empty()) br_[{i, j}] = q;
      }
  }

  const PreABInstance& I;

  int a() const { return I.a; }
  int b() const { return I.b; }
  long dg(int i) const { return I.dg(i); }
  long dg(const Word& w) const { return I.dg(w); }

  Vec<int> product(int i, int j) const { return get(prod_, i, j); }
  Vec<int> bracket(int i, int j) const { return get(br_, i, j); }
  Vec<int> product(const Vec<int>& u, const Vec<int>& v) const {
    return bilinear(u, v, [&](int i, int j) { return product(i, j); });
  }
  Vec<int> bracket(const Vec<int>& u, const Vec<int>& v) const {
    return bilinear(u, v, [&](int i, int j) { return bracket(i, j); });
  }
  /// mu(alpha, beta) = (-1)^{alpha} alpha.beta
  Vec<int> mu(int i, int j) const { return Scalar(sign_of(dg(i))) * product(i, j); }
  /// ell(alpha, beta) = (-1)^{(b-a+1) alpha} [alpha, beta]
  Vec<int> ell(int i, int j) const { return Scalar(sign_of((I.b - I.a + 1) * dg(i))) * bracket(i, j); }
  Vec<int> mu(const Vec<int>& u, const Vec<int>& v) const {
    return bilinear(u, v, [&](int i, int j) { return mu(i, j); });
  }
  Vec<int> ell(const Vec<int>& u, const Vec<int>& v) const {
    return bilinear(u, v, [&](int i, int j) { return ell(i, j); });
  }

 private:
  static Vec<int> get(const Table& t, int i, int j) {
    auto it = t.find({i, j});
    return it == t.end() ? Vec<int>() : it->second;
  }
  Table prod_, br_;
};

inline ABInstance symmetrize(const PreABInstance& inst) { return ABInstance(inst); }

struct CheckOptions {
  std::size_t max_failures = 20;
  unsigned threads = 1;
  SignTweaks tweaks;
};

namespace detail {

struct Triple {
  int x, y, z;
};

inline std::vector<Triple> window_triples(const PreABInstance& I) {
  std::vector<Triple> out;
  for (int x = 0; x < I.size(); ++x)
    for (int y = 0; y < I.size(); ++y)
      for (int z = 0; z < I.size(); ++z)
        if (I.in_window(Word{x, y, z})) out.push_back({x, y, z});
  return out;
}

inline IdentityRecord rec(const std::string& suite, const std::string& name, const std::string& anchor,
                          bool extension = false) {
  IdentityRecord r;
  r.suite = suite;
  r.name = name;
  r.anchor = anchor;
  r.extension = extension;
  return r;
}

}  // namespace detail

/// Every axiom family on basis triples inside the window: the pre-(a,b) relations, their
/// shifted forms, the symmetrized (a,b)-algebra and its shifted laws. d rules are included only
/// when the instance carries a differential.
inline SuiteReport check_axioms(const PreABInstance& I, const CheckOptions& opt = {}) {
  const std::string S = "axioms";
  using detail::rec;
  std::vector<IdentityRecord> R = {
      rec(S, "zinbiel", "(x∧y)∧z = x∧(y∧z) + (-1)^{(|y|+a)(|z|+a)} x∧(z∧y)"),
      rec(S, "prelie", "(x◊y)◊z - x◊(y◊z) = (-1)^{(|y|+b)(|z|+b)} ((x◊z)◊y - x◊(z◊y))"),
      rec(S, "compat1", "x∧(y◊z) = (-1)^{(|y|+b)(|z|+b)} x∧(z◊y)"),
      rec(S, "compat2", "x◊(y∧z) = (x◊y)∧z"),
      rec(S, "compat3", "(x◊y)∧z = (-1)^{(|y|+b)(|z|+a)} (x∧z)◊y"),
      rec(S, "derived1", "x∧[y,z] = 0"),
      rec(S, "derived2", "[x,y∧z] = [x,y]∧z"),
      rec(S, "shifted_zinbiel", "(-1)^x (x∧'y)∧'z = -x∧'(y∧'z) + (-1)^{yz} x∧'(z∧'y)"),
      rec(S, "shifted_prelie",
          "(x◊'y)◊'z - (-1)^{e(x+1)} x◊'(y◊'z) = (-1)^{yz+e}((x◊'z)◊'y - (-1)^{e(x+1)} x◊'(z◊'y)), e=b-a+1"),
      rec(S, "shifted_compat1", "x∧'(y◊'z) = (-1)^{yz+e} x∧'(z◊'y)"),
      rec(S, "shifted_compat2", "x◊'(y∧'z) = (-1)^{x+e} (x◊'y)∧'z"),
      rec(S, "shifted_compat3", "(x◊'y)∧'z = (-1)^{yz+e} (x∧'z)◊'y"),
      rec(S, "shifted_derived1", "x∧'ℓ(y,z) = 0"),
      rec(S, "shifted_derived2", "ℓ(x,y∧'z) = (-1)^{x+e} ℓ(x,y)∧'z"),
      rec(S, "m2_antisymmetry", "m2(x,y) = -(-1)^{xy} m2(y,x)"),
      rec(S, "ell_antisymmetry", "ℓ(x,y) = -(-1)^{e}(-1)^{xy} ℓ(y,x)"),
      rec(S, "ell_jacobi", "(-1)^{xz}ℓ(ℓ(x,y),z) + (-1)^{yx}ℓ(ℓ(y,z),x) + (-1)^{zy}ℓ(ℓ(z,x),y) = 0"),
      rec(S, "ell_m2_leibniz", "ℓ(x,m2(y,z)) = (-1)^{x+e} m2(ℓ(x,y),z) + (-1)^{(x+e)(y+1)} m2(y,ℓ(x,z))"),
      rec(S, "ab_i", "x.y = (-1)^{(|x|+a)(|y|+a)} y.x"),
      rec(S, "ab_ii", "x.(y.z) = (x.y).z"),
      rec(S, "ab_iii", "[x,y] = -(-1)^{(|x|+b)(|y|+b)} [y,x]"),
      rec(S, "ab_iv", "(-1)^{(|x|+b)(|z|+b)}[[x,y],z] + (-1)^{(|y|+b)(|x|+b)}[[y,z],x] + (-1)^{(|z|+b)(|y|+b)}[[z,x],y] = 0"),
      rec(S, "ab_v", "[x,y.z] = [x,y].z + (-1)^{(|y|+a)(|x|+b)} y.[x,z]"),
      rec(S, "ab_v_right", "[x.y,z] = x.[y,z] + (-1)^{(|y|+a)(|z|+b)} [x,z].y"),
      rec(S, "ab_shifted_i", "μ(x,y) = -(-1)^{xy} μ(y,x)"),
      rec(S, "ab_shifted_ii", "μ(μ(x,y),z) = -(-1)^x μ(x,μ(y,z))"),
      rec(S, "ab_shifted_iii", "ℓ(x,y) = -(-1)^{e}(-1)^{xy} ℓ(y,x)"),
      rec(S, "ab_shifted_iv", "(-1)^{xz}ℓ(ℓ(x,y),z) + (-1)^{yx}ℓ(ℓ(y,z),x) + (-1)^{zy}ℓ(ℓ(z,x),y) = 0"),
      rec(S, "ab_shifted_v", "ℓ(x,μ(y,z)) = (-1)^{x+e} μ(ℓ(x,y),z) + (-1)^{(x+e)(y+1)} μ(y,ℓ(x,z))"),
  };
  if (I.has_diff) {
    const std::vector<IdentityRecord> more = {
        rec(S, "d_square", "d∘d = 0"),
        rec(S, "d_leibniz_wedge", "d(x∧y) = dx∧y + (-1)^{|x|+a} x∧dy", true),
        rec(S, "d_leibniz_diamond", "d(x◊y) = dx◊y + (-1)^{|x|+b} x◊dy", true),
        rec(S, "ab_d_product", "d(x.y) = dx.y + (-1)^{|x|+a} x.dy"),
        rec(S, "ab_d_bracket", "d[x,y] = [dx,y] + (-1)^{|x|+b} [x,dy]"),
        rec(S, "ab_shifted_d_mu", "d μ(x,y) = -μ(dx,y) + (-1)^{x+1} μ(x,dy)"),
        rec(S, "ab_shifted_d_ell", "d ℓ(x,y) = (-1)^{e} ℓ(dx,y) + (-1)^{x+e} ℓ(x,dy)"),
    };
    R.insert(R.end(), more.begin(), more.end());
  }
  for (auto& r : R) r.weight_cap = 3;

  const ShiftedLaws L(I);
  const ABInstance A(I);
  const long a = I.a, b = I.b, e = b - a + 1;
  const long lsign = opt.tweaks.leibniz_twist ? -1 : 1;
  Probe probe(std::move(R), opt.max_failures);
  const std::size_t iz = probe.index("zinbiel");

  // Unary and binary families run on the triple inputs too and ignore z.
  auto triples = detail::window_triples(I);

  run_sharded(triples, probe, opt.threads, [&](const detail::Triple& t, Probe& P) {
    const int x = t.x, y = t.y, z = t.z;
    const Vec<int> X = Vec<int>::unit(x), Y = Vec<int>::unit(y), Z = Vec<int>::unit(z);
    const long X_ = I.degree(x), Y_ = I.degree(y), Z_ = I.degree(z);
    const long xs = I.dg(x), ys = I.dg(y), zs = I.dg(z);
    auto W = [&](const Vec<int>& u, const Vec<int>& v) { return I.wedge(u, v); };
    auto Dm = [&](const Vec<int>& u, const Vec<int>& v) { return I.diamond(u, v); };
    auto Br = [&](const Vec<int>& u, const Vec<int>& v) { return A.bracket(u, v); };
    auto Pr = [&](const Vec<int>& u, const Vec<int>& v) { return A.product(u, v); };
    auto where = [&](const Vec<int>& r) {
      return "x=" + I.name(x) + ", y=" + I.name(y) + ", z=" + I.name(z) + ": residual " + I.format(r);
    };
    auto report = [&](const char* nm, const Vec<int>& r) { P.check(P.index(nm), r.empty(), [&] { return where(r); }); };
    auto sg = [](long ex) { return Scalar(sign_of(ex)); };

    {
      Vec<int> r = W(W(X, Y), Z) - W(X, W(Y, Z));
      r.add(W(X, W(Z, Y)), -sg((Y_ + a) * (Z_ + a)));
      P.check(iz, r.empty(), [&] { return where(r); });
    }
    const Scalar sb = sg((Y_ + b) * (Z_ + b));
    {
      Vec<int> r = Dm(Dm(X, Y), Z) - Dm(X, Dm(Y, Z));
      r.add(Dm(Dm(X, Z), Y), -sb);
      r.add(Dm(X, Dm(Z, Y)), sb);
      report("prelie", r);
    }
    {
      Vec<int> r = W(X, Dm(Y, Z));
      r.add(W(X, Dm(Z, Y)), -sb);
      report("compat1", r);
    }
    report("compat2", Dm(X, W(Y, Z)) - W(Dm(X, Y), Z));
    {
      Vec<int> r = W(Dm(X, Y), Z);
      r.add(Dm(W(X, Z), Y), -sg((Y_ + b) * (Z_ + a)));
      report("compat3", r);
    }
    report("derived1", W(X, Br(Y, Z)));
    report("derived2", Br(X, W(Y, Z)) - W(Br(X, Y), Z));

    // shifted laws, in the dg grading
    auto w = [&](const Vec<int>& u, const Vec<int>& v) { return L.wedge(u, v); };
    auto d = [&](const Vec<int>& u, const Vec<int>& v) { return L.diamond(u, v); };
    auto m2 = [&](const Vec<int>& u, const Vec<int>& v) { return L.m2(u, v); };
    auto l = [&](const Vec<int>& u, const Vec<int>& v) { return L.ell(u, v); };
    {
      Vec<int> r = sg(xs) * w(w(X, Y), Z) + w(X, w(Y, Z));
      r.add(w(X, w(Z, Y)), -sg(ys * zs));
      report("shifted_zinbiel", r);
    }
    {
      const Scalar c = sg(e * (xs + 1));
      Vec<int> r = d(d(X, Y), Z);
      r.add(d(X, d(Y, Z)), -c);
      Vec<int> rhs = d(d(X, Z), Y);
      rhs.add(d(X, d(Z, Y)), -c);
      r.add(rhs, -sg(ys * zs + e));
      report("shifted_prelie", r);
    }
    {
      Vec<int> r = w(X, d(Y, Z));
      r.add(w(X, d(Z, Y)), -sg(ys * zs + e));
      report("shifted_compat1", r);
    }
    {
      Vec<int> r = d(X, w(Y, Z));
      r.add(w(d(X, Y), Z), -sg(xs + e));
      report("shifted_compat2", r);
    }
    {
      Vec<int> r = w(d(X, Y), Z);
      r.add(d(w(X, Z), Y), -sg(ys * zs + e));
      report("shifted_compat3", r);
    }
    report("shifted_derived1", w(X, l(Y, Z)));
    {
      Vec<int> r = l(X, w(Y, Z));
      r.add(w(l(X, Y), Z), -sg(xs + e));
      report("shifted_derived2", r);
    }
    {
      Vec<int> r = m2(X, Y);
      r.add(m2(Y, X), sg(xs * ys));
      report("m2_antisymmetry", r);
    }
    {
      Vec<int> r = l(X, Y);
      r.add(l(Y, X), sg(e + xs * ys));
      report("ell_antisymmetry", r);
    }
    {
      Vec<int> r = sg(xs * zs) * l(l(X, Y), Z);
      r.add(l(l(Y, Z), X), sg(ys * xs));
      r.add(l(l(Z, X), Y), sg(zs * ys));
      report("ell_jacobi", r);
    }
    {
      Vec<int> r = l(X, m2(Y, Z));
      r.add(m2(l(X, Y), Z), -sg(xs + e));
      r.add(m2(Y, l(X, Z)), -sg((xs + e) * (ys + 1)));
      report("ell_m2_leibniz", r);
    }

    // symmetrized (a,b)-algebra
    {
      Vec<int> r = Pr(X, Y);
      r.add(Pr(Y, X), -sg((X_ + a) * (Y_ + a)));
      report("ab_i", r);
    }
    report("ab_ii", Pr(X, Pr(Y, Z)) - Pr(Pr(X, Y), Z));
    {
      Vec<int> r = Br(X, Y);
      r.add(Br(Y, X), sg((X_ + b) * (Y_ + b)));
      report("ab_iii", r);
    }
    {
      Vec<int> r = sg((X_ + b) * (Z_ + b)) * Br(Br(X, Y), Z);
      r.add(Br(Br(Y, Z), X), sg((Y_ + b) * (X_ + b)));
      r.add(Br(Br(Z, X), Y), sg((Z_ + b) * (Y_ + b)));
      report("ab_iv", r);
    }
    {
      Vec<int> r = Br(X, Pr(Y, Z)) - Pr(Br(X, Y), Z);
      r.add(Pr(Y, Br(X, Z)), -sg((Y_ + a) * (X_ + b)) * lsign);
      report("ab_v", r);
    }
    {
      Vec<int> r = Br(Pr(X, Y), Z) - Pr(X, Br(Y, Z));
      r.add(Pr(Br(X, Z), Y), -sg((Y_ + a) * (Z_ + b)));
      report("ab_v_right", r);
    }
    auto mu = [&](const Vec<int>& u, const Vec<int>& v) { return A.mu(u, v); };
    auto al = [&](const Vec<int>& u, const Vec<int>& v) { return A.ell(u, v); };
    {
      Vec<int> r = mu(X, Y);
      r.add(mu(Y, X), sg(xs * ys));
      report("ab_shifted_i", r);
    }
    {
      Vec<int> r = mu(mu(X, Y), Z);
      r.add(mu(X, mu(Y, Z)), sg(xs));
      report("ab_shifted_ii", r);
    }
    {
      Vec<int> r = al(X, Y);
      r.add(al(Y, X), sg(e + xs * ys));
      report("ab_shifted_iii", r);
    }
    {
      Vec<int> r = sg(xs * zs) * al(al(X, Y), Z);
      r.add(al(al(Y, Z), X), sg(ys * xs));
      r.add(al(al(Z, X), Y), sg(zs * ys));
      report("ab_shifted_iv", r);
    }
    {
      Vec<int> r = al(X, mu(Y, Z));
      r.add(mu(al(X, Y), Z), -sg(xs + e));
      r.add(mu(Y, al(X, Z)), -sg((xs + e) * (ys + 1)));
      report("ab_shifted_v", r);
    }

    if (I.has_diff && z == 0) {
      auto dd = [&](const Vec<int>& u) { return I.differential(u); };
      auto where2 = [&](const Vec<int>& r) {
        return "x=" + I.name(x) + ", y=" + I.name(y) + ": residual " + I.format(r);
      };
      auto report2 = [&](const char* nm, const Vec<int>& r) {
        P.check(P.index(nm), r.empty(), [&] { return where2(r); });
      };
      if (y == 0) report2("d_square", dd(dd(X)));
      {
        Vec<int> r = dd(W(X, Y)) - W(dd(X), Y);
        r.add(W(X, dd(Y)), -sg(X_ + a));
        report2("d_leibniz_wedge", r);
      }
      {
        Vec<int> r = dd(Dm(X, Y)) - Dm(dd(X), Y);
        r.add(Dm(X, dd(Y)), -sg(X_ + b));
        report2("d_leibniz_diamond", r);
      }
      {
        Vec<int> r = dd(Pr(X, Y)) - Pr(dd(X), Y);
        r.add(Pr(X, dd(Y)), -sg(X_ + a));
        report2("ab_d_product", r);
      }
      {
        Vec<int> r = dd(Br(X, Y)) - Br(dd(X), Y);
        r.add(Br(X, dd(Y)), -sg(X_ + b));
        report2("ab_d_bracket", r);
      }
      {
        Vec<int> r = dd(mu(X, Y)) + mu(dd(X), Y);
        r.add(mu(X, dd(Y)), -sg(xs + 1));
        report2("ab_shifted_d_mu", r);
      }
      {
        Vec<int> r = dd(al(X, Y));
        r.add(al(dd(X), Y), -sg(e));
        r.add(al(X, dd(Y)), -sg(xs + e));
        report2("ab_shifted_d_ell", r);
      }
    }
  });

  SuiteReport out;
  out.suite = S;
  out.records = std::move(probe.records());
  for (auto& r : out.records)
    if (I.window) r.note = "triples with summed letter weight <= " + std::to_string(*I.window);
  return out;
}

}  // namespace preab

#endif  // PREAB_PREALGEBRA_HPP
