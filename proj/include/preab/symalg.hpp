#ifndef PREAB_SYMALG_HPP
#define PREAB_SYMALG_HPP

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "linear.hpp"
#include "report.hpp"
#include "signs.hpp"
#include "tensor.hpp"

namespace preab {

/// A monomial of S+(V): factors sorted by Word order.
using Mono = std::vector<Word>;
using SVec = Vec<Mono>;
using MonoTensor = std::vector<Mono>;
using STVec = Vec<MonoTensor>;

using WordDegree = std::function<long(const Word&)>;

/// Sort items into canonical order. Returns the Koszul sign of sorting, or 0 when two equal
/// factors of odd degree meet.
inline std::pair<int, Mono> canonical_monomial(const std::vector<Word>& items, const WordDegree& deg) {
  std::vector<int> order(items.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return items[i] < items[j]; });
  Mono srt;
  srt.reserve(items.size());
  for (int i : order) srt.push_back(items[static_cast<std::size_t>(i)]);
  for (std::size_t i = 1; i < srt.size(); ++i)
    if (srt[i] == srt[i - 1] && deg(srt[i]) % 2 != 0) return {0, {}};
  std::vector<int> degs;
  for (const auto& w : items) degs.push_back(static_cast<int>(deg(w) % 2));
  return {reorder_sign(degs, order), std::move(srt)};
}

/// Cut of one factor into a pair of words, already signed.
using CutVec = Vec<std::pair<Word, Word>>;

/// S+(V) for a word space V with factor degree dg'' and a factor normal form `reduce`, carrying
/// the reduced coproduct Δ, the coderivations m (from D) and ℓ'' (from l2pp), Q = m + ℓ'', and the
/// cobracket δ'' extended from a single-factor cut.
class SAlg {
 public:
  long ab = 0;  // a - b
  WordDegree dg2;
  std::function<HVector(const HVector&)> reduce;
  std::function<CutVec(const Word&)> cut;
  std::function<HVector(const Word&)> D;
  std::function<HVector(const Word&, const Word&)> l2pp;

  long sdeg(const Mono& m) const {
    long s = 0;
    for (const auto& w : m) s += dg2(w);
    return s;
  }
  std::function<long(const Mono&)> mono_degree() const {
    return [this](const Mono& m) { return sdeg(m); };
  }

  std::pair<int, Mono> canon(const std::vector<Word>& items) const { return canonical_monomial(items, dg2); }

  /// Product of factors, each reduced first.
  SVec prod(const std::vector<HVector>& factors) const {
    Vec<std::vector<Word>> acc(std::vector<Word>{}, 1);
    for (const auto& f : factors) {
      const HVector fv = reduce(f);
      Vec<std::vector<Word>> nxt;
      for (const auto& [k, x] : acc)
        for (const auto& [w, y] : fv) {
          auto k2 = k;
          k2.push_back(w);
          nxt.add(k2, x * y);
        }
      acc = std::move(nxt);
    }
    SVec out;
    for (const auto& [k, c] : acc) {
      auto [s, srt] = canon(k);
      if (s) out.add(srt, c * s);
    }
    return out;
  }

  std::vector<int> degs(const Mono& m) const {
    std::vector<int> d;
    for (const auto& w : m) d.push_back(static_cast<int>(dg2(w) % 2));
    return d;
  }

  /// Reduced shuffle coproduct.
  STVec Delta(const Mono& m) const {
    const int n = static_cast<int>(m.size());
    const auto d = degs(m);
    STVec out;
    for (int mask = 1; mask + 1 < (1 << n); ++mask) {
      std::vector<int> order;
      Mono L, R;
      for (int i = 0; i < n; ++i)
        if (!((mask >> i) & 1)) {
          order.push_back(i);
          L.push_back(m[i]);
        }
      for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1) {
          order.push_back(i);
          R.push_back(m[i]);
        }
      out.add(MonoTensor{L, R}, reorder_sign(d, order));
    }
    return out;
  }

  SVec m(const Mono& mono) const {
    SVec out;
    long pre = 0;
    for (std::size_t j = 0; j < mono.size(); ++j) {
      const long dj = dg2(mono[j]);
      const HVector Dv = D(mono[j]);
      if (!Dv.empty()) {
        std::vector<HVector> f{Dv};
        for (std::size_t k = 0; k < mono.size(); ++k)
          if (k != j) f.emplace_back(mono[k], 1);
        out.add(prod(f), Scalar(sign_of(dj * pre)));
      }
      pre += dj;
    }
    return out;
  }

  SVec lpp(const Mono& mono) const {
    SVec out;
    const int n = static_cast<int>(mono.size());
    const auto d = degs(mono);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        std::vector<int> order{i, j};
        std::vector<HVector> f{l2pp(mono[i], mono[j])};
        if (f[0].empty()) continue;
        for (int k = 0; k < n; ++k)
          if (k != i && k != j) {
            order.push_back(k);
            f.emplace_back(mono[k], 1);
          }
        out.add(prod(f), Scalar(reorder_sign(d, order)));
      }
    return out;
  }

  SVec Q(const Mono& mono) const { return m(mono) + lpp(mono); }

  /// δ''(X_1...X_n) = sum_s (-1)^{(a-b) sum_{i<s} x_i''} sum over cuts A|B of X_s and splits I,J
  /// of the other factors of ±(X_I.A) ⊠ (B.X_J), the sign reordering [x_<s, A, B, x_>s] into
  /// [x_I, A, B, x_J].
  STVec dsec(const Mono& mono) const {
    const int n = static_cast<int>(mono.size());
    const auto d = degs(mono);
    STVec out;
    long pre = 0;
    for (int s = 0; s < n; ++s) {
      const int ps = sign_of(ab * pre);
      pre += dg2(mono[s]);
      std::vector<int> others;
      for (int i = 0; i < n; ++i)
        if (i != s) others.push_back(i);
      auto pos = [&](int i) { return i < s ? i : i + 1; };
      for (const auto& [AB, c] : cut(mono[s])) {
        const auto& [A, B] = AB;
        std::vector<int> cur(d);
        cur.erase(cur.begin() + s);
        cur.insert(cur.begin() + s, {static_cast<int>(dg2(A) % 2), static_cast<int>(dg2(B) % 2)});
        const int m1 = n - 1;
        for (int mask = 0; mask < (1 << m1); ++mask) {
          std::vector<int> order;
          std::vector<HVector> lf, rf{HVector(B, 1)};
          for (int t = 0; t < m1; ++t)
            if (!((mask >> t) & 1)) {
              order.push_back(pos(others[t]));
              lf.emplace_back(mono[others[t]], 1);
            }
          order.push_back(s);
          order.push_back(s + 1);
          lf.emplace_back(A, 1);
          for (int t = 0; t < m1; ++t)
            if ((mask >> t) & 1) {
              order.push_back(pos(others[t]));
              rf.emplace_back(mono[others[t]], 1);
            }
          const Scalar k = c * ps * reorder_sign(cur, order);
          const SVec Lv = prod(lf);
          if (Lv.empty()) continue;
          const SVec Rv = prod(rf);
          for (const auto& [L, x] : Lv)
            for (const auto& [R, y] : Rv) out.add(MonoTensor{L, R}, k * x * y);
        }
      }
    }
    return out;
  }
};

/// Single-factor cut from raw pieces (U, V, c):
/// (-1)^{(a-b)u''} c (U ⊠ V + (-1)^{u''v''+a-b+1} V ⊠ U), both legs reduced.
inline std::function<CutVec(const Word&)> make_cut(
    const SAlg& S, std::function<std::vector<std::tuple<Word, HVector, Scalar>>(const Word&)> raw,
    bool mirror_flip = false) {
  return [&S, raw = std::move(raw), mirror_flip](const Word& w) {
    CutVec out;
    const long ab = S.ab;
    for (const auto& [U, V, c] : raw(w)) {
      const long u = S.dg2(U);
      const HVector Ur = S.reduce(HVector(U, 1)), Vr = S.reduce(V);
      for (const auto& [U2, x] : Ur)
        for (const auto& [V2, y] : Vr) {
          const long v = S.dg2(V2);
          out.add({U2, V2}, c * x * y * sign_of(ab * u));
          out.add({V2, U2}, c * x * y * sign_of(ab * u + u * v + ab + 1) * (mirror_flip ? -1 : 1));
        }
    }
    return out;
  };
}

/// Monomials of total letter count <= L over the given factor words, optionally filtered.
inline std::vector<Mono> enumerate_monos(std::vector<Word> words, int L, const WordDegree& deg,
                                         const std::function<bool(const Mono&)>& keep = {}) {
  std::sort(words.begin(), words.end());
  std::vector<Mono> res;
  Mono cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int rem) {
    if (!cur.empty() && (!keep || keep(cur))) res.push_back(cur);
    for (std::size_t i = start; i < words.size(); ++i) {
      const Word& w = words[i];
      if (static_cast<int>(w.size()) > rem) continue;
      if (!cur.empty() && cur.back() == w && deg(w) % 2 != 0) continue;
      cur.push_back(w);
      rec(i, rem - static_cast<int>(w.size()));
      cur.pop_back();
    }
  };
  rec(0, L);
  return res;
}

inline int mono_weight(const Mono& m) {
  int w = 0;
  for (const auto& x : m) w += static_cast<int>(x.size());
  return w;
}

inline std::string format_mono(const Mono& m, const std::function<std::string(const Word&)>& name) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? " · " : "") + name(m[i]);
  return "[" + s + "]";
}

/// Identity records of the S+ suite. Names get the given prefix.
inline std::vector<IdentityRecord> salg_records(const std::string& suite, const std::string& prefix, int L4, int L3) {
  using detail::rec;
  std::vector<IdentityRecord> R = {
      rec(suite, prefix + "Q_square", "Q∘Q = 0 on S+, Q = m + ℓ''"),
      rec(suite, prefix + "m_square", "m∘m = 0 on S+"),
      rec(suite, prefix + "Q_Delta_coderivation", "Δ∘Q = (Q⊗id + id⊗Q)∘Δ on S+"),
      rec(suite, prefix + "dsec_coantisymmetry", "τ''∘δ'' = -(-1)^{a-b} δ''"),
      rec(suite, prefix + "dsec_coJacobi",
          "(id + ξ + ξ²)∘(δ''⊗id)∘δ'' = 0, ξ the signed cyclic volte"),
      rec(suite, prefix + "dsec_coLeibniz", "(id⊗Δ)∘δ'' = (δ''⊗id)∘Δ + τ''12∘(id⊗δ'')∘Δ"),
      rec(suite, prefix + "m_dsec_coderivation", "(m⊗id + id⊗m)∘δ'' = (-1)^{a-b} δ''∘m"),
      rec(suite, prefix + "l_dsec_coderivation", "(ℓ''⊗id + id⊗ℓ'')∘δ'' = (-1)^{a-b} δ''∘ℓ''"),
  };
  for (std::size_t i = 0; i < R.size(); ++i) R[i].weight_cap = i < 3 ? L4 : L3;
  return R;
}

/// Evaluate the S+ suite on one monomial.
inline void salg_check(const SAlg& S, const Mono& M, const std::string& prefix, int L3, Probe& P,
                       const std::function<std::string(const Word&)>& name) {
  const auto dd = S.mono_degree();
  const long ab = S.ab;
  const STVec v(MonoTensor{M}, 1);
  auto say = [&](const STVec& r) {
    return format_mono(M, name) + ": residual " + format(r, [&](const MonoTensor& t) {
             std::string s;
             for (std::size_t i = 0; i < t.size(); ++i) s += (i ? " ⊠ " : "") + format_mono(t[i], name);
             return s;
           });
  };
  auto sayS = [&](const SVec& r) {
    return format_mono(M, name) + ": residual " + format(r, [&](const Mono& m) { return format_mono(m, name); });
  };
  auto Q = [&](const Mono& x) { return S.Q(x); };
  auto mop = [&](const Mono& x) { return S.m(x); };
  auto lop = [&](const Mono& x) { return S.lpp(x); };
  auto Dl = [&](const Mono& x) { return S.Delta(x); };
  auto ds = [&](const Mono& x) { return S.dsec(x); };

  {
    const SVec QQ = linear(S.Q(M), Q);
    P.check(P.index(prefix + "Q_square"), QQ.empty(), [&] { return sayS(QQ); });
    const SVec mm = linear(S.m(M), mop);
    P.check(P.index(prefix + "m_square"), mm.empty(), [&] { return sayS(mm); });
  }
  const STVec dv = apply_at_position(v, 0, 0, dd, Dl);
  {
    const STVec lhs = apply_at_position(apply_at_position(v, 0, 1, dd, Q), 0, 0, dd, Dl);
    const STVec r = lhs - apply_at_position(dv, 0, 1, dd, Q) - apply_at_position(dv, 1, 1, dd, Q);
    P.check(P.index(prefix + "Q_Delta_coderivation"), r.empty(), [&] { return say(r); });
  }
  if (mono_weight(M) > L3) return;
  const STVec dsv = apply_at_position(v, 0, ab, dd, ds);
  {
    STVec r = volte(dsv, 0, 1, dd);
    r.add(dsv, Scalar(sign_of(ab)));
    P.check(P.index(prefix + "dsec_coantisymmetry"), r.empty(), [&] { return say(r); });
  }
  {
    const STVec t = apply_at_position(dsv, 0, ab, dd, ds);
    const STVec r = t + volte(volte(t, 1, 2, dd), 0, 1, dd) + volte(volte(t, 0, 1, dd), 1, 2, dd);
    P.check(P.index(prefix + "dsec_coJacobi"), r.empty(), [&] { return say(r); });
  }
  {
    const STVec lhs = apply_at_position(dsv, 1, 0, dd, Dl);
    const STVec r = lhs - apply_at_position(dv, 0, ab, dd, ds) - volte(apply_at_position(dv, 1, ab, dd, ds), 0, 1, dd);
    P.check(P.index(prefix + "dsec_coLeibniz"), r.empty(), [&] { return say(r); });
  }
  for (const auto& [nm, f] : {std::pair<std::string, std::function<SVec(const Mono&)>>{"m", mop}, {"l", lop}}) {
    const STVec lhs = apply_at_position(dsv, 0, 1, dd, f) + apply_at_position(dsv, 1, 1, dd, f);
    STVec r = lhs;
    r.add(apply_at_position(apply_at_position(v, 0, 1, dd, f), 0, ab, dd, ds), -Scalar(sign_of(ab)));
    P.check(P.index(prefix + nm + "_dsec_coderivation"), r.empty(), [&] { return say(r); });
  }
}

}  // namespace preab

#endif  // PREAB_SYMALG_HPP
