#ifndef PREAB_SYMMETRIZED_HPP
#define PREAB_SYMMETRIZED_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <vector>

#include "prelie.hpp"
#include "symalg.hpp"

namespace preab {

/// T+ modulo the images of all sh_{p,q}, one stratum per letter multiset. A stratum is the row
/// space of the shuffles of every rearrangement of its multiset, pivoting on the largest word.
/// Strata are built on first use behind a read-mostly cache.
class ShuffleQuotient {
 public:
  explicit ShuffleQuotient(LetterDegree deg) : deg_(std::move(deg)) {}

  HVector reduce(const HVector& v) const {
    std::map<Word, HVector> groups;
    for (const auto& [w, c] : v) groups[multiset(w)].add(w, c);
    HVector out;
    for (const auto& [ms, g] : groups) out.add(stratum(ms).reduce(g));
    return out;
  }
  HVector reduce(const Word& w) const { return reduce(HVector(w, 1)); }

  /// Normal-form words of a multiset stratum.
  std::vector<Word> basis(const Word& ms) const {
    const auto& R = stratum(multiset(ms));
    std::vector<Word> out;
    Word w = multiset(ms);
    do {
      if (!R.is_pivot(w)) out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t rank(const Word& ms) const { return stratum(multiset(ms)).rank(); }

  static Word multiset(Word w) {
    std::sort(w.begin(), w.end());
    return w;
  }

 private:
  const RowReducer<Word>& stratum(const Word& ms) const {
    {
      std::shared_lock lk(mu_);
      auto it = cache_.find(ms);
      if (it != cache_.end()) return *it->second;
    }
    auto R = std::make_shared<RowReducer<Word>>();
    Word w = ms;
    do {
      for (std::size_t p = 1; p < w.size(); ++p) R->insert(preab::shuffle(w.slice(0, p), w.slice(p), deg_));
    } while (std::next_permutation(w.begin(), w.end()));
    std::unique_lock lk(mu_);
    return *cache_.try_emplace(ms, std::move(R)).first->second;
  }

  LetterDegree deg_;
  mutable std::shared_mutex mu_;
  mutable std::map<Word, std::shared_ptr<RowReducer<Word>>> cache_;
};

/// The construction on the shuffle quotient for the symmetrized (a,b)-algebra: cobracket δ,
/// D = d1 + μ1, the bracket ℓ2 and its shifts, and S+ of the quotient.
class SymmetrizedPath {
 public:
  explicit SymmetrizedPath(const PreABInstance& inst, SignTweaks tw = {})
      : I(inst), A(inst), Qt([this](int x) { return I.dg(x); }), ab(inst.a - inst.b),
        pair_sign_(tw.ell2_pair ? -1 : 1) {
    S.ab = ab;
    S.dg2 = [this](const Word& w) { return I.dg2(w); };
    S.reduce = [this](const HVector& v) { return Qt.reduce(v); };
    S.cut = make_cut(S, [](const Word& w) {
      std::vector<std::tuple<Word, HVector, Scalar>> out;
      for (std::size_t j = 1; j < w.size(); ++j) out.emplace_back(w.slice(0, j), HVector(w.slice(j), 1), Scalar(1));
      return out;
    });
    S.D = [this](const Word& w) { return D(w); };
    S.l2pp = [this](const Word& X, const Word& Y) { return ell2_second(X, Y); };
  }
  SymmetrizedPath(const SymmetrizedPath&) = delete;
  SymmetrizedPath& operator=(const SymmetrizedPath&) = delete;

  const PreABInstance& I;
  const ABInstance A;
  const ShuffleQuotient Qt;
  const long ab;
  SAlg S;

  LetterDegree deg() const {
    return [this](int x) { return I.dg(x); };
  }
  std::function<long(const Word&)> word_deg() const {
    return [this](const Word& w) { return I.dg(w); };
  }

  HVector reduce(const HVector& v) const { return Qt.reduce(v); }
  HVector reduce(const Word& w) const { return Qt.reduce(w); }
  /// Reduce every factor of every tensor.
  TVector reduce(const TVector& v) const {
    TVector out;
    for (const auto& [t, c] : v) {
      Vec<WordTensor> acc(WordTensor{}, c);
      for (const auto& w : t) {
        const HVector r = Qt.reduce(w);
        Vec<WordTensor> nxt;
        for (const auto& [k, x] : acc)
          for (const auto& [u, y] : r) {
            auto k2 = k;
            k2.push_back(u);
            nxt.add(k2, x * y);
          }
        acc = std::move(nxt);
      }
      out.add(acc);
    }
    return out;
  }

  /// δ(X) = sum over cuts U|V of U ⊠ V - (-1)^{uv} V ⊠ U, legs reduced.
  TVector cobracket_raw(const Word& w) const {
    TVector out;
    for (std::size_t j = 1; j < w.size(); ++j) {
      const Word U = w.slice(0, j), V = w.slice(j);
      out.add(WordTensor{U, V}, 1);
      out.add(WordTensor{V, U}, -sign_of(I.dg(U) * I.dg(V)));
    }
    return out;
  }
  TVector cobracket(const Word& w) const { return reduce(cobracket_raw(w)); }

  /// d1 + μ1 on a representative, before reduction.
  HVector D_raw(const Word& w) const {
    HVector out;
    long pre = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
      const int s = sign_of(pre);
      if (I.has_diff)
        for (const auto& [l, c] : I.differential(w[k])) {
          Word r = w;
          r[k] = l;
          out.add(r, c * s);
        }
      if (k + 1 < w.size())
        for (const auto& [l, c] : A.mu(w[k], w[k + 1])) {
          Word r = w.slice(0, k);
          r.push_back(l);
          r.insert(r.end(), w.begin() + static_cast<long>(k) + 2, w.end());
          out.add(r, c * s);
        }
      pre += I.dg(w[k]);
    }
    return out;
  }
  HVector D(const Word& w) const { return reduce(D_raw(w)); }
  HVector D(const HVector& v) const {
    return linear(v, [&](const Word& w) { return D(w); });
  }

  /// ℓ2(X,Y): over the (p,q)-shuffles of X and Y, every adjacent slot pair with the left slot
  /// from X and the right from Y is replaced by ℓ of the two letters, with (-1)^{(b-a+1)dg(prefix)}.
  HVector ell2_raw(const Word& X, const Word& Y) const {
    const long e = I.b - I.a + 1;
    const Word seq = X + Y;
    std::vector<int> degs;
    for (int x : seq) degs.push_back(static_cast<int>(I.dg(x)));
    HVector out;
    for (const auto& t : shuffle_orders(degs, static_cast<int>(X.size()))) {
      Word w;
      for (int i : t.order) w.push_back(seq[static_cast<std::size_t>(i)]);
      long pre = 0;
      for (std::size_t k = 0; k + 1 < w.size(); ++k) {
        if (t.from_left[k] && !t.from_left[k + 1]) {
          const int s = t.sign * sign_of(e * pre) * pair_sign_;
          for (const auto& [l, c] : A.ell(w[k], w[k + 1])) {
            Word r = w.slice(0, k);
            r.push_back(l);
            r.insert(r.end(), w.begin() + static_cast<long>(k) + 2, w.end());
            out.add(r, c * s);
          }
        }
        pre += I.dg(w[k]);
      }
    }
    return out;
  }
  HVector ell2(const Word& X, const Word& Y) const { return reduce(ell2_raw(X, Y)); }
  HVector ell2_prime(const Word& X, const Word& Y) const {
    return Scalar(sign_of((ab - 1) * I.dg1(X))) * ell2(X, Y);
  }
  HVector ell2_second(const Word& X, const Word& Y) const {
    return Scalar(sign_of(I.dg2(X))) * ell2_prime(X, Y);
  }

  /// Normal-form words of length 1..L over multisets inside the window.
  std::vector<Word> quotient_basis(int L) const {
    std::vector<Word> out;
    Word cur;
    std::function<void(int, int)> rec = [&](int start, int left) {
      if (!cur.empty() && I.in_window(cur))
        for (auto& w : Qt.basis(cur)) out.push_back(std::move(w));
      if (left == 0) return;
      for (int x = start; x < I.size(); ++x) {
        cur.push_back(x);
        if (I.in_window(cur)) rec(x, left - 1);
        cur.pop_back();
      }
    };
    rec(0, L);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::string name(const Word& w) const {
    return join_word(w, [&](int x) { return I.name(x); }, "⊗̲");
  }
  std::string format(const HVector& v) const {
    return preab::format(v, [&](const Word& w) { return name(w); });
  }
  std::string format(const TVector& v) const {
    return preab::format(v, [&](const WordTensor& t) {
      std::string s;
      for (std::size_t i = 0; i < t.size(); ++i) s += (i ? " ⊠ " : "") + name(t[i]);
      return "(" + s + ")";
    });
  }

 private:
  int pair_sign_;
};

namespace detail {
/// Apply a two-argument operator of degree g at factors k, k+1 of every tensor.
template <class F>
TVector apply_pair_at(const TVector& v, std::size_t k, long g, const std::function<long(const Word&)>& deg, F&& f) {
  TVector out;
  for (const auto& [t, c] : v) {
    long pre = 0;
    for (std::size_t i = 0; i < k; ++i) pre += deg(t[i]);
    const int s = sign_of(g * pre);
    for (const auto& [w, d] : f(t[k], t[k + 1])) {
      WordTensor nt(t.begin(), t.begin() + static_cast<long>(k));
      nt.push_back(w);
      nt.insert(nt.end(), t.begin() + static_cast<long>(k) + 2, t.end());
      out.add(nt, c * d * s);
    }
  }
  return out;
}
}  // namespace detail

/// Suite of the symmetrized path: quotient soundness, D and δ on the quotient, the characterizing
/// equation of ℓ2, the DGLA and its ℓ2'' form, the S+ suite, and the cross-check against the
/// symmetrized R2''.
inline SuiteReport verify_symmetrized(const PreABInstance& I, const SuiteOptions& opt) {
  const std::string S = "symmetrized";
  using detail::rec;
  const int L4 = opt.weight, L3 = std::min(opt.weight, opt.weight_pair);
  std::vector<IdentityRecord> R = {
      rec(S, "quotient_kills_shuffles", "reduce(sh_{p,q}(X,Y)) = 0"),
      rec(S, "quotient_idempotent", "reduce∘reduce = reduce"),
      rec(S, "mu1_well_defined", "reduce(D(sh_{p,q}(X,Y))) = 0"),
      rec(S, "cobracket_well_defined", "δ(sh_{p,q}(X,Y)) = 0 with both legs reduced"),
      rec(S, "ell2_well_defined", "ℓ2(sh_{p,q}(X,Y), Z) = ℓ2(Z, sh_{p,q}(X,Y)) = 0"),
      rec(S, "D_square", "D∘D = 0 on the quotient, D = d1 + μ1"),
      rec(S, "D_cobracket_coderivation", "δ∘D = (D⊗id + id⊗D)∘δ"),
      rec(S, "ell2_letters", "ℓ2(α,β) = ℓ(α,β)"),
      rec(S, "ell2_equation",
          "δ∘ℓ2 = (ℓ2⊗id)∘(τ23∘(δ⊗id) + id⊗δ) + (id⊗ℓ2)∘(δ⊗id + τ12∘(id⊗δ))"),
      rec(S, "dgla_antisymmetry", "ℓ2'(X,Y) = -(-1)^{x'y'} ℓ2'(Y,X)"),
      rec(S, "dgla_jacobi",
          "(-1)^{x'z'} ℓ2'(ℓ2'(X,Y),Z) + (-1)^{y'x'} ℓ2'(ℓ2'(Y,Z),X) + (-1)^{z'y'} ℓ2'(ℓ2'(Z,X),Y) = 0"),
      rec(S, "dgla_D_derivation", "D(ℓ2'(X,Y)) = ℓ2'(D X, Y) + (-1)^{x'} ℓ2'(X, D Y)"),
      rec(S, "ell2pp_symmetry", "ℓ2''(X,Y) = (-1)^{x''y''} ℓ2''(Y,X)"),
      rec(S, "ell2pp_jacobi",
          "(-1)^{x''z''} ℓ2''(ℓ2''(X,Y),Z) + (-1)^{y''x''} ℓ2''(ℓ2''(Y,Z),X) + (-1)^{z''y''} ℓ2''(ℓ2''(Z,X),Y) = 0"),
      rec(S, "ell2pp_D", "D(ℓ2''(X,Y)) = -ℓ2''(D X, Y) + (-1)^{1+x''} ℓ2''(X, D Y)"),
      rec(S, "crosscheck_pre_ell2", "reduce(ℓ2''_pre(X,Y)) = ℓ2''(reduce X, reduce Y), min(|X|,|Y|) = 1"),
      rec(S, "crosscheck_pre_ell2_long", "reduce(ℓ2''_pre(X,Y)) = ℓ2''(reduce X, reduce Y), |X| = |Y| = 2"),
  };
  for (auto& r : R) r.weight_cap = L3;
  for (const char* n : {"D_square", "D_cobracket_coderivation"})
    for (auto& r : R)
      if (r.name == n) r.weight_cap = L4;
  for (auto& r : R)
    if (r.name.rfind("crosscheck", 0) == 0) r.weight_cap = 4;
  R.back().informational = true;
  R.back().note = "two different extensions of the bracket, not expected to agree";
  for (auto& r : salg_records(S, "S_", L4, L3)) R.push_back(r);

  const SymmetrizedPath Y(I, opt.tweaks);
  const PreLieH Pre(I, opt.tweaks);
  const auto wd = Y.word_deg();
  const long e = I.b - I.a + 1;
  Probe probe(std::move(R), opt.max_failures);

  // soundness on representatives of length 2..3
  {
    std::vector<Word> ws;
    for (const auto& w : window_words(I, std::min(3, L4)))
      if (w.size() >= 2) ws.push_back(w);
    run_sharded(ws, probe, opt.threads, [&](const Word& w, Probe& P) {
      const HVector rw = Y.reduce(w);
      const HVector idem = Y.reduce(rw) - rw;
      P.check(P.index("quotient_idempotent"), idem.empty(),
              [&] { return "X=" + Y.name(w) + ": residual " + Y.format(idem); });
      for (std::size_t p = 1; p < w.size(); ++p) {
        const HVector s = preab::shuffle(w.slice(0, p), w.slice(p), Y.deg());
        auto say = [&](const auto& r) {
          return "sh(" + Y.name(w.slice(0, p)) + ", " + Y.name(w.slice(p)) + "): residual " + Y.format(r);
        };
        const HVector r0 = Y.reduce(s);
        P.check(P.index("quotient_kills_shuffles"), r0.empty(), [&] { return say(r0); });
        const HVector r1 = Y.reduce(linear(s, [&](const Word& u) { return Y.D_raw(u); }));
        P.check(P.index("mu1_well_defined"), r1.empty(), [&] { return say(r1); });
        const TVector r2 = Y.reduce(linear(s, [&](const Word& u) { return Y.cobracket_raw(u); }));
        P.check(P.index("cobracket_well_defined"), r2.empty(), [&] { return say(r2); });
        if (w.size() > 2) continue;
        for (int z = 0; z < I.size(); ++z) {
          if (!I.in_window(w + Word{z})) continue;
          const Word Z{z};
          const HVector a = Y.reduce(linear(s, [&](const Word& u) { return Y.ell2_raw(u, Z); }));
          const HVector b = Y.reduce(linear(s, [&](const Word& u) { return Y.ell2_raw(Z, u); }));
          P.check(P.index("ell2_well_defined"), a.empty() && b.empty(), [&] { return say(a.empty() ? b : a); });
        }
      }
    });
  }

  const auto B4 = Y.quotient_basis(L4);
  run_sharded(B4, probe, opt.threads, [&](const Word& X, Probe& P) {
    auto say = [&](const auto& r) { return "X=" + Y.name(X) + ": residual " + Y.format(r); };
    const HVector DX = Y.D(X);
    const HVector DD = Y.D(DX);
    P.check(P.index("D_square"), DD.empty(), [&] { return say(DD); });
    const TVector dX = Y.cobracket(X);
    auto Dop = [&](const Word& u) { return Y.D(u); };
    const TVector r = Y.reduce(linear(DX, [&](const Word& u) { return Y.cobracket_raw(u); })) -
                      apply_at_position(dX, 0, 1, wd, Dop) - apply_at_position(dX, 1, 1, wd, Dop);
    P.check(P.index("D_cobracket_coderivation"), r.empty(), [&] { return say(r); });
  });

  const auto B3 = Y.quotient_basis(L3);
  auto fits = [&](std::initializer_list<const Word*> ws) {
    Word all;
    std::size_t n = 0;
    for (auto* w : ws) {
      all = all + *w;
      n += w->size();
    }
    return static_cast<int>(n) <= L3 && I.in_window(all);
  };
  auto l2 = [&](const Word& x, const Word& y) { return Y.ell2(x, y); };
  auto l2p = [&](const HVector& u, const HVector& v) {
    return bilinear(u, v, [&](const Word& x, const Word& y) { return Y.ell2_prime(x, y); });
  };
  auto l2pp = [&](const HVector& u, const HVector& v) {
    return bilinear(u, v, [&](const Word& x, const Word& y) { return Y.ell2_second(x, y); });
  };
  run_sharded(B3, probe, opt.threads, [&](const Word& X, Probe& P) {
    for (const auto& Yw : B3) {
      if (!fits({&X, &Yw})) continue;
      auto say = [&](const auto& r) { return "X=" + Y.name(X) + ", Y=" + Y.name(Yw) + ": residual " + Y.format(r); };
      const HVector uX(X, 1), uY(Yw, 1);
      const long x1 = I.dg1(X), y1 = I.dg1(Yw), x2 = I.dg2(X), y2 = I.dg2(Yw);
      if (X.size() == 1 && Yw.size() == 1) {
        const HVector r = Y.ell2(X, Yw) - linear(Y.A.ell(X[0], Yw[0]), [](int l) { return HVector(Word{l}, 1); });
        P.check(P.index("ell2_letters"), r.empty(), [&] { return say(r); });
      }
      {
        // characterizing equation of ℓ2
        const TVector v(WordTensor{X, Yw}, 1);
        TVector lhs = detail::apply_pair_at(v, 0, e, wd, l2);
        lhs = Y.reduce(apply_at_position(lhs, 0, 0, wd, [&](const Word& u) { return Y.cobracket_raw(u); }));
        auto cob = [&](const Word& u) { return Y.cobracket(u); };
        const TVector dX = apply_at_position(v, 0, 0, wd, cob);
        const TVector dY = apply_at_position(v, 1, 0, wd, cob);
        const TVector r1 = detail::apply_pair_at(volte(dX, 1, 2, wd) + dY, 0, e, wd, l2);
        const TVector r2 = detail::apply_pair_at(dX + volte(dY, 0, 1, wd), 1, e, wd, l2);
        const TVector r = lhs - Y.reduce(r1 + r2);
        P.check(P.index("ell2_equation"), r.empty(), [&] { return say(r); });
      }
      {
        HVector r = l2p(uX, uY);
        r.add(l2p(uY, uX), Scalar(sign_of(x1 * y1)));
        P.check(P.index("dgla_antisymmetry"), r.empty(), [&] { return say(r); });
        HVector q = l2pp(uX, uY);
        q.add(l2pp(uY, uX), -Scalar(sign_of(x2 * y2)));
        P.check(P.index("ell2pp_symmetry"), q.empty(), [&] { return say(q); });
      }
      {
        const HVector DX = Y.D(X), DY = Y.D(Yw);
        HVector r = Y.D(l2p(uX, uY)) - l2p(DX, uY);
        r.add(l2p(uX, DY), -Scalar(sign_of(x1)));
        P.check(P.index("dgla_D_derivation"), r.empty(), [&] { return say(r); });
        HVector q = Y.D(l2pp(uX, uY)) + l2pp(DX, uY);
        q.add(l2pp(uX, DY), Scalar(sign_of(x2)));
        P.check(P.index("ell2pp_D"), q.empty(), [&] { return say(q); });
      }
      for (const auto& Z : B3) {
        if (!fits({&X, &Yw, &Z})) continue;
        const HVector uZ(Z, 1);
        const long z1 = I.dg1(Z), z2 = I.dg2(Z);
        HVector r = Scalar(sign_of(x1 * z1)) * l2p(l2p(uX, uY), uZ);
        r.add(l2p(l2p(uY, uZ), uX), Scalar(sign_of(y1 * x1)));
        r.add(l2p(l2p(uZ, uX), uY), Scalar(sign_of(z1 * y1)));
        P.check(P.index("dgla_jacobi"), r.empty(), [&] {
          return "X=" + Y.name(X) + ", Y=" + Y.name(Yw) + ", Z=" + Y.name(Z) + ": residual " + Y.format(r);
        });
        HVector q = Scalar(sign_of(x2 * z2)) * l2pp(l2pp(uX, uY), uZ);
        q.add(l2pp(l2pp(uY, uZ), uX), Scalar(sign_of(y2 * x2)));
        q.add(l2pp(l2pp(uZ, uX), uY), Scalar(sign_of(z2 * y2)));
        P.check(P.index("ell2pp_jacobi"), q.empty(), [&] {
          return "X=" + Y.name(X) + ", Y=" + Y.name(Yw) + ", Z=" + Y.name(Z) + ": residual " + Y.format(q);
        });
      }
    }
  });

  // cross-check on representatives of length <= 2
  {
    std::vector<Word> ws = window_words(I, 2);
    run_sharded(ws, probe, opt.threads, [&](const Word& X, Probe& P) {
      for (const auto& Yw : ws) {
        if (!I.in_window(X + Yw)) continue;
        const HVector p = Y.reduce(Pre.ell2_second(X, Yw));
        const HVector q = l2pp(Y.reduce(X), Y.reduce(Yw));
        const HVector r = p - q;
        const bool longpair = X.size() == 2 && Yw.size() == 2;
        P.check(P.index(longpair ? "crosscheck_pre_ell2_long" : "crosscheck_pre_ell2"), r.empty(), [&] {
          return "X=" + Y.name(X) + ", Y=" + Y.name(Yw) + ": difference " + Y.format(r);
        });
      }
    });
  }

  const auto monos = enumerate_monos(B4, L4, Y.S.dg2, [&](const Mono& m) {
    Word all;
    for (const auto& w : m) all = all + w;
    return I.in_window(all);
  });
  auto nm = [&](const Word& w) { return Y.name(w); };
  run_sharded(monos, probe, opt.threads, [&](const Mono& M, Probe& P) { salg_check(Y.S, M, "S_", L3, P, nm); });
  return SuiteReport{S, std::move(probe.records())};
}

}  // namespace preab

#endif  // PREAB_SYMMETRIZED_HPP
