#ifndef PREAB_PRELIE_HPP
#define PREAB_PRELIE_HPP

#include <string>
#include <vector>

#include "tensor.hpp"

namespace preab {

/// R2 on H, R2' on H[a-b-1] and R2'' on H[a-b].
class PreLieH {
 public:
  explicit PreLieH(const PreABInstance& inst, SignTweaks tw = {}) : T(inst, tw), I(inst), ell_sign_(tw.r2_ell ? -1 : 1) {}

  const TensorH T;
  const PreABInstance& I;

  /// Head term (-1)^{dg(X[1:]) dg(y1)} (x1◊'y1) ⊗ sh(X[1:], Y[1:]), plus for each later letter x_k
  /// of X the insertion (-1)^{dg(X[k+1:]) dg(y1) + (b-a+1) dg(X[:k])} X[:k] ⊗ ℓ(x_k, y1) ⊗ sh(X[k+1:], Y[1:]).
  HVector r2(const Word& X, const Word& Y) const {
    HVector out;
    const std::size_t p = X.size();
    const int y1 = Y[0];
    const Word Yt = Y.slice(1);
    const long e = I.b - I.a + 1;
    {
      const int s = sign_of(I.dg(X.slice(1)) * I.dg(y1));
      const HVector tail = T.shuffle(X.slice(1), Yt);
      for (const auto& [h, c] : T.L.diamond(X[0], y1))
        for (const auto& [t, d] : tail) out.add(Word{h} + t, c * d * s);
    }
    for (std::size_t k = 1; k < p; ++k) {
      const Word rest = X.slice(k + 1);
      const int s = sign_of(I.dg(rest) * I.dg(y1) + e * I.dg(X.slice(0, k))) * (k == 1 ? ell_sign_ : 1);
      const HVector tail = T.shuffle(rest, Yt);
      const Word head = X.slice(0, k);
      for (const auto& [h, c] : T.L.ell(X[k], y1))
        for (const auto& [t, d] : tail) out.add(head + Word{h} + t, c * d * s);
    }
    return out;
  }

  HVector r2_prime(const Word& X, const Word& Y) const {
    return Scalar(sign_of((I.a - I.b - 1) * I.dg1(X))) * r2(X, Y);
  }
  HVector r2_second(const Word& X, const Word& Y) const { return Scalar(sign_of(I.dg2(X))) * r2_prime(X, Y); }

  /// ℓ2''(X,Y) = R2''(X,Y) + (-1)^{x''y''} R2''(Y,X)
  HVector ell2_second(const Word& X, const Word& Y) const {
    HVector out = r2_second(X, Y);
    out.add(r2_second(Y, X), Scalar(sign_of(I.dg2(X) * I.dg2(Y))));
    return out;
  }

  HVector r2_prime(const HVector& u, const HVector& v) const {
    return bilinear(u, v, [&](const Word& x, const Word& y) { return r2_prime(x, y); });
  }

 private:
  int ell_sign_;
};

/// Pre-Lie relation (*) for R2' and the derivation law of D, on triples (pairs) of words whose
/// total length is at most opt.weight.
inline SuiteReport verify_prelie(const PreABInstance& I, const SuiteOptions& opt) {
  const std::string S = "prelie";
  using detail::rec;
  std::vector<IdentityRecord> R = {
      rec(S, "r2_prelie", "R2'(R2'(X,Y),Z) - R2'(X,R2'(Y,Z)) = (-1)^{y'z'} (R2'(R2'(X,Z),Y) - R2'(X,R2'(Z,Y)))"),
      rec(S, "D_derivation_of_r2", "D∘R2'(X,Y) = R2'(D X, Y) + (-1)^{x'} R2'(X, D Y)"),
      rec(S, "r2_letters", "R2(α,β) = α◊'β"),
      rec(S, "r2_degree", "dg(R2(X,Y)) = dg(X) + dg(Y) + b - a + 1"),
  };
  for (auto& r : R) r.weight_cap = opt.weight;
  const PreLieH P(I, opt.tweaks);
  Probe probe(std::move(R), opt.max_failures);
  const auto words = window_words(I, opt.weight);
  const long e = I.b - I.a + 1;

  // one input per X; the inner loops range over Y, Z
  run_sharded(words, probe, opt.threads, [&](const Word& X, Probe& Pb) {
    const auto& T = P.T;
    for (const auto& Y : words) {
      if (X.size() + Y.size() > static_cast<std::size_t>(opt.weight) || !I.in_window(X + Y)) continue;
      const HVector XY = P.r2_prime(X, Y);
      {
        const HVector lhs = T.D(XY);
        HVector rhs;
        for (const auto& [u, c] : T.D(X)) rhs.add(P.r2_prime(u, Y), c);
        for (const auto& [u, c] : T.D(Y)) rhs.add(P.r2_prime(X, u), c * sign_of(I.dg1(X)));
        const HVector r = lhs - rhs;
        Pb.check(Pb.index("D_derivation_of_r2"), r.empty(),
                 [&] { return "X=" + T.name(X) + ", Y=" + T.name(Y) + ": residual " + T.format(r); });
      }
      {
        bool ok = true;
        for (const auto& [u, c] : P.r2(X, Y))
          if (I.dg(u) != I.dg(X) + I.dg(Y) + e) ok = false;
        Pb.check(Pb.index("r2_degree"), ok, [&] { return "X=" + T.name(X) + ", Y=" + T.name(Y); });
      }
      if (X.size() == 1 && Y.size() == 1) {
        const HVector r = P.r2(X, Y) - linear(T.L.diamond(X[0], Y[0]), [](int l) { return HVector(Word{l}, 1); });
        Pb.check(Pb.index("r2_letters"), r.empty(),
                 [&] { return "X=" + T.name(X) + ", Y=" + T.name(Y) + ": residual " + T.format(r); });
      }
      for (const auto& Z : words) {
        if (X.size() + Y.size() + Z.size() > static_cast<std::size_t>(opt.weight) || !I.in_window(X + Y + Z)) continue;
        const Scalar s(sign_of(I.dg1(Y) * I.dg1(Z)));
        const HVector ZU{Z, 1}, YU{Y, 1};
        HVector r = P.r2_prime(XY, ZU);
        r -= P.r2_prime(HVector(X, 1), P.r2_prime(Y, Z));
        r.add(P.r2_prime(P.r2_prime(X, Z), YU), -s);
        r.add(P.r2_prime(HVector(X, 1), P.r2_prime(Z, Y)), s);
        Pb.check(Pb.index("r2_prelie"), r.empty(), [&] {
          return "X=" + T.name(X) + ", Y=" + T.name(Y) + ", Z=" + T.name(Z) + ": residual " + T.format(r);
        });
      }
    }
  });
  return SuiteReport{S, std::move(probe.records())};
}

}  // namespace preab

#endif  // PREAB_PRELIE_HPP
