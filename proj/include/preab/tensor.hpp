#ifndef PREAB_TENSOR_HPP
#define PREAB_TENSOR_HPP

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "linear.hpp"
#include "prealgebra.hpp"
#include "report.hpp"
#include "signs.hpp"

namespace preab {

using HVector = Vec<Word>;
using WordTensor = std::vector<Word>;   // X ⊠ Y ⊠ ...
using TVector = Vec<WordTensor>;

using LetterDegree = std::function<long(int)>;

inline long word_degree(const Word& w, const LetterDegree& deg) {
  long s = 0;
  for (int x : w) s += deg(x);
  return s;
}

/// Signed shuffle sh_{p,q}(X, Y), Koszul signs in the given letter grading.
inline HVector shuffle(const Word& X, const Word& Y, const LetterDegree& deg) {
  HVector out;
  if (X.empty() || Y.empty()) {
    out.add(X + Y, 1);
    return out;
  }
  const Word seq = X + Y;
  std::vector<int> degs;
  for (int x : seq) degs.push_back(static_cast<int>(deg(x)));
  for (const auto& t : shuffle_orders(degs, static_cast<int>(X.size()))) {
    Word w;
    for (int i : t.order) w.push_back(seq[static_cast<std::size_t>(i)]);
    out.add(w, t.sign);
  }
  return out;
}

/// mu_n on a word, signed in the given letter grading.
inline HVector mu(const Word& w, const LetterDegree& deg) {
  std::vector<int> degs;
  for (int x : w) degs.push_back(static_cast<int>(deg(x)));
  HVector out;
  for (const auto& t : mu_orders(degs)) {
    Word r;
    for (int i : t.order) r.push_back(w[static_cast<std::size_t>(i)]);
    out.add(r, t.sign);
  }
  return out;
}

inline HVector mu(const HVector& v, const LetterDegree& deg) {
  return linear(v, [&](const Word& w) { return mu(w, deg); });
}

/// Leibniz coproduct delta(X) = sum_k X[:k] ⊠ mu(X[k:]).
inline TVector delta_leibniz(const Word& w, const LetterDegree& deg) {
  TVector out;
  for (std::size_t k = 1; k < w.size(); ++k) {
    const Word U = w.slice(0, k);
    for (const auto& [M, c] : mu(w.slice(k), deg)) out.add(WordTensor{U, M}, c);
  }
  return out;
}

/// Operators on H = T+(A[-a+1]) built from one pre-(a,b) instance.
class TensorH {
 public:
  explicit TensorH(const PreABInstance& inst, SignTweaks tw = {}) : I(inst), L(inst, tw) {}

  const PreABInstance& I;
  const ShiftedLaws L;

  LetterDegree deg() const {
    return [this](int x) { return I.dg(x); };
  }
  long dg(const Word& w) const { return I.dg(w); }
  long dg(const WordTensor& t) const {
    long s = 0;
    for (const auto& w : t) s += I.dg(w);
    return s;
  }

  HVector shuffle(const Word& X, const Word& Y) const { return preab::shuffle(X, Y, deg()); }
  HVector mu(const Word& w) const { return preab::mu(w, deg()); }
  TVector delta(const Word& w) const { return delta_leibniz(w, deg()); }

  /// D(w) = (w1∧'w2)⊗rest + sum_k (-1)^{dg(w[:k])} ... m2(w_k, w_{k+1}) ..., plus the
  /// d-terms (-1)^{dg(w[:k])} ... d(w_k) ... when the instance has a differential and with_d is set.
  HVector D(const Word& w, bool with_d = true) const {
    HVector out;
    const std::size_t n = w.size();
    if (with_d && I.has_diff) {
      long pre = 0;
      for (std::size_t k = 0; k < n; ++k) {
        for (const auto& [l, c] : I.differential(w[k])) {
          Word r = w;
          r[k] = l;
          out.add(r, c * sign_of(pre));
        }
        pre += I.dg(w[k]);
      }
    }
    if (n < 2) return out;
    for (const auto& [l, c] : L.wedge(w[0], w[1])) {
      Word r{l};
      r.insert(r.end(), w.begin() + 2, w.end());
      out.add(r, c);
    }
    long pre = I.dg(w[0]);
    for (std::size_t k = 1; k + 1 < n; ++k) {
      for (const auto& [l, c] : L.m2(w[k], w[k + 1])) {
        Word r = w.slice(0, k);
        r.push_back(l);
        r.insert(r.end(), w.begin() + static_cast<long>(k) + 2, w.end());
        out.add(r, c * sign_of(pre));
      }
      pre += I.dg(w[k]);
    }
    return out;
  }
  HVector D(const HVector& v, bool with_d = true) const {
    return linear(v, [&](const Word& w) { return D(w, with_d); });
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
  std::string name(const Word& w) const {
    return join_word(w, [&](int x) { return I.name(x); });
  }
};

/// All words of length 1..L inside the instance window, optionally over the first n letters.
inline std::vector<Word> window_words(const PreABInstance& I, int L, int max_letters = -1) {
  const int n = max_letters < 0 ? I.size() : std::min(max_letters, I.size());
  std::vector<Word> out;
  Word cur;
  std::function<void(int)> rec = [&](int left) {
    if (!cur.empty() && I.in_window(cur)) out.push_back(cur);
    if (left == 0) return;
    for (int x = 0; x < n; ++x) {
      cur.push_back(x);
      if (I.in_window(cur)) rec(left - 1);
      cur.pop_back();
    }
  };
  rec(L);
  std::sort(out.begin(), out.end());
  return out;
}

struct SuiteOptions {
  int weight = 4;        // cap for unary identities
  int weight_pair = 3;   // cap for coproduct compositions
  std::size_t max_failures = 20;
  unsigned threads = 1;
  SignTweaks tweaks;
};

/// Tensor-level suite: the Leibniz coalgebra law, D^2 = 0, D as a coderivation of delta, and
/// the shuffle facts the pre-Lie construction relies on.
inline SuiteReport verify_Z_infinity(const PreABInstance& I, const SuiteOptions& opt) {
  const std::string S = "tensor";
  using detail::rec;
  std::vector<IdentityRecord> R = {
      rec(S, "delta_coleibniz", "(id⊗δ)∘δ = (δ⊗id - τ23∘(δ⊗id))∘δ"),
      rec(S, "D_square", "D∘D = 0"),
      rec(S, "D_delta_coderivation", "δ∘D = (D⊗id + id⊗D)∘δ"),
      rec(S, "D_degree", "dg(D X) = dg(X) + 1"),
      rec(S, "mu_kills_shuffles", "μ_{p+q}∘sh_{p,q} = 0"),
      rec(S, "shuffle_commutative", "sh(X,Y) = (-1)^{xy} sh(Y,X)"),
  };
  if (I.has_diff) {
    auto a = rec(S, "D0_square", "D∘D = 0 for D without d-terms");
    auto b = rec(S, "D0_delta_coderivation", "δ∘D = (D⊗id + id⊗D)∘δ for D without d-terms");
    R.push_back(a);
    R.push_back(b);
  }
  for (auto& r : R) r.weight_cap = opt.weight;
  const TensorH T(I, opt.tweaks);
  const auto deg = T.deg();
  auto tdeg = [&](const Word& w) { return I.dg(w); };
  Probe probe(std::move(R), opt.max_failures);
  const auto words = window_words(I, opt.weight);

  run_sharded(words, probe, opt.threads, [&](const Word& w, Probe& P) {
    auto say = [&](const auto& r) { return "X=" + T.name(w) + ": residual " + T.format(r); };
    const TVector dw = T.delta(w);
    {
      TVector lhs = apply_at_position(dw, 1, 0, tdeg, [&](const Word& x) { return T.delta(x); });
      TVector t = apply_at_position(dw, 0, 0, tdeg, [&](const Word& x) { return T.delta(x); });
      TVector r = lhs - t + volte(t, 1, 2, tdeg);
      P.check(P.index("delta_coleibniz"), r.empty(), [&] { return say(r); });
    }
    for (bool with_d : {true, false}) {
      if (!with_d && !I.has_diff) break;
      const std::string pre = with_d ? "D" : "D0";
      const HVector Dw = T.D(w, with_d);
      const HVector DD = T.D(Dw, with_d);
      P.check(P.index(pre + "_square"), DD.empty(), [&] { return say(DD); });
      TVector lhs = linear(Dw, [&](const Word& x) { return T.delta(x); });
      auto Dop = [&](const Word& x) { return T.D(x, with_d); };
      TVector r = lhs - apply_at_position(dw, 0, 1, tdeg, Dop) - apply_at_position(dw, 1, 1, tdeg, Dop);
      P.check(P.index(pre + "_delta_coderivation"), r.empty(), [&] { return say(r); });
      if (with_d) {
        bool ok = true;
        for (const auto& [u, c] : Dw)
          if (I.dg(u) != I.dg(w) + 1) ok = false;
        P.check(P.index("D_degree"), ok, [&] { return say(Dw); });
      }
    }
    for (std::size_t p = 1; p < w.size(); ++p) {
      const Word X = w.slice(0, p), Y = w.slice(p);
      const HVector s = T.shuffle(X, Y);
      const HVector ms = preab::mu(s, deg);
      P.check(P.index("mu_kills_shuffles"), ms.empty(),
              [&] { return "X=" + T.name(X) + ", Y=" + T.name(Y) + ": residual " + T.format(ms); });
      HVector r = s;
      r.add(T.shuffle(Y, X), -Scalar(sign_of(I.dg(X) * I.dg(Y))));
      P.check(P.index("shuffle_commutative"), r.empty(),
              [&] { return "X=" + T.name(X) + ", Y=" + T.name(Y) + ": residual " + T.format(r); });
    }
  });
  SuiteReport out{S, std::move(probe.records())};
  return out;
}

}  // namespace preab

#endif  // PREAB_TENSOR_HPP
