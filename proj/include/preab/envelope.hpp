#ifndef PREAB_ENVELOPE_HPP
#define PREAB_ENVELOPE_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "prelie.hpp"
#include "symalg.hpp"

namespace preab {

/// X_0 ⊗ X_1...X_n in H[a-b] ⊗ S(H[a-b]). The body is kept in canonical order; an empty body is
/// the unit of S.
struct EnvElem {
  Word head;
  Mono body;
  bool operator==(const EnvElem&) const = default;
  auto operator<=>(const EnvElem&) const = default;
};

using EVec = Vec<EnvElem>;
using EnvTensor = std::vector<EnvElem>;
using ETVec = Vec<EnvTensor>;

class Envelope {
 public:
  explicit Envelope(const PreABInstance& inst, SignTweaks tw = {})
      : I(inst), P(inst, tw), ab(inst.a - inst.b), mirror_(tw.kappa_mirror ? -1 : 1) {
    S.ab = ab;
    S.dg2 = [this](const Word& w) { return I.dg2(w); };
    S.reduce = [](const HVector& v) { return v; };
    S.cut = [this](const Word& w) { return kappa_head(w); };
    S.D = [this](const Word& w) { return P.T.D(w); };
    S.l2pp = [this](const Word& X, const Word& Y) { return P.ell2_second(X, Y); };
  }
  Envelope(const Envelope&) = delete;
  Envelope& operator=(const Envelope&) = delete;

  const PreABInstance& I;
  const PreLieH P;
  const long ab;
  SAlg S;  // S+(H[a-b]) with δ'' built from the μ-twisted cut

  long dg2(const Word& w) const { return I.dg2(w); }
  long edeg(const EnvElem& E) const { return dg2(E.head) + S.sdeg(E.body); }
  std::function<long(const EnvElem&)> degree() const {
    return [this](const EnvElem& E) { return edeg(E); };
  }
  int weight(const EnvElem& E) const { return static_cast<int>(E.head.size()) + mono_weight(E.body); }

  /// Embedding of S+ into H ⊗ S: Y_1...Y_n -> sum_j ±Y_j ⊗ (Y without j).
  EVec iota(const Mono& body) const {
    EVec out;
    long pre = 0;
    for (std::size_t j = 0; j < body.size(); ++j) {
      const long d = dg2(body[j]);
      Mono rest = body;
      rest.erase(rest.begin() + static_cast<long>(j));
      out.add(EnvElem{body[j], std::move(rest)}, sign_of(d * pre));
      pre += d;
    }
    return out;
  }

  /// Permutative coproduct: sum over splits I ⊔ J of the body with J nonempty of
  /// ±(X_0 ⊗ X_I) ⊠ iota(X_J).
  ETVec Delta(const EnvElem& E) const {
    const int n = static_cast<int>(E.body.size());
    const auto d = S.degs(E.body);
    ETVec out;
    for (int mask = 1; mask < (1 << n); ++mask) {
      std::vector<int> order;
      Mono L, R;
      for (int i = 0; i < n; ++i)
        if (!((mask >> i) & 1)) {
          order.push_back(i);
          L.push_back(E.body[i]);
        }
      for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1) {
          order.push_back(i);
          R.push_back(E.body[i]);
        }
      const int s = reorder_sign(d, order);
      const EnvElem left{E.head, L};
      for (const auto& [r, c] : iota(R)) out.add(EnvTensor{left, r}, c * s);
    }
    return out;
  }

  EVec m(const EnvElem& E) const {
    EVec out;
    for (const auto& [u, c] : P.T.D(E.head)) out.add(EnvElem{u, E.body}, c);
    const int s0 = sign_of(dg2(E.head));
    for (const auto& [b, c] : S.m(E.body)) out.add(EnvElem{E.head, b}, c * s0);
    return out;
  }

  EVec R(const EnvElem& E) const {
    EVec out;
    long pre = 0;
    for (std::size_t i = 0; i < E.body.size(); ++i) {
      const long d = dg2(E.body[i]);
      Mono rest = E.body;
      rest.erase(rest.begin() + static_cast<long>(i));
      for (const auto& [u, c] : P.r2_second(E.head, E.body[i])) out.add(EnvElem{u, rest}, c * sign_of(d * pre));
      pre += d;
    }
    const int s0 = sign_of(dg2(E.head));
    for (const auto& [b, c] : S.lpp(E.body)) out.add(EnvElem{E.head, b}, c * s0);
    return out;
  }

  EVec Q(const EnvElem& E) const { return m(E) + R(E); }

  /// κ(X_0) = sum over cuts U|V of X_0 of (-1)^{(a-b)u''} (U ⊠ μV + (-1)^{u''v''+a-b+1} μV ⊠ U).
  CutVec kappa_head(const Word& X0) const {
    CutVec out;
    for (std::size_t k = 1; k < X0.size(); ++k) {
      const Word U = X0.slice(0, k), V = X0.slice(k);
      const long u = dg2(U), v = dg2(V);
      const int s = sign_of(ab * u);
      for (const auto& [M, c] : P.T.mu(V)) {
        out.add({U, M}, c * s);
        out.add({M, U}, c * s * sign_of(u * v + ab + 1) * mirror_);
      }
    }
    return out;
  }

  /// κ on X_0 ⊗ X_1...X_n: the head cuts distributed over the body, plus
  /// (-1)^{(a-b)x_0''} X_0 ⊗ δ''(X_1...X_n).
  ETVec kappa(const EnvElem& E) const {
    const int n = static_cast<int>(E.body.size());
    const auto d = S.degs(E.body);
    ETVec out;
    for (const auto& [AB, c] : kappa_head(E.head)) {
      const auto& [A, B] = AB;
      std::vector<int> items{static_cast<int>(dg2(A) % 2), static_cast<int>(dg2(B) % 2)};
      items.insert(items.end(), d.begin(), d.end());
      for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> order{0};
        std::vector<Word> lf, rf{B};
        for (int i = 0; i < n; ++i)
          if (!((mask >> i) & 1)) {
            order.push_back(2 + i);
            lf.push_back(E.body[i]);
          }
        order.push_back(1);
        for (int i = 0; i < n; ++i)
          if ((mask >> i) & 1) {
            order.push_back(2 + i);
            rf.push_back(E.body[i]);
          }
        const auto [sL, lbody] = S.canon(lf);
        const auto [sR, rbody] = S.canon(rf);
        if (!sL || !sR) continue;
        const Scalar k = c * reorder_sign(items, order) * sL * sR;
        const EnvElem left{A, lbody};
        for (const auto& [r, c3] : iota(rbody)) out.add(EnvTensor{left, r}, k * c3);
      }
    }
    if (n) {
      const int s0 = sign_of(ab * dg2(E.head));
      for (const auto& [CD, c] : S.dsec(E.body)) {
        const EnvElem left{E.head, CD[0]};
        for (const auto& [r, c3] : iota(CD[1])) out.add(EnvTensor{left, r}, c * c3 * s0);
      }
    }
    return out;
  }

  std::string name(const EnvElem& E) const {
    std::string s = P.T.name(E.head) + " ⊗ ";
    if (E.body.empty()) return s + "1";
    return s + format_mono(E.body, [&](const Word& w) { return P.T.name(w); });
  }
  std::string format(const EVec& v) const {
    return preab::format(v, [&](const EnvElem& E) { return "(" + name(E) + ")"; });
  }
  std::string format(const ETVec& v) const {
    return preab::format(v, [&](const EnvTensor& t) {
      std::string s;
      for (std::size_t i = 0; i < t.size(); ++i) s += (i ? " ⊠ " : "") + std::string("(") + name(t[i]) + ")";
      return s;
    });
  }

 private:
  int mirror_;
};

/// Envelope elements with total letter count <= L whose letters fit the window.
inline std::vector<EnvElem> env_elements(const Envelope& En, int L) {
  const auto& I = En.I;
  const auto words = window_words(I, L);
  auto fits = [&](const Word& h, const Mono& b) {
    Word all = h;
    for (const auto& w : b) all.insert(all.end(), w.begin(), w.end());
    return I.in_window(all);
  };
  std::vector<EnvElem> out;
  for (const auto& h : words) {
    const int rem = L - static_cast<int>(h.size());
    out.push_back({h, {}});
    if (rem <= 0) continue;
    for (auto& b : enumerate_monos(words, rem, En.S.dg2, [&](const Mono& m) { return fits(h, m); }))
      out.push_back({h, std::move(b)});
  }
  return out;
}

/// Identity suite of the enveloping object: Q = m + R is a codifferential and a coderivation of
/// Δ, Δ is permutative, the coproduct κ and its compatibilities with Δ and Q, and the δ'' suite
/// on S+(H[a-b]).
inline SuiteReport verify_envelope(const PreABInstance& I, const SuiteOptions& opt) {
  const std::string S = "envelope";
  using detail::rec;
  const int L4 = opt.weight, L3 = std::min(opt.weight, opt.weight_pair);
  std::vector<IdentityRecord> R = {
      rec(S, "Q_square", "Q∘Q = 0, Q = m + R"),
      rec(S, "m_square", "m∘m = 0"),
      rec(S, "Q_degree", "deg''(Q) = 1"),
      rec(S, "Delta_permutativity", "(id⊗Δ)∘Δ = τ''23∘(id⊗Δ)∘Δ = (Δ⊗id)∘Δ"),
      rec(S, "Q_Delta_coderivation", "Δ∘Q = (Q⊗id + id⊗Q)∘Δ"),
      rec(S, "m_Delta_coderivation", "Δ∘m = (m⊗id + id⊗m)∘Δ"),
      rec(S, "kappa_coleibniz", "(-1)^{a-b} (id⊗κ)∘κ = (κ⊗id + τ''23∘(κ⊗id))∘κ"),
      rec(S, "kappa_compat1", "(id⊗κ)∘Δ = (-1)^{a-b+1} τ''23∘(id⊗κ)∘Δ"),
      rec(S, "kappa_compat2", "(id⊗Δ)∘κ = (κ⊗id + τ''23∘(κ⊗id))∘Δ"),
      rec(S, "kappa_compat3", "(Δ⊗id)∘κ = (id⊗κ)∘Δ + τ''23∘(κ⊗id)∘Δ"),
      rec(S, "Q_kappa_coderivation", "(Q⊗id + id⊗Q)∘κ = (-1)^{a-b} κ∘Q"),
  };
  for (std::size_t i = 0; i < R.size(); ++i) R[i].weight_cap = i < 6 ? L4 : L3;
  const std::size_t n_env = R.size();
  for (auto& r : salg_records(S, "S_", L4, L3)) R.push_back(r);
  for (std::size_t i = n_env; i < R.size(); ++i) R[i].note = "S+(H[a-b]) with δ'' from the μ-twisted cut";

  const Envelope En(I, opt.tweaks);
  const auto dd = En.degree();
  const long ab = En.ab;
  Probe probe(std::move(R), opt.max_failures);
  const auto elems = env_elements(En, L4);

  auto Qf = [&](const EnvElem& E) { return En.Q(E); };
  auto mf = [&](const EnvElem& E) { return En.m(E); };
  auto Df = [&](const EnvElem& E) { return En.Delta(E); };
  auto Kf = [&](const EnvElem& E) { return En.kappa(E); };

  run_sharded(elems, probe, opt.threads, [&](const EnvElem& E, Probe& Pb) {
    auto say = [&](const auto& r) { return "E = " + En.name(E) + ": residual " + En.format(r); };
    const ETVec v(EnvTensor{E}, 1);
    const EVec QE = En.Q(E);
    {
      const EVec QQ = linear(QE, Qf);
      Pb.check(Pb.index("Q_square"), QQ.empty(), [&] { return say(QQ); });
      const EVec mm = linear(En.m(E), mf);
      Pb.check(Pb.index("m_square"), mm.empty(), [&] { return say(mm); });
      bool ok = true;
      for (const auto& [u, c] : QE)
        if (En.edeg(u) != En.edeg(E) + 1) ok = false;
      Pb.check(Pb.index("Q_degree"), ok, [&] { return say(QE); });
    }
    const ETVec dv = En.Delta(E);
    {
      const ETVec A1 = apply_at_position(dv, 1, 0, dd, Df);
      const ETVec r1 = A1 - volte(A1, 1, 2, dd);
      const ETVec r2 = A1 - apply_at_position(dv, 0, 0, dd, Df);
      Pb.check(Pb.index("Delta_permutativity"), r1.empty() && r2.empty(),
               [&] { return say(r1.empty() ? r2 : r1); });
    }
    for (const auto& [nm, f] : {std::pair<std::string, std::function<EVec(const EnvElem&)>>{"Q", Qf}, {"m", mf}}) {
      const ETVec lhs = apply_at_position(apply_at_position(v, 0, 1, dd, f), 0, 0, dd, Df);
      const ETVec r = lhs - apply_at_position(dv, 0, 1, dd, f) - apply_at_position(dv, 1, 1, dd, f);
      Pb.check(Pb.index(nm + "_Delta_coderivation"), r.empty(), [&] { return say(r); });
    }
    if (En.weight(E) > L3) return;
    const ETVec kv = En.kappa(E);
    {
      ETVec lhs = apply_at_position(kv, 1, ab, dd, Kf);
      lhs *= Scalar(sign_of(ab));
      const ETVec t = apply_at_position(kv, 0, ab, dd, Kf);
      const ETVec r = lhs - t - volte(t, 1, 2, dd);
      Pb.check(Pb.index("kappa_coleibniz"), r.empty(), [&] { return say(r); });
    }
    const ETVec c1 = apply_at_position(dv, 1, ab, dd, Kf);
    const ETVec t2 = apply_at_position(dv, 0, ab, dd, Kf);
    {
      ETVec r = c1;
      r.add(volte(c1, 1, 2, dd), -Scalar(sign_of(ab + 1)));
      Pb.check(Pb.index("kappa_compat1"), r.empty(), [&] { return say(r); });
    }
    {
      const ETVec r = apply_at_position(kv, 1, 0, dd, Df) - t2 - volte(t2, 1, 2, dd);
      Pb.check(Pb.index("kappa_compat2"), r.empty(), [&] { return say(r); });
    }
    {
      const ETVec r = apply_at_position(kv, 0, 0, dd, Df) - c1 - volte(t2, 1, 2, dd);
      Pb.check(Pb.index("kappa_compat3"), r.empty(), [&] { return say(r); });
    }
    {
      const ETVec lhs = apply_at_position(kv, 0, 1, dd, Qf) + apply_at_position(kv, 1, 1, dd, Qf);
      ETVec r = lhs;
      r.add(apply_at_position(apply_at_position(v, 0, 1, dd, Qf), 0, ab, dd, Kf), -Scalar(sign_of(ab)));
      Pb.check(Pb.index("Q_kappa_coderivation"), r.empty(), [&] { return say(r); });
    }
  });

  // δ'' suite on the body algebra
  const auto words = window_words(I, L4);
  const auto monos = enumerate_monos(words, L4, En.S.dg2, [&](const Mono& m) {
    Word all;
    for (const auto& w : m) all.insert(all.end(), w.begin(), w.end());
    return I.in_window(all);
  });
  auto nm = [&](const Word& w) { return En.P.T.name(w); };
  run_sharded(monos, probe, opt.threads, [&](const Mono& M, Probe& Pb) { salg_check(En.S, M, "S_", L3, Pb, nm); });
  return SuiteReport{S, std::move(probe.records())};
}

}  // namespace preab

#endif  // PREAB_ENVELOPE_HPP
