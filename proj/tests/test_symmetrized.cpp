#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace preab;
using th::W;

TEST_CASE("shuffle quotient") {
  const auto I = th::zero(0, 0);  // dg = -1, 0, 1
  const SymmetrizedPath Y(I);
  const auto deg = Y.deg();
  CHECK(Y.reduce(preab::shuffle(W({0}), W({2}), deg)).empty());
  CHECK(Y.reduce(preab::shuffle(W({1, 0}), W({2}), deg)).empty());
  for (int x = 0; x < 3; ++x) CHECK(Y.reduce(W({x})) == HVector(W({x}), 1));
  // two odd letters: sh(e0, e2) = e0⊗e2 - e2⊗e0 spans the stratum
  CHECK(Y.Qt.rank(W({0, 2})) == 1);
  CHECK(Y.reduce(W({2, 0})) == HVector(W({0, 2}), 1));
  HVector s(W({0, 2}), 1);
  s.add(W({2, 0}), sign_of(I.dg(0) * I.dg(2)));
  CHECK(Y.reduce(s).empty());
  // sh(x,x) = (1 + (-1)^x) x⊗x, so x⊗x survives only for odd x
  CHECK(Y.reduce(W({0, 0})).empty() == false);
  CHECK(Y.reduce(W({1, 1})).empty());
  CHECK(Y.Qt.basis(W({0, 1, 2})).size() == 2);
}

TEST_CASE("cobracket, D and l2 on letters") {
  const auto I = pre_poisson_fixture();
  const SymmetrizedPath Y(I);
  for (int x = 0; x < I.size(); ++x) {
    CHECK(Y.cobracket(W({x})).empty());
    for (int y = 0; y < I.size(); ++y) {
      TVector want(WordTensor{W({x}), W({y})}, 1);
      want.add(WordTensor{W({y}), W({x})}, -sign_of(I.dg(x) * I.dg(y)));
      CHECK(Y.cobracket(W({x, y})) == want);
      HVector mu, ell;
      for (const auto& [l, c] : Y.A.mu(x, y)) mu.add(W({l}), c);
      for (const auto& [l, c] : Y.A.ell(x, y)) ell.add(W({l}), c);
      CHECK(Y.D(W({x, y})) == mu);
      CHECK(Y.ell2(W({x}), W({y})) == ell);
    }
  }
}

TEST_CASE("cobracket is antisymmetric under the signed volte") {
  const auto I = pre_poisson_fixture();
  const SymmetrizedPath Y(I);
  for (const auto& w : Y.quotient_basis(3)) {
    const TVector d = Y.cobracket(w);
    CHECK(volte(d, 0, 1, Y.word_deg()) == Scalar(-1) * d);
  }
}

TEST_CASE("l2 ignores shuffle-span perturbations of its inputs") {
  const auto I = pre_gerstenhaber_fixture();
  const SymmetrizedPath Y(I);
  const auto words = Y.quotient_basis(2);
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  auto l2 = [&](const HVector& u, const Word& v) {
    HVector out;
    for (const auto& [w, c] : u) out.add(Y.ell2(w, v), c);
    return out;
  };
  for (int t = 0; t < 60; ++t) {
    const Word X = words[pick(rng)], Z = words[pick(rng)];
    const Word U = words[pick(rng)], V = words[pick(rng)];
    HVector Xp(X, 1);
    Xp.add(preab::shuffle(U, V, Y.deg()), Scalar(coef(rng)));
    CHECK(l2(Xp, Z) == Y.ell2(X, Z));
    CHECK(Y.reduce(Y.D_raw(X) + linear(preab::shuffle(U, V, Y.deg()), [&](const Word& w) { return Y.D_raw(w); })) ==
          Y.D(X));
  }
}

TEST_CASE("symmetrized suite") {
  for (const auto& I : {th::zero(0, 0), th::zero(0, -1), pre_poisson_fixture(), pre_gerstenhaber_fixture(),
                        zero_with_differential(0, 0)}) {
    const auto r = verify_symmetrized(I, th::opts(3));
    CHECK(r.passed());
    for (const char* n : {"ell2_equation", "dgla_antisymmetry", "dgla_jacobi", "dgla_D_derivation", "ell2pp_symmetry",
                          "ell2pp_jacobi", "ell2pp_D", "S_Q_square", "S_dsec_coJacobi", "S_dsec_coLeibniz"})
      CHECK(th::get(r, n).passed());
  }
  CHECK(verify_symmetrized(build_forms_instance({1, 2}), th::opts(3)).passed());

  auto o = th::opts(3);
  o.tweaks.ell2_pair = true;
  const auto bad = verify_symmetrized(pre_gerstenhaber_fixture(), o);
  CHECK_FALSE(bad.passed());
  CHECK(th::clean(bad, "D_square"));
}
