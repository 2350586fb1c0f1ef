#include <doctest.h>

#include "helpers.hpp"

using namespace preab;
using th::W;

TEST_CASE("R2 on short words") {
  const auto I = pre_gerstenhaber_fixture();
  const PreLieH P(I);
  const auto& L = P.T.L;
  const long e = I.b - I.a + 1;
  bool seen_ell = false;
  for (int x = 0; x < I.size(); ++x)
    for (int y = 0; y < I.size(); ++y) {
      HVector one;
      for (const auto& [l, c] : L.diamond(x, y)) one.add(W({l}), c);
      CHECK(P.r2(W({x}), W({y})) == one);
      for (int z = 0; z < I.size(); ++z) {
        // p = 2, q = 1: head term and one ℓ insertion
        HVector two;
        for (const auto& [l, c] : L.diamond(x, z)) two.add(W({l, y}), c * sign_of(I.dg(y) * I.dg(z)));
        for (const auto& [l, c] : L.ell(y, z)) {
          two.add(W({x, l}), c * sign_of(e * I.dg(x)));
          seen_ell = true;
        }
        CHECK(P.r2(W({x, y}), W({z})) == two);
        // p = 1, q = 2: head term only
        HVector head;
        for (const auto& [l, c] : L.diamond(x, y)) head.add(W({l, z}), c);
        CHECK(P.r2(W({x}), W({y, z})) == head);
      }
    }
  CHECK(seen_ell);
}

TEST_CASE("R2' sign") {
  // a - b - 1 = 0 on the pre-Gerstenhaber fixture: no sign
  const auto G = pre_gerstenhaber_fixture();
  const PreLieH PG(G);
  for (int x = 0; x < G.size(); ++x)
    for (int y = 0; y < G.size(); ++y) CHECK(PG.r2_prime(W({x}), W({y})) == PG.r2(W({x}), W({y})));
  // (a,b) = (0,0): sign (-1)^{dg'(X)}
  const auto Pp = pre_poisson_fixture();
  const PreLieH PP(Pp);
  for (int x = 0; x < Pp.size(); ++x)
    for (int y = 0; y < Pp.size(); ++y)
      CHECK(PP.r2_prime(W({x, y}), W({y})) == Scalar(sign_of(Pp.dg1(W({x, y})))) * PP.r2(W({x, y}), W({y})));
}

TEST_CASE("l2'' is graded symmetric") {
  const auto I = pre_poisson_fixture();
  const PreLieH P(I);
  for (const auto& X : window_words(I, 2))
    for (const auto& Y : window_words(I, 2))
      CHECK(P.ell2_second(X, Y) == Scalar(sign_of(I.dg2(X) * I.dg2(Y))) * P.ell2_second(Y, X));
}

TEST_CASE("pre-Lie suite") {
  for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 0}, {0, -1}, {-1, -3}})
    CHECK(verify_prelie(th::zero(a, b), th::opts(4)).passed());
  const auto F = restrict_alphabet(build_forms_instance({1, 2}), {"1", "x", "dx", "x*dx"});
  const auto r = verify_prelie(F, th::opts(4));
  CHECK(th::clean(r, "r2_prelie"));
  CHECK(th::clean(r, "D_derivation_of_r2"));
  CHECK(verify_prelie(pre_gerstenhaber_fixture(), th::opts(4)).passed());
  CHECK(verify_prelie(zero_with_differential(0, 0), th::opts(4)).passed());

  // on single letters (*) is the shifted pre-Lie relation of the instance
  const auto one = verify_prelie(build_forms_instance({1, 2}), th::opts(3));
  CHECK(th::clean(one, "r2_prelie"));
  CHECK(th::clean(check_axioms(build_forms_instance({1, 2})), "shifted_prelie"));

  auto o = th::opts(4);
  o.tweaks.r2_ell = true;
  CHECK_FALSE(verify_prelie(pre_gerstenhaber_fixture(), o).passed());
}
