#include <doctest.h>

#include <map>
#include <random>

#include "helpers.hpp"

using namespace preab;

TEST_CASE("vector arithmetic is exact") {
  Vec<int> v;
  v.add(0, Scalar(3, 4));
  v.add(2, -5);
  CHECK((v + Scalar(-1) * v).empty());
  CHECK(Scalar(1, 2) * (2 * Vec<int>::unit(1)) == Vec<int>::unit(1));
  v.add(0, Scalar(-3, 4));
  CHECK(v.size() == 1);
  CHECK(v.coeff(0) == 0);
  // unreduced input fractions are normalized on entry
  Vec<int> u(0, Scalar(2, 4));
  u.add(0, Scalar(3, 6));
  CHECK(u == Vec<int>::unit(0));
}

TEST_CASE("addition agrees with a term-by-term oracle") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> key(0, 5), num(-4, 4), den(1, 3);
  for (int trial = 0; trial < 200; ++trial) {
    Vec<int> u, v, w;
    std::map<int, Scalar> oracle;
    for (Vec<int>* x : {&u, &v, &w})
      for (int t = 0; t < 3; ++t) {
        const int k = key(rng);
        Scalar c(num(rng), den(rng));
        x->add(k, c);
        c.canonicalize();
        oracle[k] += c;
      }
    const Vec<int> s1 = (u + v) + w, s2 = u + (v + w);
    CHECK(s1 == s2);
    for (int k = 0; k <= 5; ++k) CHECK(s1.coeff(k) == oracle[k]);
  }
}

TEST_CASE("apply_at_position prefix signs") {
  using T = std::vector<int>;
  auto deg = [](int x) { return static_cast<long>(x); };  // each letter is its own degree
  auto id = [](int x) { return Vec<int>::unit(x); };
  const Vec<T> w1(T{1, 7}, 1), w2(T{1, 2, 7}, 1);
  CHECK(apply_at_position(w1, 1, 2, deg, id) == w1);
  CHECK(apply_at_position(w1, 1, 1, deg, id) == Scalar(-1) * w1);
  CHECK(apply_at_position(w2, 2, 1, deg, id) == Scalar(-1) * w2);
  CHECK(apply_at_position(w2, 0, 1, deg, id) == w2);
  CHECK_THROWS_AS(apply_at_position(w1, 2, 1, deg, id), std::out_of_range);
  // a tensor-valued operator is spliced into place
  auto split = [](int x) { return Vec<T>(T{x, x}, 1); };
  CHECK(apply_at_position(w1, 0, 0, deg, split) == Vec<T>(T{1, 1, 7}, 1));
}

TEST_CASE("volte signs include the factors in between") {
  using T = std::vector<int>;
  auto deg = [](int x) { return static_cast<long>(x); };
  CHECK(volte(Vec<T>(T{1, 3}, 1), 0, 1, deg) == Vec<T>(T{3, 1}, -1));
  CHECK(volte(Vec<T>(T{1, 2, 3}, 1), 0, 2, deg) == Vec<T>(T{3, 2, 1}, -1));
  CHECK(volte(Vec<T>(T{1, 1, 2}, 1), 0, 2, deg) == Vec<T>(T{2, 1, 1}, -1));
}

TEST_CASE("row reduction") {
  RowReducer<int> R;
  CHECK(R.contains(Vec<int>{}));
  R.insert(Vec<int>::unit(1));
  Vec<int> e12 = Vec<int>::unit(1);
  e12.add(2, 1);
  CHECK(R.insert(e12));
  CHECK(R.contains(Vec<int>::unit(2)));
  CHECK_FALSE(R.insert(Vec<int>::unit(2) + Vec<int>::unit(1)));
  CHECK(R.rank() == 2);
  CHECK_FALSE(R.contains(Vec<int>::unit(3)));

  // sh_{1,1} image on two odd letters has rank 1
  const LetterDegree odd = [](int) { return 1L; };
  RowReducer<Word> S;
  S.insert(shuffle(th::W({0}), th::W({1}), odd));
  S.insert(shuffle(th::W({1}), th::W({0}), odd));
  CHECK(S.rank() == 1);
  HVector m(th::W({0, 1}), 1);
  m.add(th::W({1, 0}), -1);
  CHECK(S.contains(m));
}

TEST_CASE("formatted word vectors parse back") {
  const auto I = pre_poisson_fixture();
  const TensorH T(I);
  HVector v(th::W({0, 2}), Scalar(3, 2));
  v.add(th::W({4}), -1);
  v.add(th::W({1, 1, 3}), Scalar(-2, 7));
  const auto text = T.format(v);
  CHECK(parse_word_vector(text, [&](const std::string& s) { return I.find(s); }) == v);
  CHECK(parse_word_vector("0", [&](const std::string& s) { return I.find(s); }).empty());
  CHECK_THROWS(parse_word_vector("1 * nope", [&](const std::string& s) { return I.find(s); }));
}

TEST_CASE("scalars parse exactly") {
  CHECK(parse_scalar("-3/6") == Scalar(-1, 2));
  CHECK(parse_scalar("4") == 4);
  CHECK_THROWS(parse_scalar("1/0"));
  CHECK_THROWS(parse_scalar("0.5"));
}
