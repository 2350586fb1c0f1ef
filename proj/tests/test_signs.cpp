#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "helpers.hpp"

using namespace preab;

namespace {

std::vector<Perm> all_perms(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  std::vector<Perm> out;
  do out.emplace_back(im);
  while (std::next_permutation(im.begin(), im.end()));
  return out;
}

// adjacent-swap oracle: bubble items to their targets, one transposition at a time
int bubble_sign(const std::vector<int>& degs, const Perm& s) {
  std::vector<std::pair<int, int>> a;
  for (int i = 0; i < s.size(); ++i) a.push_back({s.images[i], degs[i]});
  int sign = 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j + 1 < a.size() - i; ++j)
      if (a[j].first > a[j + 1].first) {
        if (a[j].second % 2 && a[j + 1].second % 2) sign = -sign;
        std::swap(a[j], a[j + 1]);
      }
  return sign;
}

std::vector<std::vector<int>> degree_vectors(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> d(n, 0);
  while (true) {
    out.push_back(d);
    int i = 0;
    while (i < n && ++d[i] == 3) d[i++] = 0;
    if (i == n) return out;
  }
}

long binom(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("koszul sign of small permutations") {
  CHECK(koszul_sign({1, 1}, Perm({2, 1})) == -1);
  CHECK(koszul_sign({0, 5}, Perm({2, 1})) == 1);
  // 1 -> 2 -> 3 -> 1
  CHECK(koszul_sign({1, 1, 1}, Perm({2, 3, 1})) == 1);
  CHECK_THROWS_AS(koszul_sign({1, 1, 1}, Perm({2, 1})), std::invalid_argument);
}

TEST_CASE("koszul sign agrees with the adjacent-swap oracle") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& d : degree_vectors(n))
      for (const auto& s : all_perms(n)) REQUIRE(koszul_sign(d, s) == bubble_sign(d, s));
}

TEST_CASE("signed action of permutations is a group action") {
  Word w;
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> letters(n);
    std::iota(letters.begin(), letters.end(), 0);
    const auto perms = all_perms(n);
    for (const auto& d : degree_vectors(n))
      for (const auto& s : perms)
        for (const auto& t : perms) {
          auto [c1, w1] = apply_perm_signed(letters, d, s);
          std::vector<int> d1(n);
          for (int i = 0; i < n; ++i) d1[i] = d[w1[i]];
          auto [c2, w2] = apply_perm_signed(w1, d1, t);
          auto [c, w3] = apply_perm_signed(letters, d, compose(t, s));
          REQUIRE(w2 == w3);
          REQUIRE(c1 * c2 == c);
        }
  }
}

TEST_CASE("apply_perm_signed examples") {
  auto [c0, w0] = apply_perm_signed(std::vector<int>{7, 8, 9}, {1, 1, 1}, Perm::identity(3));
  CHECK(c0 == 1);
  CHECK(w0 == std::vector<int>{7, 8, 9});
  auto [c1, w1] = apply_perm_signed(std::vector<int>{7, 8}, {1, 3}, Perm({2, 1}));
  CHECK(c1 == -1);
  CHECK(w1 == std::vector<int>{8, 7});
  const Perm cyc({2, 3, 1});
  auto [c2, w2] = apply_perm_signed(std::vector<int>{7, 8, 9}, {1, 2, 1}, cyc);
  CHECK(w2 == std::vector<int>{9, 7, 8});
  CHECK(c2 == bubble_sign({1, 2, 1}, cyc));
  CHECK(c2 == -1);
  CHECK_THROWS(apply_perm_signed(std::vector<int>{1}, {1, 1}, Perm({2, 1})));
}

TEST_CASE("shuffles") {
  const auto s11 = enumerate_shuffles(1, 1);
  REQUIRE(s11.size() == 2);
  CHECK(s11[0] == Perm::identity(2));
  CHECK(s11[1] == Perm({2, 1}));
  CHECK(enumerate_shuffles(2, 1).size() == 3);
  CHECK(enumerate_shuffles(2, 2).size() == 6);
  CHECK_THROWS_AS(enumerate_shuffles(0, 2), std::invalid_argument);

  for (int n = 2; n <= 7; ++n)
    for (int p = 1; p < n; ++p) {
      const auto sh = enumerate_shuffles(p, n - p);
      CHECK(static_cast<long>(sh.size()) == binom(n, p));
      std::vector<Perm> brute;
      for (const auto& s : all_perms(n)) {
        bool ok = true;
        for (int i = 1; i < p; ++i) ok = ok && s(i) < s(i + 1);
        for (int i = p + 1; i < n; ++i) ok = ok && s(i) < s(i + 1);
        if (ok) brute.push_back(s);
      }
      auto sorted = sh;
      std::sort(sorted.begin(), sorted.end());
      CHECK(sorted == brute);
    }
}

TEST_CASE("Sh_{k,1,n-k-1} against the brute-force filter") {
  CHECK(enumerate_sh_k_1_rest(0, 1).size() == 1);
  CHECK(enumerate_sh_k_1_rest(0, 2).size() == 2);
  CHECK_THROWS_AS(enumerate_sh_k_1_rest(3, 3), std::invalid_argument);
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k < n; ++k) {
      std::vector<Perm> brute;
      for (const auto& s : all_perms(n)) {
        bool ok = true;
        for (int i = 1; i < k; ++i) ok = ok && s(i) < s(i + 1);
        for (int i = k + 2; i < n; ++i) ok = ok && s(i) < s(i + 1);
        if (ok) brute.push_back(s);
      }
      auto got = enumerate_sh_k_1_rest(k, n);
      std::sort(got.begin(), got.end());
      CHECK(got == brute);
    }
  CHECK(enumerate_sh_k_1_rest(1, 3).size() == 6);
}

TEST_CASE("mu examples and mu o sh = 0") {
  for (int dx = 0; dx < 3; ++dx)
    for (int dy = 0; dy < 3; ++dy) {
      const LetterDegree deg = [&](int x) { return static_cast<long>(x == 0 ? dx : dy); };
      CHECK(mu(th::W({0}), deg) == HVector(th::W({0}), 1));
      HVector want(th::W({0, 1}), 1);
      want.add(th::W({1, 0}), -sign_of(dx * dy));
      CHECK(mu(th::W({0, 1}), deg) == want);
      HVector sh(th::W({0, 1}), 1);
      sh.add(th::W({1, 0}), sign_of(dx * dy));
      CHECK(shuffle(th::W({0}), th::W({1}), deg) == sh);
      CHECK(mu(sh, deg).empty());
    }
  for (int n = 2; n <= 6; ++n)
    for (const auto& d : degree_vectors(n)) {
      const LetterDegree deg = [&](int x) { return static_cast<long>(d[x]); };
      Word w;
      for (int i = 0; i < n; ++i) w.push_back(i);
      for (int p = 1; p < n; ++p) REQUIRE(mu(shuffle(w.slice(0, p), w.slice(p), deg), deg).empty());
    }
}
