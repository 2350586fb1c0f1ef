#ifndef PREAB_SIGNS_HPP
#define PREAB_SIGNS_HPP

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace preab {

/// Permutation in one-line notation over 1-based positions: images[i-1] = sigma(i).
struct Perm {
  std::vector<int> images;

  Perm() = default;
  explicit Perm(std::vector<int> im) : images(std::move(im)) {}

  static Perm identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    return Perm(std::move(im));
  }

  int size() const { return static_cast<int>(images.size()); }
  int operator()(int i) const { return images[i - 1]; }

  bool is_bijection() const {
    std::vector<char> seen(images.size(), 0);
    for (int v : images) {
      if (v < 1 || v > size() || seen[v - 1]) return false;
      seen[v - 1] = 1;
    }
    return true;
  }

  Perm inverse() const {
    std::vector<int> im(images.size());
    for (int i = 0; i < size(); ++i) im[images[i] - 1] = i + 1;
    return Perm(std::move(im));
  }

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;
};

// (t o s)(i) = t(s(i))
inline Perm compose(const Perm& t, const Perm& s) {
  if (t.size() != s.size()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> im(s.images.size());
  for (int i = 1; i <= s.size(); ++i) im[i - 1] = t(s(i));
  return Perm(std::move(im));
}

/// Koszul sign of moving the item at position i to position sigma(i).
/// Every pair of items whose relative order is reversed contributes (-1)^{deg_i deg_j}.
inline int koszul_sign(const std::vector<int>& degs, const Perm& sigma) {
  if (degs.size() != sigma.images.size())
    throw std::invalid_argument("koszul_sign: " + std::to_string(degs.size()) + " degrees for a permutation of size " +
                                std::to_string(sigma.images.size()));
  long e = 0;
  const int n = sigma.size();
  for (int i = 0; i < n; ++i) {
    if (degs[i] % 2 == 0) continue;
    for (int j = i + 1; j < n; ++j)
      if (sigma.images[i] > sigma.images[j] && degs[j] % 2 != 0) ++e;
  }
  return sign_of(e);
}

// Sign of rearranging items into the sequence items[order[0]], items[order[1]], ...
inline int reorder_sign(const std::vector<int>& degs, const std::vector<int>& order) {
  long e = 0;
  const std::size_t n = order.size();
  for (std::size_t p = 0; p < n; ++p) {
    if (degs[order[p]] % 2 == 0) continue;
    for (std::size_t q = p + 1; q < n; ++q)
      if (order[p] > order[q] && degs[order[q]] % 2 != 0) ++e;
  }
  return sign_of(e);
}

/// Letter at position i moves to position sigma(i); the coefficient is the Koszul sign.
template <class T>
std::pair<int, std::vector<T>> apply_perm_signed(const std::vector<T>& word, const std::vector<int>& degs,
                                                 const Perm& sigma) {
  if (word.size() != sigma.images.size() || degs.size() != word.size())
    throw std::invalid_argument("apply_perm_signed: length mismatch");
  std::vector<T> out(word.size());
  for (int i = 0; i < sigma.size(); ++i) out[sigma.images[i] - 1] = word[i];
  return {koszul_sign(degs, sigma), std::move(out)};
}

namespace detail {
template <class F>
void for_each_subset(int n, int k, F&& f) {
  std::vector<int> c(k);
  std::iota(c.begin(), c.end(), 0);
  if (k > n) return;
  while (true) {
    f(c);
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) return;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}
}  // namespace detail

/// (p,q)-shuffles: sigma(1)<...<sigma(p) and sigma(p+1)<...<sigma(p+q).
/// Ordered lexicographically by the position set {sigma(1),...,sigma(p)}.
inline std::vector<Perm> enumerate_shuffles(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("enumerate_shuffles: p and q must be >= 1");
  std::vector<Perm> out;
  const int n = p + q;
  detail::for_each_subset(n, p, [&](const std::vector<int>& pos) {
    std::vector<int> im(n);
    std::vector<char> used(n, 0);
    for (int i = 0; i < p; ++i) {
      im[i] = pos[i] + 1;
      used[pos[i]] = 1;
    }
    int j = p;
    for (int v = 0; v < n; ++v)
      if (!used[v]) im[j++] = v + 1;
    out.emplace_back(std::move(im));
  });
  return out;
}

/// Permutations of S_n with sigma(1)<...<sigma(k) and sigma(k+2)<...<sigma(n).
inline std::vector<Perm> enumerate_sh_k_1_rest(int k, int n) {
  if (n < 1 || k < 0 || k > n - 1) throw std::invalid_argument("enumerate_sh_k_1_rest: k out of range");
  std::vector<Perm> out;
  for (int mid = 1; mid <= n; ++mid) {
    std::vector<int> rest;
    for (int v = 1; v <= n; ++v)
      if (v != mid) rest.push_back(v);
    detail::for_each_subset(n - 1, k, [&](const std::vector<int>& pick) {
      std::vector<int> im;
      std::vector<char> used(n - 1, 0);
      for (int i : pick) {
        im.push_back(rest[i]);
        used[i] = 1;
      }
      im.push_back(mid);
      for (int i = 0; i < n - 1; ++i)
        if (!used[i]) im.push_back(rest[i]);
      out.emplace_back(std::move(im));
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// A signed rearrangement: output slot j receives input item order[j].
struct SignedOrder {
  std::vector<int> order;
  int sign = 1;
};

/// All (p, n-p) shuffles of items 0..n-1 as signed rearrangements, with a flag per output slot
/// telling whether it came from the first block.
struct ShuffleTerm {
  std::vector<int> order;
  std::vector<char> from_left;
  int sign = 1;
};

inline std::vector<ShuffleTerm> shuffle_orders(const std::vector<int>& degs, int p) {
  const int n = static_cast<int>(degs.size());
  std::vector<ShuffleTerm> out;
  if (p == 0 || p == n) {
    ShuffleTerm t;
    t.order.resize(n);
    std::iota(t.order.begin(), t.order.end(), 0);
    t.from_left.assign(n, p == n);
    out.push_back(std::move(t));
    return out;
  }
  detail::for_each_subset(n, p, [&](const std::vector<int>& pos) {
    ShuffleTerm t;
    t.order.assign(n, -1);
    t.from_left.assign(n, 0);
    for (int i = 0; i < p; ++i) {
      t.order[pos[i]] = i;
      t.from_left[pos[i]] = 1;
    }
    int j = p;
    for (int s = 0; s < n; ++s)
      if (t.order[s] < 0) t.order[s] = j++;
    t.sign = reorder_sign(degs, t.order);
    out.push_back(std::move(t));
  });
  return out;
}

namespace detail {
inline void mu_rec(const std::vector<int>& items, const std::vector<int>& degs, int sign,
                   std::vector<SignedOrder>& out, std::vector<int> suffix) {
  const std::size_t n = items.size();
  if (n == 1) {
    SignedOrder t;
    t.order.push_back(items[0]);
    t.order.insert(t.order.end(), suffix.rbegin(), suffix.rend());
    t.sign = sign;
    out.push_back(std::move(t));
    return;
  }
  // mu_n(w) = mu_{n-1}(w_1..w_{n-1}) w_n - (mu_{n-1} (x) id)(tau^{-1} w)
  std::vector<int> head(items.begin(), items.end() - 1);
  auto s1 = suffix;
  s1.push_back(items.back());
  mu_rec(head, degs, sign, out, s1);
  long rest = 0;
  for (std::size_t i = 1; i < n; ++i) rest += degs[items[i]];
  const int tsign = sign_of(static_cast<long>(degs[items[0]]) * rest);
  std::vector<int> rot(items.begin() + 1, items.end());
  auto s2 = suffix;
  s2.push_back(items[0]);
  mu_rec(rot, degs, -sign * tsign, out, s2);
}
}  // namespace detail

/// Signed rearrangements making up mu_n on a word with the given letter degrees.
/// Terms with the same rearrangement are merged.
inline std::vector<SignedOrder> mu_orders(const std::vector<int>& degs) {
  if (degs.empty()) throw std::invalid_argument("mu: empty word");
  std::vector<int> items(degs.size());
  std::iota(items.begin(), items.end(), 0);
  std::vector<SignedOrder> raw;
  detail::mu_rec(items, degs, 1, raw, {});
  std::sort(raw.begin(), raw.end(), [](const SignedOrder& x, const SignedOrder& y) { return x.order < y.order; });
  std::vector<SignedOrder> out;
  for (auto& t : raw) {
    if (!out.empty() && out.back().order == t.order)
      out.back().sign += t.sign;
    else
      out.push_back(t);
  }
  std::erase_if(out, [](const SignedOrder& t) { return t.sign == 0; });
  return out;
}

}  // namespace preab

#endif  // PREAB_SIGNS_HPP
