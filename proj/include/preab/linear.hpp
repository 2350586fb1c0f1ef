#ifndef PREAB_LINEAR_HPP
#define PREAB_LINEAR_HPP

#include <cctype>
#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace preab {

/// Finite linear combination over ordered keys. Zero coefficients are never stored,
/// so two vectors are equal exactly when their term maps are equal.
template <class K>
class Vec {
 public:
  using key_type = K;
  using Map = std::map<K, Scalar>;

  Vec() = default;
  Vec(const K& k, const Scalar& c) { add(k, c); }

  static Vec unit(const K& k) { return Vec(k, Scalar(1)); }

  // Coefficients are canonicalized on entry: mpq_class(n, d) does not reduce, and GMP
  // arithmetic assumes reduced operands.
  void add(const K& k, Scalar c) {
    if (sgn(c) == 0) return;
    c.canonicalize();
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, std::move(c));
      return;
    }
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
  void add(const K& k, int c) {
    if (c != 0) add(k, Scalar(c));
  }
  void add(const Vec& o, const Scalar& c) {
    if (sgn(c) == 0) return;
    for (const auto& [k, x] : o.terms_) add(k, x * c);
  }
  void add(const Vec& o) {
    for (const auto& [k, x] : o.terms_) add(k, x);
  }

  Vec& operator+=(const Vec& o) {
    add(o);
    return *this;
  }
  Vec& operator-=(const Vec& o) {
    add(o, Scalar(-1));
    return *this;
  }
  Vec& operator*=(const Scalar& c) {
    if (sgn(c) == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, x] : terms_) x *= c;
    return *this;
  }
  friend Vec operator+(Vec u, const Vec& v) { return u += v; }
  friend Vec operator-(Vec u, const Vec& v) { return u -= v; }
  friend Vec operator*(const Scalar& c, Vec v) { return v *= c; }
  friend Vec operator*(int c, Vec v) { return v *= Scalar(c); }

  bool empty() const { return terms_.empty(); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coeff(const K& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar(0) : it->second;
  }
  const Map& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  bool operator==(const Vec& o) const { return terms_ == o.terms_; }

  template <class F>
  auto map_keys(F&& f) const {
    using K2 = std::decay_t<decltype(f(std::declval<const K&>()))>;
    Vec<K2> out;
    for (const auto& [k, x] : terms_) out.add(f(k), x);
    return out;
  }

 private:
  Map terms_;
};

template <class K>
Vec<K> smul(const Scalar& c, const Vec<K>& v) {
  return c * v;
}
template <class K>
Vec<K> add(const Vec<K>& u, const Vec<K>& v) {
  return u + v;
}

/// Extend f: K -> Vec<K2> linearly.
template <class K, class F>
auto linear(const Vec<K>& v, F&& f) {
  using R = std::decay_t<decltype(f(std::declval<const K&>()))>;
  R out;
  for (const auto& [k, x] : v) out.add(f(k), x);
  return out;
}

/// Extend f: (K1, K2) -> Vec<R> bilinearly.
template <class K1, class K2, class F>
auto bilinear(const Vec<K1>& u, const Vec<K2>& v, F&& f) {
  using R = std::decay_t<decltype(f(std::declval<const K1&>(), std::declval<const K2&>()))>;
  R out;
  for (const auto& [k1, x] : u)
    for (const auto& [k2, y] : v) out.add(f(k1, k2), x * y);
  return out;
}

/// Tensor word of basis-letter indices. Ordered by length first, then lexicographically.
struct Word : std::vector<int> {
  using std::vector<int>::vector;
  Word() = default;
  explicit Word(std::vector<int> v) : std::vector<int>(std::move(v)) {}

  std::strong_ordering operator<=>(const Word& o) const {
    if (size() != o.size()) return size() <=> o.size();
    const std::vector<int>& l = *this;
    const std::vector<int>& r = o;
    return l <=> r;
  }
  bool operator==(const Word& o) const {
    return static_cast<const std::vector<int>&>(*this) == static_cast<const std::vector<int>&>(o);
  }

  Word slice(std::size_t b, std::size_t e) const {
    return Word(std::vector<int>(begin() + static_cast<long>(b), begin() + static_cast<long>(e)));
  }
  Word slice(std::size_t b) const { return slice(b, size()); }
  friend Word operator+(Word l, const Word& r) {
    l.insert(l.end(), r.begin(), r.end());
    return l;
  }
};

/// `coeff * key` terms joined by + and -; zero prints as 0.
template <class K, class Name>
std::string format(const Vec<K>& v, Name&& name) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : v) {
    Scalar a = abs(c);
    if (first)
      os << (sgn(c) < 0 ? "-" : "");
    else
      os << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    os << a.get_str() << " * " << name(k);
  }
  return os.str();
}

/// Words are printed as letter names joined by the tensor sign.
inline std::string join_word(const Word& w, const std::function<std::string(int)>& letter,
                             const std::string& sep = "⊗") {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += sep;
    s += letter(w[i]);
  }
  return s;
}

/// Inverse of format() for vectors over words: parses `c * a⊗b - c' * d`.
inline Vec<Word> parse_word_vector(const std::string& text,
                                               const std::function<std::optional<int>(const std::string&)>& lookup) {
  Vec<Word> out;
  auto trim = [](std::string s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
  };
  std::string t = trim(text);
  if (t == "0") return out;
  std::vector<std::pair<int, std::string>> chunks;
  int sign = 1;
  std::string cur;
  for (std::size_t i = 0; i < t.size(); ++i) {
    char ch = t[i];
    bool boundary = (ch == '+' || ch == '-') && (i == 0 || (i >= 1 && t[i - 1] == ' '));
    if (boundary) {
      if (!trim(cur).empty()) chunks.emplace_back(sign, trim(cur));
      cur.clear();
      sign = ch == '-' ? -1 : 1;
    } else {
      cur += ch;
    }
  }
  if (!trim(cur).empty()) chunks.emplace_back(sign, trim(cur));
  for (const auto& [s, chunk] : chunks) {
    auto star = chunk.find(" * ");
    if (star == std::string::npos) throw std::invalid_argument("term without coefficient: '" + chunk + "'");
    Scalar c = parse_scalar(chunk.substr(0, star)) * s;
    std::string rest = trim(chunk.substr(star + 3));
    Word w;
    const std::string sep = "⊗";
    std::size_t pos = 0;
    while (true) {
      auto nx = rest.find(sep, pos);
      std::string nm = trim(rest.substr(pos, nx == std::string::npos ? std::string::npos : nx - pos));
      auto id = lookup(nm);
      if (!id) throw std::invalid_argument("unknown letter '" + nm + "'");
      w.push_back(*id);
      if (nx == std::string::npos) break;
      pos = nx + sep.size();
    }
    out.add(w, c);
  }
  return out;
}

/// Incremental row reduction over a common key space. Each stored row has a pivot equal to its
/// largest key with coefficient 1, and the rows are fully reduced against each other, so
/// normal forms are unique and use only non-pivot keys.
template <class K>
class RowReducer {
 public:
  /// Returns true when v enlarged the span.
  bool insert(Vec<K> v) {
    v = reduce(v);
    if (v.empty()) return false;
    auto last = std::prev(v.terms().end());
    K p = last->first;
    Scalar inv = 1 / last->second;
    v *= inv;
    for (auto& [q, row] : rows_) {
      Scalar c = row.coeff(p);
      if (sgn(c) != 0) row.add(v, -c);
    }
    rows_.emplace(p, std::move(v));
    return true;
  }

  Vec<K> reduce(Vec<K> v) const {
    while (true) {
      const K* hit = nullptr;
      for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it)
        if (rows_.count(it->first)) {
          hit = &it->first;
          break;
        }
      if (!hit) return v;
      K p = *hit;
      Scalar c = v.coeff(p);
      v.add(rows_.at(p), -c);
    }
  }

  bool contains(const Vec<K>& v) const { return reduce(v).empty(); }
  bool is_pivot(const K& k) const { return rows_.count(k) != 0; }
  std::size_t rank() const { return rows_.size(); }
  const std::map<K, Vec<K>>& rows() const { return rows_; }

 private:
  std::map<K, Vec<K>> rows_;
};

/// Apply an operator of degree g to the factor at position k of every tensor, with the Koszul
/// sign (-1)^{g * (sum of degrees of the factors before k)}. The operator returns either single
/// factors or whole tensors; a tensor result is spliced in place of the factor.
template <class T, class Deg, class Op>
Vec<T> apply_at_position(const Vec<T>& v, std::size_t k, long g, Deg&& deg, Op&& op) {
  Vec<T> out;
  for (const auto& [t, c] : v) {
    if (k >= t.size()) throw std::out_of_range("apply_at_position: position out of range");
    long pre = 0;
    if (g % 2 != 0)
      for (std::size_t i = 0; i < k; ++i) pre += deg(t[i]);
    const int s = sign_of(g * pre);
    for (const auto& [r, d] : op(t[k])) {
      T nt(t.begin(), t.begin() + static_cast<long>(k));
      if constexpr (std::is_same_v<std::decay_t<decltype(r)>, T>)
        nt.insert(nt.end(), r.begin(), r.end());
      else
        nt.push_back(r);
      nt.insert(nt.end(), t.begin() + static_cast<long>(k) + 1, t.end());
      out.add(nt, c * d * s);
    }
  }
  return out;
}

/// Signed exchange of factors i and j of every tensor. The sign accounts for every factor in
/// between, so non-adjacent exchanges are the honest Koszul signs too.
template <class T, class Deg>
Vec<T> volte(const Vec<T>& v, std::size_t i, std::size_t j, Deg&& deg) {
  Vec<T> out;
  if (i > j) std::swap(i, j);
  for (const auto& [t, c] : v) {
    long di = deg(t[i]), dj = deg(t[j]), mid = 0;
    for (std::size_t m = i + 1; m < j; ++m) mid += deg(t[m]);
    auto nt = t;
    std::swap(nt[i], nt[j]);
    out.add(nt, c * sign_of(di * dj + (di + dj) * mid));
  }
  return out;
}

}  // namespace preab

#endif  // PREAB_LINEAR_HPP
