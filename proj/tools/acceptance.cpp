// Acceptance run: one PASS/FAIL line per criterion, failing identities listed below it.
// Exit status 0 iff every criterion passes.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <map>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include <preab/preab.hpp>

using namespace preab;

namespace {

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

struct Verdict {
  bool ok = true;
  std::vector<std::string> why;
  void fail(std::string s) {
    ok = false;
    why.push_back(std::move(s));
  }
};

void print(int n, const std::string& title, const Verdict& v) {
  std::cout << (v.ok ? "PASS" : "FAIL") << "  criterion " << n << ": " << title << "\n";
  for (const auto& w : v.why) std::cout << "      " << w << "\n";
  std::cout.flush();
}

// Each named identity must appear in the report and have no failures.
void require(Verdict& v, const SuiteReport& rep, const std::string& label, const std::vector<std::string>& names) {
  for (const auto& n : names) {
    const auto* r = rep.find(n);
    if (!r) {
      v.fail(label + ": identity " + n + " missing");
      continue;
    }
    if (r->inputs == 0) v.fail(label + ": " + n + " checked no inputs");
    if (!r->passed()) {
      std::string s = label + ": " + n + " fails on " + std::to_string(r->failures) + "/" + std::to_string(r->inputs);
      if (!r->samples.empty()) s += ", e.g. " + r->samples.front();
      v.fail(s);
    }
  }
}

// ---- criterion 1 oracles ----

// Sign by bubble-sorting items into their target slots, one adjacent swap at a time.
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

std::vector<Perm> all_perms(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  std::vector<Perm> out;
  do out.emplace_back(im);
  while (std::next_permutation(im.begin(), im.end()));
  return out;
}

std::vector<std::vector<int>> degree_vectors(int n, int base) {
  std::vector<std::vector<int>> out;
  std::vector<int> d(n, 0);
  while (true) {
    out.push_back(d);
    int i = 0;
    while (i < n && ++d[i] == base) d[i++] = 0;
    if (i == n) return out;
  }
}

long binom(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Verdict criterion1() {
  Verdict v;
  long checked = 0;
  for (int n = 1; n <= 6; ++n) {
    const auto perms = all_perms(n);
    // koszul_sign only sees parities; confirm that and the bubble-sort oracle on {0,1,2}^n
    for (const auto& d : degree_vectors(n, 3))
      for (const auto& s : perms) {
        std::vector<int> par(d);
        for (int& x : par) x %= 2;
        if (koszul_sign(d, s) != bubble_sign(d, s) || koszul_sign(d, s) != koszul_sign(par, s)) {
          v.fail("koszul_sign disagrees with adjacent-swap oracle at n=" + std::to_string(n));
          return v;
        }
        ++checked;
      }
    // group action: sign(t o s) = sign(s) * sign(t) on the permuted degrees
    for (const auto& d : degree_vectors(n, n <= 5 ? 3 : 2))
      for (const auto& s : perms) {
        std::vector<int> moved(n);
        for (int i = 0; i < n; ++i) moved[s.images[i] - 1] = d[i];
        const int ks = koszul_sign(d, s);
        for (const auto& t : perms)
          if (koszul_sign(d, compose(t, s)) != ks * koszul_sign(moved, t)) {
            v.fail("group action law fails at n=" + std::to_string(n));
            return v;
          }
      }
  }
  for (int n = 2; n <= 6; ++n)
    for (int p = 1; p < n; ++p) {
      const int q = n - p;
      const auto sh = enumerate_shuffles(p, q);
      long brute = 0;
      for (const auto& s : all_perms(n)) {
        bool ok = true;
        for (int i = 1; i < p; ++i) ok = ok && s(i) < s(i + 1);
        for (int i = p + 1; i < n; ++i) ok = ok && s(i) < s(i + 1);
        brute += ok;
      }
      std::vector<Perm> sorted(sh);
      std::sort(sorted.begin(), sorted.end());
      const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
      if (static_cast<long>(sh.size()) != binom(n, p) || brute != binom(n, p) || !distinct)
        v.fail("shuffle count wrong for (p,q)=(" + std::to_string(p) + "," + std::to_string(q) + ")");
      for (const auto& d : degree_vectors(n, 3)) {
        const LetterDegree deg = [&](int x) { return static_cast<long>(d[x]); };
        Word X, Y;
        for (int i = 0; i < p; ++i) X.push_back(i);
        for (int i = p; i < n; ++i) Y.push_back(i);
        if (!mu(shuffle(X, Y, deg), deg).empty()) {
          v.fail("mu o sh nonzero for (p,q)=(" + std::to_string(p) + "," + std::to_string(q) + ")");
          return v;
        }
      }
    }
  v.why.push_back(std::to_string(checked) + " signed permutations compared against the adjacent-swap oracle");
  return v;
}

// ---- fixtures ----

std::vector<std::pair<std::string, PreABInstance>> theorem_fixtures() {
  std::vector<std::pair<std::string, PreABInstance>> out;
  for (const char* s : {"builtin:zero-0-0", "builtin:zero-0--1", "builtin:zero--1--3"})
    out.emplace_back(s, resolve_instance(s));
  out.emplace_back("forms:1,2 on {1,x,dx,x*dx}",
                   restrict_alphabet(build_forms_instance({1, 2}), {"1", "x", "dx", "x*dx"}));
  return out;
}

SuiteOptions opts(int weight, int pair) {
  SuiteOptions o;
  o.weight = weight;
  o.weight_pair = pair;
  o.max_failures = 3;
  o.threads = workers();
  return o;
}

}  // namespace

int main() {
  bool all = true;
  auto done = [&](int n, const std::string& title, const Verdict& v) {
    print(n, title, v);
    all = all && v.ok;
  };

  done(1, "Koszul group action, shuffle counts and mu o sh = 0 for p+q <= 6", criterion1());

  const PreABInstance forms22 = build_forms_instance({2, 2});
  {
    Verdict v;
    const auto rep = check_axioms(forms22, CheckOptions{3, workers(), {}});
    require(v, rep, "forms:2,2", {"zinbiel", "prelie", "compat1", "compat2", "compat3", "derived1", "derived2"});
    done(2, "forms (2 variables, degree <= 2) satisfies the pre-(a,b) axioms", v);

    Verdict w;
    require(w, rep, "symmetrize(forms:2,2)", {"ab_i", "ab_ii", "ab_iii", "ab_iv", "ab_v"});
    done(3, "symmetrized forms satisfies the (a,b)-algebra relations (i)-(v)", w);
  }

  {
    Verdict v;
    const auto I = build_forms_instance({1, 2});
    const auto rep = verify_Z_infinity(I, opts(4, 3));
    require(v, rep, "forms:1,2", {"delta_coleibniz", "D_square", "D_delta_coderivation"});
    done(4, "tensor level: delta coLeibniz, D^2 = 0, D a delta-coderivation (length <= 4, 6 letters)", v);
  }

  const auto fixtures = theorem_fixtures();
  {
    Verdict v;
    for (const auto& [label, I] : fixtures)
      require(v, verify_prelie(I, opts(4, 3)), label, {"r2_prelie", "D_derivation_of_r2"});
    done(5, "pre-Lie relation for R2' and the D-derivation law (total length <= 4)", v);
  }

  {
    Verdict v;
    for (const auto& [label, I] : fixtures)
      require(v, verify_envelope(I, opts(4, 3)), label,
              {"Q_square", "Delta_permutativity", "kappa_coleibniz", "kappa_compat1", "kappa_compat2",
               "kappa_compat3", "Q_kappa_coderivation", "S_dsec_coJacobi", "S_dsec_coLeibniz"});
    done(6, "envelope: Q^2, Delta permutativity, kappa laws, Q-kappa, delta'' coJacobi and coLeibniz", v);
  }

  {
    Verdict v;
    for (const char* s : {"builtin:zero-0-0", "builtin:zero-0--1", "builtin:pre-poisson-fixture",
                          "builtin:pre-gerstenhaber-fixture"})
      require(v, verify_symmetrized(resolve_instance(s), opts(4, 3)), s,
              {"ell2_equation", "dgla_antisymmetry", "dgla_jacobi", "dgla_D_derivation", "S_Q_square",
               "S_m_dsec_coderivation", "S_l_dsec_coderivation"});
    done(7, "symmetrized path: ell2 equation, DGLA (i)-(iii), S+ Q^2 and coderivation laws", v);
  }

  {
    // Every mutant must break a previously passing identity of its own suite and leave
    // every other suite's failure counts untouched.
    Verdict v;
    const std::string src = "builtin:pre-gerstenhaber-fixture";
    const auto I = resolve_instance(src);
    RunConfig cfg;
    cfg.threads = workers();
    cfg.max_failures = 3;
    const auto base = run_suites(I, cfg);
    std::vector<std::string> covered;
    for (const auto& m : mutants()) {
      cfg.mutant = m.name;
      const auto got = run_suites(I, cfg);
      bool broke = false, leaked = false;
      for (std::size_t s = 0; s < got.size(); ++s)
        for (std::size_t k = 0; k < got[s].records.size(); ++k) {
          const auto& b = base[s].records[k];
          const auto& g = got[s].records[k];
          if (got[s].suite == m.suite) broke = broke || (b.counts() && b.passed() && !g.passed());
          else leaked = leaked || b.failures != g.failures;
        }
      if (!broke) v.fail(m.name + ": no identity of suite " + m.suite + " starts failing");
      if (leaked) v.fail(m.name + ": changes a suite other than " + m.suite);
      if (broke && !leaked) covered.push_back(m.suite);
    }
    for (const auto& s : suite_names())
      if (std::find(covered.begin(), covered.end(), s) == covered.end()) v.fail("suite " + s + " has no detected mutant");
    done(8, "mutation sensitivity: each suite has a mutant that fails exactly that suite (" + src + ")", v);
  }

  return all ? 0 : 1;
}
