// Symmetrize the pre-Poisson fixture, print its nonzero brackets, then run the
// axiom and symmetrized-path suites on it.

#include <iostream>

#include <preab/preab.hpp>

int main() {
  using namespace preab;
  const PreABInstance I = pre_poisson_fixture();
  const ABInstance A = symmetrize(I);

  std::cout << I.label << ": " << I.basis.size() << " basis elements, (a,b) = (" << I.a << "," << I.b << ")\n";
  for (int x = 0; x < static_cast<int>(I.basis.size()); ++x)
    for (int y = 0; y < static_cast<int>(I.basis.size()); ++y) {
      const auto br = A.bracket(Vec<int>::unit(x), Vec<int>::unit(y));
      if (!br.empty()) std::cout << "  [" << I.name(x) << ", " << I.name(y) << "] = " << I.format(br) << "\n";
    }

  RunConfig cfg;
  cfg.weight = 3;
  for (const char* s : {"axioms", "symmetrized"}) {
    const auto rep = run_suite(s, I, cfg);
    long bad = 0;
    for (const auto& r : rep.records) bad += r.counts() && !r.passed();
    std::cout << s << ": " << rep.records.size() << " identities, " << bad << " failing\n";
  }
}
