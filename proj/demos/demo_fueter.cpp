// Builds the monogenic polynomial basis over the quaternions, prints the
// low-degree members, and round-trips a random kernel element through its
// coefficient expansion.

#include "tregular/fueter.hpp"
#include "tregular/io.hpp"

#include <iostream>

using namespace tregular;

int main() {
  const Algebra a = builtin_algebra("quaternion");
  const HypercomplexBasis b = HypercomplexBasis::standard(a, 3);
  FueterFamily fam(b);

  std::cout << "monogenic basis polynomials over " << a.name() << " up to degree 2:\n";
  for (int deg = 1; deg <= 2; ++deg)
    for (const MultiIndex& k : multiindices_up_to(3, deg)) {
      if (order(k) != deg) continue;
      std::cout << "  P_(" << k[0] << "," << k[1] << "," << k[2] << ") = " << format_poly(fam.poly(k)) << "\n";
    }

  RngStream g(CounterRng(7));
  PolyMap<Rational> p(a, b.nvars());
  for (const MultiIndex& k : multiindices_up_to(3, 3))
    p = p + fam.poly(k).right_mul(Element<Rational>(a, g.rational_vector(a.dim(), 3, 2)));

  std::cout << "\nrandom kernel element:\n  " << format_poly(p) << "\n";
  const auto coeffs = monogenic_expand(b, p);
  std::cout << "expansion has " << coeffs.size() << " coefficients; reassembly matches: "
            << ((assemble_expansion(fam, coeffs) - p).is_zero() ? "yes" : "no") << "\n";
  return 0;
}
