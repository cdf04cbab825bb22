// Recovers the stem of a fan basis polynomial over the quaternions and
// checks the representation formula: values on one torus slice determine
// the function on every other slice of the same fan.

#include "tregular/io.hpp"
#include "tregular/stem.hpp"
#include "tregular/tpoly.hpp"

#include <iostream>

using namespace tregular;

int main() {
  const Algebra a = builtin_algebra("quaternion");
  const HypercomplexBasis b = HypercomplexBasis::standard(a, 3);
  const TFan fan({1, 3});
  TFamily tf(b, fan);

  const MultiIndex k{1, 1};
  const PolyMap<Rational>& f = tf.poly(k);
  std::cout << "T_(1,1) for fan (1,3):\n  " << format_poly(f) << "\n\n";

  RngStream g(CounterRng(11));
  const TorusPoint ip = torus_point(b, fan, g);
  const StemTable stem = recover_stem(b, fan, f, ip);
  std::cout << "stem components over slice variables (alpha0, alpha1, beta1):\n";
  for (unsigned K = 0; K < stem.comps.size(); ++K)
    std::cout << "  F_" << K << " = " << format_poly(stem.comps[K]) << "\n";

  const TorusPoint jp = torus_point(b, fan, g);
  const std::vector<Rational> alpha = g.rational_vector(2);
  const std::vector<Rational> beta = g.rational_vector(1);
  const Element<Rational> direct = f.evaluate(ambient_coords(b, fan, alpha, beta, jp));
  const Element<Rational> represented = representation_value(b, fan, f, alpha, beta, ip, jp);
  std::cout << "\nvalue on a fresh slice, evaluated directly:   " << format_element(direct)
            << "\nvalue rebuilt from the first slice's values: " << format_element(represented) << "\n";
  return (direct - represented).is_zero() ? 0 : 1;
}
