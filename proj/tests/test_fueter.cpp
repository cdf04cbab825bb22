#include <catch2/catch_amalgamated.hpp>

#include "tregular/fueter.hpp"

using namespace tregular;

namespace {

Element<Rational> random_element(const Algebra& a, RngStream& g) {
  Element<Rational> x(a);
  for (int i = 0; i < a.dim(); ++i) x += Element<Rational>::basis(a, i) * g.rational(3, 2);
  return x;
}

}  // namespace

TEST_CASE("degree-one basis polynomials are the zeta variables") {
  const Algebra q = builtin_algebra("quaternion");
  const HypercomplexBasis b = HypercomplexBasis::standard(q, 3);
  FueterFamily fam(b);
  CHECK(fam.poly({0, 0, 0}) == PolyMap<Rational>::constant(q, 4, Element<Rational>::unit(q)));
  for (int s = 1; s <= 3; ++s) {
    MultiIndex k(3, 0);
    k[static_cast<std::size_t>(s - 1)] = 1;
    CHECK(fam.poly(k) == fam.zeta(s));
    // zeta_s = x_s - x_0 v_s
    const PolyMap<Rational> want = PolyMap<Rational>::variable(q, 4, s) -
                                   PolyMap<Rational>::variable(q, 4, 0).right_mul(b.unit(s));
    CHECK(fam.zeta(s) == want);
  }
}

TEST_CASE("low-degree polynomials match hand expansion") {
  const Algebra q = builtin_algebra("quaternion");
  const HypercomplexBasis b = HypercomplexBasis::standard(q, 3);
  FueterFamily fam(b);
  CHECK(fam.poly({2, 0, 0}) == fam.zeta(1) * fam.zeta(1));
  const PolyMap<Rational> sym = (fam.zeta(1) * fam.zeta(2) + fam.zeta(2) * fam.zeta(1)) * Rational(1, 2);
  CHECK(fam.poly({1, 1, 0}) == sym);
}

TEST_CASE("basis polynomials are two-sided kernel elements") {
  const Algebra q = builtin_algebra("quaternion");
  const HypercomplexBasis b = HypercomplexBasis::standard(q, 3);
  FueterFamily fam(b);
  for (const auto& k : multiindices_up_to(3, 3)) {
    const PolyMap<Rational> p = fam.poly(k);
    CHECK(cr_left(b, p).is_zero());
    CHECK(cr_right(b, p).is_zero());
    CHECK(laplacian(p).is_zero());
  }
}

TEST_CASE("the conjugated operator doubles the mirror derivative on kernel elements") {
  const Algebra q = builtin_algebra("quaternion");
  const HypercomplexBasis b = HypercomplexBasis::standard(q, 3);
  FueterFamily fam(b);
  RngStream g(CounterRng(51));
  PolyMap<Rational> p(q, 4);
  for (const auto& k : multiindices_up_to(3, 3)) p += fam.poly(k).right_mul(random_element(q, g));
  CHECK(cr_conj_left(b, p) == p.partial(0) * Rational(2));
  CHECK(laplacian(p) == cr_conj_left(b, cr_left(b, p)));
}

TEST_CASE("partial derivatives lower the index") {
  const Algebra c3 = builtin_algebra("cl03");
  const HypercomplexBasis b = HypercomplexBasis::standard(c3, 3);
  FueterFamily fam(b);
  for (const auto& k : multiindices_up_to(3, 4)) {
    const PolyMap<Rational> p = fam.poly(k);
    for (int s = 1; s <= 3; ++s) {
      const int ks = k[static_cast<std::size_t>(s - 1)];
      if (ks == 0) {
        CHECK(p.partial(s).is_zero());
        continue;
      }
      CHECK(p.partial(s) == fam.poly(shifted(k, static_cast<std::size_t>(s - 1), -1)) * Rational(ks));
    }
  }
}

TEST_CASE("real components follow the transfer recursion") {
  const int m = 3;
  const Algebra q = builtin_algebra("quaternion");
  const HypercomplexBasis b = HypercomplexBasis::standard(q, m);
  FueterFamily fam(b);
  FueterComponentOracle oracle(m);
  for (const auto& k : multiindices_up_to(m, 4)) {
    CHECK(assemble_from_components(b, oracle.components(k)) == fam.poly(k));
  }
}

TEST_CASE("component families satisfy the index symmetry") {
  const int m = 3;
  FueterComponentOracle oracle(m);
  for (const auto& k : multiindices_up_to(m, 4)) {
    for (int u = 1; u <= m; ++u)
      for (int s = 1; s <= m; ++s) {
        if (u == s) continue;  // both sides reduce to the same component
        const int ks = k[static_cast<std::size_t>(s - 1)];
        if (ks == 0) continue;
        const MultiIndex moved = shifted(shifted(k, static_cast<std::size_t>(u - 1), 1),
                                         static_cast<std::size_t>(s - 1), -1);
        const int ku = k[static_cast<std::size_t>(u - 1)];
        CHECK(oracle.components(k)[static_cast<std::size_t>(s)] * Rational(ku + 1) ==
              oracle.components(moved)[static_cast<std::size_t>(u)] * Rational(ks));
      }
  }
}

TEST_CASE("series coefficients are right factors and taylor derivatives") {
  const Algebra q = builtin_algebra("quaternion");
  const HypercomplexBasis b = HypercomplexBasis::standard(q, 2);
  FueterFamily fam(b);
  RngStream g(CounterRng(52));
  std::map<MultiIndex, Element<Rational>> coeffs;
  for (const auto& k : multiindices_up_to(2, 3)) coeffs[k] = random_element(q, g);
  const PolyMap<Rational> p = assemble_expansion(fam, coeffs);

  CHECK(monogenic_expand(b, p) == coeffs);

  // a_k = (d^k p)(0) / k!
  const std::vector<Rational> origin(3, Rational(0));
  for (const auto& [k, a] : coeffs) {
    PolyMap<Rational> d = p;
    Rational fact(1);
    for (std::size_t s = 0; s < k.size(); ++s)
      for (int rep = 1; rep <= k[s]; ++rep) {
        d = d.partial(static_cast<int>(s) + 1);
        fact *= rep;
      }
    CHECK(d.evaluate(origin) == a * fact);
  }
}

TEST_CASE("expansion rejects maps outside the kernel") {
  const Algebra q = builtin_algebra("quaternion");
  const HypercomplexBasis b = HypercomplexBasis::standard(q, 2);
  const PolyMap<Rational> bad = PolyMap<Rational>::monomial(q, 3, MultiIndex{0, 2, 0}, Element<Rational>::unit(q));
  CHECK_THROWS(monogenic_expand(b, bad));
}
