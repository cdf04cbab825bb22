#include <catch2/catch_amalgamated.hpp>

#include "tregular/analysis.hpp"
#include "tregular/fueter.hpp"
#include "tregular/io.hpp"
#include "tregular/tpoly.hpp"

#include <cmath>
#include <cstdlib>

using namespace tregular;

namespace {

double binom_d(int n, int k) {
  double b = 1.0;
  for (int j = 1; j <= k; ++j) b *= static_cast<double>(n - k + j) / j;
  return b;
}

}  // namespace

TEST_CASE("sphere areas match the gamma-function closed form") {
  CHECK(sphere_area(0) == Catch::Approx(2.0));
  CHECK(sphere_area(1) == Catch::Approx(2.0 * M_PI));
  CHECK(sphere_area(2) == Catch::Approx(4.0 * M_PI));
  CHECK(sphere_area(3) == Catch::Approx(2.0 * M_PI * M_PI));
  for (int m = 0; m <= 8; ++m) {
    const double want = 2.0 * std::pow(std::sqrt(M_PI), m + 1) / std::tgamma((m + 1) / 2.0);
    CHECK(sphere_area(m) == Catch::Approx(want).epsilon(1e-12));
  }
  CHECK(ball_volume(2, 1.0) == Catch::Approx(4.0 * M_PI / 3.0));
  CHECK(ball_volume(1, 2.0) == Catch::Approx(4.0 * M_PI));
}

TEST_CASE("gegenbauer polynomials match the explicit low orders") {
  RngStream g(CounterRng(81));
  for (int rep = 0; rep < 10; ++rep) {
    const double mu = 0.5 + 2.0 * g.uniform();
    const double t = 2.0 * g.uniform() - 1.0;
    CHECK(gegenbauer(0, mu, t) == Catch::Approx(1.0));
    CHECK(gegenbauer(1, mu, t) == Catch::Approx(2.0 * mu * t));
    CHECK(gegenbauer(2, mu, t) == Catch::Approx(2.0 * mu * (mu + 1.0) * t * t - mu).margin(1e-12));
    CHECK(gegenbauer(3, mu, t) ==
          Catch::Approx((4.0 / 3.0) * mu * (mu + 1.0) * (mu + 2.0) * t * t * t - 2.0 * mu * (mu + 1.0) * t)
              .margin(1e-12));
  }
}

TEST_CASE("exact gegenbauer coefficients agree with the double recurrence") {
  RngStream g(CounterRng(82));
  for (int twice_mu = 1; twice_mu <= 5; ++twice_mu) {
    const Rational mu(twice_mu, 2);
    for (int h = 0; h <= 8; ++h) {
      const auto coeffs = gegenbauer_coeffs(h, mu);
      CHECK(gegenbauer_eval(coeffs, Rational(1)) == gegenbauer_peak(h, mu));
      const Rational t(g.integer(-9, 9), 10);
      const double exact = to_double(gegenbauer_eval(coeffs, t));
      CHECK(gegenbauer(h, to_double(mu), to_double(t)) == Catch::Approx(exact).margin(1e-9));
    }
  }
}

TEST_CASE("the derivative of a gegenbauer polynomial raises the parameter") {
  for (int twice_mu = 1; twice_mu <= 4; ++twice_mu) {
    const Rational mu(twice_mu, 2);
    for (int h = 1; h <= 6; ++h) {
      const auto c = gegenbauer_coeffs(h, mu);
      const auto up = gegenbauer_coeffs(h - 1, mu + 1);
      // d/dt C_h = 2 mu C_{h-1}^{mu+1}
      for (std::size_t p = 0; p + 1 < c.size(); ++p)
        CHECK(c[p + 1] * Rational(static_cast<int>(p) + 1) == up[p] * 2 * mu);
    }
  }
}

TEST_CASE("the kernel inverts degree-one products in the plane") {
  const Algebra c1 = builtin_algebra("cl01");
  const HypercomplexBasis b = HypercomplexBasis::standard(c1, 1);
  const NumericBasis nb(b);
  RngStream g(CounterRng(83));
  for (int rep = 0; rep < 10; ++rep) {
    const std::vector<double> x = {2.0 * g.uniform() - 1.0, 2.0 * g.uniform() - 1.0};
    if (coord_norm(x) < 0.2) continue;
    const Element<double> prod = cauchy_kernel(nb, x) * nb.element(x);
    CHECK(norm(prod - Element<double>(c1, {1.0 / (2.0 * M_PI), 0.0})) < 1e-12);
  }
}

TEST_CASE("kernel values at reference points") {
  const Algebra q = builtin_algebra("quaternion");
  const NumericBasis nb(HypercomplexBasis::standard(q, 3));
  const Element<double> e = cauchy_kernel(nb, {1.0, 0.0, 0.0, 0.0});
  CHECK(e[0] == Catch::Approx(1.0 / (2.0 * M_PI * M_PI)));
  CHECK(std::abs(e[1]) + std::abs(e[2]) + std::abs(e[3]) < 1e-15);

  const Algebra c2 = builtin_algebra("cl02");
  const NumericBasis nb2(HypercomplexBasis::standard(c2, 2));
  const Element<double> f = cauchy_kernel(nb2, {0.0, 1.0, 0.0});
  CHECK(f[1] == Catch::Approx(-1.0 / (4.0 * M_PI)));
}

TEST_CASE("finite differences confirm kernel monogenicity") {
  const Algebra c2 = builtin_algebra("cl02");
  const NumericBasis nb(HypercomplexBasis::standard(c2, 2));
  RngStream g(CounterRng(84));
  for (int rep = 0; rep < 5; ++rep) {
    std::vector<double> x(3), y(3);
    do {
      for (auto& c : x) c = 2.0 * g.uniform() - 1.0;
      for (auto& c : y) c = 2.0 * g.uniform() - 1.0;
    } while (coord_norm(coord_sub(y, x)) < 0.4);
    CHECK(kernel_cr_residual(nb, x, y) < 1e-6);
  }
}

TEST_CASE("radial quotients differentiate like their evaluations") {
  const Algebra c2 = builtin_algebra("cl02");
  const HypercomplexBasis b = HypercomplexBasis::standard(c2, 2);
  const RadialQuotient base = kernel_quotient(b);
  RngStream g(CounterRng(85));
  for (int var = 0; var < 3; ++var) {
    const RadialQuotientD qd(base);
    const RadialQuotientD dd(base.partial(var));
    for (int rep = 0; rep < 5; ++rep) {
      std::vector<double> x(3);
      do {
        for (auto& c : x) c = 2.0 * g.uniform() - 1.0;
      } while (coord_norm(x) < 0.5);
      const double h = 1e-6;
      auto xp = x, xm = x;
      xp[static_cast<std::size_t>(var)] += h;
      xm[static_cast<std::size_t>(var)] -= h;
      const Element<double> fd = (qd.evaluate(xp) - qd.evaluate(xm)) * (1.0 / (2.0 * h));
      CHECK(norm(fd - dd.evaluate(x)) < 1e-4 * (1.0 + norm(dd.evaluate(x))));
    }
  }
  // mixed partials commute exactly at the symbolic level
  const RadialQuotient d01 = base.partial(0).partial(1);
  const RadialQuotient d10 = base.partial(1).partial(0);
  CHECK(d01.pow == d10.pow);
  CHECK(d01.num == d10.num);
}

TEST_CASE("the zonal series truncates to the kernel at the origin") {
  const Algebra q = builtin_algebra("quaternion");
  const NumericBasis nb(HypercomplexBasis::standard(q, 3));
  const std::vector<double> y = {0.3, -0.5, 0.2, 0.7};
  const KernelSeries s = kernel_series(nb, {0.0, 0.0, 0.0, 0.0}, y, 1);
  CHECK(norm(s.partial_sum - cauchy_kernel(nb, y)) < 1e-12);
}

TEST_CASE("zonal terms satisfy the advertised norm bound") {
  for (const char* name : {"cl02", "cl03"}) {
    const Algebra a = builtin_algebra(name);
    const int m = a.dim() == 4 ? 2 : 3;
    const NumericBasis nb(HypercomplexBasis::standard(a, m));
    RngStream g(CounterRng(86));
    for (int rep = 0; rep < 10; ++rep) {
      std::vector<double> x(static_cast<std::size_t>(m) + 1), y(static_cast<std::size_t>(m) + 1);
      for (auto& c : x) c = 2.0 * g.uniform() - 1.0;
      for (auto& c : y) c = 2.0 * g.uniform() - 1.0;
      for (int k = 0; k <= 8; ++k) {
        const double bound =
            std::sqrt(2.0) * (m - 1) * binom_d(k + m, m) * std::pow(coord_norm(x), k) * (1.0 + 1e-12);
        CHECK(norm(zonal_term(nb, k, x, y)) <= bound);
      }
    }
  }
}

TEST_CASE("the series error shrinks under the tail bound when terms double") {
  const Algebra q = builtin_algebra("quaternion");
  const NumericBasis nb(HypercomplexBasis::standard(q, 3));
  const std::vector<double> x = {0.2, -0.1, 0.15, 0.05};
  const std::vector<double> y = {0.5, 0.6, -0.4, 0.3};
  const Element<double> exact = cauchy_kernel(nb, coord_sub(y, x));
  const KernelSeries s12 = kernel_series(nb, x, y, 12);
  const KernelSeries s24 = kernel_series(nb, x, y, 24);
  CHECK(norm(s12.partial_sum - exact) <= s12.tail_bound);
  CHECK(norm(s24.partial_sum - exact) <= s24.tail_bound);
  CHECK(s24.tail_bound < s12.tail_bound);
  CHECK(norm(s24.partial_sum - exact) <= norm(s12.partial_sum - exact) + 1e-15);
}

TEST_CASE("the tail bound is infinite when the ratio test fails") {
  const Algebra q = builtin_algebra("quaternion");
  const NumericBasis nb(HypercomplexBasis::standard(q, 3));
  const std::vector<double> x = {0.9, 0.0, 0.0, 0.0};
  const std::vector<double> y = {1.0, 0.0, 0.0, 0.0};
  const KernelSeries s = kernel_series(nb, x, y, 2);
  CHECK(std::isinf(s.tail_bound));
}

TEST_CASE("chunked accumulation does not depend on the thread count") {
  setenv("TREGULAR_THREADS", "1", 1);
  const McResult a = mc_sphere_area(2, 50000, 7);
  setenv("TREGULAR_THREADS", "3", 1);
  const McResult b = mc_sphere_area(2, 50000, 7);
  unsetenv("TREGULAR_THREADS");
  REQUIRE(a.mean.size() == b.mean.size());
  CHECK(a.mean[0] == b.mean[0]);
  CHECK(a.stderr_of_mean == b.stderr_of_mean);
}

TEST_CASE("sphere area estimates land near the closed form") {
  const McResult r = mc_sphere_area(2, 40000, 9);
  CHECK(std::abs(r.mean[0] - sphere_area(2)) <= 5.0 * r.stderr_of_mean);
  CHECK(r.samples == 40000);
}

TEST_CASE("the spherical mean reproduces kernel polynomials at low samples") {
  const Algebra c2 = builtin_algebra("cl02");
  const HypercomplexBasis b = HypercomplexBasis::standard(c2, 2);
  const NumericBasis nb(b);
  FueterFamily fam(b);
  const PolyMap<double> pd = to_double(fam.poly({1, 0}));
  const std::vector<double> p = {0.4, -0.3, 0.2};
  const McElement mv = mc_mean_value(nb, pd, p, 0.8, 30000, 11);
  CHECK(norm(mv.mean - pd.evaluate(p)) <= 5.0 * mv.stderr_of_mean);
}

TEST_CASE("the boundary-minus-volume identity vanishes outside the ball") {
  const Algebra c2 = builtin_algebra("cl02");
  const HypercomplexBasis b = HypercomplexBasis::standard(c2, 2);
  const NumericBasis nb(b);
  const PolyMap<Rational> sq =
      PolyMap<Rational>::monomial(c2, 3, MultiIndex{0, 2, 0}, Element<Rational>::unit(c2));
  const std::vector<double> p = {0.0, 0.0, 0.0};
  const std::vector<double> outside = {1.8, 0.3, 0.0};
  const McElement bnd = mc_cauchy_integral(nb, to_double(sq), outside, p, 1.0, 40000, 13);
  const McElement vol = mc_volume_term(nb, to_double(cr_left(b, sq)), outside, p, 1.0, 40000, 14);
  const double se = std::sqrt(bnd.stderr_of_mean * bnd.stderr_of_mean + vol.stderr_of_mean * vol.stderr_of_mean);
  CHECK(norm(bnd.mean - vol.mean) <= 5.0 * se);
}

TEST_CASE("the derivative integral recovers a first partial at low samples") {
  const Algebra c2 = builtin_algebra("cl02");
  const HypercomplexBasis b = HypercomplexBasis::standard(c2, 2);
  const NumericBasis nb(b);
  FueterFamily fam(b);
  const PolyMap<Rational> phi = fam.poly({1, 1});
  const MultiIndex h = {0, 1, 0};
  const RadialQuotientD dk(nabla_quotient(kernel_quotient(b), h));
  const std::vector<double> p = {0.1, 0.2, -0.1};
  const McElement est = mc_derivative_integral(nb, dk, 1, to_double(phi), p, p, 1.0, 60000, 15);
  const Element<double> want = to_double(phi).partial(1).evaluate(p);
  CHECK(norm(est.mean - want) <= 5.0 * est.stderr_of_mean);
}

TEST_CASE("paired grids keep interior maxima below boundary maxima on a slice") {
  const Algebra q = builtin_algebra("quaternion");
  const HypercomplexBasis b = HypercomplexBasis::standard(q, 3);
  const TFan fan({1, 3});
  TFamily tf(b, fan);
  RngStream g(CounterRng(87));
  const TorusPoint jp = torus_point(b, fan, g);
  const NumericBasis nbs{slice_basis(b, fan, jp)};
  const PolyMap<double> fj = to_double(slice_restrict(b, fan, tf.poly({1, 1}), jp));
  const ModulusGrids mg = max_modulus_grids(nbs, fj, {0.0, 0.0, 0.0}, 1.0, 4000, 17);
  CHECK(mg.interior_max <= mg.boundary_max + 1e-9);
}

TEST_CASE("numeric bases reject non-orthonormal unit systems") {
  // i + eps j squares to -1 and is conjugation-odd, so it spans a valid
  // hypercomplex line, but its coordinate vector has length sqrt(2)
  const Algebra dh = builtin_algebra("dualquat");
  const auto skew = Element<Rational>::basis(dh, 1) + Element<Rational>::basis(dh, label_index(dh, "epsj"));
  const HypercomplexBasis bad(dh, {skew});
  CHECK_THROWS_AS(NumericBasis(bad), std::invalid_argument);

  const Algebra q = builtin_algebra("quaternion");
  const HypercomplexBasis good(q, {Element<Rational>::basis(q, 1), Element<Rational>::basis(q, 3)});
  CHECK_NOTHROW(NumericBasis(good));
}
