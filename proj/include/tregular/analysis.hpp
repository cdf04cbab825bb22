#pragma once

// Numeric layer: the Cauchy kernel E_m and its zonal series with a certified
// tail bound, Gegenbauer recurrences (exact and floating), symbolic kernel
// derivatives through a radial quotient rule, and deterministic Monte Carlo
// estimates of the boundary/volume integrals on spheres and balls inside a
// hypercomplex subspace. Every estimate is a pure function of (seed, counter),
// chunked into 64 fixed blocks merged in order, so reports are bit-stable for
// any thread count.

#include "tregular/fueter.hpp"
#include "tregular/rng.hpp"
#include "tregular/subspace.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace tregular {

/// Surface volume of the unit m-sphere in R^{m+1}.
inline double sphere_area(int m) {
  if (m < 0) throw std::invalid_argument("sphere area: negative dimension");
  double even = 2.0;                      // S^0
  double odd = 6.283185307179586476925;   // S^1
  if (m == 0) return even;
  if (m == 1) return odd;
  double a = (m % 2 == 0) ? even : odd;
  for (int i = (m % 2 == 0) ? 2 : 3; i <= m; i += 2) a *= 6.283185307179586476925 / (i - 1);
  return a;
}

/// Volume of the ball of radius R in R^{m+1}.
inline double ball_volume(int m, double R) { return sphere_area(m) * std::pow(R, m + 1) / (m + 1); }

// ---------------------------------------------------------------------------
// Gegenbauer polynomials C_h^mu
// ---------------------------------------------------------------------------

/// Value by the three-term recurrence
/// h C_h = 2(h+mu-1) t C_{h-1} - (h+2mu-2) C_{h-2}, C_0 = 1, C_1 = 2 mu t.
inline double gegenbauer(int h, double mu, double t) {
  if (h < 0) throw std::invalid_argument("gegenbauer: negative degree");
  if (mu <= 0) throw std::invalid_argument("gegenbauer: parameter must be positive");
  if (t < -1.0 - 1e-12 || t > 1.0 + 1e-12) throw std::invalid_argument("gegenbauer: argument outside [-1,1]");
  double prev = 1.0;
  if (h == 0) return prev;
  double cur = 2.0 * mu * t;
  for (int i = 2; i <= h; ++i) {
    const double next = (2.0 * (i + mu - 1.0) * t * cur - (i + 2.0 * mu - 2.0) * prev) / i;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Exact coefficient vector of C_h^mu (index = power of t), same recurrence
/// carried out in rational arithmetic.
inline std::vector<Rational> gegenbauer_coeffs(int h, const Rational& mu) {
  if (h < 0) throw std::invalid_argument("gegenbauer: negative degree");
  if (mu <= 0) throw std::invalid_argument("gegenbauer: parameter must be positive");
  std::vector<Rational> prev{Rational(1)};
  if (h == 0) return prev;
  std::vector<Rational> cur{Rational(0), 2 * mu};
  for (int i = 2; i <= h; ++i) {
    std::vector<Rational> next(static_cast<std::size_t>(i) + 1, Rational(0));
    const Rational a = 2 * (mu + (i - 1));
    for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] += a * cur[j];
    const Rational b = mu * 2 + (i - 2);
    for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= b * prev[j];
    for (auto& c : next) c /= i;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

inline Rational gegenbauer_eval(const std::vector<Rational>& coeffs, const Rational& t) {
  Rational acc(0);
  for (std::size_t j = coeffs.size(); j-- > 0;) acc = acc * t + coeffs[j];
  return acc;
}

/// C_h^mu(1) = binom(h+2mu-1, h), computed as the exact rising product
/// prod_{j=1..h} (2mu-1+j)/j.
inline Rational gegenbauer_peak(int h, const Rational& mu) {
  Rational acc(1);
  for (int j = 1; j <= h; ++j) acc *= (2 * mu - 1 + j) / Rational(j);
  return acc;
}

// ---------------------------------------------------------------------------
// Floating view of a hypercomplex basis
// ---------------------------------------------------------------------------

/// Double-precision units of a hypercomplex basis. Construction checks that
/// the units are orthonormal for the ambient scalar product, so norms of
/// subspace points can be taken on coordinates.
class NumericBasis {
 public:
  explicit NumericBasis(const HypercomplexBasis& b) : alg_(&b.algebra()), m_(b.m()) {
    units_.reserve(static_cast<std::size_t>(m_) + 1);
    units_.push_back(to_double(Element<Rational>::unit(*alg_)));
    std::vector<Element<Rational>> exact;
    exact.push_back(Element<Rational>::unit(*alg_));
    for (int s = 1; s <= m_; ++s) {
      exact.push_back(b.unit(s));
      units_.push_back(to_double(b.unit(s)));
    }
    for (std::size_t i = 0; i < exact.size(); ++i)
      for (std::size_t j = i; j < exact.size(); ++j)
        if (exact[i].dot(exact[j]) != Rational(i == j ? 1 : 0))
          throw std::invalid_argument("numeric basis: units are not orthonormal in the ambient coordinates");
  }

  const Algebra& algebra() const { return *alg_; }
  int m() const { return m_; }
  int nvars() const { return m_ + 1; }

  Element<double> element(const std::vector<double>& coords) const {
    if (coords.size() != units_.size()) throw std::invalid_argument("numeric basis: coordinate count mismatch");
    Element<double> x(*alg_);
    for (std::size_t i = 0; i < units_.size(); ++i) x += units_[i] * coords[i];
    return x;
  }

  /// x^c of the paravector with the given coordinates: the units are
  /// conjugation-odd, so the tail coordinates flip sign.
  Element<double> conj_element(const std::vector<double>& coords) const {
    std::vector<double> c = coords;
    for (std::size_t i = 1; i < c.size(); ++i) c[i] = -c[i];
    return element(c);
  }

 private:
  const Algebra* alg_;
  int m_;
  std::vector<Element<double>> units_;
};

inline double coord_norm(const std::vector<double>& x) {
  double s = 0;
  for (double c : x) s += c * c;
  return std::sqrt(s);
}

inline std::vector<double> coord_sub(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

// ---------------------------------------------------------------------------
// Cauchy kernel
// ---------------------------------------------------------------------------

/// E_m(x) = x^c / (sigma_m ||x||^{m+1}) at subspace coordinates x.
inline Element<double> cauchy_kernel(const NumericBasis& nb, const std::vector<double>& x) {
  const double r = coord_norm(x);
  if (r == 0) throw std::invalid_argument("cauchy kernel: pole at the origin");
  const double scale = 1.0 / (sphere_area(nb.m()) * std::pow(r, nb.m() + 1));
  return nb.conj_element(x) * scale;
}

/// Central-difference residual of the left and right Cauchy-Riemann operators
/// applied to y -> E_m(y - x); returns the larger of the two norms.
inline double kernel_cr_residual(const NumericBasis& nb, const std::vector<double>& x, const std::vector<double>& y,
                                 double step = 1e-5) {
  Element<double> left(nb.algebra());
  Element<double> right(nb.algebra());
  for (int s = 0; s <= nb.m(); ++s) {
    std::vector<double> yp = y;
    std::vector<double> ym = y;
    yp[static_cast<std::size_t>(s)] += step;
    ym[static_cast<std::size_t>(s)] -= step;
    const Element<double> d =
        (cauchy_kernel(nb, coord_sub(yp, x)) - cauchy_kernel(nb, coord_sub(ym, x))) * (1.0 / (2.0 * step));
    if (s == 0) {
      left += d;
      right += d;
    } else {
      std::vector<double> unit(static_cast<std::size_t>(nb.nvars()), 0.0);
      unit[static_cast<std::size_t>(s)] = 1.0;
      const Element<double> v = nb.element(unit);
      left += v * d;
      right += d * v;
    }
  }
  return std::max(norm(left), norm(right));
}

// ---------------------------------------------------------------------------
// Symbolic kernel derivatives: quotient of a polynomial by a radial power
// ---------------------------------------------------------------------------

/// num(x) / ||x||^pow with exact coefficients; closed under coordinate
/// partials by the quotient rule, which keeps the denominator radial.
struct RadialQuotient {
  PolyMap<Rational> num;
  int pow = 0;

  RadialQuotient partial(int var) const {
    PolyMap<Rational> r2(num.algebra(), num.nvars());
    const Element<Rational> one = Element<Rational>::unit(num.algebra());
    for (int i = 0; i < num.nvars(); ++i) {
      MultiIndex k(static_cast<std::size_t>(num.nvars()), 0);
      k[static_cast<std::size_t>(i)] = 2;
      r2.add_term(std::move(k), one);
    }
    PolyMap<Rational> xs = PolyMap<Rational>::variable(num.algebra(), num.nvars(), var);
    return RadialQuotient{num.partial(var) * r2 - (xs * num) * Rational(pow), pow + 2};
  }
};

/// x^c / ||x||^{m+1} over the given basis, without the 1/sigma_m factor.
inline RadialQuotient kernel_quotient(const HypercomplexBasis& b) {
  PolyMap<Rational> num(b.algebra(), b.nvars());
  num += PolyMap<Rational>::variable(b.algebra(), b.nvars(), 0);
  for (int s = 1; s <= b.m(); ++s) {
    MultiIndex k(static_cast<std::size_t>(b.nvars()), 0);
    k[static_cast<std::size_t>(s)] = 1;
    num.add_term(std::move(k), -b.unit(s));
  }
  return RadialQuotient{std::move(num), b.m() + 1};
}

inline RadialQuotient nabla_quotient(RadialQuotient q, const MultiIndex& h) {
  for (std::size_t s = 0; s < h.size(); ++s)
    for (int i = 0; i < h[s]; ++i) q = q.partial(static_cast<int>(s));
  return q;
}

/// Floating evaluator for a RadialQuotient.
struct RadialQuotientD {
  PolyMap<double> num;
  int pow = 0;

  explicit RadialQuotientD(const RadialQuotient& q) : num(to_double(q.num)), pow(q.pow) {}

  Element<double> evaluate(const std::vector<double>& x) const {
    const double r = coord_norm(x);
    if (r == 0) throw std::invalid_argument("radial quotient: pole at the origin");
    return num.evaluate(x) * (1.0 / std::pow(r, pow));
  }
};

// ---------------------------------------------------------------------------
// Zonal series of the kernel
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<double> unit_coords(const std::vector<double>& x) {
  const double r = coord_norm(x);
  if (r == 0) {
    std::vector<double> u(x.size(), 0.0);
    u[0] = 1.0;
    return u;
  }
  std::vector<double> u(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) u[i] = x[i] / r;
  return u;
}

}  // namespace detail

/// Degree-k zonal derivative term: with t1 = <u(x),u(y)>,
///   [(m-1) C_k^{(m+1)/2}(t1) (u(y) - u(x) t1) + (k+1) C_{k+1}^{(m-1)/2}(t1) u(x)]^c ||x||^k.
/// Its norm is bounded by sqrt(2) (m-1) binom(k+m, m) ||x||^k. Requires m >= 2.
inline Element<double> zonal_term(const NumericBasis& nb, int k, const std::vector<double>& x,
                                  const std::vector<double>& y) {
  const int m = nb.m();
  if (m < 2) throw std::invalid_argument("zonal term: needs a subspace of dimension at least 3");
  const std::vector<double> ux = detail::unit_coords(x);
  const std::vector<double> uy = detail::unit_coords(y);
  double t1 = 0;
  for (std::size_t i = 0; i < ux.size(); ++i) t1 += ux[i] * uy[i];
  t1 = std::max(-1.0, std::min(1.0, t1));
  const double c_outer = (m - 1) * gegenbauer(k, (m + 1) / 2.0, t1);
  const double c_inner = (k + 1) * gegenbauer(k + 1, (m - 1) / 2.0, t1);
  std::vector<double> coords(ux.size());
  for (std::size_t i = 0; i < ux.size(); ++i) coords[i] = c_outer * (uy[i] - ux[i] * t1) + c_inner * ux[i];
  return nb.conj_element(coords) * std::pow(coord_norm(x), k);
}

struct KernelSeries {
  Element<double> partial_sum;
  double tail_bound = 0;
};

/// Partial sum sum_{k < terms} (m-1)^{-1} (zonal term_k) ||y||^{-m-k} / sigma_m,
/// which converges to E_m(y - x) for ||x|| < ||y||. The tail bound majorizes
/// sqrt(2) sum_{k >= terms} binom(k+m, m) r^k ||y||^{-m} / sigma_m by a
/// geometric series with ratio g r, g = (terms+m+1)/(terms+1); it is infinite
/// when g r >= 1.
inline KernelSeries kernel_series(const NumericBasis& nb, const std::vector<double>& x, const std::vector<double>& y,
                                  int terms) {
  const int m = nb.m();
  const double rx = coord_norm(x);
  const double ry = coord_norm(y);
  if (rx >= ry) throw std::invalid_argument("kernel series: needs ||x|| < ||y||");
  const double sigma = sphere_area(m);
  Element<double> acc(nb.algebra());
  for (int k = 0; k < terms; ++k)
    acc += zonal_term(nb, k, x, y) * (std::pow(ry, -m - k) / (m - 1));
  KernelSeries out{acc * (1.0 / sigma), 0.0};
  const double r = rx / ry;
  const double g = static_cast<double>(terms + m + 1) / (terms + 1);
  if (g * r >= 1.0) {
    out.tail_bound = std::numeric_limits<double>::infinity();
    return out;
  }
  double binom = 1.0;
  for (int j = 1; j <= m; ++j) binom *= static_cast<double>(terms + j) / j;
  out.tail_bound = std::sqrt(2.0) * binom * std::pow(r, terms) / (std::pow(ry, m) * (1.0 - g * r) * sigma);
  return out;
}

// ---------------------------------------------------------------------------
// Deterministic Monte Carlo
// ---------------------------------------------------------------------------

struct McResult {
  std::vector<double> mean;
  double stderr_of_mean = 0;
  std::size_t samples = 0;
};

namespace detail {

struct Welford {
  std::vector<double> mean;
  std::vector<double> m2;
  double count = 0;

  explicit Welford(std::size_t dim) : mean(dim, 0.0), m2(dim, 0.0) {}

  void add(const std::vector<double>& v) {
    count += 1;
    for (std::size_t i = 0; i < mean.size(); ++i) {
      const double d = v[i] - mean[i];
      mean[i] += d / count;
      m2[i] += d * (v[i] - mean[i]);
    }
  }

  void merge(const Welford& o) {
    if (o.count == 0) return;
    if (count == 0) {
      *this = o;
      return;
    }
    const double total = count + o.count;
    for (std::size_t i = 0; i < mean.size(); ++i) {
      const double d = o.mean[i] - mean[i];
      mean[i] = (count * mean[i] + o.count * o.mean[i]) / total;
      m2[i] += o.m2[i] + d * d * count * o.count / total;
    }
    count = total;
  }
};

inline unsigned mc_thread_cap() {
  if (const char* env = std::getenv("TREGULAR_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(std::min<long>(v, 64));
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : std::min(hw, 64u);
}

}  // namespace detail

/// Mean and standard error of sample(i), i < n, where each sample draws from
/// its own counter-derived stream. Work is split into 64 fixed chunks merged
/// in index order, so the result does not depend on the thread count.
template <typename F>
McResult mc_accumulate(std::size_t n, std::uint64_t seed, std::size_t dim, F&& sample) {
  if (n == 0) throw std::invalid_argument("monte carlo: needs at least one sample");
  const CounterRng base(seed);
  constexpr std::size_t kChunks = 64;
  std::vector<detail::Welford> chunks(kChunks, detail::Welford(dim));
  auto run_chunk = [&](std::size_t c) {
    const std::size_t lo = n * c / kChunks;
    const std::size_t hi = n * (c + 1) / kChunks;
    for (std::size_t i = lo; i < hi; ++i) {
      RngStream g(CounterRng(base.bits(i)));
      chunks[c].add(sample(g));
    }
  };
  const unsigned nthreads = std::min<unsigned>(detail::mc_thread_cap(), kChunks);
  if (nthreads <= 1) {
    for (std::size_t c = 0; c < kChunks; ++c) run_chunk(c);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t c = t; c < kChunks; c += nthreads) run_chunk(c);
      });
    for (auto& th : pool) th.join();
  }
  detail::Welford all(dim);
  for (const auto& c : chunks) all.merge(c);
  McResult out;
  out.mean = all.mean;
  out.samples = n;
  double var_sum = 0;
  if (n > 1)
    for (double m2 : all.m2) var_sum += m2 / (static_cast<double>(n) - 1.0);
  out.stderr_of_mean = std::sqrt(var_sum / static_cast<double>(n));
  return out;
}

/// Uniform unit vector in R^dim from normalized Gaussians.
inline std::vector<double> sphere_direction(RngStream& g, int dim) {
  std::vector<double> w(static_cast<std::size_t>(dim));
  double r2 = 0;
  do {
    r2 = 0;
    for (auto& c : w) {
      c = g.gaussian();
      r2 += c * c;
    }
  } while (r2 == 0);
  const double inv = 1.0 / std::sqrt(r2);
  for (auto& c : w) c *= inv;
  return w;
}

struct McElement {
  Element<double> mean;
  double stderr_of_mean = 0;
  std::size_t samples = 0;
};

namespace detail {

template <typename F>
McElement mc_element(const Algebra& alg, std::size_t n, std::uint64_t seed, F&& sample) {
  const std::size_t dim = static_cast<std::size_t>(alg.dim());
  const McResult raw = mc_accumulate(n, seed, dim, [&](RngStream& g) { return sample(g).coeffs(); });
  return McElement{Element<double>(alg, raw.mean), raw.stderr_of_mean, raw.samples};
}

}  // namespace detail

/// Surface integral over the sphere of radius R about p inside the subspace:
/// estimates int_{bd B(p,R)} f dS = sigma_m R^m E[f(p + R w)].
template <typename F>
McElement sphere_integrate(const NumericBasis& nb, const std::vector<double>& p, double R, std::size_t n,
                           std::uint64_t seed, F&& f) {
  const double weight = sphere_area(nb.m()) * std::pow(R, nb.m());
  return detail::mc_element(nb.algebra(), n, seed, [&](RngStream& g) {
    const std::vector<double> w = sphere_direction(g, nb.nvars());
    std::vector<double> y(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) y[i] = p[i] + R * w[i];
    return f(y, w) * weight;
  });
}

/// Volume integral over the ball of radius R about p. The radius is drawn
/// uniformly and reweighted by sigma_m R r^m, which keeps the estimator
/// unbiased and cancels the r^{-m} kernel singularity when the integrand has
/// its pole at the center.
template <typename F>
McElement ball_integrate(const NumericBasis& nb, const std::vector<double>& p, double R, std::size_t n,
                         std::uint64_t seed, F&& f) {
  const double sigma = sphere_area(nb.m());
  return detail::mc_element(nb.algebra(), n, seed, [&](RngStream& g) {
    const double r = R * g.uniform();
    const std::vector<double> w = sphere_direction(g, nb.nvars());
    std::vector<double> y(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) y[i] = p[i] + r * w[i];
    return f(y) * (sigma * R * std::pow(r, nb.m()));
  });
}

/// Independent estimate of sigma_m: ball-indicator volume in the bounding
/// cube, scaled to the sphere area by sigma_m = (m+1) vol(B^{m+1}) .
inline McResult mc_sphere_area(int m, std::size_t n, std::uint64_t seed) {
  const double cube = std::pow(2.0, m + 1);
  McResult r = mc_accumulate(n, seed, 1, [&](RngStream& g) {
    double s = 0;
    for (int i = 0; i <= m; ++i) {
      const double c = 2.0 * g.uniform() - 1.0;
      s += c * c;
    }
    return std::vector<double>{s <= 1.0 ? cube * (m + 1) : 0.0};
  });
  return r;
}

/// Boundary term of the reproducing formula:
/// int_{bd B(p,R)} E_m(y-x) dy* phi(y), with dy* = R^m w |do_w|.
inline McElement mc_cauchy_integral(const NumericBasis& nb, const PolyMap<double>& phi, const std::vector<double>& x,
                                    const std::vector<double>& p, double R, std::size_t n, std::uint64_t seed) {
  return sphere_integrate(nb, p, R, n, seed, [&](const std::vector<double>& y, const std::vector<double>& w) {
    return cauchy_kernel(nb, coord_sub(y, x)) * (nb.element(w) * phi.evaluate(y));
  });
}

/// Volume term int_{B(p,R)} E_m(y-x) g(y) dsigma_y; pass g = cr_left(phi) to
/// complete the reproducing formula. x should be the center or exterior so
/// the radial reweighting controls the kernel pole.
inline McElement mc_volume_term(const NumericBasis& nb, const PolyMap<double>& g, const std::vector<double>& x,
                                const std::vector<double>& p, double R, std::size_t n, std::uint64_t seed) {
  return ball_integrate(nb, p, R, n, seed, [&](const std::vector<double>& y) {
    return cauchy_kernel(nb, coord_sub(y, x)) * g.evaluate(y);
  });
}

/// Spherical mean (1/sigma_m) int_{bd B(0,1)} phi(p + R w) |do_w|.
inline McElement mc_mean_value(const NumericBasis& nb, const PolyMap<double>& phi, const std::vector<double>& p,
                               double R, std::size_t n, std::uint64_t seed) {
  return detail::mc_element(nb.algebra(), n, seed, [&](RngStream& g) {
    const std::vector<double> w = sphere_direction(g, nb.nvars());
    std::vector<double> y(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) y[i] = p[i] + R * w[i];
    return phi.evaluate(y);
  });
}

struct GaussSides {
  McElement boundary;
  McElement volume;
};

/// Both sides of the divergence identity
/// int_{bd G} psi dx* phi = int_G ((psi dbar) phi + psi (dbar phi)) dsigma
/// on G = B(p,R); associative algebras.
inline GaussSides mc_gauss(const NumericBasis& nb, const HypercomplexBasis& b, const PolyMap<Rational>& psi,
                           const PolyMap<Rational>& phi, const std::vector<double>& p, double R, std::size_t n,
                           std::uint64_t seed) {
  const PolyMap<double> psid = to_double(psi);
  const PolyMap<double> phid = to_double(phi);
  const PolyMap<double> psi_dbar = to_double(cr_right(b, psi));
  const PolyMap<double> dbar_phi = to_double(cr_left(b, phi));
  GaussSides out{
      sphere_integrate(nb, p, R, n, seed,
                       [&](const std::vector<double>& y, const std::vector<double>& w) {
                         return (psid.evaluate(y) * nb.element(w)) * phid.evaluate(y);
                       }),
      ball_integrate(nb, p, R, n, seed + 1,
                     [&](const std::vector<double>& y) {
                       return psi_dbar.evaluate(y) * phid.evaluate(y) + psid.evaluate(y) * dbar_phi.evaluate(y);
                     }),
  };
  return out;
}

/// Derivative reproducing integral
/// (-1)^{|h|} int_{bd B(p,R)} (nabla^h E_m)(y-x) dy* phi(y), which recovers
/// nabla^h phi(x) for monogenic phi.
inline McElement mc_derivative_integral(const NumericBasis& nb, const RadialQuotientD& dkernel, int order_h,
                                        const PolyMap<double>& phi, const std::vector<double>& x,
                                        const std::vector<double>& p, double R, std::size_t n, std::uint64_t seed) {
  const double sign = (order_h % 2 == 0) ? 1.0 : -1.0;
  const double inv_sigma = 1.0 / sphere_area(nb.m());
  McElement e = sphere_integrate(nb, p, R, n, seed, [&](const std::vector<double>& y, const std::vector<double>& w) {
    return dkernel.evaluate(coord_sub(y, x)) * (nb.element(w) * phi.evaluate(y)) * inv_sigma;
  });
  e.mean = e.mean * sign;
  return e;
}

// ---------------------------------------------------------------------------
// Grid checks
// ---------------------------------------------------------------------------

/// Deterministic direction grid on the unit sphere.
inline std::vector<std::vector<double>> direction_grid(int dim, std::size_t count, std::uint64_t seed) {
  const CounterRng base(seed);
  std::vector<std::vector<double>> grid;
  grid.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    RngStream g(CounterRng(base.bits(i)));
    grid.push_back(sphere_direction(g, dim));
  }
  return grid;
}

struct ModulusGrids {
  double interior_max = 0;
  double boundary_max = 0;
};

/// Max of ||phi|| over paired grids: each direction contributes a boundary
/// point p + R w and an interior point p + rho R w with rho drawn as a
/// ball-uniform radius, so interior points never leave the open ball.
inline ModulusGrids max_modulus_grids(const NumericBasis& nb, const PolyMap<double>& phi,
                                      const std::vector<double>& p, double R, std::size_t count, std::uint64_t seed) {
  const CounterRng base(seed);
  ModulusGrids out;
  for (std::size_t i = 0; i < count; ++i) {
    RngStream g(CounterRng(base.bits(i)));
    const std::vector<double> w = sphere_direction(g, nb.nvars());
    const double rho = std::pow(g.uniform(), 1.0 / nb.nvars());
    std::vector<double> yb(w.size());
    std::vector<double> yi(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) {
      yb[j] = p[j] + R * w[j];
      yi[j] = p[j] + rho * R * w[j];
    }
    out.boundary_max = std::max(out.boundary_max, norm(phi.evaluate(yb)));
    out.interior_max = std::max(out.interior_max, norm(phi.evaluate(yi)));
  }
  return out;
}

/// Grid maximum of ||q|| over the unit sphere.
inline double grid_max_norm(const NumericBasis& nb, const RadialQuotientD& q, std::size_t count, std::uint64_t seed) {
  double best = 0;
  for (const auto& w : direction_grid(nb.nvars(), count, seed)) best = std::max(best, norm(q.evaluate(w)));
  return best;
}

}  // namespace tregular
