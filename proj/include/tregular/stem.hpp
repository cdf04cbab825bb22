#pragma once

// Stem functions over a block fan: componentwise representation
// F = sum_K E_K F_K of functions on slice coordinates, with the parity
// F_K(alpha, beta reflected in h) = -F_K iff h in K. A stem induces a
// function through nested torus products [J, a]_K, and is recovered from one
// slice restriction through the inverse brackets; this works verbatim in
// alternative nonassociative algebras, where the nesting order matters.
// Subsets K of {1..tau} are bitmasks with bit h-1 for block h.

#include "tregular/tpoly.hpp"

#include <stdexcept>
#include <vector>

namespace tregular {

inline int popcount(unsigned x) { return __builtin_popcount(x); }

/// [J, a]_K = J_{k_1}(J_{k_2}(...(J_{k_p} a)...)) for K = {k_1 < ... < k_p}:
/// the largest index is applied first, innermost.
inline Element<Rational> bracket_apply(const TorusPoint& jp, unsigned K, Element<Rational> a) {
  for (int h = static_cast<int>(jp.j.size()); h >= 1; --h)
    if (K & (1u << (h - 1))) a = jp.j[static_cast<std::size_t>(h - 1)] * a;
  return a;
}

/// ]J, a[_K = J_{k_p}^{-1}(...(J_{k_1}^{-1} a)...): the smallest index is
/// applied first. Torus entries are imaginary units, so J^{-1} = -J; by
/// Artin's theorem this inverts bracket_apply in any alternative algebra.
inline Element<Rational> bracket_unapply(const TorusPoint& jp, unsigned K, Element<Rational> a) {
  for (int h = 1; h <= static_cast<int>(jp.j.size()); ++h)
    if (K & (1u << (h - 1))) a = (-jp.j[static_cast<std::size_t>(h - 1)]) * a;
  return a;
}

/// Stem of a fan function in polynomial form: component K is a map in the
/// slice variables (alpha_0..alpha_{t_0}, beta_1..beta_tau).
struct StemTable {
  std::vector<PolyMap<Rational>> comps;  // indexed by the bitmask K

  int tau() const {
    int t = 0;
    while ((1u << t) < comps.size()) ++t;
    return t;
  }
};

namespace detail {

inline PolyMap<Rational> reflect_blocks(const TFan& fan, PolyMap<Rational> g, unsigned H) {
  for (int h = 1; h <= fan.tau(); ++h)
    if (H & (1u << (h - 1))) g = g.scale_variable(fan.mirror_units() + h, Rational(-1));
  return g;
}

}  // namespace detail

/// Recovers the stem of f from its restriction to the slice through ip:
/// F_K = 2^{-tau} sum_H (-1)^{|K cap H|} ]I, f(alpha + reflected beta I)[_K.
inline StemTable recover_stem(const HypercomplexBasis& b, const TFan& fan, const PolyMap<Rational>& f,
                              const TorusPoint& ip) {
  if (!b.algebra().alternative()) throw std::invalid_argument("stem recovery: requires an alternative algebra");
  const unsigned full = 1u << fan.tau();
  const PolyMap<Rational> fi = slice_restrict(b, fan, f, ip);
  StemTable out;
  out.comps.reserve(full);
  const Rational scale = Rational(1) / rat_pow(Rational(2), fan.tau());
  for (unsigned K = 0; K < full; ++K) {
    PolyMap<Rational> acc(b.algebra(), fi.nvars());
    for (unsigned H = 0; H < full; ++H) {
      const PolyMap<Rational> reflected = detail::reflect_blocks(fan, fi, H);
      const PolyMap<Rational> bracketed =
          reflected.transform_coefficients([&](const Element<Rational>& c) { return bracket_unapply(ip, K, c); });
      if (popcount(K & H) % 2 == 0)
        acc += bracketed;
      else
        acc -= bracketed;
    }
    out.comps.push_back(acc * scale);
  }
  return out;
}

/// f_J = sum_K [J, F_K]_K, as a map in the slice variables.
inline PolyMap<Rational> induce_on_slice(const StemTable& stem, const TorusPoint& jp) {
  if (stem.comps.empty()) throw std::invalid_argument("stem: empty table");
  PolyMap<Rational> acc(stem.comps[0].algebra(), stem.comps[0].nvars());
  for (unsigned K = 0; K < stem.comps.size(); ++K)
    acc += stem.comps[K].transform_coefficients([&](const Element<Rational>& c) { return bracket_apply(jp, K, c); });
  return acc;
}

/// Ambient coordinates of alpha + beta J: mirror entries are copied and
/// block h carries beta_h times the coordinates of J_h.
inline std::vector<Rational> ambient_coords(const HypercomplexBasis& b, const TFan& fan,
                                            const std::vector<Rational>& alpha, const std::vector<Rational>& beta,
                                            const TorusPoint& jp) {
  if (alpha.size() != static_cast<std::size_t>(fan.mirror_units() + 1) ||
      beta.size() != static_cast<std::size_t>(fan.tau()))
    throw std::invalid_argument("ambient coordinates: slice tuple size mismatch");
  std::vector<Rational> x(static_cast<std::size_t>(b.nvars()), Rational(0));
  for (int s = 0; s <= fan.mirror_units(); ++s) x[static_cast<std::size_t>(s)] = alpha[static_cast<std::size_t>(s)];
  for (int h = 1; h <= fan.tau(); ++h) {
    const auto c = b.coords(jp.j[static_cast<std::size_t>(h - 1)]);
    if (!c) throw std::invalid_argument("ambient coordinates: torus point outside the subspace");
    for (int u = fan.block_lo(h); u <= fan.block_hi(h); ++u)
      x[static_cast<std::size_t>(u)] = beta[static_cast<std::size_t>(h - 1)] * (*c)[static_cast<std::size_t>(u)];
  }
  return x;
}

/// Value form of the representation formula, brackets nested as in the
/// alternative setting:
/// f(alpha + beta J) = 2^{-tau} sum_{K,H} (-1)^{|K cap H|} [J, ]I, f(alpha + reflected beta I)[_K ]_K.
inline Element<Rational> representation_value(const HypercomplexBasis& b, const TFan& fan,
                                              const PolyMap<Rational>& f, const std::vector<Rational>& alpha,
                                              const std::vector<Rational>& beta, const TorusPoint& ip,
                                              const TorusPoint& jp) {
  const unsigned full = 1u << fan.tau();
  Element<Rational> acc(b.algebra());
  for (unsigned H = 0; H < full; ++H) {
    std::vector<Rational> rbeta = beta;
    for (int h = 1; h <= fan.tau(); ++h)
      if (H & (1u << (h - 1))) rbeta[static_cast<std::size_t>(h - 1)] = -rbeta[static_cast<std::size_t>(h - 1)];
    const Element<Rational> fv = f.evaluate(ambient_coords(b, fan, alpha, rbeta, ip));
    for (unsigned K = 0; K < full; ++K) {
      const Element<Rational> term = bracket_apply(jp, K, bracket_unapply(ip, K, fv));
      if (popcount(K & H) % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
  }
  return acc / rat_pow(Rational(2), fan.tau());
}

/// gamma_H = 2^{-tau} sum_K (-1)^{|K cap H|} J_K I_K^{-1} with the plain
/// ascending products J_K = J_{k_1} ... J_{k_p}; associative algebras only.
inline std::vector<Element<Rational>> gamma_coefficients(const HypercomplexBasis& b, const TFan& fan,
                                                         const TorusPoint& jp, const TorusPoint& ip) {
  if (!b.algebra().associative()) throw std::invalid_argument("gamma coefficients: requires an associative algebra");
  const unsigned full = 1u << fan.tau();
  auto set_product = [&](const TorusPoint& p, unsigned K) {
    Element<Rational> e = Element<Rational>::unit(b.algebra());
    for (int h = 1; h <= fan.tau(); ++h)
      if (K & (1u << (h - 1))) e = e * p.j[static_cast<std::size_t>(h - 1)];
    return e;
  };
  std::vector<Element<Rational>> gammas;
  gammas.reserve(full);
  const Rational scale = Rational(1) / rat_pow(Rational(2), fan.tau());
  for (unsigned H = 0; H < full; ++H) {
    Element<Rational> acc(b.algebra());
    for (unsigned K = 0; K < full; ++K) {
      const Element<Rational> term = set_product(jp, K) * inverse_element(set_product(ip, K));
      if (popcount(K & H) % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    gammas.push_back(acc * scale);
  }
  return gammas;
}

/// Basis of the real subalgebra generated by the mirror span(1, v_1..v_{t_0}),
/// closing the span under products until the rank stabilizes.
inline std::vector<Element<Rational>> mirror_subalgebra(const HypercomplexBasis& b, const TFan& fan) {
  const Algebra& a = b.algebra();
  const std::size_t d = static_cast<std::size_t>(a.dim());
  std::vector<Element<Rational>> basis;
  basis.push_back(Element<Rational>::unit(a));
  for (int s = 1; s <= fan.mirror_units(); ++s) basis.push_back(b.unit(s));
  auto rank_of = [&](const std::vector<Element<Rational>>& vecs) {
    Matrix<Rational> m(vecs.size(), d);
    for (std::size_t i = 0; i < vecs.size(); ++i)
      for (std::size_t j = 0; j < d; ++j) m(i, j) = vecs[i][static_cast<int>(j)];
    return rank(std::move(m));
  };
  std::size_t r = rank_of(basis);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t snapshot = basis.size();
    for (std::size_t i = 0; i < snapshot && basis.size() < d; ++i)
      for (std::size_t j = 0; j < snapshot && basis.size() < d; ++j) {
        auto cand = basis[i] * basis[j];
        basis.push_back(std::move(cand));
        const std::size_t r2 = rank_of(basis);
        if (r2 > r) {
          r = r2;
          grew = true;
        } else {
          basis.pop_back();
        }
      }
  }
  return basis;
}

/// Whether x lies in the span of the given vectors.
inline bool in_span(const std::vector<Element<Rational>>& vecs, const Element<Rational>& x) {
  if (vecs.empty()) return x.is_zero();
  const std::size_t d = static_cast<std::size_t>(x.algebra().dim());
  Matrix<Rational> cols(d, vecs.size());
  for (std::size_t j = 0; j < vecs.size(); ++j)
    for (std::size_t i = 0; i < d; ++i) cols(i, j) = vecs[j][static_cast<int>(i)];
  return solve(cols, x.coeffs()).has_value();
}

}  // namespace tregular
