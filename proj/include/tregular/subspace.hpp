#pragma once

// Hypercomplex subspaces: a basis (1, v_1..v_m) of anticommuting imaginary
// units spanning the subspace the function theory lives on, block fans over
// such a basis, and exact rational points on unit spheres and fan tori.

#include "tregular/algebra.hpp"
#include "tregular/rng.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace tregular {

/// Basis (1, v_1..v_m): each v_s an imaginary unit with v_s^c = -v_s and
/// v_s v_u = -v_u v_s for s != u. Validated on construction.
class HypercomplexBasis {
 public:
  HypercomplexBasis(const Algebra& a, std::vector<Element<Rational>> units) : alg_(&a), units_(std::move(units)) {
    for (const auto& v : units_) {
      if (&v.algebra() != alg_) throw std::invalid_argument("hypercomplex basis: mixed algebras");
      if (v.conj() != -v) throw std::invalid_argument("hypercomplex basis: vector not conjugation-odd");
      if (v * v != -Element<Rational>::unit(a)) throw std::invalid_argument("hypercomplex basis: vector squares to something other than -1");
    }
    for (std::size_t s = 0; s < units_.size(); ++s)
      for (std::size_t u = s + 1; u < units_.size(); ++u)
        if (!(units_[s] * units_[u] + units_[u] * units_[s]).is_zero())
          throw std::invalid_argument("hypercomplex basis: vectors do not anticommute");
    Matrix<Rational> rows(units_.size() + 1, static_cast<std::size_t>(a.dim()));
    rows(0, 0) = 1;
    for (std::size_t s = 0; s < units_.size(); ++s)
      for (int j = 0; j < a.dim(); ++j) rows(s + 1, static_cast<std::size_t>(j)) = units_[s][j];
    if (rank(rows) != units_.size() + 1) throw std::invalid_argument("hypercomplex basis: vectors are dependent");
  }

  /// The canonical m anticommuting units of the algebra: Clifford algebras
  /// (clPQ, subset-indexed) contribute their generators e_1..e_m, everything
  /// else the first m basis vectors after the unit (quaternion i j k, ...).
  static HypercomplexBasis standard(const Algebra& a, int m) {
    const std::string& name = a.name();
    const bool clifford = name.size() == 4 && name.rfind("cl", 0) == 0 &&
                          std::isdigit(static_cast<unsigned char>(name[2])) &&
                          std::isdigit(static_cast<unsigned char>(name[3]));
    std::vector<Element<Rational>> units;
    units.reserve(static_cast<std::size_t>(m));
    for (int s = 1; s <= m; ++s) {
      const int idx = clifford ? (1 << (s - 1)) : s;
      if (m < 1 || idx >= a.dim()) throw std::invalid_argument("standard basis: too many units for this algebra");
      units.push_back(Element<Rational>::basis(a, idx));
    }
    return HypercomplexBasis(a, std::move(units));
  }

  const Algebra& algebra() const { return *alg_; }
  int m() const { return static_cast<int>(units_.size()); }
  int nvars() const { return m() + 1; }
  const Element<Rational>& unit(int s) const { return units_[static_cast<std::size_t>(s - 1)]; }  // s in 1..m
  const std::vector<Element<Rational>>& units() const { return units_; }

  /// x_0 + x_1 v_1 + ... + x_m v_m.
  Element<Rational> element(const std::vector<Rational>& coords) const {
    if (coords.size() != static_cast<std::size_t>(nvars()))
      throw std::invalid_argument("hypercomplex basis: coordinate count mismatch");
    Element<Rational> x = Element<Rational>::unit(*alg_) * coords[0];
    for (int s = 1; s <= m(); ++s) x += unit(s) * coords[static_cast<std::size_t>(s)];
    return x;
  }

  std::optional<std::vector<Rational>> coords(const Element<Rational>& x) const {
    const std::size_t d = static_cast<std::size_t>(alg_->dim());
    Matrix<Rational> cols(d, static_cast<std::size_t>(nvars()));
    for (std::size_t i = 0; i < d; ++i) {
      cols(i, 0) = i == 0 ? Rational(1) : Rational(0);
      for (int s = 1; s <= m(); ++s) cols(i, static_cast<std::size_t>(s)) = unit(s)[static_cast<int>(i)];
    }
    return solve(cols, x.coeffs());
  }

  bool contains(const Element<Rational>& x) const { return coords(x).has_value(); }

  /// The basis extended by the nested product v_1 (v_2 (... v_m)), when that
  /// product again satisfies all the basis axioms.
  std::optional<HypercomplexBasis> extended() const {
    if (m() < 2) return std::nullopt;
    Element<Rational> p = units_.back();
    for (int s = m() - 1; s >= 1; --s) p = unit(s) * p;
    auto ext = units_;
    ext.push_back(p);
    try {
      return HypercomplexBasis(*alg_, std::move(ext));
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
  }

 private:
  const Algebra* alg_;
  std::vector<Element<Rational>> units_;
};

/// Exact rational point on the unit sphere of R^n: the stereographic image
/// of a random rational vector, avoiding the pole.
inline std::vector<Rational> rational_sphere_point(int n, RngStream& rng) {
  if (n <= 0) throw std::invalid_argument("rational sphere point: empty space");
  if (n == 1) return {rng.integer(0, 1) == 0 ? Rational(1) : Rational(-1)};
  std::vector<Rational> u(static_cast<std::size_t>(n - 1));
  Rational q(0);
  for (auto& x : u) {
    x = rng.rational();
    q += x * x;
  }
  std::vector<Rational> p(static_cast<std::size_t>(n));
  p[0] = (q - 1) / (q + 1);
  for (int i = 1; i < n; ++i) p[static_cast<std::size_t>(i)] = 2 * u[static_cast<std::size_t>(i - 1)] / (q + 1);
  return p;
}

/// Sequence 0 = t_0 or 0 < t_0 < t_1 < ... < t_tau = m splitting the
/// imaginary units into a mirror part (1..t_0) and tau blocks.
class TFan {
 public:
  explicit TFan(std::vector<int> steps) : t_(std::move(steps)) {
    if (t_.empty()) throw std::invalid_argument("fan: no steps");
    if (t_[0] < 0) throw std::invalid_argument("fan: negative mirror size");
    for (std::size_t i = 1; i < t_.size(); ++i)
      if (t_[i] <= t_[i - 1]) throw std::invalid_argument("fan: steps must increase");
  }

  int m() const { return t_.back(); }
  int mirror_units() const { return t_[0]; }        // t_0
  int tau() const { return static_cast<int>(t_.size()) - 1; }
  const std::vector<int>& steps() const { return t_; }
  int block_lo(int h) const { return t_[static_cast<std::size_t>(h - 1)] + 1; }  // h in 1..tau
  int block_hi(int h) const { return t_[static_cast<std::size_t>(h)]; }
  int block_of(int s) const {  // unit index s in t_0+1..m
    for (int h = 1; h <= tau(); ++h)
      if (s >= block_lo(h) && s <= block_hi(h)) return h;
    throw std::invalid_argument("fan: index outside all blocks");
  }
  bool operator==(const TFan& o) const { return t_ == o.t_; }

 private:
  std::vector<int> t_;
};

/// One imaginary unit per block, each a rational-coefficient unit vector in
/// the span of its block's units.
struct TorusPoint {
  std::vector<Element<Rational>> j;  // J_1..J_tau
};

inline TorusPoint torus_point(const HypercomplexBasis& b, const TFan& fan, RngStream& rng) {
  if (fan.m() != b.m()) throw std::invalid_argument("torus point: fan does not match basis");
  TorusPoint out;
  for (int h = 1; h <= fan.tau(); ++h) {
    const int lo = fan.block_lo(h), hi = fan.block_hi(h);
    const auto c = rational_sphere_point(hi - lo + 1, rng);
    Element<Rational> j(b.algebra());
    for (int s = lo; s <= hi; ++s) j += b.unit(s) * c[static_cast<std::size_t>(s - lo)];
    out.j.push_back(std::move(j));
  }
  return out;
}

/// The axis-aligned torus point (J_h = first unit of each block), handy as a
/// deterministic representative.
inline TorusPoint axis_torus_point(const HypercomplexBasis& b, const TFan& fan) {
  TorusPoint out;
  for (int h = 1; h <= fan.tau(); ++h) out.j.push_back(b.unit(fan.block_lo(h)));
  return out;
}

/// Basis (1, v_1..v_{t_0}, J_1..J_tau) of the slice through a torus point.
inline HypercomplexBasis slice_basis(const HypercomplexBasis& b, const TFan& fan, const TorusPoint& jp) {
  std::vector<Element<Rational>> units;
  for (int s = 1; s <= fan.mirror_units(); ++s) units.push_back(b.unit(s));
  for (const auto& j : jp.j) units.push_back(j);
  return HypercomplexBasis(b.algebra(), std::move(units));
}

}  // namespace tregular
