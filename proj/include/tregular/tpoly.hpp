#pragma once

// Polynomial functions adapted to a block fan over a hypercomplex basis:
// the graded family T_k with its signed recursion, restriction to slices
// through torus points, the adapted partial derivatives delta^h, expansion
// of fan-regular polynomials in the family, and the classification of fans
// by their degree-one variables. Everything here requires an associative
// algebra.

#include "tregular/fueter.hpp"
#include "tregular/polymap.hpp"
#include "tregular/subspace.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace tregular {

/// x^h = sum of x_u v_u over block h.
inline PolyMap<Rational> block_variable(const HypercomplexBasis& b, const TFan& fan, int h) {
  PolyMap<Rational> p(b.algebra(), b.nvars());
  for (int u = fan.block_lo(h); u <= fan.block_hi(h); ++u)
    p += PolyMap<Rational>::variable(b.algebra(), b.nvars(), u).right_mul(b.unit(u));
  return p;
}

/// Restriction of a map in the ambient variables x_0..x_m to the slice
/// through a torus point: x_s = alpha_s on the mirror and x_u = beta_h c_u
/// on block h, where J_h = sum_u c_u v_u. Slice variables are ordered
/// (alpha_0..alpha_{t_0}, beta_1..beta_tau).
inline PolyMap<Rational> slice_restrict(const HypercomplexBasis& b, const TFan& fan, const PolyMap<Rational>& f,
                                        const TorusPoint& jp) {
  if (f.nvars() != b.nvars()) throw std::invalid_argument("slice restriction: variable count mismatch");
  const int slice_vars = fan.mirror_units() + fan.tau() + 1;
  Matrix<Rational> sub(static_cast<std::size_t>(b.nvars()), static_cast<std::size_t>(slice_vars));
  sub(0, 0) = 1;
  for (int s = 1; s <= fan.mirror_units(); ++s) sub(static_cast<std::size_t>(s), static_cast<std::size_t>(s)) = 1;
  for (int h = 1; h <= fan.tau(); ++h) {
    const auto c = b.coords(jp.j[static_cast<std::size_t>(h - 1)]);
    if (!c) throw std::invalid_argument("slice restriction: torus point outside the subspace");
    for (int u = fan.block_lo(h); u <= fan.block_hi(h); ++u)
      sub(static_cast<std::size_t>(u), static_cast<std::size_t>(fan.mirror_units() + h)) = (*c)[static_cast<std::size_t>(u)];
  }
  return f.substitute_linear(sub, slice_vars);
}

class TFamily {
 public:
  TFamily(const HypercomplexBasis& b, TFan fan) : b_(&b), fan_(std::move(fan)) {
    if (fan_.m() != b.m()) throw std::invalid_argument("fan family: fan does not match basis");
    if (!b.algebra().associative()) throw std::invalid_argument("fan family: requires an associative algebra");
  }

  const HypercomplexBasis& basis() const { return *b_; }
  const TFan& fan() const { return fan_; }
  int slots() const { return fan_.mirror_units() + fan_.tau(); }

  /// T_k, multi-index with t_0 mirror slots followed by tau block slots.
  const PolyMap<Rational>& poly(const MultiIndex& k) const {
    if (k.size() != static_cast<std::size_t>(slots())) throw std::invalid_argument("fan family: bad multi-index size");
    for (int ks : k)
      if (ks < 0) throw std::invalid_argument("fan family: negative multi-index entry");
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;
    const Algebra& a = b_->algebra();
    const int t0 = fan_.mirror_units(), tau = fan_.tau();
    const int ord = order(k);
    PolyMap<Rational> p(a, b_->nvars());
    if (ord == 0) {
      p = PolyMap<Rational>::constant(a, b_->nvars(), Element<Rational>::unit(a));
    } else {
      int blocks_total = 0;  // a = sum of the block entries of the current k
      for (int h = 1; h <= tau; ++h) blocks_total += k[static_cast<std::size_t>(t0 + h - 1)];
      for (int s = 1; s <= t0; ++s) {
        const int ks = k[static_cast<std::size_t>(s - 1)];
        if (ks == 0) continue;
        PolyMap<Rational> factor = PolyMap<Rational>::variable(a, b_->nvars(), s);
        const auto x0v = PolyMap<Rational>::variable(a, b_->nvars(), 0).right_mul(b_->unit(s));
        if (blocks_total % 2 == 0)
          factor -= x0v;
        else
          factor += x0v;
        p += (poly(shifted(k, s - 1, -1)) * factor) * Rational(ks);
      }
      for (int h = 1; h <= tau; ++h) {
        const int slot = t0 + h - 1;
        const int ks = k[static_cast<std::size_t>(slot)];
        if (ks == 0) continue;
        int above = 0;  // b_s: block entries strictly after this slot
        for (int g = h + 1; g <= tau; ++g) above += k[static_cast<std::size_t>(t0 + g - 1)];
        const int a_s = blocks_total - ks;
        PolyMap<Rational> factor = PolyMap<Rational>::variable(a, b_->nvars(), 0);
        if (a_s % 2 == 0)
          factor += block_variable(*b_, fan_, h);
        else
          factor -= block_variable(*b_, fan_, h);
        const Rational sign = above % 2 == 0 ? Rational(ks) : Rational(-ks);
        p += (poly(shifted(k, slot, -1)) * factor) * sign;
      }
      p /= Rational(ord);
    }
    return memo_.emplace(k, std::move(p)).first->second;
  }

  /// Descending product J_tau^{k_tau} ... J_1^{k_1} over the block entries
  /// of k (or of the block tail of a slice-level multi-index h).
  Element<Rational> torus_power(const TorusPoint& jp, const std::vector<int>& block_exponents) const {
    Element<Rational> p = Element<Rational>::unit(b_->algebra());
    for (int h = fan_.tau(); h >= 1; --h)
      for (int rep = 0; rep < block_exponents[static_cast<std::size_t>(h - 1)]; ++rep)
        p = p * jp.j[static_cast<std::size_t>(h - 1)];
    return p;
  }

  /// The restriction of T_k to the slice through jp equals the monogenic
  /// family polynomial over the slice basis times the descending torus
  /// power; exact comparison of both sides.
  bool check_slice_identity(const MultiIndex& k, const TorusPoint& jp) const {
    const HypercomplexBasis sb = slice_basis(*b_, fan_, jp);
    FueterFamily fam(sb);
    std::vector<int> bexp(static_cast<std::size_t>(fan_.tau()));
    for (int h = 1; h <= fan_.tau(); ++h) bexp[static_cast<std::size_t>(h - 1)] = k[static_cast<std::size_t>(fan_.mirror_units() + h - 1)];
    const PolyMap<Rational> rhs = fam.poly(k).right_mul(torus_power(jp, bexp));
    return slice_restrict(*b_, fan_, poly(k), jp) == rhs;
  }

  /// delta_J^h of a map living on the slice through jp (variables alpha,
  /// beta): the inverse of the descending torus power times nabla^h.
  PolyMap<Rational> delta_slice(const PolyMap<Rational>& g, const MultiIndex& h, const TorusPoint& jp) const {
    if (h.size() != static_cast<std::size_t>(slots() + 1)) throw std::invalid_argument("delta: bad multi-index size");
    std::vector<int> bexp(h.begin() + fan_.mirror_units() + 1, h.end());
    const PolyMap<Rational> der = nabla(g, h);
    const Element<Rational> pre = torus_power(jp, bexp);
    if (pre == Element<Rational>::unit(b_->algebra())) return der;
    return der.left_mul(inverse_element(pre));
  }

  /// delta^h of a fan-regular map in the ambient variables, computed
  /// through one slice (well-posedness makes the choice immaterial).
  PolyMap<Rational> delta(const PolyMap<Rational>& f, const MultiIndex& h, const TorusPoint& jp) const {
    return delta_slice(slice_restrict(*b_, fan_, f, jp), h, jp);
  }

  /// Coefficients c_k = (1/k!) delta^(0,k) P (0) of a fan-regular
  /// polynomial, keyed by the multi-indices of nonzero coefficients.
  std::map<MultiIndex, Element<Rational>> expand(const PolyMap<Rational>& p) const {
    const TorusPoint jp = axis_torus_point(*b_, fan_);
    const PolyMap<Rational> pj = slice_restrict(*b_, fan_, p, jp);
    std::map<MultiIndex, Element<Rational>> out;
    const std::vector<Rational> origin(static_cast<std::size_t>(slots() + 1), Rational(0));
    for (const auto& k : multiindices_up_to(slots(), std::max(p.degree(), 0))) {
      MultiIndex h(static_cast<std::size_t>(slots() + 1), 0);
      for (int i = 0; i < slots(); ++i) h[static_cast<std::size_t>(i + 1)] = k[static_cast<std::size_t>(i)];
      const Element<Rational> c = delta_slice(pj, h, jp).evaluate(origin) / multi_factorial(k);
      if (!c.is_zero()) out.emplace(k, c);
    }
    return out;
  }

  PolyMap<Rational> assemble(const std::map<MultiIndex, Element<Rational>>& coeffs) const {
    PolyMap<Rational> p(b_->algebra(), b_->nvars());
    for (const auto& [k, c] : coeffs) p += poly(k).right_mul(c);
    return p;
  }

  /// Whether delta_J^h f_J and delta_{J'}^h f_{J'} agree on the overlap of
  /// the two slices: block variables are kept where the torus points share a
  /// block (up to sign, reflecting beta), and frozen to zero elsewhere.
  bool delta_overlap_agree(const PolyMap<Rational>& f, const MultiIndex& h, const TorusPoint& jp,
                           const TorusPoint& jq) const {
    PolyMap<Rational> d1 = delta(f, h, jp);
    PolyMap<Rational> d2 = delta(f, h, jq);
    const int t0 = fan_.mirror_units();
    for (int blk = 1; blk <= fan_.tau(); ++blk) {
      const auto& a = jp.j[static_cast<std::size_t>(blk - 1)];
      const auto& b = jq.j[static_cast<std::size_t>(blk - 1)];
      if (a == b) continue;
      if (a == -b) {
        d2 = d2.scale_variable(t0 + blk, Rational(-1));
      } else {
        d1 = d1.set_variable_zero(t0 + blk);
        d2 = d2.set_variable_zero(t0 + blk);
      }
    }
    return d1 == d2;
  }

 private:
  const HypercomplexBasis* b_;
  TFan fan_;
  mutable std::map<MultiIndex, PolyMap<Rational>> memo_;
};

/// x_s - x_0 v_s, the degree-one mirror variable.
inline PolyMap<Rational> mirror_variable(const HypercomplexBasis& b, int s) {
  PolyMap<Rational> p = PolyMap<Rational>::variable(b.algebra(), b.nvars(), s);
  p -= PolyMap<Rational>::variable(b.algebra(), b.nvars(), 0).right_mul(b.unit(s));
  return p;
}

/// x_0 + x^h, the degree-one block variable.
inline PolyMap<Rational> cullen_variable(const HypercomplexBasis& b, const TFan& fan, int h) {
  return PolyMap<Rational>::variable(b.algebra(), b.nvars(), 0) + block_variable(b, fan, h);
}

/// Direct fan-regularity test: the slice restriction must be annihilated by
/// the slice operator d/dx_0 + sum v_s d/dx_s + sum J_h d/dbeta_h at every
/// torus point; checked at the axis point and `samples` random rational
/// points, which pins down the polynomial identity in J.
inline bool is_fan_regular(const HypercomplexBasis& b, const TFan& fan, const PolyMap<Rational>& f, int samples,
                           RngStream& rng) {
  auto vanishes_at = [&](const TorusPoint& jp) {
    const HypercomplexBasis sb = slice_basis(b, fan, jp);
    return cr_left(sb, slice_restrict(b, fan, f, jp)).is_zero();
  };
  if (!vanishes_at(axis_torus_point(b, fan))) return false;
  for (int i = 0; i < samples; ++i)
    if (!vanishes_at(torus_point(b, fan, rng))) return false;
  return true;
}

/// Classification of the degree-one variables: the mirror variable
/// x_s - x_0 v_s is regular for the other fan exactly when s is a mirror
/// index there or forms a singleton block there.
inline bool mirror_variable_regular_under(int s, const TFan& other) {
  if (s <= other.mirror_units()) return true;
  for (int u = 1; u <= other.tau(); ++u)
    if (other.block_lo(u) == s && other.block_hi(u) == s) return true;
  return false;
}

/// The block variable x_0 + x^h is regular for the other fan exactly when
/// its block is a singleton inside the other mirror, or one of the other
/// fan's blocks verbatim.
inline bool block_variable_regular_under(const TFan& fan, int h, const TFan& other) {
  const int lo = fan.block_lo(h), hi = fan.block_hi(h);
  if (lo == hi && hi <= other.mirror_units()) return true;
  for (int u = 1; u <= other.tau(); ++u)
    if (other.block_lo(u) == lo && other.block_hi(u) == hi) return true;
  return false;
}

/// Two fans produce the same regular class exactly when one step list is a
/// trailing suffix of the other and the leftover prefix consists of
/// consecutive steps chaining into the suffix head.
inline bool fans_equivalent(const TFan& a, const TFan& b) {
  const auto& u = a.steps().size() <= b.steps().size() ? a.steps() : b.steps();
  const auto& w = a.steps().size() <= b.steps().size() ? b.steps() : a.steps();
  const std::size_t off = w.size() - u.size();
  for (std::size_t i = 0; i < u.size(); ++i)
    if (w[off + i] != u[i]) return false;
  for (std::size_t i = 0; i < off; ++i)
    if (w[i] + 1 != w[i + 1]) return false;
  return true;
}

/// Every fan on m units: each subset of {0..m-1} extended by the final m.
inline std::vector<TFan> all_fans(int m) {
  std::vector<TFan> fans;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> steps;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) steps.push_back(i);
    steps.push_back(m);
    fans.emplace_back(std::move(steps));
  }
  return fans;
}

}  // namespace tregular
