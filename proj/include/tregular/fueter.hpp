#pragma once

// The monogenic polynomial family over a hypercomplex basis: P_0 = 1 and
// |k| P_k = sum_s k_s P_{k - eps_s} zeta_s with zeta_s(x) = x_s - x_0 v_s,
// multi-indices running over s = 1..m. Also the Cauchy-Riemann style
// operators, an independent component-level recursion used as an oracle, and
// Taylor-style expansion of monogenic maps in the family.

#include "tregular/polymap.hpp"
#include "tregular/subspace.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace tregular {

/// d-bar applied from the left: dP/dx_0 + sum_s v_s dP/dx_s.
inline PolyMap<Rational> cr_left(const HypercomplexBasis& b, const PolyMap<Rational>& p) {
  PolyMap<Rational> r = p.partial(0);
  for (int s = 1; s <= b.m(); ++s) r += p.partial(s).left_mul(b.unit(s));
  return r;
}

/// d-bar applied from the right: dP/dx_0 + sum_s (dP/dx_s) v_s.
inline PolyMap<Rational> cr_right(const HypercomplexBasis& b, const PolyMap<Rational>& p) {
  PolyMap<Rational> r = p.partial(0);
  for (int s = 1; s <= b.m(); ++s) r += p.partial(s).right_mul(b.unit(s));
  return r;
}

/// The conjugated operator: dP/dx_0 - sum_s v_s dP/dx_s.
inline PolyMap<Rational> cr_conj_left(const HypercomplexBasis& b, const PolyMap<Rational>& p) {
  PolyMap<Rational> r = p.partial(0);
  for (int s = 1; s <= b.m(); ++s) r -= p.partial(s).left_mul(b.unit(s));
  return r;
}

template <class S>
PolyMap<S> laplacian(const PolyMap<S>& p) {
  PolyMap<S> r(p.algebra(), p.nvars());
  for (int s = 0; s < p.nvars(); ++s) r += p.partial(s).partial(s);
  return r;
}

class FueterFamily {
 public:
  explicit FueterFamily(const HypercomplexBasis& b) : b_(&b) {}

  const HypercomplexBasis& basis() const { return *b_; }

  /// zeta_s = x_s - x_0 v_s.
  PolyMap<Rational> zeta(int s) const {
    const Algebra& a = b_->algebra();
    PolyMap<Rational> z = PolyMap<Rational>::variable(a, b_->nvars(), s);
    z -= PolyMap<Rational>::variable(a, b_->nvars(), 0).right_mul(b_->unit(s));
    return z;
  }

  /// P_k, multi-index of size m.
  const PolyMap<Rational>& poly(const MultiIndex& k) const {
    if (k.size() != static_cast<std::size_t>(b_->m())) throw std::invalid_argument("fueter family: bad multi-index size");
    for (int ks : k)
      if (ks < 0) throw std::invalid_argument("fueter family: negative multi-index entry");
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;
    const int ord = order(k);
    PolyMap<Rational> p(b_->algebra(), b_->nvars());
    if (ord == 0) {
      p = PolyMap<Rational>::constant(b_->algebra(), b_->nvars(), Element<Rational>::unit(b_->algebra()));
    } else {
      for (int s = 1; s <= b_->m(); ++s) {
        const int ks = k[static_cast<std::size_t>(s - 1)];
        if (ks == 0) continue;
        p += (poly(shifted(k, s - 1, -1)) * zeta(s)) * Rational(ks);
      }
      p /= Rational(ord);
    }
    return memo_.emplace(k, std::move(p)).first->second;
  }

 private:
  const HypercomplexBasis* b_;
  mutable std::map<MultiIndex, PolyMap<Rational>> memo_;
};

inline const Algebra& real_algebra() {
  static const Algebra a = make_real();
  return a;
}

/// Component-level recursion for the same family, carried out over the reals
/// with no algebra product involved: p_k : R^{m+1} -> R^{m+1} with
/// |k| p_k^0 = sum_w k_w (p_{k-eps_w}^0 x_w + p_{k-eps_w}^w x_0) and
/// |k| p_k^u = -k_u p_{k-eps_u}^0 x_0 + sum_w k_w p_{k-eps_w}^u x_w.
class FueterComponentOracle {
 public:
  explicit FueterComponentOracle(int m) : m_(m) {}

  const std::vector<PolyMap<Rational>>& components(const MultiIndex& k) const {
    if (k.size() != static_cast<std::size_t>(m_)) throw std::invalid_argument("component oracle: bad multi-index size");
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;
    const Algebra& r = real_algebra();
    const int nv = m_ + 1;
    std::vector<PolyMap<Rational>> comps(static_cast<std::size_t>(nv), PolyMap<Rational>(r, nv));
    const int ord = order(k);
    if (ord == 0) {
      comps[0] = PolyMap<Rational>::constant(r, nv, Element<Rational>::unit(r));
    } else {
      const auto x = [&](int s) { return PolyMap<Rational>::variable(r, nv, s); };
      for (int w = 1; w <= m_; ++w) {
        const int kw = k[static_cast<std::size_t>(w - 1)];
        if (kw == 0) continue;
        const auto& prev = components(shifted(k, w - 1, -1));
        comps[0] += (prev[0] * x(w) + prev[static_cast<std::size_t>(w)] * x(0)) * Rational(kw);
        for (int u = 1; u <= m_; ++u) comps[static_cast<std::size_t>(u)] += (prev[static_cast<std::size_t>(u)] * x(w)) * Rational(kw);
      }
      for (int u = 1; u <= m_; ++u) {
        const int ku = k[static_cast<std::size_t>(u - 1)];
        if (ku == 0) continue;
        const auto& prev = components(shifted(k, u - 1, -1));
        comps[static_cast<std::size_t>(u)] -= (prev[0] * x(0)) * Rational(ku);
      }
      for (auto& c : comps) c /= Rational(ord);
    }
    return memo_.emplace(k, std::move(comps)).first->second;
  }

 private:
  int m_;
  mutable std::map<MultiIndex, std::vector<PolyMap<Rational>>> memo_;
};

/// sum_u comps_u(x) w_u with w_0 = 1 and w_u = v_u: rebuilds an algebra
/// valued map from real components.
inline PolyMap<Rational> assemble_from_components(const HypercomplexBasis& b,
                                                  const std::vector<PolyMap<Rational>>& comps) {
  if (comps.size() != static_cast<std::size_t>(b.nvars()))
    throw std::invalid_argument("assemble: component count mismatch");
  const Algebra& a = b.algebra();
  PolyMap<Rational> out(a, b.nvars());
  for (int u = 0; u <= b.m(); ++u) {
    const Element<Rational> w = u == 0 ? Element<Rational>::unit(a) : b.unit(u);
    for (const auto& [k, c] : comps[static_cast<std::size_t>(u)].terms()) out.add_term(k, w * c.real());
  }
  return out;
}

/// Coefficients a_k = (1/k!) nabla^(0,k) P(0) of a monogenic map in the
/// family, keyed by the multi-indices of nonzero coefficients.
inline std::map<MultiIndex, Element<Rational>> monogenic_expand(const HypercomplexBasis& b,
                                                                const PolyMap<Rational>& p) {
  if (!cr_left(b, p).is_zero()) throw std::invalid_argument("monogenic expand: map is not in the operator kernel");
  std::map<MultiIndex, Element<Rational>> out;
  const std::vector<Rational> origin(static_cast<std::size_t>(b.nvars()), Rational(0));
  for (const auto& k : multiindices_up_to(b.m(), std::max(p.degree(), 0))) {
    MultiIndex h(static_cast<std::size_t>(b.nvars()), 0);
    for (int s = 1; s <= b.m(); ++s) h[static_cast<std::size_t>(s)] = k[static_cast<std::size_t>(s - 1)];
    const Element<Rational> a = nabla(p, h).evaluate(origin) / multi_factorial(k);
    if (!a.is_zero()) out.emplace(k, a);
  }
  return out;
}

/// Reassembles sum_k P_k a_k.
inline PolyMap<Rational> assemble_expansion(const FueterFamily& fam,
                                            const std::map<MultiIndex, Element<Rational>>& coeffs) {
  PolyMap<Rational> p(fam.basis().algebra(), fam.basis().nvars());
  for (const auto& [k, a] : coeffs) p += fam.poly(k).right_mul(a);
  return p;
}

}  // namespace tregular
