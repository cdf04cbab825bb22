#pragma once

// Polynomial maps R^n -> A in the right-coefficient convention
// P(x) = sum_k x^k c_k with real monomials x^k and coefficients c_k in the
// algebra. Real scalars commute with everything, so sums, pointwise products
// and partial derivatives stay in this form; products of coefficients are
// parenthesized exactly as written, which is what nonassociative recursions
// need.

#include "tregular/algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace tregular {

using MultiIndex = std::vector<int>;

inline int order(const MultiIndex& k) {
  int s = 0;
  for (int x : k) s += x;
  return s;
}

inline Rational multi_factorial(const MultiIndex& k) {
  Rational f(1);
  for (int x : k) f *= factorial(x);
  return f;
}

inline MultiIndex shifted(MultiIndex k, int slot, int delta) {
  k[static_cast<std::size_t>(slot)] += delta;
  return k;
}

/// All multi-indices with the given number of slots and order at most
/// max_order, sorted by order and lexicographically within each order.
inline std::vector<MultiIndex> multiindices_up_to(int slots, int max_order) {
  std::vector<MultiIndex> out;
  for (int ord = 0; ord <= max_order; ++ord) {
    std::vector<MultiIndex> level;
    MultiIndex k(static_cast<std::size_t>(slots), 0);
    std::function<void(int, int)> fill = [&](int slot, int left) {
      if (slot == slots - 1) {
        k[static_cast<std::size_t>(slot)] = left;
        level.push_back(k);
        return;
      }
      for (int v = left; v >= 0; --v) {
        k[static_cast<std::size_t>(slot)] = v;
        fill(slot + 1, left - v);
      }
    };
    if (slots == 0) {
      if (ord == 0) level.push_back(k);
    } else {
      fill(0, ord);
    }
    std::sort(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

template <class S>
class PolyMap {
 public:
  PolyMap(const Algebra& a, int nvars) : alg_(&a), nvars_(nvars) {
    if (nvars <= 0) throw std::invalid_argument("polymap: need at least one variable");
  }

  static PolyMap constant(const Algebra& a, int nvars, Element<S> c) {
    PolyMap p(a, nvars);
    p.add_term(MultiIndex(static_cast<std::size_t>(nvars), 0), std::move(c));
    return p;
  }

  static PolyMap monomial(const Algebra& a, int nvars, MultiIndex k, Element<S> c) {
    if (k.size() != static_cast<std::size_t>(nvars)) throw std::invalid_argument("polymap: bad multi-index size");
    PolyMap p(a, nvars);
    p.add_term(std::move(k), std::move(c));
    return p;
  }

  /// x_var as a map into the algebra.
  static PolyMap variable(const Algebra& a, int nvars, int var) {
    if (var < 0 || var >= nvars) throw std::invalid_argument("polymap: variable index out of range");
    MultiIndex k(static_cast<std::size_t>(nvars), 0);
    k[static_cast<std::size_t>(var)] = 1;
    return monomial(a, nvars, std::move(k), Element<S>::unit(a));
  }

  const Algebra& algebra() const { return *alg_; }
  int nvars() const { return nvars_; }
  const std::map<MultiIndex, Element<S>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, order(k));
    return d;
  }

  Element<S> coefficient(const MultiIndex& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Element<S>(*alg_) : it->second;
  }

  void add_term(MultiIndex k, Element<S> c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(std::move(k), std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  PolyMap& operator+=(const PolyMap& o) {
    check_same(o);
    for (const auto& [k, c] : o.terms_) {
      auto [it, fresh] = terms_.try_emplace(k, c);
      if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
      }
    }
    return *this;
  }
  PolyMap& operator-=(const PolyMap& o) {
    check_same(o);
    for (const auto& [k, c] : o.terms_) {
      auto [it, fresh] = terms_.try_emplace(k, -c);
      if (!fresh) {
        it->second -= c;
        if (it->second.is_zero()) terms_.erase(it);
      }
    }
    return *this;
  }
  friend PolyMap operator+(PolyMap a, const PolyMap& b) { return a += b; }
  friend PolyMap operator-(PolyMap a, const PolyMap& b) { return a -= b; }
  PolyMap operator-() const {
    PolyMap r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
  }
  PolyMap& operator*=(const S& s) {
    if (s == S(0)) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }
  friend PolyMap operator*(PolyMap p, const S& s) { return p *= s; }
  friend PolyMap operator*(const S& s, PolyMap p) { return p *= s; }
  PolyMap& operator/=(const S& s) {
    for (auto& [k, c] : terms_) c /= s;
    return *this;
  }

  bool operator==(const PolyMap& o) const { return alg_ == o.alg_ && nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const PolyMap& o) const { return !(*this == o); }

  /// a P : every coefficient multiplied by a on the left.
  PolyMap left_mul(const Element<S>& a) const {
    PolyMap r(*alg_, nvars_);
    for (const auto& [k, c] : terms_) r.add_term(k, a * c);
    return r;
  }

  /// P a : every coefficient multiplied by a on the right.
  PolyMap right_mul(const Element<S>& a) const {
    PolyMap r(*alg_, nvars_);
    for (const auto& [k, c] : terms_) r.add_term(k, c * a);
    return r;
  }

  /// Coefficients transformed one by one; the transform must be linear for
  /// the result to mean anything pointwise.
  PolyMap transform_coefficients(const std::function<Element<S>(const Element<S>&)>& fn) const {
    PolyMap r(*alg_, nvars_);
    for (const auto& [k, c] : terms_) r.add_term(k, fn(c));
    return r;
  }

  /// Pointwise product; coefficient products are (c_k d_l), so chains of
  /// products associate exactly as the expressions are parenthesized.
  friend PolyMap operator*(const PolyMap& p, const PolyMap& q) {
    p.check_same(q);
    PolyMap r(*p.alg_, p.nvars_);
    for (const auto& [k, c] : p.terms_)
      for (const auto& [l, d] : q.terms_) {
        MultiIndex kl(k);
        for (std::size_t i = 0; i < kl.size(); ++i) kl[i] += l[i];
        r.add_term(std::move(kl), c * d);
      }
    return r;
  }

  PolyMap partial(int var) const {
    PolyMap r(*alg_, nvars_);
    for (const auto& [k, c] : terms_) {
      const int kv = k[static_cast<std::size_t>(var)];
      if (kv == 0) continue;
      r.add_term(shifted(k, var, -1), c * S(kv));
    }
    return r;
  }

  Element<S> evaluate(const std::vector<S>& x) const {
    if (x.size() != static_cast<std::size_t>(nvars_)) throw std::invalid_argument("polymap: point size mismatch");
    Element<S> acc(*alg_);
    for (const auto& [k, c] : terms_) {
      S mono(1);
      for (int s = 0; s < nvars_; ++s)
        for (int rep = 0; rep < k[static_cast<std::size_t>(s)]; ++rep) mono *= x[static_cast<std::size_t>(s)];
      acc += c * mono;
    }
    return acc;
  }

  PolyMap scale_variable(int var, const S& f) const {
    PolyMap r(*alg_, nvars_);
    for (const auto& [k, c] : terms_) {
      S scale(1);
      for (int rep = 0; rep < k[static_cast<std::size_t>(var)]; ++rep) scale *= f;
      r.add_term(k, c * scale);
    }
    return r;
  }

  PolyMap set_variable_zero(int var) const {
    PolyMap r(*alg_, nvars_);
    for (const auto& [k, c] : terms_)
      if (k[static_cast<std::size_t>(var)] == 0) r.add_term(k, c);
    return r;
  }

  /// Substitution x_s = sum_t sub(s, t) y_t into new variables y_0..y_{n'-1}.
  PolyMap substitute_linear(const Matrix<S>& sub, int new_nvars) const {
    if (sub.rows() != static_cast<std::size_t>(nvars_) || sub.cols() != static_cast<std::size_t>(new_nvars))
      throw std::invalid_argument("polymap: substitution shape mismatch");
    using ScalarPoly = std::map<MultiIndex, S>;
    auto mul_scalar = [](const ScalarPoly& a, const ScalarPoly& b) {
      ScalarPoly r;
      for (const auto& [k, c] : a)
        for (const auto& [l, d] : b) {
          MultiIndex kl(k);
          for (std::size_t i = 0; i < kl.size(); ++i) kl[i] += l[i];
          r[kl] += c * d;
        }
      return r;
    };
    std::vector<ScalarPoly> lin(static_cast<std::size_t>(nvars_));
    for (int s = 0; s < nvars_; ++s)
      for (int t = 0; t < new_nvars; ++t) {
        const S& f = sub(static_cast<std::size_t>(s), static_cast<std::size_t>(t));
        if (f == S(0)) continue;
        MultiIndex k(static_cast<std::size_t>(new_nvars), 0);
        k[static_cast<std::size_t>(t)] = 1;
        lin[static_cast<std::size_t>(s)][std::move(k)] = f;
      }
    PolyMap r(*alg_, new_nvars);
    for (const auto& [k, c] : terms_) {
      ScalarPoly mono{{MultiIndex(static_cast<std::size_t>(new_nvars), 0), S(1)}};
      for (int s = 0; s < nvars_; ++s)
        for (int rep = 0; rep < k[static_cast<std::size_t>(s)]; ++rep) mono = mul_scalar(mono, lin[static_cast<std::size_t>(s)]);
      for (const auto& [l, f] : mono) r.add_term(l, c * f);
    }
    return r;
  }

 private:
  void check_same(const PolyMap& o) const {
    if (alg_ != o.alg_ || nvars_ != o.nvars_) throw std::invalid_argument("polymap: mixed contexts");
  }

  const Algebra* alg_;
  int nvars_;
  std::map<MultiIndex, Element<S>> terms_;
};

template <class S>
PolyMap<S> nabla(const PolyMap<S>& p, const MultiIndex& h) {
  if (h.size() != static_cast<std::size_t>(p.nvars())) throw std::invalid_argument("nabla: bad multi-index size");
  PolyMap<S> r = p;
  for (int var = 0; var < p.nvars(); ++var)
    for (int rep = 0; rep < h[static_cast<std::size_t>(var)]; ++rep) r = r.partial(var);
  return r;
}

inline PolyMap<double> to_double(const PolyMap<Rational>& p) {
  PolyMap<double> r(p.algebra(), p.nvars());
  for (const auto& [k, c] : p.terms()) r.add_term(k, to_double(c));
  return r;
}

/// Largest coefficient norm, a cheap sup-style gauge for float comparisons.
inline double max_coeff_norm(const PolyMap<double>& p) {
  double m = 0;
  for (const auto& [k, c] : p.terms()) m = std::max(m, norm(c));
  return m;
}

}  // namespace tregular
