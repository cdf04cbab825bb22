#pragma once

// Finite-dimensional real *-algebras presented by structure constants on a
// fixed basis whose first element is the unit, together with an involutive
// conjugation. Multiplication tables are stored compactly (sign and index)
// whenever every basis product is plus or minus a single basis vector, which
// covers the Clifford, Cayley-Dickson and dual-quaternion families; general
// rational rows cover everything else. Exact and floating-point element
// arithmetic share the same tables.

#include "tregular/linalg.hpp"
#include "tregular/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tregular {

struct MulTerm {
  Rational coeff;
  int index = 0;
};

class Algebra {
 public:
  /// Builds an algebra from dense structure rows (row (i,j) lists the terms
  /// of basis_i * basis_j) and a full conjugation matrix acting on
  /// coordinate columns. Compacts to sign/index storage when possible.
  static Algebra from_structure(std::string name, std::vector<std::string> labels,
                                std::vector<std::vector<MulTerm>> rows, Matrix<Rational> conj) {
    Algebra a;
    a.name_ = std::move(name);
    a.labels_ = std::move(labels);
    a.dim_ = static_cast<int>(a.labels_.size());
    const std::size_t d = static_cast<std::size_t>(a.dim_);
    if (rows.size() != d * d) throw std::invalid_argument("algebra structure: row count mismatch");
    if (conj.rows() != d || conj.cols() != d)
      throw std::invalid_argument("algebra structure: conjugation shape mismatch");

    bool monomial = true;
    for (const auto& r : rows) {
      if (r.empty()) continue;
      if (r.size() > 1 || (r[0].coeff != 1 && r[0].coeff != -1)) {
        monomial = false;
        break;
      }
    }
    a.monomial_ = monomial;
    if (monomial) {
      a.mono_sign_.assign(d * d, 0);
      a.mono_index_.assign(d * d, 0);
      for (std::size_t e = 0; e < d * d; ++e) {
        if (rows[e].empty()) continue;
        a.mono_sign_[e] = rows[e][0].coeff == 1 ? 1 : -1;
        a.mono_index_[e] = rows[e][0].index;
      }
    } else {
      a.rows_ = std::move(rows);
    }

    bool diag = true;
    for (std::size_t i = 0; i < d && diag; ++i)
      for (std::size_t j = 0; j < d && diag; ++j) {
        if (i == j) {
          if (conj(i, j) != 1 && conj(i, j) != -1) diag = false;
        } else if (conj(i, j) != 0) {
          diag = false;
        }
      }
    if (diag) {
      a.conj_signs_.resize(d);
      for (std::size_t i = 0; i < d; ++i) a.conj_signs_[i] = conj(i, i) == 1 ? 1 : -1;
    }
    a.conj_ = std::move(conj);
    a.state_ = std::make_shared<LazyState>();
    return a;
  }

  int dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool monomial() const { return monomial_; }
  int mono_sign(int i, int j) const { return mono_sign_[idx(i, j)]; }
  int mono_index(int i, int j) const { return mono_index_[idx(i, j)]; }
  const std::vector<MulTerm>& general_row(int i, int j) const { return rows_[idx(i, j)]; }

  /// Terms of basis_i * basis_j in a uniform shape, whatever the storage.
  std::vector<MulTerm> product_terms(int i, int j) const {
    if (!monomial_) return rows_[idx(i, j)];
    const int s = mono_sign(i, j);
    if (s == 0) return {};
    return {MulTerm{Rational(s), mono_index(i, j)}};
  }

  bool conj_is_sign_diagonal() const { return !conj_signs_.empty(); }
  int conj_sign(int i) const { return conj_signs_[static_cast<std::size_t>(i)]; }
  const Matrix<Rational>& conj_matrix() const { return conj_; }

  const std::vector<std::pair<double, int>>& double_row(int i, int j) const {
    std::call_once(state_->double_rows_once, [this] {
      const std::size_t d = static_cast<std::size_t>(dim_);
      state_->double_rows.resize(d * d);
      for (std::size_t e = 0; e < d * d; ++e) {
        const auto terms = product_terms(static_cast<int>(e / d), static_cast<int>(e % d));
        for (const auto& t : terms) state_->double_rows[e].emplace_back(to_double(t.coeff), t.index);
      }
    });
    return state_->double_rows[idx(i, j)];
  }

  bool associative() const {
    std::lock_guard<std::mutex> lk(state_->flags_mutex);
    if (!state_->associative) state_->associative = scan_associative();
    return *state_->associative;
  }

  bool alternative() const {
    std::lock_guard<std::mutex> lk(state_->flags_mutex);
    if (!state_->alternative) state_->alternative = scan_alternative();
    return *state_->alternative;
  }

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(j);
  }

  // Sparse coordinate vectors keep the basis-triple scans cheap.
  using SparseVec = std::vector<MulTerm>;

  SparseVec mul_sparse(const SparseVec& x, const SparseVec& y) const {
    std::vector<Rational> acc(static_cast<std::size_t>(dim_), Rational(0));
    for (const auto& xt : x)
      for (const auto& yt : y) {
        const Rational c = xt.coeff * yt.coeff;
        if (monomial_) {
          const int s = mono_sign(xt.index, yt.index);
          if (s != 0) acc[static_cast<std::size_t>(mono_index(xt.index, yt.index))] += (s > 0 ? c : -c);
        } else {
          for (const auto& t : general_row(xt.index, yt.index))
            acc[static_cast<std::size_t>(t.index)] += c * t.coeff;
        }
      }
    SparseVec out;
    for (int i = 0; i < dim_; ++i)
      if (acc[static_cast<std::size_t>(i)] != 0) out.push_back({acc[static_cast<std::size_t>(i)], i});
    return out;
  }

  static SparseVec sparse_sub(const SparseVec& x, const SparseVec& y, int dim) {
    std::vector<Rational> acc(static_cast<std::size_t>(dim), Rational(0));
    for (const auto& t : x) acc[static_cast<std::size_t>(t.index)] += t.coeff;
    for (const auto& t : y) acc[static_cast<std::size_t>(t.index)] -= t.coeff;
    SparseVec out;
    for (int i = 0; i < dim; ++i)
      if (acc[static_cast<std::size_t>(i)] != 0) out.push_back({acc[static_cast<std::size_t>(i)], i});
    return out;
  }

  SparseVec basis_associator(int i, int j, int k) const {
    const SparseVec ei{{Rational(1), i}}, ej{{Rational(1), j}}, ek{{Rational(1), k}};
    return sparse_sub(mul_sparse(mul_sparse(ei, ej), ek), mul_sparse(ei, mul_sparse(ej, ek)), dim_);
  }

  bool scan_associative() const {
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        for (int k = 0; k < dim_; ++k)
          if (!basis_associator(i, j, k).empty()) return false;
    return true;
  }

  // The associator is trilinear, so alternativity is equivalent to the
  // symmetrized basis identities (i,j,k)+(j,i,k)=0 and (i,j,k)+(i,k,j)=0.
  bool scan_alternative() const {
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        for (int k = 0; k < dim_; ++k) {
          const auto a = basis_associator(i, j, k);
          if (!sparse_sub(a, basis_negate(basis_associator(j, i, k)), dim_).empty()) return false;
          if (!sparse_sub(a, basis_negate(basis_associator(i, k, j)), dim_).empty()) return false;
        }
    return true;
  }

  static SparseVec basis_negate(SparseVec v) {
    for (auto& t : v) t.coeff = -t.coeff;
    return v;
  }

  struct LazyState {
    std::once_flag double_rows_once;
    std::vector<std::vector<std::pair<double, int>>> double_rows;
    std::mutex flags_mutex;
    std::optional<bool> associative;
    std::optional<bool> alternative;
  };

  std::string name_;
  std::vector<std::string> labels_;
  int dim_ = 0;
  bool monomial_ = false;
  std::vector<std::int8_t> mono_sign_;
  std::vector<int> mono_index_;
  std::vector<std::vector<MulTerm>> rows_;
  std::vector<std::int8_t> conj_signs_;
  Matrix<Rational> conj_;
  std::shared_ptr<LazyState> state_;
};

template <class S>
class Element {
 public:
  Element() = default;
  explicit Element(const Algebra& a) : alg_(&a), c_(static_cast<std::size_t>(a.dim()), S(0)) {}
  Element(const Algebra& a, std::vector<S> coeffs) : alg_(&a), c_(std::move(coeffs)) {
    if (c_.size() != static_cast<std::size_t>(a.dim()))
      throw std::invalid_argument("element: coefficient count mismatch");
  }

  static Element unit(const Algebra& a) { return basis(a, 0); }
  static Element basis(const Algebra& a, int i) {
    Element e(a);
    e.c_[static_cast<std::size_t>(i)] = S(1);
    return e;
  }
  static Element scalar(const Algebra& a, const S& s) {
    Element e(a);
    e.c_[0] = s;
    return e;
  }

  const Algebra& algebra() const {
    if (!alg_) throw std::logic_error("element: no algebra attached");
    return *alg_;
  }
  bool attached() const { return alg_ != nullptr; }
  int dim() const { return algebra().dim(); }

  S& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const S& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  const std::vector<S>& coeffs() const { return c_; }

  bool operator==(const Element& o) const { return c_ == o.c_; }
  bool operator!=(const Element& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != S(0)) return false;
    return true;
  }

  bool is_real() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != S(0)) return false;
    return true;
  }

  S real() const { return c_[0]; }

  Element operator-() const {
    Element r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  Element& operator+=(const Element& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Element& operator-=(const Element& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Element& operator*=(const S& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }
  Element& operator/=(const S& s) {
    for (auto& x : c_) x /= s;
    return *this;
  }

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const S& s) { return a *= s; }
  friend Element operator*(const S& s, Element a) { return a *= s; }
  friend Element operator/(Element a, const S& s) { return a /= s; }

  friend Element operator*(const Element& x, const Element& y) {
    x.check_same(y);
    const Algebra& a = x.algebra();
    Element out(a);
    const int d = a.dim();
    if (a.monomial()) {
      for (int i = 0; i < d; ++i) {
        if (x[i] == S(0)) continue;
        for (int j = 0; j < d; ++j) {
          if (y[j] == S(0)) continue;
          const int sg = a.mono_sign(i, j);
          if (sg == 0) continue;
          const S p = x[i] * y[j];
          if (sg > 0)
            out[a.mono_index(i, j)] += p;
          else
            out[a.mono_index(i, j)] -= p;
        }
      }
      return out;
    }
    for (int i = 0; i < d; ++i) {
      if (x[i] == S(0)) continue;
      for (int j = 0; j < d; ++j) {
        if (y[j] == S(0)) continue;
        const S p = x[i] * y[j];
        if constexpr (std::is_same_v<S, double>) {
          for (const auto& t : a.double_row(i, j)) out[t.second] += t.first * p;
        } else {
          for (const auto& t : a.general_row(i, j)) out[t.index] += S(t.coeff) * p;
        }
      }
    }
    return out;
  }

  Element conj() const {
    const Algebra& a = algebra();
    Element out(a);
    if (a.conj_is_sign_diagonal()) {
      for (int i = 0; i < a.dim(); ++i) out[i] = a.conj_sign(i) > 0 ? c_[static_cast<std::size_t>(i)] : -c_[static_cast<std::size_t>(i)];
      return out;
    }
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < a.dim(); ++j) {
        const Rational& m = a.conj_matrix()(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        if (m == 0) continue;
        if constexpr (std::is_same_v<S, double>)
          out[i] += to_double(m) * c_[static_cast<std::size_t>(j)];
        else
          out[i] += S(m) * c_[static_cast<std::size_t>(j)];
      }
    return out;
  }

  /// Euclidean scalar product of the coordinate vectors.
  S dot(const Element& o) const {
    check_same(o);
    S acc(0);
    for (std::size_t i = 0; i < c_.size(); ++i) acc += c_[i] * o.c_[i];
    return acc;
  }
  S norm_sq() const { return dot(*this); }

 private:
  void check_same(const Element& o) const {
    if (alg_ != o.alg_) throw std::invalid_argument("element: mixed algebras");
  }

  const Algebra* alg_ = nullptr;
  std::vector<S> c_;
};

inline Element<double> to_double(const Element<Rational>& x) {
  std::vector<double> c(x.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = to_double(x.coeffs()[i]);
  return Element<double>(x.algebra(), std::move(c));
}

inline double norm(const Element<double>& x) { return std::sqrt(x.norm_sq()); }

/// t(x) = x + x^c.
template <class S>
Element<S> trace_t(const Element<S>& x) {
  return x + x.conj();
}

/// n(x) = x x^c.
template <class S>
Element<S> norm_n(const Element<S>& x) {
  return x * x.conj();
}

template <class S>
Element<S> associator(const Element<S>& x, const Element<S>& y, const Element<S>& z) {
  return (x * y) * z - x * (y * z);
}

template <class S>
Element<S> commutator(const Element<S>& x, const Element<S>& y) {
  return x * y - y * x;
}

inline bool is_imaginary_unit(const Element<Rational>& x) {
  return trace_t(x).is_zero() && norm_n(x) == Element<Rational>::unit(x.algebra());
}

/// Membership in the quadratic cone: x is real, or t(x) and n(x) are both
/// real with 4 n(x) > t(x)^2.
inline bool in_quadratic_cone(const Element<Rational>& x) {
  const auto t = trace_t(x), n = norm_n(x);
  if (!t.is_real() || !n.is_real()) return false;
  if (x.is_real()) return true;
  return 4 * n.real() > t.real() * t.real();
}

enum class MulSide { left, right };

/// The matrix of y -> a*y (left) or y -> y*a (right) in basis coordinates.
inline Matrix<Rational> mult_matrix(const Element<Rational>& a, MulSide side) {
  const Algebra& alg = a.algebra();
  const int d = alg.dim();
  Matrix<Rational> m(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    const auto ej = Element<Rational>::basis(alg, j);
    const auto col = side == MulSide::left ? a * ej : ej * a;
    for (int i = 0; i < d; ++i) m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = col[i];
  }
  return m;
}

/// Exact inverse via the left-multiplication matrix; throws when a is not
/// invertible. In a nonassociative algebra this is the solution of a y = 1.
inline Element<Rational> inverse_element(const Element<Rational>& a) {
  const Algebra& alg = a.algebra();
  std::vector<Rational> one(static_cast<std::size_t>(alg.dim()), Rational(0));
  one[0] = 1;
  const auto y = solve(mult_matrix(a, MulSide::left), one);
  if (!y) throw std::invalid_argument("inverse: element is not invertible");
  return Element<Rational>(alg, *y);
}

inline bool is_zero_divisor(const Element<Rational>& a) {
  if (a.is_zero()) return false;
  const std::size_t d = static_cast<std::size_t>(a.algebra().dim());
  return rank(mult_matrix(a, MulSide::left)) < d || rank(mult_matrix(a, MulSide::right)) < d;
}

/// Whether x associates with every pair of basis vectors in all three slots.
inline bool nucleus_contains(const Element<Rational>& x) {
  const Algebra& a = x.algebra();
  for (int i = 0; i < a.dim(); ++i) {
    const auto ei = Element<Rational>::basis(a, i);
    for (int j = 0; j < a.dim(); ++j) {
      const auto ej = Element<Rational>::basis(a, j);
      if (!associator(x, ei, ej).is_zero()) return false;
      if (!associator(ei, x, ej).is_zero()) return false;
      if (!associator(ei, ej, x).is_zero()) return false;
    }
  }
  return true;
}

/// Whether t maps the whole algebra into the associative nucleus. Since t is
/// linear it suffices to test the traces of basis vectors.
inline bool trace_in_nucleus(const Algebra& a) {
  for (int i = 0; i < a.dim(); ++i)
    if (!nucleus_contains(trace_t(Element<Rational>::basis(a, i)))) return false;
  return true;
}

/// Checks that conjugation is an involutive anti-automorphism fixing the
/// unit, exactly on all basis pairs. Throws std::runtime_error on violation.
inline void validate_star_structure(const Algebra& a) {
  const auto unit = Element<Rational>::unit(a);
  for (int i = 0; i < a.dim(); ++i) {
    const auto ei = Element<Rational>::basis(a, i);
    if ((unit * ei) != ei || (ei * unit) != ei)
      throw std::runtime_error("star structure: basis vector 0 is not a two-sided unit");
    if (ei.conj().conj() != ei) throw std::runtime_error("star structure: conjugation is not involutive");
  }
  if (unit.conj() != unit) throw std::runtime_error("star structure: conjugation moves the unit");
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      const auto ei = Element<Rational>::basis(a, i), ej = Element<Rational>::basis(a, j);
      if ((ei * ej).conj() != ej.conj() * ei.conj())
        throw std::runtime_error("star structure: conjugation is not an anti-automorphism");
    }
}

// ---------------------------------------------------------------------------
// Factories

/// The real line as a 1-dimensional algebra; handy as a coefficient carrier.
inline Algebra make_real() {
  std::vector<std::vector<MulTerm>> rows{{MulTerm{Rational(1), 0}}};
  return Algebra::from_structure("real", {"1"}, std::move(rows), Matrix<Rational>::identity(1));
}

/// Clifford algebra Cl(p,q): generators e_1..e_p square to +1, the remaining
/// q square to -1, and distinct generators anticommute. Basis vectors are
/// indexed by subsets in binary-counter order. Guarded to p+q <= 12.
inline Algebra make_clifford(int p, int q) {
  if (p < 0 || q < 0 || p + q > 12) throw std::invalid_argument("make_clifford: need 0 <= p+q <= 12");
  const int n = p + q;
  const std::size_t d = std::size_t(1) << n;

  auto subset_label = [&](std::size_t mask) {
    if (mask == 0) return std::string("1");
    std::string s = "e";
    bool first = true;
    for (int g = 1; g <= n; ++g)
      if (mask & (std::size_t(1) << (g - 1))) {
        if (n > 9 && !first) s += "_";
        s += std::to_string(g);
        first = false;
      }
    return s;
  };

  std::vector<std::string> labels(d);
  for (std::size_t m = 0; m < d; ++m) labels[m] = subset_label(m);

  std::vector<std::vector<MulTerm>> rows(d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      int swaps = 0;
      for (int g = 1; g <= n; ++g)
        if (a & (std::size_t(1) << (g - 1)))
          swaps += __builtin_popcountll(b & ((std::size_t(1) << (g - 1)) - 1));
      int sign = (swaps % 2 == 0) ? 1 : -1;
      std::size_t common = a & b;
      for (int g = 1; g <= n; ++g)
        if (common & (std::size_t(1) << (g - 1)))
          if (g > p) sign = -sign;
      rows[a * d + b] = {MulTerm{Rational(sign), static_cast<int>(a ^ b)}};
    }

  Matrix<Rational> conj(d, d);
  for (std::size_t m = 0; m < d; ++m) {
    const int grade = __builtin_popcountll(m) % 4;
    conj(m, m) = (grade == 0 || grade == 3) ? 1 : -1;
  }

  return Algebra::from_structure("cl" + std::to_string(p) + std::to_string(q), std::move(labels),
                                 std::move(rows), std::move(conj));
}

/// Cayley-Dickson double of `base`: pairs (a,b) with
/// (a,b)(c,d) = (ac - d b^c, a^c d + c b) and (a,b)^c = (a^c, -b).
/// The second-half basis is chosen as e_s * l, so level 2 lands on the
/// standard quaternions with i*j = k.
inline Algebra cayley_dickson_double(const Algebra& base, const std::string& name) {
  const int n = base.dim();
  const int d = 2 * n;
  using E = Element<Rational>;

  // second-half basis vectors are (0, e_s^c); record their signs
  std::vector<int> half_sign(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    const auto c = E::basis(base, s).conj();
    half_sign[static_cast<std::size_t>(s)] = c[s] > 0 ? 1 : -1;
  }

  auto pair_mul = [&](const E& al, const E& be, const E& ga, const E& de) {
    return std::make_pair(al * ga - de * be.conj(), al.conj() * de + ga * be);
  };
  auto embed = [&](int i) {
    // basis vector i of the double, as a pair of base elements
    if (i < n) return std::make_pair(E::basis(base, i), E(base));
    const int s = i - n;
    E second = E::basis(base, s);
    second *= Rational(half_sign[static_cast<std::size_t>(s)]);
    return std::make_pair(E(base), second);
  };

  std::vector<std::vector<MulTerm>> rows(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const auto [ai, bi] = embed(i);
      const auto [aj, bj] = embed(j);
      const auto [first, second] = pair_mul(ai, bi, aj, bj);
      std::vector<MulTerm> terms;
      for (int s = 0; s < n; ++s) {
        if (first[s] != 0) terms.push_back({first[s], s});
        if (second[s] != 0)
          terms.push_back({second[s] * Rational(half_sign[static_cast<std::size_t>(s)]), n + s});
      }
      rows[static_cast<std::size_t>(i) * static_cast<std::size_t>(d) + static_cast<std::size_t>(j)] =
          std::move(terms);
    }

  Matrix<Rational> conj(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  for (int i = 0; i < n; ++i) {
    const auto c = E::basis(base, i).conj();
    for (int s = 0; s < n; ++s) conj(static_cast<std::size_t>(s), static_cast<std::size_t>(i)) = c[s];
  }
  for (int i = 0; i < n; ++i)
    conj(static_cast<std::size_t>(n + i), static_cast<std::size_t>(n + i)) = -1;

  std::vector<std::string> labels(static_cast<std::size_t>(d));
  for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = base.label(i);
  if (n == 1) {
    labels[1] = "i";
  } else if (n == 2) {
    labels[2] = "j";
    labels[3] = "k";
  } else {
    const char* unit = n == 4 ? "l" : "m";
    for (int i = 0; i < n; ++i)
      labels[static_cast<std::size_t>(n + i)] = base.label(i) == "1" ? unit : base.label(i) + unit;
  }

  return Algebra::from_structure(name, std::move(labels), std::move(rows), std::move(conj));
}

/// Level 1 = complex numbers, 2 = quaternions, 3 = octonions, 4 = sedenions.
inline Algebra make_cayley_dickson(int level) {
  if (level < 1 || level > 4) throw std::invalid_argument("make_cayley_dickson: level must be 1 to 4");
  Algebra a = make_real();
  const char* names[] = {"complex", "quaternion", "octonion", "sedenion"};
  for (int l = 1; l <= level; ++l) a = cayley_dickson_double(a, names[l - 1]);
  return a;
}

/// Dual quaternions H + eps H with eps central, eps^2 = 0 and
/// (a + eps b)^c = a^c + eps b^c.
inline Algebra make_dual_quaternions() {
  const Algebra quat = make_cayley_dickson(2);
  const int d = 8;
  std::vector<std::vector<MulTerm>> rows(d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const bool ei = i >= 4, ej = j >= 4;
      if (ei && ej) continue;  // eps^2 = 0
      const auto prod = quat.product_terms(i % 4, j % 4);
      std::vector<MulTerm> terms;
      const int shift = (ei || ej) ? 4 : 0;
      for (const auto& t : prod) terms.push_back({t.coeff, t.index + shift});
      rows[static_cast<std::size_t>(i) * 8 + static_cast<std::size_t>(j)] = std::move(terms);
    }
  Matrix<Rational> conj(8, 8);
  for (int i = 0; i < 8; ++i) conj(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = (i % 4 == 0) ? 1 : -1;
  std::vector<std::string> labels = {"1", "i", "j", "k", "eps", "epsi", "epsj", "epsk"};
  return Algebra::from_structure("dualquat", std::move(labels), std::move(rows), std::move(conj));
}

/// Named construction used by the command line: complex, quaternion,
/// octonion, dualquat, real, or clPQ (e.g. cl03).
inline Algebra builtin_algebra(const std::string& name) {
  if (name == "real") return make_real();
  if (name == "complex") return make_cayley_dickson(1);
  if (name == "quaternion") return make_cayley_dickson(2);
  if (name == "octonion") return make_cayley_dickson(3);
  if (name == "dualquat") return make_dual_quaternions();
  if (name.size() == 4 && name.rfind("cl", 0) == 0 && std::isdigit(static_cast<unsigned char>(name[2])) &&
      std::isdigit(static_cast<unsigned char>(name[3])))
    return make_clifford(name[2] - '0', name[3] - '0');
  throw std::invalid_argument("unknown builtin algebra: " + name);
}

}  // namespace tregular
