#pragma once

// The trace pairing [[a,b]] = <t(a b^c), 1>/2 and everything built on it:
// gram matrices with exact signatures via congruence diagonalization, the
// fitted / adapted / distinguished classification of bases, completion of
// imaginary units to a fitted basis along conjugation eigenspaces, and the
// subspace submultiplicativity constant omega.

#include "tregular/algebra.hpp"
#include "tregular/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace tregular {

inline Rational trace_pairing(const Element<Rational>& a, const Element<Rational>& b) {
  return trace_t(a * b.conj()).real() / 2;
}

struct BilinearForm {
  Matrix<Rational> gram;
  int positives = 0, negatives = 0, zeros = 0;
};

namespace detail {

// Congruence diagonalization of a symmetric rational matrix. The returned
// transform C satisfies: C G C^T is diagonal, with the stated pivot order
// (first nonzero diagonal entry, else first nonzero off-diagonal pair).
struct Congruence {
  Matrix<Rational> transform;
  std::vector<Rational> diagonal;
};

inline Congruence congruence_diagonalize(Matrix<Rational> g) {
  const std::size_t k = g.rows();
  Matrix<Rational> c = Matrix<Rational>::identity(k);
  auto add_row = [&](std::size_t dst, std::size_t src, const Rational& f) {
    // basis_dst += f * basis_src, applied congruently to g
    for (std::size_t j = 0; j < k; ++j) g(dst, j) += f * g(src, j);
    for (std::size_t j = 0; j < k; ++j) g(j, dst) += f * g(j, src);
    for (std::size_t j = 0; j < k; ++j) c(dst, j) += f * c(src, j);
  };
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < k; ++j) std::swap(g(a, j), g(b, j));
    for (std::size_t j = 0; j < k; ++j) std::swap(g(j, a), g(j, b));
    for (std::size_t j = 0; j < k; ++j) std::swap(c(a, j), c(b, j));
  };
  for (std::size_t i = 0; i < k; ++i) {
    if (g(i, i) == 0) {
      std::size_t dpivot = k;
      for (std::size_t j = i + 1; j < k && dpivot == k; ++j)
        if (g(j, j) != 0) dpivot = j;
      if (dpivot < k) {
        swap_rows(i, dpivot);
      } else {
        bool found = false;
        for (std::size_t r = i; r < k && !found; ++r)
          for (std::size_t s = r + 1; s < k && !found; ++s)
            if (g(r, s) != 0) {
              if (r != i) swap_rows(i, r);
              add_row(i, s, Rational(1));
              found = true;
            }
        if (!found) break;  // remaining block is identically zero
      }
    }
    const Rational piv = g(i, i);
    for (std::size_t j = i + 1; j < k; ++j) {
      if (g(j, i) == 0) continue;
      add_row(j, i, -g(j, i) / piv);
    }
  }
  Congruence out;
  out.transform = std::move(c);
  out.diagonal.resize(k);
  for (std::size_t i = 0; i < k; ++i) out.diagonal[i] = g(i, i);
  return out;
}

}  // namespace detail

/// Gram matrix of the trace pairing on the given vectors, with the exact
/// signature of the induced quadratic form.
inline BilinearForm bilinear_form(const std::vector<Element<Rational>>& vecs) {
  const std::size_t k = vecs.size();
  BilinearForm f;
  f.gram = Matrix<Rational>(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      const Rational v = trace_pairing(vecs[i], vecs[j]);
      f.gram(i, j) = v;
      f.gram(j, i) = v;
    }
  const auto diag = detail::congruence_diagonalize(f.gram).diagonal;
  for (const auto& d : diag) {
    if (d > 0)
      ++f.positives;
    else if (d < 0)
      ++f.negatives;
    else
      ++f.zeros;
  }
  return f;
}

struct BasisClass {
  bool fitted = false;
  bool adapted = false;
  bool distinguished = false;
};

/// Classifies a full vector basis of the algebra. Fitted: conjugation sends
/// each vector to plus or minus itself. Adapted: the trace-pairing gram is
/// diagonal with entries in {1,-1,0} and the leading entry is 1.
/// Distinguished: adapted with all diagonal entries equal to 1.
inline BasisClass classify_basis(const std::vector<Element<Rational>>& basis) {
  if (basis.empty()) throw std::invalid_argument("classify_basis: empty basis");
  const Algebra& a = basis[0].algebra();
  const std::size_t d = static_cast<std::size_t>(a.dim());
  if (basis.size() != d) throw std::invalid_argument("classify_basis: wrong number of vectors");
  Matrix<Rational> coords(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) coords(i, j) = basis[i][static_cast<int>(j)];
  if (rank(coords) != d) throw std::invalid_argument("classify_basis: vectors are dependent");

  BasisClass out;
  out.fitted = true;
  for (const auto& w : basis) {
    const auto c = w.conj();
    if (c != w && c != -w) {
      out.fitted = false;
      break;
    }
  }

  const auto form = bilinear_form(basis);
  bool diag_ok = true;
  for (std::size_t i = 0; i < d && diag_ok; ++i)
    for (std::size_t j = 0; j < d && diag_ok; ++j) {
      if (i == j) {
        const Rational& v = form.gram(i, i);
        if (v != 0 && v != 1 && v != -1) diag_ok = false;
      } else if (form.gram(i, j) != 0) {
        diag_ok = false;
      }
    }
  out.adapted = diag_ok && form.gram(0, 0) == 1;
  out.distinguished = out.adapted;
  if (out.adapted)
    for (std::size_t i = 0; i < d; ++i)
      if (form.gram(i, i) != 1) out.distinguished = false;
  return out;
}

/// Completes linearly independent imaginary units to a fitted basis of the
/// whole algebra: the unit and extra vectors from the +1 eigenspace of
/// conjugation, the given units and extra vectors from the -1 eigenspace.
inline std::vector<Element<Rational>> find_fitted_completion(const Algebra& a,
                                                             const std::vector<Element<Rational>>& units) {
  const std::size_t d = static_cast<std::size_t>(a.dim());
  for (const auto& u : units) {
    if (&u.algebra() != &a) throw std::invalid_argument("fitted completion: mixed algebras");
    if (!is_imaginary_unit(u)) throw std::invalid_argument("fitted completion: input is not an imaginary unit");
  }

  Matrix<Rational> cmat = a.conj_matrix();
  Matrix<Rational> minus_id = cmat, plus_id = cmat;
  for (std::size_t i = 0; i < d; ++i) {
    minus_id(i, i) -= 1;  // kernel = +1 eigenspace
    plus_id(i, i) += 1;   // kernel = -1 eigenspace
  }
  const auto plus_space = nullspace(minus_id);
  const auto minus_space = nullspace(plus_id);

  std::vector<std::vector<Rational>> have;
  std::vector<Rational> unit_vec(d, Rational(0));
  unit_vec[0] = 1;
  have.push_back(unit_vec);
  for (const auto& u : units) have.push_back(u.coeffs());

  // sanity: the span of {1} U units must already be (d - extension) dimensional
  {
    Matrix<Rational> m(have.size(), d);
    for (std::size_t i = 0; i < have.size(); ++i)
      for (std::size_t j = 0; j < d; ++j) m(i, j) = have[i][j];
    if (rank(m) != have.size())
      throw std::invalid_argument("fitted completion: the unit and the given units are dependent");
  }

  std::vector<std::vector<Rational>> pool = plus_space;
  pool.insert(pool.end(), minus_space.begin(), minus_space.end());
  const auto chosen = extend_to_full_rank(have, pool, d);

  std::vector<Element<Rational>> basis;
  basis.push_back(Element<Rational>::unit(a));
  for (const auto& u : units) basis.push_back(u);
  for (auto p : chosen) basis.push_back(Element<Rational>(a, pool[p]));
  if (basis.size() != d) throw std::runtime_error("fitted completion: eigenspaces do not span");
  return basis;
}

struct AdaptedDiagonalization {
  std::vector<Element<Rational>> basis;  // rational; first vector is the unit
  std::vector<Rational> diagonal;        // exact pairing values, not normalized
  int positives = 0, negatives = 0, zeros = 0;
};

/// Completes the unit to a basis diagonalizing the trace pairing, by exact
/// congruence reduction on the pairing-orthogonal complement of the unit.
/// Scaling the diagonal to {1,-1,0} needs square roots, so unit-normalized
/// vectors exist only after a float conversion.
inline AdaptedDiagonalization adapted_diagonalization(const Algebra& a) {
  const std::size_t d = static_cast<std::size_t>(a.dim());
  // complement of the unit under the pairing: solutions of [[x, 1]] = 0
  Matrix<Rational> row(1, d);
  for (std::size_t j = 0; j < d; ++j)
    row(0, j) = trace_pairing(Element<Rational>::basis(a, static_cast<int>(j)), Element<Rational>::unit(a));
  const auto complement = nullspace(row);
  if (complement.size() != d - 1)
    throw std::runtime_error("adapted diagonalization: unexpected complement dimension");

  std::vector<Element<Rational>> comp;
  comp.reserve(d - 1);
  for (const auto& v : complement) comp.emplace_back(a, v);
  Matrix<Rational> gram(d - 1, d - 1);
  for (std::size_t i = 0; i + 1 < d; ++i)
    for (std::size_t j = i; j + 1 < d; ++j) {
      const Rational v = trace_pairing(comp[i], comp[j]);
      gram(i, j) = v;
      gram(j, i) = v;
    }
  const auto cong = detail::congruence_diagonalize(gram);

  AdaptedDiagonalization out;
  out.basis.push_back(Element<Rational>::unit(a));
  out.diagonal.push_back(Rational(1));
  for (std::size_t i = 0; i + 1 < d; ++i) {
    Element<Rational> w(a);
    for (std::size_t j = 0; j + 1 < d; ++j) {
      if (cong.transform(i, j) == 0) continue;
      w += comp[j] * cong.transform(i, j);
    }
    out.basis.push_back(w);
    out.diagonal.push_back(cong.diagonal[i]);
  }
  for (const auto& v : out.diagonal) {
    if (v > 0)
      ++out.positives;
    else if (v < 0)
      ++out.negatives;
    else
      ++out.zeros;
  }
  return out;
}

struct OmegaResult {
  bool exact_one = false;  // certified structurally, not numerically
  double value = 1.0;      // best found
  double lower_bound = 1.0;
  std::vector<double> maximizer;  // coordinates of the best u in the subspace basis
};

namespace detail {

inline double spectral_norm_sq(const std::vector<double>& m, std::size_t d, std::vector<double>& w) {
  // power iteration on M^T M; deterministic start
  std::vector<double> v(d, 1.0 / std::sqrt(static_cast<double>(d))), mv(d), mtmv(d);
  double lambda = 0;
  for (int it = 0; it < 220; ++it) {
    for (std::size_t i = 0; i < d; ++i) {
      double acc = 0;
      for (std::size_t j = 0; j < d; ++j) acc += m[i * d + j] * v[j];
      mv[i] = acc;
    }
    for (std::size_t j = 0; j < d; ++j) {
      double acc = 0;
      for (std::size_t i = 0; i < d; ++i) acc += m[i * d + j] * mv[i];
      mtmv[j] = acc;
    }
    double nrm = 0;
    for (double x : mtmv) nrm += x * x;
    nrm = std::sqrt(nrm);
    if (nrm == 0) {
      w = v;
      return 0;
    }
    for (std::size_t j = 0; j < d; ++j) v[j] = mtmv[j] / nrm;
    lambda = nrm;
  }
  w = v;
  return lambda;  // top eigenvalue of M^T M, i.e. sigma_max^2
}

}  // namespace detail

/// omega = max ||u v|| over unit u in the subspace and unit v in the algebra,
/// with norms taken in the coordinates of `ambient_basis`. Certifies the
/// exact value 1 when the ambient basis is fitted and distinguished and
/// either the algebra is associative or its trace lands in the nucleus;
/// otherwise multi-start projected gradient ascent reports the best value
/// found, which is always a valid lower bound.
inline OmegaResult omega(const std::vector<Element<Rational>>& subspace_basis,
                         const std::vector<Element<Rational>>& ambient_basis, std::uint64_t seed = 2024,
                         int starts = 32, int steps = 200) {
  if (subspace_basis.empty()) throw std::invalid_argument("omega: empty subspace basis");
  const Algebra& a = subspace_basis[0].algebra();
  const std::size_t d = static_cast<std::size_t>(a.dim());
  const std::size_t k = subspace_basis.size();

  OmegaResult out;
  {
    const auto cls = classify_basis(ambient_basis);
    bool unit_inside = false;
    Matrix<Rational> m(k, d);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < d; ++j) m(i, j) = subspace_basis[i][static_cast<int>(j)];
    Matrix<Rational> mt = m.transposed();
    std::vector<Rational> e0(d, Rational(0));
    e0[0] = 1;
    unit_inside = solve(mt, e0).has_value();
    if (cls.fitted && cls.distinguished && unit_inside && (a.associative() || trace_in_nucleus(a)))
      out.exact_one = true;
  }

  // change of coordinates into the ambient basis
  Matrix<Rational> amb(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) amb(j, i) = ambient_basis[i][static_cast<int>(j)];
  const auto amb_inv_exact = inverse(amb);
  if (!amb_inv_exact) throw std::invalid_argument("omega: ambient vectors are not a basis");

  std::vector<double> amb_d(d * d), amb_inv_d(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      amb_d[i * d + j] = to_double(amb(i, j));
      amb_inv_d[i * d + j] = to_double((*amb_inv_exact)(i, j));
    }

  // left-multiplication matrices of the subspace basis, in ambient coordinates
  std::vector<std::vector<double>> lmats(k, std::vector<double>(d * d));
  for (std::size_t s = 0; s < k; ++s) {
    const auto l = mult_matrix(subspace_basis[s], MulSide::left);
    std::vector<double> ld(d * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) ld[i * d + j] = to_double(l(i, j));
    // amb_inv * L * amb
    std::vector<double> tmp(d * d, 0.0), fin(d * d, 0.0);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t t = 0; t < d; ++t) {
        const double f = ld[i * d + t];
        if (f == 0) continue;
        for (std::size_t j = 0; j < d; ++j) tmp[i * d + j] += f * amb_d[t * d + j];
      }
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t t = 0; t < d; ++t) {
        const double f = amb_inv_d[i * d + t];
        if (f == 0) continue;
        for (std::size_t j = 0; j < d; ++j) fin[i * d + j] += f * tmp[t * d + j];
      }
    lmats[s] = std::move(fin);
  }

  // the u-sphere lives in the coordinates of the subspace basis measured in
  // ambient coordinates; build the (exact) gram to normalize u correctly
  std::vector<std::vector<double>> sub_amb(k, std::vector<double>(d, 0.0));
  for (std::size_t s = 0; s < k; ++s) {
    std::vector<double> std_coords(d);
    for (std::size_t j = 0; j < d; ++j) std_coords[j] = to_double(subspace_basis[s][static_cast<int>(j)]);
    for (std::size_t i = 0; i < d; ++i) {
      double acc = 0;
      for (std::size_t j = 0; j < d; ++j) acc += amb_inv_d[i * d + j] * std_coords[j];
      sub_amb[s][i] = acc;
    }
  }
  auto u_norm = [&](const std::vector<double>& uc) {
    std::vector<double> x(d, 0.0);
    for (std::size_t s = 0; s < k; ++s)
      for (std::size_t i = 0; i < d; ++i) x[i] += uc[s] * sub_amb[s][i];
    double nrm = 0;
    for (double t : x) nrm += t * t;
    return std::sqrt(nrm);
  };

  auto assemble = [&](const std::vector<double>& uc, std::vector<double>& l) {
    std::fill(l.begin(), l.end(), 0.0);
    for (std::size_t s = 0; s < k; ++s) {
      if (uc[s] == 0) continue;
      for (std::size_t e = 0; e < d * d; ++e) l[e] += uc[s] * lmats[s][e];
    }
  };

  CounterRng rng(seed);
  std::uint64_t counter = 0;
  double best = 0;
  std::vector<double> best_u(k, 0.0);
  std::vector<double> l(d * d), w(d), lw(d), grad(k);

  for (int start = 0; start < starts; ++start) {
    std::vector<double> u(k);
    for (std::size_t s = 0; s < k; ++s) u[s] = rng.gaussian(counter++);
    double nrm = u_norm(u);
    if (nrm == 0) continue;
    for (auto& x : u) x /= nrm;

    assemble(u, l);
    double f = detail::spectral_norm_sq(l, d, w);
    double step = 0.5;
    for (int it = 0; it < steps; ++it) {
      // grad of sigma_max^2 at u: 2 (L w)^T L_s w per coordinate
      for (std::size_t i = 0; i < d; ++i) {
        double acc = 0;
        for (std::size_t j = 0; j < d; ++j) acc += l[i * d + j] * w[j];
        lw[i] = acc;
      }
      for (std::size_t s = 0; s < k; ++s) {
        double acc = 0;
        for (std::size_t i = 0; i < d; ++i) {
          double row = 0;
          for (std::size_t j = 0; j < d; ++j) row += lmats[s][i * d + j] * w[j];
          acc += lw[i] * row;
        }
        grad[s] = 2 * acc;
      }
      std::vector<double> cand(k);
      bool improved = false;
      while (step > 1e-12) {
        for (std::size_t s = 0; s < k; ++s) cand[s] = u[s] + step * grad[s];
        const double cn = u_norm(cand);
        if (cn > 0) {
          for (auto& x : cand) x /= cn;
          assemble(cand, l);
          std::vector<double> w2(d);
          const double f2 = detail::spectral_norm_sq(l, d, w2);
          if (f2 > f + 1e-15) {
            u = cand;
            f = f2;
            w = w2;
            improved = true;
            break;
          }
        }
        step /= 2;
      }
      if (!improved) break;
    }
    if (f > best) {
      best = f;
      best_u = u;
    }
  }

  const double found = std::sqrt(std::max(best, 0.0));
  out.value = out.exact_one ? 1.0 : found;
  out.lower_bound = found;
  out.maximizer = best_u;
  return out;
}

}  // namespace tregular
