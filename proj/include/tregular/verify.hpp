#pragma once

// Verification suite shared by the acceptance binary and the command line.
// Each criterion bundles the exact (symbolic) or statistical checks for one
// slice of the toolkit and reports stable check names, so two runs with the
// same configuration serialize to identical JSON.

#include "tregular/analysis.hpp"
#include "tregular/forms.hpp"
#include "tregular/io.hpp"
#include "tregular/stem.hpp"

#include <chrono>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace tregular {

struct VerifyConfig {
  std::uint64_t seed = 42;
  std::size_t samples = 200000;
  double tolerance_sigma = 4.0;
  std::size_t grid = 10000;
  std::size_t determinism_samples = 20000;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  bool has_numeric = false;
  double estimate = 0;
  double target = 0;
  double stderr_of_mean = 0;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<CheckResult> checks;
  double seconds = 0;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

namespace detail {

inline void check(std::vector<CheckResult>& out, std::string name, bool pass, std::string detail = "") {
  out.push_back(CheckResult{std::move(name), pass, std::move(detail), false, 0, 0, 0});
}

/// Statistical check: passes when |deviation| <= threshold.
inline void check_mc(std::vector<CheckResult>& out, std::string name, double deviation, double threshold,
                     double stderr_of_mean) {
  CheckResult r;
  r.name = std::move(name);
  r.pass = deviation <= threshold;
  r.has_numeric = true;
  r.estimate = deviation;
  r.target = threshold;
  r.stderr_of_mean = stderr_of_mean;
  r.detail = "deviation " + format_double(deviation) + " vs allowance " + format_double(threshold);
  out.push_back(std::move(r));
}

inline Element<Rational> random_element(const Algebra& a, RngStream& g, int max_num = 3, int max_den = 2) {
  Element<Rational> x(a);
  for (int i = 0; i < a.dim(); ++i) x += Element<Rational>::basis(a, i) * g.rational(max_num, max_den);
  return x;
}

inline PolyMap<Rational> random_polymap(const Algebra& a, int nvars, int maxdeg, RngStream& g) {
  PolyMap<Rational> p(a, nvars);
  for (const auto& k : multiindices_up_to(nvars, maxdeg)) p.add_term(k, random_element(a, g));
  return p;
}

inline std::string key_of(const MultiIndex& k) {
  std::string s;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(k[i]);
  }
  return s;
}

template <typename F>
CriterionResult timed(int id, std::string title, F&& body) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  const auto t0 = std::chrono::steady_clock::now();
  body(r.checks);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// 1: algebra axioms on the builtin family
// ---------------------------------------------------------------------------

inline CriterionResult criterion_algebra_axioms(const VerifyConfig&) {
  return detail::timed(1, "algebra-axioms", [&](std::vector<CheckResult>& out) {
    const std::vector<std::string> names = {"complex", "quaternion", "octonion", "cl01",
                                            "cl02",    "cl03",       "cl04",     "dualquat"};
    for (const auto& name : names) {
      const Algebra a = builtin_algebra(name);
      bool star = true;
      std::string why;
      try {
        validate_star_structure(a);
      } catch (const std::exception& e) {
        star = false;
        why = e.what();
      }
      detail::check(out, name + ": conjugation is an involutive anti-automorphism", star, why);
      detail::check(out, name + ": alternative on all basis pairs", a.alternative());
      const bool expect_assoc = name != "octonion";
      detail::check(out, name + ": associativity flag", a.associative() == expect_assoc,
                    a.associative() ? "associative" : "not associative");
    }
  });
}

// ---------------------------------------------------------------------------
// 2: reference products and the dual-quaternion signature
// ---------------------------------------------------------------------------

inline CriterionResult criterion_reference_products(const VerifyConfig&) {
  return detail::timed(2, "reference-products", [&](std::vector<CheckResult>& out) {
    {
      const Algebra cl3 = builtin_algebra("cl03");
      const auto one = Element<Rational>::unit(cl3);
      const auto e123 = Element<Rational>::basis(cl3, label_index(cl3, "e123"));
      const auto a = (one + e123) / Rational(2);
      const auto b = (one - e123) / Rational(2);
      detail::check(out, "cl03: idempotent halves annihilate, ab = 0", (a * b).is_zero());
      detail::check(out, "cl03: a^2 = a", a * a == a);
      detail::check(out, "cl03: left-multiplication by a has rank 4",
                    rank(mult_matrix(a, MulSide::left)) == 4);
      detail::check(out, "cl03: a and b are zero divisors", is_zero_divisor(a) && is_zero_divisor(b));
    }
    {
      const Algebra cl4 = builtin_algebra("cl04");
      const auto one = Element<Rational>::unit(cl4);
      const auto e123 = Element<Rational>::basis(cl4, label_index(cl4, "e123"));
      const auto e1234 = Element<Rational>::basis(cl4, label_index(cl4, "e1234"));
      const auto e4 = Element<Rational>::basis(cl4, label_index(cl4, "e4"));
      const auto a = (one + e123) / Rational(2);
      const auto b = (one + e1234) / Rational(2);
      detail::check(out, "cl04: 4ab = 1 + e4 + e123 + e1234",
                    (a * b) * Rational(4) == one + e4 + e123 + e1234);
      detail::check(out, "cl04: 4aba = 1 + e123", ((a * b) * a) * Rational(4) == one + e123);
      detail::check(out, "cl04: n(a) = a and n(b) = b", norm_n(a) == a && norm_n(b) == b);
    }
    {
      const Algebra dh = builtin_algebra("dualquat");
      std::vector<Element<Rational>> basis;
      for (int i = 0; i < dh.dim(); ++i) basis.push_back(Element<Rational>::basis(dh, i));
      const BilinearForm f = bilinear_form(basis);
      detail::check(out, "dualquat: trace-pairing signature (4,0,4)",
                    f.positives == 4 && f.negatives == 0 && f.zeros == 4,
                    "(" + std::to_string(f.positives) + "," + std::to_string(f.negatives) + "," +
                        std::to_string(f.zeros) + ")");
      const BasisClass cls = classify_basis(basis);
      detail::check(out, "dualquat: standard basis fitted and adapted, not distinguished",
                    cls.fitted && cls.adapted && !cls.distinguished);
      Element<double> a(dh);
      a += Element<double>(dh, {std::sqrt(2.0 / 3.0), 0, 0, 0, 0, 0, 0, 0});
      std::vector<double> c(8, 0.0);
      c[static_cast<std::size_t>(label_index(dh, "epsi"))] = std::sqrt(1.0 / 3.0);
      a += Element<double>(dh, c);
      const double lhs = norm(a * a);
      const double rhs = (2.0 / std::sqrt(3.0)) * a.norm_sq();
      detail::check(out, "dualquat: ||a^2|| = (2/sqrt 3)||a||^2 for a = sqrt(2/3) + eps i sqrt(1/3)",
                    std::abs(lhs - rhs) <= 1e-12,
                    format_double(lhs) + " vs " + format_double(rhs));
    }
  });
}

// ---------------------------------------------------------------------------
// 3: monogenic polynomial system
// ---------------------------------------------------------------------------

inline CriterionResult criterion_monogenic_basis(const VerifyConfig& cfg) {
  return detail::timed(3, "monogenic-basis", [&](std::vector<CheckResult>& out) {
    const Algebra cl3 = builtin_algebra("cl03");
    const Algebra quat = builtin_algebra("quaternion");
    const Algebra cl4 = builtin_algebra("cl04");
    struct Case {
      std::string name;
      HypercomplexBasis basis;
    };
    const std::vector<Case> cases = {
        {"cl03 paravectors", HypercomplexBasis::standard(cl3, 3)},
        {"quaternion full", HypercomplexBasis::standard(quat, 3)},
        {"cl04 W2",
         HypercomplexBasis(cl4, {Element<Rational>::basis(cl4, label_index(cl4, "e1")),
                                 Element<Rational>::basis(cl4, label_index(cl4, "e2")),
                                 Element<Rational>::basis(cl4, label_index(cl4, "e12"))})},
    };
    for (const auto& [name, b] : cases) {
      FueterFamily fam(b);
      FueterComponentOracle oracle(b.m());
      bool cr_zero = true, partials = true, oracle_ok = true, harmonic = true;
      for (const auto& k : multiindices_up_to(b.m(), 4)) {
        const PolyMap<Rational> p = fam.poly(k);
        cr_zero = cr_zero && cr_left(b, p).is_zero();
        for (int s = 1; s <= b.m(); ++s) {
          const int ks = k[static_cast<std::size_t>(s - 1)];
          if (ks == 0) {
            partials = partials && p.partial(s).is_zero();
            continue;
          }
          partials = partials && p.partial(s) == fam.poly(shifted(k, static_cast<std::size_t>(s - 1), -1)) * Rational(ks);
        }
        oracle_ok = oracle_ok && assemble_from_components(b, oracle.components(k)) == p;
        harmonic = harmonic && laplacian(p).is_zero();
      }
      detail::check(out, name + ": dbar P_k = 0 for all |k| <= 4", cr_zero);
      detail::check(out, name + ": d_s P_k = k_s P_(k-e_s) for all |k| <= 4", partials);
      detail::check(out, name + ": component recursion reproduces P_k for all |k| <= 4", oracle_ok);
      detail::check(out, name + ": laplacian P_k = 0 for all |k| <= 4", harmonic);

      RngStream g(CounterRng(cfg.seed), 1000);
      std::map<MultiIndex, Element<Rational>> coeffs;
      for (const auto& k : multiindices_up_to(b.m(), 3)) coeffs[k] = detail::random_element(b.algebra(), g);
      const PolyMap<Rational> p = assemble_expansion(fam, coeffs);
      detail::check(out, name + ": expansion round trip on a random combination",
                    monogenic_expand(b, p) == coeffs && assemble_expansion(fam, monogenic_expand(b, p)) == p);
    }
  });
}

// ---------------------------------------------------------------------------
// 4: slice polynomial system T_k
// ---------------------------------------------------------------------------

namespace detail {

struct FanCase {
  std::string name;
  Algebra algebra;
  TFan fan;
};

inline std::vector<FanCase> associative_fans() {
  std::vector<FanCase> cases;
  cases.push_back({"quaternion (1,3)", builtin_algebra("quaternion"), TFan({1, 3})});
  cases.push_back({"cl03 (0,3)", builtin_algebra("cl03"), TFan({0, 3})});
  cases.push_back({"cl04 (0,2,4)", builtin_algebra("cl04"), TFan({0, 2, 4})});
  return cases;
}

}  // namespace detail

inline CriterionResult criterion_slice_polynomials(const VerifyConfig& cfg) {
  return detail::timed(4, "slice-polynomials", [&](std::vector<CheckResult>& out) {
    for (const auto& fc : detail::associative_fans()) {
      const HypercomplexBasis b = HypercomplexBasis::standard(fc.algebra, fc.fan.m());
      TFamily tf(b, fc.fan);
      const auto ks = multiindices_up_to(tf.slots(), 3);

      RngStream g(CounterRng(cfg.seed), 2000);
      bool slice_ok = true;
      for (int rep = 0; rep < 3; ++rep) {
        const TorusPoint jp = torus_point(b, fc.fan, g);
        for (const auto& k : ks) slice_ok = slice_ok && tf.check_slice_identity(k, jp);
      }
      detail::check(out, fc.name + ": slice identity at 3 rational torus points, |k| <= 3", slice_ok);

      const TorusPoint axis = axis_torus_point(b, fc.fan);
      bool dual = true;
      for (const auto& k : ks)
        for (const auto& kp : ks) {
          MultiIndex h(static_cast<std::size_t>(tf.slots()) + 1, 0);
          for (std::size_t i = 0; i < k.size(); ++i) h[i + 1] = k[i];
          const PolyMap<Rational> d = tf.delta(tf.poly(kp), h, axis);
          const Element<Rational> v = d.evaluate(std::vector<Rational>(static_cast<std::size_t>(d.nvars()), Rational(0)));
          const Element<Rational> want = k == kp ? Element<Rational>::scalar(b.algebra(), multi_factorial(k))
                                                 : Element<Rational>(b.algebra());
          dual = dual && v == want;
        }
      detail::check(out, fc.name + ": adapted derivatives are dual to T_k at 0", dual);

      const TorusPoint jq = torus_point(b, fc.fan, g);
      const TorusPoint jr = torus_point(b, fc.fan, g);
      PolyMap<Rational> f(b.algebra(), b.nvars());
      {
        RngStream gc(CounterRng(cfg.seed), 3000);
        for (const auto& k : ks) f += tf.poly(k).right_mul(detail::random_element(b.algebra(), gc));
      }
      bool agree = true;
      for (const auto& h : multiindices_up_to(tf.slots() + 1, 3))
        agree = agree && tf.delta_overlap_agree(f, h, jq, jr);
      detail::check(out, fc.name + ": two-slice derivative agreement for all |h| <= 3", agree);
    }

    {
      const Algebra cl4 = builtin_algebra("cl04");
      const TFan fan({0, 2, 4});
      const HypercomplexBasis b = HypercomplexBasis::standard(cl4, 4);
      TFamily tf(b, fan);
      RngStream g(CounterRng(cfg.seed), 4000);
      const TorusPoint axis = axis_torus_point(b, fan);
      const TorusPoint jp = torus_point(b, fan, g);
      bool mirror_blind = true;
      MultiIndex e1{1, 0}, e2{0, 1};
      for (const auto& k : {e1, e2}) {
        PolyMap<Rational> t = tf.poly(k);
        PolyMap<Rational> restricted = t;
        for (int v = 1; v <= 4; ++v) restricted = restricted.set_variable_zero(v);
        mirror_blind = mirror_blind && restricted == PolyMap<Rational>::variable(cl4, b.nvars(), 0);
      }
      detail::check(out, "cl04 (0,2,4): both degree-1 block polynomials restrict to x_0 on the mirror",
                    mirror_blind);
      bool dual = true;
      for (const auto& ki : {e1, e2})
        for (const auto& kj : {e1, e2}) {
          MultiIndex h{0, ki[0], ki[1]};
          for (const TorusPoint& tp : {axis, jp}) {
            const PolyMap<Rational> d = tf.delta(tf.poly(kj), h, tp);
            const Element<Rational> v =
                d.evaluate(std::vector<Rational>(static_cast<std::size_t>(d.nvars()), Rational(0)));
            const Element<Rational> want =
                ki == kj ? Element<Rational>::scalar(cl4, multi_factorial(ki)) : Element<Rational>(cl4);
            dual = dual && v == want;
          }
        }
      detail::check(out, "cl04 (0,2,4): adapted derivatives still separate them", dual);
    }
  });
}

// ---------------------------------------------------------------------------
// 5: classification of step lists over the quaternions
// ---------------------------------------------------------------------------

inline CriterionResult criterion_fan_classification(const VerifyConfig& cfg) {
  return detail::timed(5, "fan-classification", [&](std::vector<CheckResult>& out) {
    const Algebra quat = builtin_algebra("quaternion");
    const HypercomplexBasis b = HypercomplexBasis::standard(quat, 3);
    const std::vector<TFan> fans = all_fans(3);

    std::vector<std::vector<std::vector<int>>> classes;
    std::vector<bool> used(fans.size(), false);
    for (std::size_t i = 0; i < fans.size(); ++i) {
      if (used[i]) continue;
      std::vector<std::vector<int>> cls{fans[i].steps()};
      used[i] = true;
      for (std::size_t j = i + 1; j < fans.size(); ++j)
        if (!used[j] && fans_equivalent(fans[i], fans[j])) {
          cls.push_back(fans[j].steps());
          used[j] = true;
        }
      std::sort(cls.begin(), cls.end());
      classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end());
    std::vector<std::vector<std::vector<int>>> expected = {
        {{0, 1, 2, 3}, {1, 2, 3}, {2, 3}, {3}},
        {{0, 1, 3}, {1, 3}},
        {{0, 2, 3}},
        {{0, 3}},
    };
    for (auto& cls : expected) std::sort(cls.begin(), cls.end());
    std::sort(expected.begin(), expected.end());
    detail::check(out, "n=3 step lists fall into the four expected classes", classes == expected,
                  std::to_string(classes.size()) + " classes");

    bool transitive_consistent = true;
    for (std::size_t i = 0; i < fans.size(); ++i)
      for (std::size_t j = 0; j < fans.size(); ++j)
        if (fans_equivalent(fans[i], fans[j]) != fans_equivalent(fans[j], fans[i])) transitive_consistent = false;
    detail::check(out, "equivalence is symmetric on all pairs", transitive_consistent);

    RngStream g(CounterRng(cfg.seed), 5000);
    bool fueter_ok = true, cullen_ok = true;
    for (const TFan& target : fans) {
      for (int s = 1; s <= 3; ++s) {
        const bool predicted = mirror_variable_regular_under(s, target);
        const bool direct = is_fan_regular(b, target, mirror_variable(b, s), 2, g);
        fueter_ok = fueter_ok && predicted == direct;
      }
      for (const TFan& source : fans)
        for (int h = 1; h <= source.tau(); ++h) {
          const bool predicted = block_variable_regular_under(source, h, target);
          const bool direct = is_fan_regular(b, target, cullen_variable(b, source, h), 2, g);
          cullen_ok = cullen_ok && predicted == direct;
        }
    }
    detail::check(out, "mirror-variable regularity predicate matches the direct operator check", fueter_ok);
    detail::check(out, "block-variable regularity predicate matches the direct operator check", cullen_ok);
  });
}

// ---------------------------------------------------------------------------
// 6: stems, brackets and the representation formula
// ---------------------------------------------------------------------------

inline CriterionResult criterion_stems_representation(const VerifyConfig& cfg) {
  return detail::timed(6, "stems-representation", [&](std::vector<CheckResult>& out) {
    for (const auto& fc : detail::associative_fans()) {
      const HypercomplexBasis b = HypercomplexBasis::standard(fc.algebra, fc.fan.m());
      TFamily tf(b, fc.fan);
      const auto ks = multiindices_up_to(tf.slots(), 3);
      RngStream g(CounterRng(cfg.seed), 6000);
      const TorusPoint ip = torus_point(b, fc.fan, g);

      const auto mirror = mirror_subalgebra(b, fc.fan);
      bool parity = true, mirror_valued = true, induces = true;
      for (const auto& k : ks) {
        const PolyMap<Rational> f = tf.poly(k);
        const StemTable stem = recover_stem(b, fc.fan, f, ip);
        for (unsigned K = 0; K < stem.comps.size(); ++K) {
          for (int h = 1; h <= fc.fan.tau(); ++h) {
            const PolyMap<Rational> reflected =
                stem.comps[K].scale_variable(fc.fan.mirror_units() + h, Rational(-1));
            const bool odd = (K >> (h - 1)) & 1u;
            parity = parity && reflected == (odd ? -stem.comps[K] : stem.comps[K]);
          }
          for (const auto& [mk, c] : stem.comps[K].terms()) {
            (void)mk;
            mirror_valued = mirror_valued && in_span(mirror, c);
          }
        }
        induces = induces && induce_on_slice(stem, ip) == slice_restrict(b, fc.fan, f, ip);
      }
      detail::check(out, fc.name + ": recovered stems have the block parity, |k| <= 3", parity);
      detail::check(out, fc.name + ": recovered stems take mirror-subalgebra values", mirror_valued);
      detail::check(out, fc.name + ": stems induce back the original slice restriction", induces);

      bool rep = true;
      for (int rep_i = 0; rep_i < 20; ++rep_i) {
        const TorusPoint jp = torus_point(b, fc.fan, g);
        const TorusPoint iq = torus_point(b, fc.fan, g);
        std::vector<Rational> alpha = g.rational_vector(static_cast<std::size_t>(fc.fan.mirror_units()) + 1);
        std::vector<Rational> beta = g.rational_vector(static_cast<std::size_t>(fc.fan.tau()));
        const MultiIndex& k = ks[static_cast<std::size_t>(rep_i) % ks.size()];
        const PolyMap<Rational> f = tf.poly(k);
        const Element<Rational> direct = f.evaluate(ambient_coords(b, fc.fan, alpha, beta, jp));
        rep = rep && representation_value(b, fc.fan, f, alpha, beta, iq, jp) == direct;
      }
      detail::check(out, fc.name + ": representation formula exact at 20 rational tuples", rep);

      bool gamma_ok = true, gamma_rep = true;
      for (int rep_i = 0; rep_i < 3; ++rep_i) {
        const TorusPoint jp = torus_point(b, fc.fan, g);
        const TorusPoint iq = torus_point(b, fc.fan, g);
        const auto gammas = gamma_coefficients(b, fc.fan, jp, iq);
        for (unsigned H = 0; H < gammas.size(); ++H) {
          for (int s = 1; s <= fc.fan.mirror_units(); ++s)
            gamma_ok = gamma_ok && b.unit(s) * gammas[H] == gammas[H] * b.unit(s);
          for (int u = 1; u <= fc.fan.tau(); ++u) {
            const Element<Rational> lhs = jp.j[static_cast<std::size_t>(u - 1)] * gammas[H];
            Element<Rational> rhs = gammas[H] * iq.j[static_cast<std::size_t>(u - 1)];
            if ((H >> (u - 1)) & 1u) rhs = -rhs;
            gamma_ok = gamma_ok && lhs == rhs;
          }
        }
        const std::vector<Rational> alpha = g.rational_vector(static_cast<std::size_t>(fc.fan.mirror_units()) + 1);
        const std::vector<Rational> beta = g.rational_vector(static_cast<std::size_t>(fc.fan.tau()));
        const PolyMap<Rational> f = tf.poly(ks[1 + static_cast<std::size_t>(rep_i) % (ks.size() - 1)]);
        Element<Rational> acc(b.algebra());
        for (unsigned H = 0; H < gammas.size(); ++H) {
          std::vector<Rational> rbeta = beta;
          for (int h = 1; h <= fc.fan.tau(); ++h)
            if ((H >> (h - 1)) & 1u) rbeta[static_cast<std::size_t>(h - 1)] = -rbeta[static_cast<std::size_t>(h - 1)];
          acc += gammas[H] * f.evaluate(ambient_coords(b, fc.fan, alpha, rbeta, iq));
        }
        gamma_rep = gamma_rep && acc == f.evaluate(ambient_coords(b, fc.fan, alpha, beta, jp));
      }
      detail::check(out, fc.name + ": gamma coefficients commute with the mirror and swap the torus", gamma_ok);
      detail::check(out, fc.name + ": gamma-weighted reflections rebuild the function", gamma_rep);
    }

    {
      const Algebra oct = builtin_algebra("octonion");
      const HypercomplexBasis b = HypercomplexBasis::standard(oct, 7);
      const TFan fan({0, 7});
      RngStream g(CounterRng(cfg.seed), 7000);

      std::vector<PolyMap<Rational>> powers;
      powers.push_back(PolyMap<Rational>::constant(oct, b.nvars(), Element<Rational>::unit(oct)));
      PolyMap<Rational> lin = PolyMap<Rational>::variable(oct, b.nvars(), 0) + block_variable(b, fan, 1);
      for (int k = 1; k <= 3; ++k) powers.push_back(powers.back() * lin);

      bool rep = true;
      for (int rep_i = 0; rep_i < 20; ++rep_i) {
        const TorusPoint jp = torus_point(b, fan, g);
        const TorusPoint iq = torus_point(b, fan, g);
        const std::vector<Rational> alpha = g.rational_vector(1);
        const std::vector<Rational> beta = g.rational_vector(1);
        const PolyMap<Rational>& f = powers[static_cast<std::size_t>(rep_i) % powers.size()];
        const Element<Rational> direct = f.evaluate(ambient_coords(b, fan, alpha, beta, jp));
        rep = rep && representation_value(b, fan, f, alpha, beta, iq, jp) == direct;
      }
      detail::check(out, "octonion (0,7): representation formula via nested brackets, 20 rational tuples", rep);

      const TFan deep({0, 2, 4, 7});
      bool round_trip = true;
      for (int i = 0; i < 100; ++i) {
        const Element<Rational> a = detail::random_element(oct, g);
        const TorusPoint jp = i % 2 == 0 ? torus_point(b, fan, g) : torus_point(b, deep, g);
        const unsigned full = 1u << jp.j.size();
        for (unsigned K = 0; K < full; ++K) {
          round_trip = round_trip && bracket_apply(jp, K, bracket_unapply(jp, K, a)) == a;
          round_trip = round_trip && bracket_unapply(jp, K, bracket_apply(jp, K, a)) == a;
        }
      }
      detail::check(out, "octonion brackets invert on 100 random elements", round_trip);
    }
  });
}

// ---------------------------------------------------------------------------
// 7: sup-orbit norm bound
// ---------------------------------------------------------------------------

inline CriterionResult criterion_norm_bound(const VerifyConfig& cfg) {
  return detail::timed(7, "norm-bound", [&](std::vector<CheckResult>& out) {
    // the fan cases own the algebra instances, so they must outlive every
    // basis and polynomial built below
    const std::vector<detail::FanCase> fans = detail::associative_fans();
    const Algebra oct = builtin_algebra("octonion");

    struct OrbitCase {
      std::string name;
      const Algebra* algebra;
      TFan fan;
      std::vector<PolyMap<Rational>> pool;
      HypercomplexBasis basis;
    };
    std::vector<OrbitCase> cases;
    for (const auto& fc : fans) {
      HypercomplexBasis b = HypercomplexBasis::standard(fc.algebra, fc.fan.m());
      TFamily tf(b, fc.fan);
      std::vector<PolyMap<Rational>> pool;
      for (const auto& k : multiindices_up_to(tf.slots(), 3)) pool.push_back(tf.poly(k));
      cases.push_back({fc.name, &fc.algebra, fc.fan, std::move(pool), std::move(b)});
    }
    {
      HypercomplexBasis b = HypercomplexBasis::standard(oct, 7);
      const TFan fan({0, 7});
      std::vector<PolyMap<Rational>> pool;
      pool.push_back(PolyMap<Rational>::constant(oct, b.nvars(), Element<Rational>::unit(oct)));
      PolyMap<Rational> lin = PolyMap<Rational>::variable(oct, b.nvars(), 0) + block_variable(b, fan, 1);
      for (int k = 1; k <= 3; ++k) pool.push_back(pool.back() * lin);
      cases.push_back({"octonion (0,7)", &oct, fan, std::move(pool), std::move(b)});
    }

    RngStream g(CounterRng(cfg.seed), 8000);
    for (auto& oc : cases) {
      const double allowed = std::pow(2.0, oc.fan.tau()) + 1e-9;
      double worst = 0;
      bool ok = true;
      for (int orbit = 0; orbit < 50; ++orbit) {
        PolyMap<Rational> f(*oc.algebra, oc.basis.nvars());
        for (const auto& p : oc.pool)
          if (g.integer(0, 1) == 1) f += p.right_mul(detail::random_element(*oc.algebra, g));
        const PolyMap<double> fd = to_double(f);
        std::vector<Rational> alpha = g.rational_vector(static_cast<std::size_t>(oc.fan.mirror_units()) + 1);
        std::vector<Rational> beta = g.rational_vector(static_cast<std::size_t>(oc.fan.tau()));
        const TorusPoint ip = torus_point(oc.basis, oc.fan, g);
        const unsigned full = 1u << oc.fan.tau();
        auto eval_at = [&](const TorusPoint& tp, unsigned H) {
          std::vector<Rational> rbeta = beta;
          for (int h = 1; h <= oc.fan.tau(); ++h)
            if ((H >> (h - 1)) & 1u) rbeta[static_cast<std::size_t>(h - 1)] = -rbeta[static_cast<std::size_t>(h - 1)];
          const auto coords = ambient_coords(oc.basis, oc.fan, alpha, rbeta, tp);
          std::vector<double> cd(coords.size());
          for (std::size_t i = 0; i < coords.size(); ++i) cd[i] = to_double(coords[i]);
          return norm(fd.evaluate(cd));
        };
        double denom = 0;
        for (unsigned H = 0; H < full; ++H) denom = std::max(denom, eval_at(ip, H));
        double numer = denom;
        for (int jrep = 0; jrep < 40; ++jrep) {
          const TorusPoint jp = torus_point(oc.basis, oc.fan, g);
          for (unsigned H = 0; H < full; ++H) numer = std::max(numer, eval_at(jp, H));
        }
        if (denom == 0) {
          ok = ok && numer == 0;
          continue;
        }
        const double ratio = numer / denom;
        worst = std::max(worst, ratio);
        ok = ok && ratio <= allowed;
      }
      detail::check(out, oc.name + ": orbit sup ratio within 2^tau on 50 sampled orbits", ok,
                    "worst ratio " + format_double(worst));
    }
  });
}

// ---------------------------------------------------------------------------
// 8: Gegenbauer endpoints, kernel monogenicity, zonal series tail
// ---------------------------------------------------------------------------

inline CriterionResult criterion_kernel_series(const VerifyConfig& cfg) {
  return detail::timed(8, "kernel-series", [&](std::vector<CheckResult>& out) {
    bool peaks = true;
    for (int twice_mu = 1; twice_mu <= 5; ++twice_mu) {
      const Rational mu(twice_mu, 2);
      for (int h = 0; h <= 10; ++h)
        peaks = peaks && gegenbauer_eval(gegenbauer_coeffs(h, mu), Rational(1)) == gegenbauer_peak(h, mu);
    }
    detail::check(out, "recurrence endpoint C_h(1) equals the rising binomial for h <= 10", peaks);

    for (int m : {2, 3}) {
      const Algebra a = builtin_algebra(m == 2 ? "cl02" : "cl03");
      const HypercomplexBasis b = HypercomplexBasis::standard(a, m);
      const NumericBasis nb(b);
      RngStream g(CounterRng(cfg.seed), 9000 + m);

      double worst_fd = 0;
      for (int i = 0; i < 20; ++i) {
        std::vector<double> x(static_cast<std::size_t>(m) + 1), y(static_cast<std::size_t>(m) + 1);
        do {
          for (auto& c : x) c = 2.0 * g.uniform() - 1.0;
          for (auto& c : y) c = 2.0 * g.uniform() - 1.0;
        } while (coord_norm(coord_sub(y, x)) < 0.3);
        worst_fd = std::max(worst_fd, kernel_cr_residual(nb, x, y));
      }
      detail::check(out, "m=" + std::to_string(m) + ": finite-difference kernel monogenicity residual < 1e-6",
                    worst_fd < 1e-6, "worst " + format_double(worst_fd));

      bool series_ok = true;
      double worst_gap = -1;
      for (int i = 0; i < 50; ++i) {
        std::vector<double> y = sphere_direction(g, m + 1);
        const double ry = 1.0 + g.uniform();
        for (auto& c : y) c *= ry;
        std::vector<double> x = sphere_direction(g, m + 1);
        const double rx = 0.5 * ry * g.uniform();
        for (auto& c : x) c *= rx;
        const KernelSeries s = kernel_series(nb, x, y, 24);
        const double err = norm(cauchy_kernel(nb, coord_sub(y, x)) - s.partial_sum);
        // absolute slack for evaluation roundoff: with x near the center the
        // true tail shrinks below machine noise on the O(1) kernel values
        const double allowed = s.tail_bound + 1e-12;
        series_ok = series_ok && err <= allowed;
        worst_gap = std::max(worst_gap, err - allowed);
      }
      detail::check(out, "m=" + std::to_string(m) + ": zonal series error within the tail bound on 50 pairs",
                    series_ok, "worst err-bound gap " + format_double(worst_gap));
    }
  });
}

// ---------------------------------------------------------------------------
// 9: Monte Carlo integral identities
// ---------------------------------------------------------------------------

inline CriterionResult criterion_quadrature(const VerifyConfig& cfg) {
  return detail::timed(9, "quadrature", [&](std::vector<CheckResult>& out) {
    const double ts = cfg.tolerance_sigma;
    for (int m : {2, 3}) {
      const McResult est = mc_sphere_area(m, cfg.samples, cfg.seed + static_cast<std::uint64_t>(m));
      detail::check_mc(out, "sphere area sigma_" + std::to_string(m) + " by cube sampling",
                       std::abs(est.mean[0] - sphere_area(m)), ts * est.stderr_of_mean, est.stderr_of_mean);
    }

    const Algebra cl2 = builtin_algebra("cl02");
    const HypercomplexBasis b = HypercomplexBasis::standard(cl2, 2);
    const NumericBasis nb(b);
    FueterFamily fam(b);
    const std::vector<double> p = {0.1, -0.2, 0.3};
    const double R = 1.0;
    const std::vector<double> outside = {p[0] + 1.5 * R, p[1] + 0.9 * R, p[2]};

    struct Phi {
      std::string name;
      PolyMap<Rational> poly;
    };
    const std::vector<Phi> phis = {
        {"constant", PolyMap<Rational>::constant(cl2, 3, Element<Rational>::unit(cl2))},
        {"degree-1", fam.poly({1, 0})},
        {"degree-2", fam.poly({1, 1})},
    };
    std::uint64_t salt = 10;
    for (const auto& phi : phis) {
      const PolyMap<double> pd = to_double(phi.poly);
      const McElement inside = mc_cauchy_integral(nb, pd, p, p, R, cfg.samples, cfg.seed + salt++);
      detail::check_mc(out, "reproducing integral, interior, " + phi.name, norm(inside.mean - pd.evaluate(p)),
                       ts * inside.stderr_of_mean, inside.stderr_of_mean);
      const McElement ext = mc_cauchy_integral(nb, pd, outside, p, R, cfg.samples, cfg.seed + salt++);
      detail::check_mc(out, "reproducing integral, exterior, " + phi.name, norm(ext.mean), ts * ext.stderr_of_mean,
                       ext.stderr_of_mean);
    }

    {
      MultiIndex k2{0, 2, 0};
      PolyMap<Rational> sq = PolyMap<Rational>::monomial(cl2, 3, k2, Element<Rational>::unit(cl2));
      const PolyMap<double> sqd = to_double(sq);
      const PolyMap<double> dbar = to_double(cr_left(b, sq));
      const McElement boundary = mc_cauchy_integral(nb, sqd, p, p, R, cfg.samples, cfg.seed + salt++);
      const McElement volume = mc_volume_term(nb, dbar, p, p, R, cfg.samples, cfg.seed + salt++);
      const double se = std::sqrt(boundary.stderr_of_mean * boundary.stderr_of_mean +
                                  volume.stderr_of_mean * volume.stderr_of_mean);
      detail::check_mc(out, "surface-minus-volume reproduction of a non-monogenic map",
                       norm(boundary.mean - volume.mean - sqd.evaluate(p)), ts * se, se);
    }

    {
      const PolyMap<double> pd = to_double(fam.poly({1, 1}));
      const McElement mv = mc_mean_value(nb, pd, p, 0.7, cfg.samples, cfg.seed + salt++);
      detail::check_mc(out, "spherical mean value, subspace version", norm(mv.mean - pd.evaluate(p)),
                       ts * mv.stderr_of_mean, mv.stderr_of_mean);
    }
    {
      const Algebra quat = builtin_algebra("quaternion");
      const HypercomplexBasis bq = HypercomplexBasis::standard(quat, 3);
      const TFan fan({1, 3});
      TFamily tf(bq, fan);
      RngStream g(CounterRng(cfg.seed), 11000);
      const TorusPoint jp = torus_point(bq, fan, g);
      const HypercomplexBasis sb = slice_basis(bq, fan, jp);
      const NumericBasis nbs(sb);
      const PolyMap<double> fj = to_double(slice_restrict(bq, fan, tf.poly({1, 1}), jp));
      const std::vector<double> ps = {0.2, -0.1, 0.15};
      const McElement mv = mc_mean_value(nbs, fj, ps, 0.6, cfg.samples, cfg.seed + salt++);
      detail::check_mc(out, "spherical mean value on a torus slice", norm(mv.mean - fj.evaluate(ps)),
                       ts * mv.stderr_of_mean, mv.stderr_of_mean);
    }

    {
      RngStream g(CounterRng(cfg.seed), 12000);
      for (int pair = 0; pair < 5; ++pair) {
        const PolyMap<Rational> psi = detail::random_polymap(cl2, 3, 2, g);
        const PolyMap<Rational> phi = detail::random_polymap(cl2, 3, 2, g);
        const GaussSides sides = mc_gauss(nb, b, psi, phi, p, R, cfg.samples, cfg.seed + salt);
        salt += 2;
        const double se = std::sqrt(sides.boundary.stderr_of_mean * sides.boundary.stderr_of_mean +
                                    sides.volume.stderr_of_mean * sides.volume.stderr_of_mean);
        detail::check_mc(out, "divergence identity, random pair " + std::to_string(pair),
                         norm(sides.boundary.mean - sides.volume.mean), ts * se, se);
      }
    }

    {
      const RadialQuotient base = kernel_quotient(b);
      const PolyMap<Rational> phi = fam.poly({1, 1});
      const PolyMap<double> pd = to_double(phi);
      double max_phi = 0;
      for (const auto& w : direction_grid(nb.nvars(), cfg.grid, cfg.seed + 90)) {
        std::vector<double> y(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) y[i] = p[i] + R * w[i];
        max_phi = std::max(max_phi, norm(pd.evaluate(y)));
      }
      const std::vector<Element<Rational>> sub = {Element<Rational>::unit(cl2), b.unit(1), b.unit(2)};
      std::vector<Element<Rational>> amb;
      for (int i = 0; i < cl2.dim(); ++i) amb.push_back(Element<Rational>::basis(cl2, i));
      const OmegaResult om = omega(sub, amb);
      bool ok = true;
      double worst = 0;
      for (const auto& h : multiindices_up_to(3, 2)) {
        if (order(h) == 0) continue;
        const RadialQuotientD dk(nabla_quotient(base, h));
        const double cm = om.value * om.value * grid_max_norm(nb, dk, cfg.grid, cfg.seed + 91);
        PolyMap<Rational> der = phi;
        for (std::size_t s = 0; s < h.size(); ++s)
          for (int rep = 0; rep < h[s]; ++rep) der = der.partial(static_cast<int>(s));
        std::vector<Rational> pr = {Rational(1, 10), Rational(-1, 5), Rational(3, 10)};
        const double lhs = norm(to_double(der.evaluate(pr)));
        const double rhs = cm / std::pow(R, order(h)) * max_phi;
        ok = ok && lhs <= rhs;
        worst = std::max(worst, rhs > 0 ? lhs / rhs : 0.0);
      }
      detail::check(out, "derivative estimate from the kernel gradient grid, |h| <= 2", ok,
                    "worst lhs/rhs " + format_double(worst));
    }
  });
}

// ---------------------------------------------------------------------------
// 10: maximum modulus on paired grids
// ---------------------------------------------------------------------------

inline CriterionResult criterion_max_modulus(const VerifyConfig& cfg) {
  return detail::timed(10, "max-modulus", [&](std::vector<CheckResult>& out) {
    const Algebra cl2 = builtin_algebra("cl02");
    const HypercomplexBasis b = HypercomplexBasis::standard(cl2, 2);
    const NumericBasis nb(b);
    FueterFamily fam(b);
    const std::vector<std::pair<std::string, MultiIndex>> cases = {
        {"degree-1", {1, 0}},
        {"degree-2", {1, 1}},
        {"degree-3", {2, 1}},
    };
    const std::vector<double> origin = {0.0, 0.0, 0.0};
    for (const auto& [name, k] : cases) {
      const PolyMap<double> pd = to_double(fam.poly(k));
      const ModulusGrids mg = max_modulus_grids(nb, pd, origin, 1.0, cfg.grid, cfg.seed + 95);
      detail::check(out, "interior grid max within boundary grid max, " + name,
                    mg.interior_max <= mg.boundary_max + 1e-9,
                    format_double(mg.interior_max) + " vs " + format_double(mg.boundary_max));
    }
  });
}

// ---------------------------------------------------------------------------
// Suite driver and JSON report
// ---------------------------------------------------------------------------

inline CriterionResult run_criterion(int id, const VerifyConfig& cfg);

inline std::vector<CriterionResult> run_criteria(const std::vector<int>& ids, const VerifyConfig& cfg) {
  std::vector<CriterionResult> out;
  out.reserve(ids.size());
  for (int id : ids) out.push_back(run_criterion(id, cfg));
  return out;
}

inline nlohmann::ordered_json report_json(const std::string& suite, const std::vector<CriterionResult>& results,
                                          const VerifyConfig& cfg) {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["config"] = {{"seed", cfg.seed},
                 {"samples", cfg.samples},
                 {"tolerance_sigma", cfg.tolerance_sigma},
                 {"grid", cfg.grid}};
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  bool all_pass = true;
  for (const auto& r : results) {
    nlohmann::ordered_json cj = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
      nlohmann::ordered_json one;
      one["name"] = c.name;
      one["status"] = c.pass ? "pass" : "fail";
      if (!c.detail.empty()) one["detail"] = c.detail;
      if (c.has_numeric)
        one["numeric"] = {{"estimate", c.estimate}, {"target", c.target}, {"stderr", c.stderr_of_mean}};
      cj.push_back(std::move(one));
    }
    all_pass = all_pass && r.pass();
    arr.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass()}, {"checks", std::move(cj)}});
  }
  j["criteria"] = std::move(arr);
  j["pass"] = all_pass;
  return j;
}

/// 11: the full report built twice from one configuration must serialize to
/// identical bytes. Uses the reduced sample count so the double build stays
/// fast; determinism does not depend on the sample count.
inline CriterionResult criterion_determinism(const VerifyConfig& cfg) {
  return detail::timed(11, "determinism", [&](std::vector<CheckResult>& out) {
    VerifyConfig small = cfg;
    small.samples = cfg.determinism_samples;
    const std::vector<int> ids = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    const std::string first = report_json("all", run_criteria(ids, small), small).dump();
    const std::string second = report_json("all", run_criteria(ids, small), small).dump();
    detail::check(out, "full report built twice is byte-identical", first == second,
                  std::to_string(first.size()) + " bytes");
  });
}

inline CriterionResult run_criterion(int id, const VerifyConfig& cfg) {
  switch (id) {
    case 1: return criterion_algebra_axioms(cfg);
    case 2: return criterion_reference_products(cfg);
    case 3: return criterion_monogenic_basis(cfg);
    case 4: return criterion_slice_polynomials(cfg);
    case 5: return criterion_fan_classification(cfg);
    case 6: return criterion_stems_representation(cfg);
    case 7: return criterion_norm_bound(cfg);
    case 8: return criterion_kernel_series(cfg);
    case 9: return criterion_quadrature(cfg);
    case 10: return criterion_max_modulus(cfg);
    case 11: return criterion_determinism(cfg);
    default: throw std::invalid_argument("unknown criterion id " + std::to_string(id));
  }
}

inline std::vector<int> suite_ids(const std::string& suite) {
  if (suite == "symbolic") return {1, 2, 3, 4};
  if (suite == "classify") return {5};
  if (suite == "stems") return {6, 7};
  if (suite == "quadrature") return {8, 9, 10};
  if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
  throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace tregular
