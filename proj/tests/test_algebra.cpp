#include <catch2/catch_amalgamated.hpp>

#include "tregular/algebra.hpp"
#include "tregular/io.hpp"
#include "tregular/rng.hpp"

#include <array>
#include <cstdlib>
#include <vector>

using namespace tregular;

// Independent product oracles. Each one is written directly from the defining
// construction, without touching the Algebra machinery, so a table bug cannot
// hide behind itself.
namespace {

// Quaternion units 1,i,j,k as (coefficient, index) pairs.
struct QTerm {
  int coeff;
  int index;
};
constexpr QTerm kQuatTable[4][4] = {
    {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
    {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
    {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
    {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}},
};

// e_S e_T in Cl(0,q) with subsets as bitmasks: move each generator of T into
// place counting transpositions, and charge -1 for every repeated generator.
QTerm clifford_product(unsigned S, unsigned T, int q) {
  int sign = 1;
  for (int t = 0; t < q; ++t) {
    if (!(T & (1u << t))) continue;
    int above = 0;
    for (int s = t + 1; s < q; ++s)
      if (S & (1u << s)) ++above;
    if (above % 2) sign = -sign;
    if (S & (1u << t)) sign = -sign;
  }
  return {sign, static_cast<int>(S ^ T)};
}

int conj_sign(int grade) { return (grade * (grade + 1) / 2) % 2 ? -1 : 1; }

// Cayley-Dickson product on coordinate vectors, in the convention where the
// doubling unit l multiplies as (a,b)(c,d) = (ac - d* b, da + b c*). This is
// the classical table with ij = k and i(il) = -l.
std::vector<Rational> cd_conj(std::vector<Rational> x) {
  for (std::size_t i = 1; i < x.size(); ++i) x[i] = -x[i];
  return x;
}

std::vector<Rational> cd_mul(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  const std::size_t n = x.size();
  if (n == 1) return {x[0] * y[0]};
  const std::size_t h = n / 2;
  auto lo = [&](const std::vector<Rational>& v) { return std::vector<Rational>(v.begin(), v.begin() + static_cast<long>(h)); };
  auto hi = [&](const std::vector<Rational>& v) { return std::vector<Rational>(v.begin() + static_cast<long>(h), v.end()); };
  const auto a = lo(x), b = hi(x), c = lo(y), d = hi(y);
  const auto ac = cd_mul(a, c);
  const auto cdb = cd_mul(cd_conj(d), b);
  const auto da = cd_mul(d, a);
  const auto bcc = cd_mul(b, cd_conj(c));
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < h; ++i) {
    out[i] = ac[i] - cdb[i];
    out[h + i] = da[i] + bcc[i];
  }
  return out;
}

Element<Rational> random_element(const Algebra& a, RngStream& g) {
  Element<Rational> x(a);
  for (int i = 0; i < a.dim(); ++i) x += Element<Rational>::basis(a, i) * g.rational(3, 2);
  return x;
}

}  // namespace

TEST_CASE("builtin algebras validate and report their structure") {
  struct Row {
    const char* name;
    int dim;
    bool associative;
  };
  const std::vector<Row> rows = {
      {"complex", 2, true}, {"quaternion", 4, true}, {"octonion", 8, false}, {"cl01", 2, true},
      {"cl02", 4, true},    {"cl03", 8, true},       {"cl04", 16, true},     {"dualquat", 8, true},
  };
  for (const auto& r : rows) {
    const Algebra a = builtin_algebra(r.name);
    INFO(r.name);
    CHECK(a.dim() == r.dim);
    CHECK(a.associative() == r.associative);
    CHECK(a.alternative());
    CHECK_NOTHROW(validate_star_structure(a));
  }
  CHECK_THROWS_AS(builtin_algebra("nosuch"), std::invalid_argument);
}

TEST_CASE("quaternion products match the hand table") {
  const Algebra q = builtin_algebra("quaternion");
  REQUIRE(q.dim() == 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const QTerm want = kQuatTable[i][j];
      const auto got = Element<Rational>::basis(q, i) * Element<Rational>::basis(q, j);
      CHECK(got == Element<Rational>::basis(q, want.index) * Rational(want.coeff));
    }
}

TEST_CASE("clifford products follow the transposition sign rule") {
  for (int q = 2; q <= 4; ++q) {
    const Algebra a = builtin_algebra("cl0" + std::to_string(q));
    const int d = a.dim();
    REQUIRE(d == (1 << q));
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        const QTerm want = clifford_product(static_cast<unsigned>(i), static_cast<unsigned>(j), q);
        const auto got = Element<Rational>::basis(a, i) * Element<Rational>::basis(a, j);
        INFO("q=" << q << " i=" << i << " j=" << j);
        CHECK(got == Element<Rational>::basis(a, want.index) * Rational(want.coeff));
      }
      const int grade = __builtin_popcount(static_cast<unsigned>(i));
      CHECK(Element<Rational>::basis(a, i).conj() ==
            Element<Rational>::basis(a, i) * Rational(conj_sign(grade)));
    }
  }
}

TEST_CASE("octonion products match an independent doubling recursion") {
  const Algebra o = builtin_algebra("octonion");
  REQUIRE(o.dim() == 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      std::vector<Rational> x(8, Rational(0)), y(8, Rational(0));
      x[static_cast<std::size_t>(i)] = 1;
      y[static_cast<std::size_t>(j)] = 1;
      const auto want = cd_mul(x, y);
      const auto got = Element<Rational>::basis(o, i) * Element<Rational>::basis(o, j);
      INFO("i=" << i << " j=" << j);
      CHECK(got == Element<Rational>(o, want));
    }
  RngStream g(CounterRng(11));
  for (int rep = 0; rep < 10; ++rep) {
    const auto x = random_element(o, g), y = random_element(o, g);
    CHECK(x * y == Element<Rational>(o, cd_mul(x.coeffs(), y.coeffs())));
    CHECK(x.conj() == Element<Rational>(o, cd_conj(x.coeffs())));
  }
}

TEST_CASE("dual quaternion products match the central nilpotent doubling") {
  const Algebra dh = builtin_algebra("dualquat");
  const Algebra q = builtin_algebra("quaternion");
  REQUIRE(dh.dim() == 8);
  auto parts = [&](const Element<Rational>& x) {
    std::vector<Rational> lo(x.coeffs().begin(), x.coeffs().begin() + 4);
    std::vector<Rational> hi(x.coeffs().begin() + 4, x.coeffs().end());
    return std::pair{Element<Rational>(q, lo), Element<Rational>(q, hi)};
  };
  auto join = [&](const Element<Rational>& a, const Element<Rational>& b) {
    std::vector<Rational> c = a.coeffs();
    c.insert(c.end(), b.coeffs().begin(), b.coeffs().end());
    return Element<Rational>(dh, c);
  };
  RngStream g(CounterRng(12));
  for (int rep = 0; rep < 20; ++rep) {
    const auto x = random_element(dh, g), y = random_element(dh, g);
    const auto [a, b] = parts(x);
    const auto [c, d] = parts(y);
    CHECK(x * y == join(a * c, a * d + b * c));
    CHECK(x.conj() == join(a.conj(), b.conj()));
  }
  const auto eps = Element<Rational>::basis(dh, label_index(dh, "eps"));
  CHECK((eps * eps).is_zero());
  for (int i = 0; i < 8; ++i) {
    const auto e = Element<Rational>::basis(dh, i);
    CHECK(eps * e == e * eps);
  }
}

TEST_CASE("conjugation is an involutive anti-automorphism everywhere") {
  for (const char* name : {"complex", "quaternion", "octonion", "cl02", "cl03", "cl04", "dualquat"}) {
    const Algebra a = builtin_algebra(name);
    RngStream g(CounterRng(13));
    for (int rep = 0; rep < 8; ++rep) {
      const auto x = random_element(a, g), y = random_element(a, g);
      INFO(name);
      CHECK((x * y).conj() == y.conj() * x.conj());
      CHECK(x.conj().conj() == x);
      CHECK(trace_t(x) == x + x.conj());
      CHECK(norm_n(x) == x * x.conj());
    }
  }
}

TEST_CASE("norm composition holds in the doubling chain and fails past it") {
  for (const char* name : {"complex", "quaternion", "octonion", "cl01", "cl02"}) {
    const Algebra a = builtin_algebra(name);
    RngStream g(CounterRng(14));
    for (int rep = 0; rep < 8; ++rep) {
      const auto x = random_element(a, g), y = random_element(a, g);
      INFO(name);
      CHECK(norm_n(x * y) == norm_n(x) * norm_n(y));
    }
  }
  {
    const Algebra dh = builtin_algebra("dualquat");
    RngStream g(CounterRng(15));
    for (int rep = 0; rep < 8; ++rep) {
      const auto x = random_element(dh, g), y = random_element(dh, g);
      CHECK(norm_n(x * y) == norm_n(x) * norm_n(y));
    }
  }
  {
    // In cl03 the euclidean norm is not multiplicative: 1 + e123 and
    // 1 - e123 both have norm sqrt 2 yet multiply to zero.
    const Algebra c3 = builtin_algebra("cl03");
    const auto one = Element<Rational>::unit(c3);
    const auto e123 = Element<Rational>::basis(c3, label_index(c3, "e123"));
    const auto x = one + e123, y = one - e123;
    CHECK((x * y).is_zero());
    CHECK(x.norm_sq() == Rational(2));
    CHECK(y.norm_sq() == Rational(2));
  }
}

TEST_CASE("octonions are alternative and flexible but not associative") {
  const Algebra o = builtin_algebra("octonion");
  RngStream g(CounterRng(16));
  for (int rep = 0; rep < 10; ++rep) {
    const auto x = random_element(o, g), y = random_element(o, g);
    CHECK((x * x) * y == x * (x * y));
    CHECK((y * x) * x == y * (x * x));
    CHECK(x * (y * x) == (x * y) * x);
  }
  bool found = false;
  for (int i = 1; i < 8 && !found; ++i)
    for (int j = 1; j < 8 && !found; ++j)
      for (int k = 1; k < 8 && !found; ++k) {
        const auto a = Element<Rational>::basis(o, i);
        const auto b = Element<Rational>::basis(o, j);
        const auto c = Element<Rational>::basis(o, k);
        if ((a * b) * c != a * (b * c)) found = true;
      }
  CHECK(found);
}

TEST_CASE("the fourth doubling loses alternativity") {
  const Algebra sed = make_cayley_dickson(4);
  REQUIRE(sed.dim() == 16);
  CHECK_FALSE(sed.alternative());
  CHECK_FALSE(sed.associative());
  CHECK_NOTHROW(validate_star_structure(sed));
}

TEST_CASE("inverses and zero divisors") {
  const Algebra q = builtin_algebra("quaternion");
  RngStream g(CounterRng(17));
  for (int rep = 0; rep < 8; ++rep) {
    auto x = random_element(q, g);
    if (x.is_zero()) continue;
    const auto inv = inverse_element(x);
    CHECK(inv * x == Element<Rational>::unit(q));
    CHECK(x * inv == Element<Rational>::unit(q));
    CHECK_FALSE(is_zero_divisor(x));
  }
  const Algebra c3 = builtin_algebra("cl03");
  const auto a = (Element<Rational>::unit(c3) + Element<Rational>::basis(c3, label_index(c3, "e123"))) / Rational(2);
  CHECK(is_zero_divisor(a));
  CHECK(rank(mult_matrix(a, MulSide::left)) == 4);
  CHECK_THROWS(inverse_element(a));
}

TEST_CASE("imaginary units and the quadratic cone") {
  const Algebra q = builtin_algebra("quaternion");
  RngStream g(CounterRng(18));
  CHECK(is_imaginary_unit(Element<Rational>::basis(q, 1)));
  const auto mixed =
      Element<Rational>::basis(q, 1) * Rational(3, 5) + Element<Rational>::basis(q, 2) * Rational(4, 5);
  CHECK(is_imaginary_unit(mixed));
  CHECK_FALSE(is_imaginary_unit(Element<Rational>::unit(q)));
  for (int rep = 0; rep < 8; ++rep) CHECK(in_quadratic_cone(random_element(q, g)));

  const Algebra c3 = builtin_algebra("cl03");
  const auto e123 = Element<Rational>::basis(c3, label_index(c3, "e123"));
  CHECK_FALSE(is_imaginary_unit(e123));
  CHECK_FALSE(in_quadratic_cone(Element<Rational>::unit(c3) + e123));
  Element<Rational> paravector = Element<Rational>::unit(c3) * Rational(1, 2);
  for (int s = 1; s <= 3; ++s)
    paravector += Element<Rational>::basis(c3, label_index(c3, "e" + std::to_string(s))) * Rational(s, 3);
  CHECK(in_quadratic_cone(paravector));
}

TEST_CASE("algebras round trip through json") {
  for (const char* name : {"quaternion", "cl03", "dualquat", "octonion"}) {
    const Algebra a = builtin_algebra(name);
    const Algebra back = algebra_from_json(algebra_to_json(a));
    REQUIRE(back.dim() == a.dim());
    RngStream g(CounterRng(19));
    for (int rep = 0; rep < 5; ++rep) {
      const auto x = random_element(a, g), y = random_element(a, g);
      const Element<Rational> xb(back, x.coeffs()), yb(back, y.coeffs());
      CHECK((xb * yb).coeffs() == (x * y).coeffs());
      CHECK(xb.conj().coeffs() == x.conj().coeffs());
    }
    CHECK(back.label(1) == a.label(1));
  }
}

TEST_CASE("element formatting is canonical") {
  const Algebra c2 = builtin_algebra("cl02");
  CHECK(format_element(Element<Rational>::unit(c2)) == "1");
  CHECK(format_element(Element<Rational>(c2)) == "0");
  const auto x = Element<Rational>::unit(c2) * Rational(1, 2) +
                 Element<Rational>::basis(c2, label_index(c2, "e12")) * Rational(3);
  CHECK(format_element(x) == "1/2 + 3 e12");
  CHECK(format_element(-x) == "-1/2 - 3 e12");
}
