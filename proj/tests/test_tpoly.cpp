#include <catch2/catch_amalgamated.hpp>

#include "tregular/tpoly.hpp"

using namespace tregular;

namespace {

Element<Rational> random_element(const Algebra& a, RngStream& g) {
  Element<Rational> x(a);
  for (int i = 0; i < a.dim(); ++i) x += Element<Rational>::basis(a, i) * g.rational(3, 2);
  return x;
}

}  // namespace

TEST_CASE("single-block powers over the quaternions are binomial powers") {
  const Algebra q = builtin_algebra("quaternion");
  const HypercomplexBasis b = HypercomplexBasis::standard(q, 3);
  TFamily tf(b, TFan({0, 3}));
  REQUIRE(tf.slots() == 1);
  const PolyMap<Rational> lin = PolyMap<Rational>::variable(q, 4, 0) + block_variable(b, TFan({0, 3}), 1);
  PolyMap<Rational> power = PolyMap<Rational>::constant(q, 4, Element<Rational>::unit(q));
  for (int k = 0; k <= 4; ++k) {
    CHECK(tf.poly({k}) == power);
    power = power * lin;
  }
}

TEST_CASE("family polynomials are homogeneous of their total degree") {
  struct Case {
    const char* algebra;
    std::vector<int> fan;
  };
  for (const auto& c : {Case{"quaternion", {1, 3}}, Case{"cl04", {0, 2, 4}}}) {
    const Algebra a = builtin_algebra(c.algebra);
    const TFan fan(c.fan);
    const HypercomplexBasis b = HypercomplexBasis::standard(a, fan.m());
    TFamily tf(b, fan);
    RngStream g(CounterRng(61));
    for (const auto& k : multiindices_up_to(tf.slots(), 3)) {
      const PolyMap<Rational> p = tf.poly(k);
      CHECK(p.degree() == order(k));
      std::vector<Rational> x(static_cast<std::size_t>(b.nvars()));
      for (auto& v : x) v = g.rational(2, 3);
      std::vector<Rational> x2 = x;
      for (auto& v : x2) v *= 2;
      CHECK(p.evaluate(x2) == p.evaluate(x) * rat_pow(Rational(2), order(k)));
    }
  }
}

TEST_CASE("slice identity at rational torus points") {
  const Algebra q = builtin_algebra("quaternion");
  const TFan fan({1, 3});
  const HypercomplexBasis b = HypercomplexBasis::standard(q, 3);
  TFamily tf(b, fan);
  RngStream g(CounterRng(62));
  for (int rep = 0; rep < 2; ++rep) {
    const TorusPoint jp = torus_point(b, fan, g);
    for (const auto& k : multiindices_up_to(2, 3)) CHECK(tf.check_slice_identity(k, jp));
  }
}

TEST_CASE("adapted derivatives separate the family at the origin") {
  const Algebra c3 = builtin_algebra("cl03");
  const TFan fan({0, 3});
  const HypercomplexBasis b = HypercomplexBasis::standard(c3, 3);
  TFamily tf(b, fan);
  const TorusPoint axis = axis_torus_point(b, fan);
  const std::vector<Rational> origin(2, Rational(0));
  for (int k = 0; k <= 3; ++k)
    for (int kp = 0; kp <= 3; ++kp) {
      const PolyMap<Rational> d = tf.delta(tf.poly({kp}), MultiIndex{0, k}, axis);
      const auto v = d.evaluate(origin);
      CHECK(v == (k == kp ? Element<Rational>::scalar(c3, factorial(k)) : Element<Rational>(c3)));
    }
}

TEST_CASE("derivatives computed on overlapping slices agree") {
  const Algebra q = builtin_algebra("quaternion");
  const TFan fan({1, 3});
  const HypercomplexBasis b = HypercomplexBasis::standard(q, 3);
  TFamily tf(b, fan);
  RngStream g(CounterRng(63));
  PolyMap<Rational> f(q, 4);
  for (const auto& k : multiindices_up_to(2, 3)) f += tf.poly(k).right_mul(random_element(q, g));
  const TorusPoint jp = torus_point(b, fan, g);
  const TorusPoint jq = torus_point(b, fan, g);
  for (const auto& h : multiindices_up_to(3, 2)) CHECK(tf.delta_overlap_agree(f, h, jp, jq));
}

TEST_CASE("fan equivalence on three units matches the expected classes") {
  CHECK(fans_equivalent(TFan({3}), TFan({2, 3})));
  CHECK(fans_equivalent(TFan({3}), TFan({1, 2, 3})));
  CHECK(fans_equivalent(TFan({3}), TFan({0, 1, 2, 3})));
  CHECK(fans_equivalent(TFan({1, 3}), TFan({0, 1, 3})));
  CHECK_FALSE(fans_equivalent(TFan({3}), TFan({1, 3})));
  CHECK_FALSE(fans_equivalent(TFan({0, 3}), TFan({3})));
  CHECK_FALSE(fans_equivalent(TFan({0, 2, 3}), TFan({2, 3})));
  CHECK_FALSE(fans_equivalent(TFan({0, 2, 3}), TFan({0, 3})));
}

TEST_CASE("regularity predicates match the direct operator test on spot cases") {
  const Algebra q = builtin_algebra("quaternion");
  const HypercomplexBasis b = HypercomplexBasis::standard(q, 3);
  RngStream g(CounterRng(64));

  CHECK(mirror_variable_regular_under(1, TFan({1, 3})));
  CHECK(is_fan_regular(b, TFan({1, 3}), mirror_variable(b, 1), 2, g));

  CHECK_FALSE(mirror_variable_regular_under(2, TFan({1, 3})));
  CHECK_FALSE(is_fan_regular(b, TFan({1, 3}), mirror_variable(b, 2), 2, g));

  CHECK(block_variable_regular_under(TFan({0, 3}), 1, TFan({0, 3})));
  CHECK(is_fan_regular(b, TFan({0, 3}), cullen_variable(b, TFan({0, 3}), 1), 2, g));

  CHECK_FALSE(block_variable_regular_under(TFan({0, 3}), 1, TFan({1, 3})));
  CHECK_FALSE(is_fan_regular(b, TFan({1, 3}), cullen_variable(b, TFan({0, 3}), 1), 2, g));

  // a singleton block behaves like a mirror unit of the other fan
  CHECK(block_variable_regular_under(TFan({2, 3}), 1, TFan({3})));
  CHECK(is_fan_regular(b, TFan({3}), cullen_variable(b, TFan({2, 3}), 1), 2, g));
}

TEST_CASE("the family constructor rejects mismatches") {
  const Algebra q = builtin_algebra("quaternion");
  const HypercomplexBasis b = HypercomplexBasis::standard(q, 3);
  CHECK_THROWS_AS(TFamily(b, TFan({1, 2})), std::invalid_argument);
  const Algebra o = builtin_algebra("octonion");
  const HypercomplexBasis bo = HypercomplexBasis::standard(o, 7);
  CHECK_THROWS_AS(TFamily(bo, TFan({0, 7})), std::invalid_argument);
  TFamily tf(b, TFan({1, 3}));
  CHECK_THROWS_AS(tf.poly({1}), std::invalid_argument);
  CHECK_THROWS_AS(tf.delta(tf.poly({1, 0}), MultiIndex{1, 0}, axis_torus_point(b, TFan({1, 3}))),
                  std::invalid_argument);
}
