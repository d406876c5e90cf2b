#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "e7/jordan.hpp"

using namespace e7;

namespace {

using EC = ExactComplex;

EC rq(long n, long d = 1) { return EC(make_rational(n, d)); }

JordanElement<EC> random_jordan(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-3, 3);
  std::uniform_int_distribution<long> den(1, 2);
  JordanElement<EC> x;
  for (int i = 0; i < 27; ++i)
    x.coord(i) = EC(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)));
  return x;
}

Octonion<EC> random_octonion(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-3, 3);
  std::uniform_int_distribution<long> den(1, 2);
  Octonion<EC> x;
  for (int i = 0; i < 8; ++i)
    x.c[i] = EC(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)));
  return x;
}

/// Independent determinant: det X = x1 x2 x3 + 2 Re(a1 a2 a3) - sum xk N(ak)
/// for the 3x3 Hermitian matrix with diagonal (x1,x2,x3) and off-diagonal
/// octonions a1, a2, a3 ("Re" meaning the e0 part, N the bilinear norm).
EC det_oracle(const JordanElement<EC>& x) {
  const EC two = ScalarOps<EC>::from_int(2);
  EC det = x.d[0] * x.d[1] * x.d[2];
  det += two * ((x.x[0] * x.x[1]) * x.x[2]).c[0];
  for (int k = 0; k < 3; ++k) det -= x.d[k] * oct_bilinear(x.x[k], x.x[k]);
  return det;
}

}  // namespace

TEST_CASE("unit element and diagonal embeddings") {
  const auto e = JordanElement<EC>::identity();
  CHECK(jordan_trace(e) == rq(3));
  CHECK(jordan_inner(e, e) == rq(3));
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 4; ++trial) {
    const auto x = random_jordan(rng);
    CHECK((jordan_mul(e, x) - x).is_zero());
    CHECK((jordan_mul(x, e) - x).is_zero());
  }
  const auto d = JordanElement<EC>::diagonal(rq(2), rq(3), rq(5));
  CHECK(jordan_trace(d) == rq(10));
  CHECK(jordan_det(d) == rq(30));
}

TEST_CASE("product is commutative and satisfies the Jordan identity") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 4; ++trial) {
    const auto x = random_jordan(rng), y = random_jordan(rng);
    CHECK((jordan_mul(x, y) - jordan_mul(y, x)).is_zero());
    const auto xx = jordan_mul(x, x);
    CHECK((jordan_mul(jordan_mul(x, y), xx) - jordan_mul(x, jordan_mul(y, xx))).is_zero());
  }
}

TEST_CASE("trace form is associative and matches the gram weights") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 4; ++trial) {
    const auto x = random_jordan(rng), y = random_jordan(rng), z = random_jordan(rng);
    CHECK(ScalarOps<EC>::is_zero(jordan_inner(jordan_mul(x, y), z) -
                                 jordan_inner(x, jordan_mul(y, z))));
    CHECK(jordan_inner(x, y) == jordan_inner(y, x));
    // (X, Y) through flattened coordinates with weights (1,1,1, 2 x 24).
    EC via_coords;
    for (int i = 0; i < 27; ++i)
      via_coords += ScalarOps<EC>::from_int(jordan_gram_weight(i)) * x.coord(i) * y.coord(i);
    CHECK(ScalarOps<EC>::is_zero(jordan_inner(x, y) - via_coords));
  }
  // A single off-diagonal unit has squared length 2.
  const auto f = JordanElement<EC>::off_unit(0, Octonion<EC>::unit(0));
  CHECK(jordan_inner(f, f) == rq(2));
  CHECK(jordan_trace(f) == rq(0));
}

TEST_CASE("hermitian form conjugates the first slot") {
  std::mt19937_64 rng(9);
  const auto x = random_jordan(rng), y = random_jordan(rng);
  CHECK(ScalarOps<EC>::is_zero(jordan_herm(x, y) - jordan_inner(x.tau(), y)));
  CHECK(ScalarOps<EC>::is_zero(jordan_herm(x, y) - ScalarOps<EC>::conj(jordan_herm(y, x))));
}

TEST_CASE("cross product closed form") {
  const auto e = JordanElement<EC>::identity();
  CHECK((jordan_cross(e, e) - e).is_zero());

  // On diagonals the self-cross is the adjugate.
  const auto d = JordanElement<EC>::diagonal(rq(2), rq(3), rq(5));
  const auto adj = JordanElement<EC>::diagonal(rq(15), rq(10), rq(6));
  CHECK((jordan_cross(d, d) - adj).is_zero());

  // D x F_k(a) = -(d_k / 2) F_k(a).
  std::mt19937_64 rng(11);
  const std::array<EC, 3> dk = {rq(2), rq(3), rq(5)};
  for (int k = 0; k < 3; ++k) {
    const auto f = JordanElement<EC>::off_unit(k, random_octonion(rng));
    const auto want = (rq(-1, 2) * dk[k]) * f;
    CHECK((jordan_cross(d, f) - want).is_zero());
  }

  // D x E_1 = (d_3 E_2 + d_2 E_3) / 2.
  const auto want = rq(1, 2) * (dk[2] * JordanElement<EC>::diag_unit(1) +
                                dk[1] * JordanElement<EC>::diag_unit(2));
  CHECK((jordan_cross(d, JordanElement<EC>::diag_unit(0)) - want).is_zero());

  // Bilinear and symmetric.
  const auto x = random_jordan(rng), y = random_jordan(rng), z = random_jordan(rng);
  CHECK((jordan_cross(x, y) - jordan_cross(y, x)).is_zero());
  CHECK((jordan_cross(x + z, y) - jordan_cross(x, y) - jordan_cross(z, y)).is_zero());
}

TEST_CASE("determinant agrees with the cofactor expansion") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 6; ++trial) {
    const auto x = random_jordan(rng);
    CHECK(ScalarOps<EC>::is_zero(jordan_det(x) - det_oracle(x)));
  }
  // det of the all-ones off-diagonal matrix [[0,1,1],[1,0,1],[1,1,0]] is 2.
  JordanElement<EC> hollow;
  for (int k = 0; k < 3; ++k) hollow.x[k] = Octonion<EC>::unit(0);
  CHECK(jordan_det(hollow) == rq(2));
}

TEST_CASE("multiplication operators and the inner-product transpose") {
  std::mt19937_64 rng(17);
  const auto a = random_jordan(rng);
  const auto m = mult_operator(a);
  for (int trial = 0; trial < 3; ++trial) {
    const auto x = random_jordan(rng), y = random_jordan(rng);
    CHECK((m.apply(x) - jordan_mul(a, x)).is_zero());
    // X~ is self-adjoint for (,); the transpose reverses general operators.
    CHECK(ScalarOps<EC>::is_zero(jordan_inner(m.apply(x), y) - jordan_inner(x, m.apply(y))));
    const auto c = commutator(mult_operator(x), mult_operator(y));
    const auto z = random_jordan(rng), w = random_jordan(rng);
    CHECK(ScalarOps<EC>::is_zero(jordan_inner(c.apply(z), w) -
                                 jordan_inner(z, c.transpose_inner().apply(w))));
  }
  CHECK((mult_operator(JordanElement<EC>::identity()).apply(a) - a).is_zero());
}

TEST_CASE("vee operators transpose by swapping arguments") {
  std::mt19937_64 rng(19);
  const auto a = random_jordan(rng), b = random_jordan(rng);
  const auto ab = jordan_vee(a, b), ba = jordan_vee(b, a);
  CHECK(ab.transpose_inner() == ba);
  // vee(E, E) vanishes: [E~, E~] = 0 and E o E - (1/3)(E,E) E = 0.
  const auto e = JordanElement<EC>::identity();
  CHECK(jordan_vee(e, e).is_zero());
  // Applied to E, vee(a, b) gives a o b - (1/3)(a, b) E.
  const auto want = jordan_mul(a, b) - (rq(1, 3) * jordan_inner(a, b)) * e;
  CHECK((ab.apply(e) - want).is_zero());
}

TEST_CASE("fault knob perturbs the cross product and is reversible") {
  const auto e = JordanElement<EC>::identity();
  inject_fault(FaultKnob::jordan_cross_half);
  const bool perturbed = !(jordan_cross(e, e) - e).is_zero();
  clear_faults();
  CHECK(perturbed);
  CHECK((jordan_cross(e, e) - e).is_zero());
}
