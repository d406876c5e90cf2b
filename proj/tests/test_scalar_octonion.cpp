#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "e7/octonion.hpp"

using namespace e7;

namespace {

using EC = ExactComplex;

EC rq(long n, long d = 1) { return EC(make_rational(n, d)); }

Octonion<EC> random_octonion(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  Octonion<EC> x;
  for (int i = 0; i < 8; ++i)
    x.c[i] = EC(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)));
  return x;
}

}  // namespace

TEST_CASE("rationals canonicalize and reject zero denominators") {
  CHECK(make_rational(2, 4) == make_rational(1, 2));
  CHECK(make_rational(-6, -9) == make_rational(2, 3));
  CHECK(make_rational(0, 5) == 0);
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
  CHECK(rational_from_string("7/21") == make_rational(1, 3));
  CHECK(rational_from_string("-5") == -5);
  CHECK_THROWS_AS(rational_from_string("1.5"), std::invalid_argument);
}

TEST_CASE("exact complex field arithmetic") {
  const EC a(make_rational(1), make_rational(2));   // 1 + 2i
  const EC b(make_rational(3), make_rational(4));   // 3 + 4i
  CHECK(a * b == EC(make_rational(-5), make_rational(10)));
  CHECK((a * b) / b == a);
  CHECK(a + (-a) == EC());
  CHECK_THROWS_AS(a / EC(), std::domain_error);

  CHECK(ScalarOps<EC>::abs2(a) == 5);
  CHECK(ScalarOps<EC>::conj(a) == EC(make_rational(1), make_rational(-2)));
  const EC i = ScalarOps<EC>::imaginary_unit();
  CHECK(i * i == -ScalarOps<EC>::one());
  CHECK(ScalarOps<EC>::to_cd(rq(1, 2)) == cd(0.5, 0.0));
}

TEST_CASE("multiplication table basics") {
  // e0 is the unit; imaginary units square to -1 and anticommute.
  for (int i = 0; i < 8; ++i) {
    CHECK(Octonion<EC>::unit(0) * Octonion<EC>::unit(i) == Octonion<EC>::unit(i));
    CHECK(Octonion<EC>::unit(i) * Octonion<EC>::unit(0) == Octonion<EC>::unit(i));
  }
  for (int i = 1; i < 8; ++i) {
    CHECK((Octonion<EC>::unit(i) * Octonion<EC>::unit(i) +
           Octonion<EC>::unit(0))
              .is_zero());
    for (int j = 1; j < 8; ++j) {
      if (i == j) continue;
      CHECK((Octonion<EC>::unit(i) * Octonion<EC>::unit(j) +
             Octonion<EC>::unit(j) * Octonion<EC>::unit(i))
                .is_zero());
    }
  }
  // Cayley-Dickson index law: e_i e_j lands on e_{i xor j}.
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      CHECK(detail::kOctTable.index[i][j] == (i ^ j));
      CHECK((detail::kOctTable.sign[i][j] == 1 || detail::kOctTable.sign[i][j] == -1));
    }
  // The quaternion corner: e1 e2 = e3.
  CHECK(Octonion<EC>::unit(1) * Octonion<EC>::unit(2) == Octonion<EC>::unit(3));
  CHECK(Octonion<EC>::unit(2) * Octonion<EC>::unit(1) == -Octonion<EC>::unit(3));
}

TEST_CASE("alternativity on all basis pairs and random elements") {
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      const auto x = Octonion<EC>::unit(i), y = Octonion<EC>::unit(j);
      CHECK(((x * x) * y - x * (x * y)).is_zero());
      CHECK(((y * x) * x - y * (x * x)).is_zero());
    }
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 8; ++trial) {
    const auto x = random_octonion(rng), y = random_octonion(rng);
    CHECK(((x * x) * y - x * (x * y)).is_zero());
    CHECK(((y * x) * x - y * (x * x)).is_zero());
  }
}

TEST_CASE("Moufang identity (xy)(zx) = x((yz)x)") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 6; ++trial) {
    const auto x = random_octonion(rng), y = random_octonion(rng), z = random_octonion(rng);
    CHECK(((x * y) * (z * x) - x * ((y * z) * x)).is_zero());
  }
}

TEST_CASE("norm composition and conjugation") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 8; ++trial) {
    const auto x = random_octonion(rng), y = random_octonion(rng);
    CHECK(ScalarOps<EC>::is_zero(oct_bilinear(x * y, x * y) -
                                 oct_bilinear(x, x) * oct_bilinear(y, y)));
    CHECK(((x * y).conj() - y.conj() * x.conj()).is_zero());
    // x conj(x) = N(x) e0.
    const EC n = oct_bilinear(x, x);
    Octonion<EC> want;
    want.c[0] = n;
    CHECK((x * x.conj() - want).is_zero());
    // The bilinear form is symmetric.
    CHECK(oct_bilinear(x, y) == oct_bilinear(y, x));
  }
}

TEST_CASE("tau conjugates coordinates, conj negates imaginary units") {
  Octonion<EC> x;
  x.c[0] = EC(make_rational(1), make_rational(2));
  x.c[5] = EC(make_rational(3), make_rational(-4));
  const auto t = x.tau();
  CHECK(t.c[0] == EC(make_rational(1), make_rational(-2)));
  CHECK(t.c[5] == EC(make_rational(3), make_rational(4)));
  const auto c = x.conj();
  CHECK(c.c[0] == x.c[0]);
  CHECK(c.c[5] == -x.c[5]);
}
