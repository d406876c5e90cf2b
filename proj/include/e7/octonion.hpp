#ifndef E7_OCTONION_HPP
#define E7_OCTONION_HPP

#include <array>
#include <cstdint>

#include "e7/scalar.hpp"

namespace e7 {

/// Structure constants e_i e_j = sign[i][j] * e_{index[i][j]}, generated by
/// Cayley-Dickson doubling with (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)).
struct OctTable {
  std::array<std::array<std::int8_t, 8>, 8> sign{};
  std::array<std::array<std::uint8_t, 8>, 8> index{};
};

namespace detail {

struct SignedBasis {
  int sign;
  int index;
};

// Product of basis monomials of a Cayley-Dickson algebra of dimension n.
constexpr SignedBasis cd_mul(int n, int i, int j) {
  if (n == 1) return {1, 0};
  const int h = n / 2;
  if (i < h && j < h) return cd_mul(h, i, j);
  if (i < h) {  // (a,0)(0,d) = (0, d a)
    SignedBasis p = cd_mul(h, j - h, i);
    return {p.sign, p.index + h};
  }
  if (j < h) {  // (0,b)(c,0) = (0, b conj(c))
    SignedBasis p = cd_mul(h, i - h, j);
    return {j == 0 ? p.sign : -p.sign, p.index + h};
  }
  // (0,b)(0,d) = (-conj(d) b, 0)
  SignedBasis p = cd_mul(h, j - h, i - h);
  return {(j - h) == 0 ? -p.sign : p.sign, p.index};
}

constexpr OctTable make_oct_table() {
  OctTable t{};
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      SignedBasis p = cd_mul(8, i, j);
      t.sign[i][j] = static_cast<std::int8_t>(p.sign);
      t.index[i][j] = static_cast<std::uint8_t>(p.index);
    }
  return t;
}

inline constexpr OctTable kOctTable = make_oct_table();

}  // namespace detail

/// Octonion with coordinates in F.  F = double/Rational gives the division
/// algebra C(from the classical construction); F complex gives its
/// complexification (bioctonions), where tau conjugates the coordinates.
template <class F>
struct Octonion {
  std::array<F, 8> c{};

  Octonion() {
    for (auto& x : c) x = ScalarOps<F>::zero();
  }

  static Octonion unit(int k) {
    Octonion o;
    o.c[k] = ScalarOps<F>::one();
    return o;
  }
  static Octonion scalar(const F& s) {
    Octonion o;
    o.c[0] = s;
    return o;
  }

  friend Octonion operator+(const Octonion& a, const Octonion& b) {
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
  }
  friend Octonion operator-(const Octonion& a, const Octonion& b) {
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
  }
  friend Octonion operator-(const Octonion& a) {
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c[i] = -a.c[i];
    return r;
  }
  friend Octonion operator*(const F& s, const Octonion& a) {
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c[i] = s * a.c[i];
    return r;
  }
  friend Octonion operator*(const Octonion& a, const Octonion& b) {
    Octonion r;
    for (int i = 0; i < 8; ++i) {
      if (ScalarOps<F>::is_zero(a.c[i])) continue;
      for (int j = 0; j < 8; ++j) {
        if (ScalarOps<F>::is_zero(b.c[j])) continue;
        F term = a.c[i] * b.c[j];
        if (detail::kOctTable.sign[i][j] < 0) term = -term;
        r.c[detail::kOctTable.index[i][j]] += term;
      }
    }
    return r;
  }
  Octonion& operator+=(const Octonion& b) {
    for (int i = 0; i < 8; ++i) c[i] += b.c[i];
    return *this;
  }
  Octonion& operator-=(const Octonion& b) {
    for (int i = 0; i < 8; ++i) c[i] -= b.c[i];
    return *this;
  }
  friend bool operator==(const Octonion& a, const Octonion& b) { return a.c == b.c; }

  /// Octonionic conjugation: negates e_1..e_7.
  Octonion conj() const {
    Octonion r = -*this;
    r.c[0] = c[0];
    return r;
  }
  /// Coordinatewise complex conjugation (trivial over real coordinates).
  Octonion tau() const {
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c[i] = ScalarOps<F>::conj(c[i]);
    return r;
  }

  bool is_zero() const {
    for (const auto& x : c)
      if (!ScalarOps<F>::is_zero(x)) return false;
    return true;
  }
};

/// Symmetric bilinear pairing (x, y) = sum_i x_i y_i = (x conj(y) + y conj(x))/2.
template <class F>
F oct_bilinear(const Octonion<F>& a, const Octonion<F>& b) {
  F s = ScalarOps<F>::zero();
  for (int i = 0; i < 8; ++i) s += a.c[i] * b.c[i];
  return s;
}

}  // namespace e7

#endif
