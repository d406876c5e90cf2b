#ifndef E7_JORDAN_HPP
#define E7_JORDAN_HPP

#include <array>
#include <vector>

#include "e7/octonion.hpp"

namespace e7 {

// Coordinate layout of the 27-dimensional exceptional Jordan algebra: a
// hermitian 3x3 matrix over the (bi)octonions is stored as three diagonal
// entries d[0..2] and three octonions x[0..2], where x[k] sits in the
// (k+1, k+2) position (indices mod 3) and its conjugate is transposed.
// Flattened basis order: d1, d2, d3, then x1 coords e0..e7, x2, x3.
template <class F>
struct JordanElement {
  std::array<F, 3> d{};
  std::array<Octonion<F>, 3> x{};

  JordanElement() {
    for (auto& v : d) v = ScalarOps<F>::zero();
  }

  static JordanElement zero() { return JordanElement(); }
  static JordanElement identity() {
    JordanElement e;
    for (auto& v : e.d) v = ScalarOps<F>::one();
    return e;
  }
  /// Diagonal idempotent E_k (k = 0, 1, 2).
  static JordanElement diag_unit(int k) {
    JordanElement e;
    e.d[k] = ScalarOps<F>::one();
    return e;
  }
  static JordanElement diagonal(const F& a, const F& b, const F& c) {
    JordanElement e;
    e.d = {a, b, c};
    return e;
  }
  /// F_k(a): octonion a placed in off-diagonal slot k, zeros elsewhere.
  static JordanElement off_unit(int k, const Octonion<F>& a) {
    JordanElement e;
    e.x[k] = a;
    return e;
  }

  friend JordanElement operator+(const JordanElement& a, const JordanElement& b) {
    JordanElement r;
    for (int k = 0; k < 3; ++k) {
      r.d[k] = a.d[k] + b.d[k];
      r.x[k] = a.x[k] + b.x[k];
    }
    return r;
  }
  friend JordanElement operator-(const JordanElement& a, const JordanElement& b) {
    JordanElement r;
    for (int k = 0; k < 3; ++k) {
      r.d[k] = a.d[k] - b.d[k];
      r.x[k] = a.x[k] - b.x[k];
    }
    return r;
  }
  friend JordanElement operator-(const JordanElement& a) {
    JordanElement r;
    for (int k = 0; k < 3; ++k) {
      r.d[k] = -a.d[k];
      r.x[k] = -a.x[k];
    }
    return r;
  }
  friend JordanElement operator*(const F& s, const JordanElement& a) {
    JordanElement r;
    for (int k = 0; k < 3; ++k) {
      r.d[k] = s * a.d[k];
      r.x[k] = s * a.x[k];
    }
    return r;
  }
  JordanElement& operator+=(const JordanElement& b) {
    for (int k = 0; k < 3; ++k) {
      d[k] += b.d[k];
      x[k] += b.x[k];
    }
    return *this;
  }
  friend bool operator==(const JordanElement& a, const JordanElement& b) {
    return a.d == b.d && a.x == b.x;
  }

  /// Coordinatewise complex conjugation.
  JordanElement tau() const {
    JordanElement r;
    for (int k = 0; k < 3; ++k) {
      r.d[k] = ScalarOps<F>::conj(d[k]);
      r.x[k] = x[k].tau();
    }
    return r;
  }

  bool is_zero() const {
    for (int k = 0; k < 3; ++k)
      if (!ScalarOps<F>::is_zero(d[k]) || !x[k].is_zero()) return false;
    return true;
  }

  F& coord(int i) {
    return i < 3 ? d[i] : x[(i - 3) / 8].c[(i - 3) % 8];
  }
  const F& coord(int i) const {
    return i < 3 ? d[i] : x[(i - 3) / 8].c[(i - 3) % 8];
  }
};

/// Jordan product X o Y = (XY + YX)/2 of the underlying hermitian matrices,
/// written out on the (d, x) coordinates.
template <class F>
JordanElement<F> jordan_mul(const JordanElement<F>& a, const JordanElement<F>& b) {
  const F half = ScalarOps<F>::from_ratio(1, 2);
  JordanElement<F> r;
  for (int k = 0; k < 3; ++k) {
    const int k1 = (k + 1) % 3, k2 = (k + 2) % 3;
    r.d[k] = a.d[k] * b.d[k] + oct_bilinear(a.x[k1], b.x[k1]) + oct_bilinear(a.x[k2], b.x[k2]);
    Octonion<F> off = (a.d[k1] + a.d[k2]) * b.x[k] + (b.d[k1] + b.d[k2]) * a.x[k] +
                      (a.x[k1] * b.x[k2] + b.x[k1] * a.x[k2]).conj();
    r.x[k] = half * off;
  }
  return r;
}

template <class F>
F jordan_trace(const JordanElement<F>& a) {
  return a.d[0] + a.d[1] + a.d[2];
}

/// Trace form (X, Y) = tr(X o Y); symmetric and C-bilinear.
template <class F>
F jordan_inner(const JordanElement<F>& a, const JordanElement<F>& b) {
  F s = a.d[0] * b.d[0] + a.d[1] * b.d[1] + a.d[2] * b.d[2];
  F t = ScalarOps<F>::zero();
  for (int k = 0; k < 3; ++k) t += oct_bilinear(a.x[k], b.x[k]);
  return s + t + t;
}

/// Hermitian form <X, Y> = (tau X, Y); positive definite.
template <class F>
F jordan_herm(const JordanElement<F>& a, const JordanElement<F>& b) {
  return jordan_inner(a.tau(), b);
}

/// Freudenthal cross product
///   X x Y = (2 X o Y - tr(X) Y - tr(Y) X + (tr(X) tr(Y) - (X, Y)) E) / 2.
template <class F>
JordanElement<F> jordan_cross(const JordanElement<F>& a, const JordanElement<F>& b);

/// det X = (X, X x X) / 3.
template <class F>
F jordan_det(const JordanElement<F>& a) {
  return ScalarOps<F>::from_ratio(1, 3) * jordan_inner(a, jordan_cross(a, a));
}

// --- fault injection -------------------------------------------------------
//
// Test-only knobs that scale pinned structure constants by small exact
// ratios, so verification suites can demonstrate sensitivity.  Off (1/1) by
// default; not meant to be toggled concurrently with other work.

enum class FaultKnob { jordan_cross_half, cross_phi, cross_a, cross_b, cross_nu };

namespace detail {
inline std::array<std::pair<long, long>, 5>& fault_ratios() {
  static std::array<std::pair<long, long>, 5> r = {
      {{1, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}}};
  return r;
}
}  // namespace detail

inline void inject_fault(FaultKnob k, long num = 101, long den = 100) {
  detail::fault_ratios()[static_cast<int>(k)] = {num, den};
}
inline void clear_faults() {
  for (auto& r : detail::fault_ratios()) r = {1, 1};
}
template <class F>
F fault_factor(FaultKnob k) {
  const auto& r = detail::fault_ratios()[static_cast<int>(k)];
  return ScalarOps<F>::from_ratio(r.first, r.second);
}

template <class F>
JordanElement<F> jordan_cross(const JordanElement<F>& a, const JordanElement<F>& b) {
  const F half = ScalarOps<F>::from_ratio(1, 2) * fault_factor<F>(FaultKnob::jordan_cross_half);
  const F tra = jordan_trace(a), trb = jordan_trace(b);
  JordanElement<F> r = jordan_mul(a, b) + jordan_mul(a, b);
  r = r - (trb * a + tra * b);
  const F c = tra * trb - jordan_inner(a, b);
  r.d[0] += c;
  r.d[1] += c;
  r.d[2] += c;
  return half * r;
}

// --- linear operators on the 27-dimensional algebra ------------------------

/// Gram weight of flattened coordinate i under the trace form: the basis
/// E_1..E_3, F_k(e_i) is orthogonal with (E_k, E_k) = 1 and (F, F) = 2.
inline int jordan_gram_weight(int i) { return i < 3 ? 1 : 2; }

/// Dense 27x27 matrix acting on flattened Jordan coordinates (row-major).
template <class F>
struct JordanOperator {
  std::vector<F> m;  // 27*27 entries

  JordanOperator() : m(27 * 27, ScalarOps<F>::zero()) {}

  static JordanOperator zero() { return JordanOperator(); }
  static JordanOperator identity() {
    JordanOperator op;
    for (int i = 0; i < 27; ++i) op.at(i, i) = ScalarOps<F>::one();
    return op;
  }

  F& at(int i, int j) { return m[i * 27 + j]; }
  const F& at(int i, int j) const { return m[i * 27 + j]; }

  JordanElement<F> apply(const JordanElement<F>& v) const {
    JordanElement<F> r;
    for (int i = 0; i < 27; ++i) {
      F s = ScalarOps<F>::zero();
      for (int j = 0; j < 27; ++j) {
        const F& vj = v.coord(j);
        if (!ScalarOps<F>::is_zero(m[i * 27 + j])) s += m[i * 27 + j] * vj;
      }
      r.coord(i) = s;
    }
    return r;
  }

  friend JordanOperator operator+(const JordanOperator& a, const JordanOperator& b) {
    JordanOperator r;
    for (int i = 0; i < 27 * 27; ++i) r.m[i] = a.m[i] + b.m[i];
    return r;
  }
  friend JordanOperator operator-(const JordanOperator& a, const JordanOperator& b) {
    JordanOperator r;
    for (int i = 0; i < 27 * 27; ++i) r.m[i] = a.m[i] - b.m[i];
    return r;
  }
  friend JordanOperator operator-(const JordanOperator& a) {
    JordanOperator r;
    for (int i = 0; i < 27 * 27; ++i) r.m[i] = -a.m[i];
    return r;
  }
  friend JordanOperator operator*(const F& s, const JordanOperator& a) {
    JordanOperator r;
    for (int i = 0; i < 27 * 27; ++i) r.m[i] = s * a.m[i];
    return r;
  }
  friend JordanOperator operator*(const JordanOperator& a, const JordanOperator& b) {
    JordanOperator r;
    for (int i = 0; i < 27; ++i)
      for (int k = 0; k < 27; ++k) {
        const F& aik = a.m[i * 27 + k];
        if (ScalarOps<F>::is_zero(aik)) continue;
        for (int j = 0; j < 27; ++j) r.m[i * 27 + j] += aik * b.m[k * 27 + j];
      }
    return r;
  }
  friend bool operator==(const JordanOperator& a, const JordanOperator& b) {
    return a.m == b.m;
  }

  bool is_zero() const {
    for (const auto& v : m)
      if (!ScalarOps<F>::is_zero(v)) return false;
    return true;
  }

  /// Transpose with respect to the trace form: tM = G^{-1} M^T G.
  JordanOperator transpose_inner() const {
    JordanOperator r;
    for (int i = 0; i < 27; ++i)
      for (int j = 0; j < 27; ++j) {
        F v = at(j, i);
        const int gi = jordan_gram_weight(i), gj = jordan_gram_weight(j);
        if (gj == 2 && gi == 1) v = v + v;
        if (gj == 1 && gi == 2) v = ScalarOps<F>::from_ratio(1, 2) * v;
        r.at(i, j) = v;
      }
    return r;
  }

  /// Entrywise complex conjugate, so tau o M o tau.
  JordanOperator conj() const {
    JordanOperator r;
    for (int i = 0; i < 27 * 27; ++i) r.m[i] = ScalarOps<F>::conj(m[i]);
    return r;
  }
};

template <class F>
JordanOperator<F> commutator(const JordanOperator<F>& a, const JordanOperator<F>& b) {
  return a * b - b * a;
}

/// Left multiplication operator tilde{X}: Y -> X o Y.
template <class F>
JordanOperator<F> mult_operator(const JordanElement<F>& a) {
  JordanOperator<F> op;
  for (int j = 0; j < 27; ++j) {
    JordanElement<F> ej;
    ej.coord(j) = ScalarOps<F>::one();
    JordanElement<F> col = jordan_mul(a, ej);
    for (int i = 0; i < 27; ++i) op.at(i, j) = col.coord(i);
  }
  return op;
}

/// X vee W = [tilde X, tilde W] + (X o W - (X, W)/3 E)~ ; spans e6^C.
template <class F>
JordanOperator<F> jordan_vee(const JordanElement<F>& a, const JordanElement<F>& b) {
  JordanOperator<F> ta = mult_operator(a), tb = mult_operator(b);
  JordanElement<F> s = jordan_mul(a, b);
  const F c = ScalarOps<F>::from_ratio(1, 3) * jordan_inner(a, b);
  s.d[0] -= c;
  s.d[1] -= c;
  s.d[2] -= c;
  return commutator(ta, tb) + mult_operator(s);
}

}  // namespace e7

#endif
