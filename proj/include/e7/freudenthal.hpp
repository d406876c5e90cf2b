#ifndef E7_FREUDENTHAL_HPP
#define E7_FREUDENTHAL_HPP

#include "e7/jordan.hpp"

namespace e7 {

// 56-dimensional Freudenthal vector space: pairs of Jordan elements plus two
// scalars.  Flattened coordinate order: X (0..26), Y (27..53), xi (54),
// eta (55).
template <class F>
struct FreudenthalVector {
  JordanElement<F> X, Y;
  F xi = ScalarOps<F>::zero();
  F eta = ScalarOps<F>::zero();

  FreudenthalVector() = default;
  FreudenthalVector(JordanElement<F> x, JordanElement<F> y, F s, F t)
      : X(std::move(x)), Y(std::move(y)), xi(std::move(s)), eta(std::move(t)) {}

  static FreudenthalVector zero() { return FreudenthalVector(); }

  friend FreudenthalVector operator+(const FreudenthalVector& a, const FreudenthalVector& b) {
    return {a.X + b.X, a.Y + b.Y, a.xi + b.xi, a.eta + b.eta};
  }
  friend FreudenthalVector operator-(const FreudenthalVector& a, const FreudenthalVector& b) {
    return {a.X - b.X, a.Y - b.Y, a.xi - b.xi, a.eta - b.eta};
  }
  friend FreudenthalVector operator-(const FreudenthalVector& a) {
    return {-a.X, -a.Y, -a.xi, -a.eta};
  }
  friend FreudenthalVector operator*(const F& s, const FreudenthalVector& a) {
    return {s * a.X, s * a.Y, s * a.xi, s * a.eta};
  }
  friend bool operator==(const FreudenthalVector& a, const FreudenthalVector& b) {
    return a.X == b.X && a.Y == b.Y && a.xi == b.xi && a.eta == b.eta;
  }

  bool is_zero() const {
    return X.is_zero() && Y.is_zero() && ScalarOps<F>::is_zero(xi) &&
           ScalarOps<F>::is_zero(eta);
  }

  F& coord(int i) {
    if (i < 27) return X.coord(i);
    if (i < 54) return Y.coord(i - 27);
    return i == 54 ? xi : eta;
  }
  const F& coord(int i) const {
    if (i < 27) return X.coord(i);
    if (i < 54) return Y.coord(i - 27);
    return i == 54 ? xi : eta;
  }
};

/// lambda(X, Y, xi, eta) = (Y, -X, eta, -xi); lambda^2 = -id.
template <class F>
FreudenthalVector<F> lambda_map(const FreudenthalVector<F>& p) {
  return {p.Y, -p.X, p.eta, -p.xi};
}

/// Coordinatewise complex conjugation.
template <class F>
FreudenthalVector<F> tau_map(const FreudenthalVector<F>& p) {
  return {p.X.tau(), p.Y.tau(), ScalarOps<F>::conj(p.xi), ScalarOps<F>::conj(p.eta)};
}

/// Skew symplectic form {P, Q} = (X, W) - (Z, Y) + xi omega - zeta eta.
template <class F>
F symplectic(const FreudenthalVector<F>& p, const FreudenthalVector<F>& q) {
  return jordan_inner(p.X, q.Y) - jordan_inner(q.X, p.Y) + p.xi * q.eta - q.xi * p.eta;
}

/// Positive hermitian form <P, Q> = {tau lambda P, Q}.
template <class F>
F herm_inner(const FreudenthalVector<F>& p, const FreudenthalVector<F>& q) {
  return jordan_herm(p.X, q.X) + jordan_herm(p.Y, q.Y) +
         ScalarOps<F>::conj(p.xi) * q.xi + ScalarOps<F>::conj(p.eta) * q.eta;
}

/// Gram weight of flattened coordinate i under <,>.
inline int freudenthal_gram_weight(int i) {
  if (i >= 54) return 1;
  return jordan_gram_weight(i % 27);
}

// --- elements of the complexified Lie algebra -------------------------------

/// Phi(phi, A, B, nu) with phi in e6^C, A, B Jordan elements and nu a scalar:
///   X' = phi X - (nu/3) X + 2 B x Y + eta A
///   Y' = -tphi Y + (nu/3) Y + 2 A x X + xi B
///   xi' = (A, Y) + nu xi
///   eta' = (B, X) - nu eta
/// where tphi is the transpose of phi with respect to the trace form.
template <class F>
struct E7Tuple {
  JordanOperator<F> phi;
  JordanElement<F> A, B;
  F nu = ScalarOps<F>::zero();

  E7Tuple() = default;
  E7Tuple(JordanOperator<F> f, JordanElement<F> a, JordanElement<F> b, F n)
      : phi(std::move(f)), A(std::move(a)), B(std::move(b)), nu(std::move(n)) {}

  static E7Tuple zero() { return E7Tuple(); }

  FreudenthalVector<F> apply(const FreudenthalVector<F>& p) const {
    const F third = ScalarOps<F>::from_ratio(1, 3);
    const JordanOperator<F> tphi = phi.transpose_inner();
    FreudenthalVector<F> r;
    r.X = phi.apply(p.X) - (third * nu) * p.X + ScalarOps<F>::from_int(2) * jordan_cross(B, p.Y) +
          p.eta * A;
    r.Y = -tphi.apply(p.Y) + (third * nu) * p.Y + ScalarOps<F>::from_int(2) * jordan_cross(A, p.X) +
          p.xi * B;
    r.xi = jordan_inner(A, p.Y) + nu * p.xi;
    r.eta = jordan_inner(B, p.X) - nu * p.eta;
    return r;
  }

  friend E7Tuple operator+(const E7Tuple& a, const E7Tuple& b) {
    return {a.phi + b.phi, a.A + b.A, a.B + b.B, a.nu + b.nu};
  }
  friend E7Tuple operator-(const E7Tuple& a, const E7Tuple& b) {
    return {a.phi - b.phi, a.A - b.A, a.B - b.B, a.nu - b.nu};
  }
  friend E7Tuple operator*(const F& s, const E7Tuple& a) {
    return {s * a.phi, s * a.A, s * a.B, s * a.nu};
  }

  bool is_zero() const {
    return phi.is_zero() && A.is_zero() && B.is_zero() && ScalarOps<F>::is_zero(nu);
  }
};

/// Freudenthal cross P x Q, an element of e7^C:
///   phi = -(X vee W + Z vee Y) / 2
///   A   = -(2 Y x W - xi Z - zeta X) / 4
///   B   =  (2 X x Z - eta W - omega Y) / 4
///   nu  =  ((X, W) + (Z, Y) - 3 (xi omega + zeta eta)) / 8
/// for P = (X, Y, xi, eta), Q = (Z, W, zeta, omega).
template <class F>
E7Tuple<F> cross_p(const FreudenthalVector<F>& p, const FreudenthalVector<F>& q) {
  const F half = ScalarOps<F>::from_ratio(1, 2);
  const F quarter = ScalarOps<F>::from_ratio(1, 4);
  const F eighth = ScalarOps<F>::from_ratio(1, 8);
  const F two = ScalarOps<F>::from_int(2);
  const F three = ScalarOps<F>::from_int(3);

  E7Tuple<F> t;
  t.phi = (-half * fault_factor<F>(FaultKnob::cross_phi)) *
          (jordan_vee(p.X, q.Y) + jordan_vee(q.X, p.Y));
  t.A = (-quarter * fault_factor<F>(FaultKnob::cross_a)) *
        (two * jordan_cross(p.Y, q.Y) - p.xi * q.X - q.xi * p.X);
  t.B = (quarter * fault_factor<F>(FaultKnob::cross_b)) *
        (two * jordan_cross(p.X, q.X) - p.eta * q.Y - q.eta * p.Y);
  t.nu = (eighth * fault_factor<F>(FaultKnob::cross_nu)) *
         (jordan_inner(p.X, q.Y) + jordan_inner(q.X, p.Y) -
          three * (p.xi * q.eta + q.xi * p.eta));
  return t;
}

/// T(P) = tau lambda ((P x P) P); cubic covariant.
template <class F>
FreudenthalVector<F> t_covariant(const FreudenthalVector<F>& p) {
  return tau_map(lambda_map(cross_p(p, p).apply(p)));
}

/// S(P) = (P x P) (tau lambda P).
template <class F>
FreudenthalVector<F> s_covariant(const FreudenthalVector<F>& p) {
  return cross_p(p, p).apply(tau_map(lambda_map(p)));
}

// --- distinguished vectors ---------------------------------------------------

/// Diagonal vector (diag(r1, r2, r3), 0, r, 0).
template <class F>
FreudenthalVector<F> diagonal_vector(const F& r1, const F& r2, const F& r3, const F& r) {
  return {JordanElement<F>::diagonal(r1, r2, r3), JordanElement<F>::zero(), r,
          ScalarOps<F>::zero()};
}

// --- the SU(2) block action --------------------------------------------------

/// Unit pair (a, b), acting on the Freudenthal space through
///   phi(A)(X, Y, xi, eta) = (a X + tau(b Y), a Y - tau(b X),
///                            a xi + tau(b eta), a eta - tau(b xi))
/// i.e. the 2x2 block matrix ((a, -tau b), (b, tau a)) mixing the
/// (X, xi)-column with the (Y, eta)-column.
template <class F>
struct SU2Matrix {
  F a, b;

  SU2Matrix() : a(ScalarOps<F>::one()), b(ScalarOps<F>::zero()) {}
  SU2Matrix(F a_, F b_) : a(std::move(a_)), b(std::move(b_)) {}

  static SU2Matrix identity() { return SU2Matrix(); }

  /// |a|^2 + |b|^2 (should be 1 for a group element).
  typename ScalarOps<F>::Real norm2() const {
    return ScalarOps<F>::abs2(a) + ScalarOps<F>::abs2(b);
  }

  FreudenthalVector<F> apply(const FreudenthalVector<F>& p) const {
    const F tb = ScalarOps<F>::conj(b);
    FreudenthalVector<F> r;
    r.X = a * p.X + tb * p.Y.tau();
    r.Y = a * p.Y - tb * p.X.tau();
    r.xi = a * p.xi + tb * ScalarOps<F>::conj(p.eta);
    r.eta = a * p.eta - tb * ScalarOps<F>::conj(p.xi);
    return r;
  }

  /// Group law matching apply(compose(u, v), p) = u.apply(v.apply(p));
  /// identical to the 2x2 matrix product of the (a, b) forms.
  friend SU2Matrix compose(const SU2Matrix& u, const SU2Matrix& v) {
    return {u.a * v.a - ScalarOps<F>::conj(u.b) * v.b,
            v.a * u.b + ScalarOps<F>::conj(u.a) * v.b};
  }
};

}  // namespace e7

#endif
