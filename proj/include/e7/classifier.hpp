#ifndef E7_CLASSIFIER_HPP
#define E7_CLASSIFIER_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "e7/lie_basis.hpp"

namespace e7 {

enum class OrbitType { E7, E6, F4, SPIN11, SPIN10, SPIN9, SPIN8 };

const char* orbit_name(OrbitType t);      // "E6"
std::string orbit_quotient(OrbitType t);  // "E7/E6"
int stabilizer_dim_of(OrbitType t);       // 133, 78, 52, 55, 45, 36, 28
std::optional<OrbitType> orbit_from_stab_dim(int dim);

/// Normal-form multiset {r1, r2, r3, r}: entries sorted descending at their
/// original scale; normalized() is the max-1 view used for pattern matching;
/// tol is the relative tolerance the producer vouches for.
struct DiagonalForm {
  std::array<double, 4> entries{};
  double tol = 1e-6;

  DiagonalForm() = default;
  DiagonalForm(std::array<double, 4> e, double tolerance);

  std::array<double, 4> normalized() const;
  double max_entry() const { return entries[0]; }
};

/// Outcome of pattern matching with margin bookkeeping: margin is the worst
/// multiplicative separation between a zero/equality statistic and the
/// threshold (a ratio >= 1, infinite for exact statistics).  Inputs with a
/// statistic inside the band [eps/kAmbiguityBand, eps*kAmbiguityBand] are
/// flagged ambiguous and carry the label obtained by flipping the closest
/// decision.
inline constexpr double kAmbiguityBand = 4.0;

struct PatternDecision {
  OrbitType type = OrbitType::E7;
  std::optional<OrbitType> alternative;
  double margin = 0;
  bool ambiguous = false;
};

PatternDecision classify_multiset(const DiagonalForm& m, double eps);

/// F4-orbit sub-classifier: diagonal of a real Jordan element.
enum class JordanOrbit { F4, SPIN9, SPIN8 };
JordanOrbit classify_jordan(const std::array<double, 3>& diag, double eps);
const char* jordan_orbit_name(JordanOrbit t);  // "F4/F4" etc.

/// E6-orbit sub-classifier: complexified Jordan diagonal (nonnegative reals).
enum class JordanCOrbit { E6, F4, SPIN10, SPIN9, SPIN8 };
JordanCOrbit classify_jordanC(const std::array<double, 3>& diag, double eps);
const char* jordanC_orbit_name(JordanCOrbit t);  // "E6/Spin(10)" etc.

/// The four orbit invariants:
///   I1 = <P,P>, I2 = ||action of P x P||_HS^2, I3 = <T,T>, I4 = <T,P>.
/// I4 is complex for generic P (real on orbits of the normal forms).
template <class F>
struct InvariantSet {
  typename ScalarOps<F>::Real i1, i2, i3;
  F i4;
};

template <class F>
InvariantSet<F> invariants_of(const FreudenthalVector<F>& p) {
  using SO = ScalarOps<F>;
  InvariantSet<F> out;
  out.i1 = SO::real(herm_inner(p, p));

  const E7Tuple<F> pp = cross_p(p, p);
  typename SO::Real hs2 = out.i1 - out.i1;  // zero of the right type
  for (int j = 0; j < 56; ++j) {
    FreudenthalVector<F> ej;
    ej.coord(j) = SO::one();
    const FreudenthalVector<F> col = pp.apply(ej);
    for (int i = 0; i < 56; ++i) {
      const int gi = freudenthal_gram_weight(i), gj = freudenthal_gram_weight(j);
      typename SO::Real term = SO::abs2(col.coord(i));
      if (gi == 2 && gj == 1) term = term + term;
      if (gi == 1 && gj == 2) term = term / 2;
      hs2 += term;
    }
  }
  out.i2 = hs2;

  const FreudenthalVector<F> t = t_covariant(p);
  out.i3 = SO::real(herm_inner(t, t));
  out.i4 = herm_inner(t, p);
  return out;
}

/// Elementary symmetric functions e1..e4 of the squared multiset entries in
/// exact arithmetic, using the derived law I2 = 3 e2 (validated in float mode
/// by calibrate_hs).
std::array<Rational, 4> exact_elementary(const FreudenthalVector<ExactComplex>& p);

/// Least-squares fit of I2 = k1 e1^2 + k2 e2 over random diagonal forms.
struct HsCalibration {
  double kappa1 = 0, kappa2 = 3;
  double residual = 0;  // worst relative residual on the sample
  bool ok = false;
};
HsCalibration calibrate_hs(std::mt19937_64& rng, int n_samples = 60);

struct RecoveredMultiset {
  DiagonalForm form;
  std::array<double, 4> elementary{};  // e1..e4 fed to the quartic
  bool cancellation_warning = false;
};

/// Invariant path to the diagonal normal form: elementary symmetric
/// functions -> quartic -> sorted nonnegative roots.  Repeated roots are
/// clustered and averaged before the square root, which restores full
/// precision on multiple eigenvalue levels.  Throws std::runtime_error when
/// the quartic has roots that are complex or negative beyond tolerance.
RecoveredMultiset recover_multiset(const FreudenthalVector<cd>& p, const HsCalibration& calib);

struct ClassificationReport {
  OrbitType type = OrbitType::E7;
  std::array<double, 4> multiset{};
  int stab_dim = -1;
  double stab_gap = 0;
  double margin = 0;
  bool method_agreement = false;
  bool ambiguous = false;
  std::optional<OrbitType> invariant_type;  // empty when the path failed
  std::optional<OrbitType> stabilizer_type;
  std::vector<std::string> notes;
};

/// End-to-end orbit classification; the stabilizer dimension is
/// authoritative, the invariant path is the cross-check.
ClassificationReport classify(const FreudenthalVector<cd>& p, double eps,
                              const LieBasis& e7_basis, const HsCalibration& calib);

}  // namespace e7

#endif
