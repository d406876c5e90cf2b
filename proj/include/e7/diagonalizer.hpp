#ifndef E7_DIAGONALIZER_HPP
#define E7_DIAGONALIZER_HPP

#include "e7/classifier.hpp"

namespace e7 {

/// Objective of the diagonal normal form: sum of squared moduli of the
/// off-diagonal octonion parts of X, the imaginary parts of diag X, all of
/// Y, the imaginary part of xi and all of eta.  Zero iff P = (r1,r2,r3;r)
/// up to entry signs.
double off_form_energy(const FreudenthalVector<cd>& p);

struct ReductionConfig {
  double tol = 1e-12;
  double sweep_improvement = 1e-14;
  int max_sweeps = 500;
  int restarts = 8;
  std::uint64_t seed = 1;
};

struct ReductionFactor {
  enum class Kind { E7Exp, SU2 };
  Kind kind = Kind::E7Exp;
  int direction = 0;  // e7 basis index, or su2 one-parameter family 0..2
  double t = 0;
  SU2Matrix<cd> su2;  // filled for SU2 factors
};

struct ReductionResult {
  DiagonalForm diagonal;
  std::vector<ReductionFactor> transform;
  double residual = 0;
  int iterations = 0;  // completed sweeps
  bool certified = false;
  double norm_drift = 0;  // relative <P,P> drift across the factor product
  bool phase_absorbed = false;  // diagonal signs/phases discarded at the end
};

/// Cyclic Jacobi-style reduction over the 133 e7 directions and 3 su2
/// one-parameter families, with grid + golden-section line searches.
/// Sweeps first use only invariant-preserving moves (the algebra flows and
/// the global phase family), so the diagonal of an algebra-orbit sample is
/// the multiset pinned by the invariants; the remaining su2 rotations, which
/// keep the orbit type but slide the multiset, are enabled as a fallback.
ReductionResult reduce(const FreudenthalVector<cd>& p, const LieBasis& e7_basis,
                       const ReductionConfig& cfg = {});

struct ReductionVerification {
  bool ok = false;
  double replay_energy = 0;
  double diagonal_mismatch = 0;
  double norm_drift = 0;
  bool classification_match = false;
  std::string failure;  // first offending quantity, empty when ok
};

/// Replays result.transform against p and checks residual, the diagonal,
/// norm preservation and classification agreement.
ReductionVerification verify_reduction(const FreudenthalVector<cd>& p,
                                       const ReductionResult& result, const LieBasis& e7_basis,
                                       const HsCalibration& calib, double eps = 1e-6);

/// The three su2 one-parameter subgroups used by the reducer:
/// 0: (e^{it}, 0);  1: (cos t, sin t);  2: (cos t, i sin t).
SU2Matrix<cd> su2_direction(int which, double t);

}  // namespace e7

#endif
