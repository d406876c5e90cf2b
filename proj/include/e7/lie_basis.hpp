#ifndef E7_LIE_BASIS_HPP
#define E7_LIE_BASIS_HPP

#include <random>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "e7/freudenthal.hpp"

namespace e7 {

using Mat56 = Eigen::Matrix<cd, 56, 56>;
using Vec56 = Eigen::Matrix<cd, 56, 1>;

Vec56 pack56(const FreudenthalVector<cd>& p);
FreudenthalVector<cd> unpack56(const Vec56& v);

/// Diagonal Gram matrix of <,> in flattened coordinates (entries 1 or 2).
const Eigen::Matrix<double, 56, 1>& gram56();

/// <v, w> with the Gram weights.
cd herm56(const Vec56& v, const Vec56& w);
double herm_norm56(const Vec56& v);

/// Real matrix of lambda; tau lambda acts as v -> L * conj(v).
const Mat56& lambda_matrix();

/// 56x56 matrix of the action of Phi(phi, A, B, nu).
Mat56 action_matrix(const E7Tuple<cd>& t);

/// Hilbert-Schmidt norm of M as an operator on (P^C, <,>).
double hs_norm(const Mat56& m);

/// Lie-algebra element carried both as a Phi-tuple and as its action matrix
/// (computed once at construction).
struct LieElement {
  E7Tuple<cd> tuple;
  Mat56 mat;

  explicit LieElement(E7Tuple<cd> t) : tuple(std::move(t)), mat(action_matrix(tuple)) {}
};

/// Residuals of the three group-membership conditions.
struct CertificateResiduals {
  double unitarity = 0;      // ||a* G a - G|| / ||G||
  double tau_lambda = 0;     // ||a L - L conj(a)|| / ||a||
  double equivariance = 0;   // worst probe-pair residual of a(PxQ)a^-1 = aP x aQ
  double worst() const;
  bool ok(double tol = 1e-9) const { return worst() <= tol; }
};

struct GroupElement {
  Mat56 mat;
  std::vector<std::string> provenance;
  CertificateResiduals cert;

  FreudenthalVector<cd> apply(const FreudenthalVector<cd>& p) const {
    return unpack56(mat * pack56(p));
  }
};

/// Inverse using unitarity with respect to <,>: a^-1 = G^-1 a* G.
Mat56 group_inverse(const Mat56& a);

/// Membership residuals of a 56x56 matrix, with n_pairs random probe pairs
/// for the x-equivariance condition.
CertificateResiduals certify(const Mat56& a, std::mt19937_64& rng, int n_pairs = 3);

/// exp(t B); throws if the certificate residuals exceed cert_tol.
GroupElement exp_element(const LieElement& b, double t, double cert_tol = 1e-9);

GroupElement identity_group_element();

/// Product u * v (u applied after v); certificates recomputed, not reused.
GroupElement compose(const GroupElement& u, const GroupElement& v, double cert_tol = 1e-9);

/// Numeric rank data of a rectangular real matrix.
struct RankCertificate {
  Eigen::VectorXd singular_values;
  int rank = 0;
  double gap = 0;  // sigma[rank-1] / sigma[rank], +inf at the ends
  double threshold = 0;
};
RankCertificate numeric_rank(const Eigen::MatrixXd& m, double rel_tol = 1e-8);

struct LieBasis {
  enum class Label { f4, e6, e7 };
  Label label;
  std::vector<LieElement> elements;
  RankCertificate certificate;

  int dim() const { return static_cast<int>(elements.size()); }
};

/// Derivation algebra of the 27-dimensional Jordan algebra: orthonormalized
/// span of commutators of multiplication operators; throws unless the rank
/// certificate gives exactly 52.
LieBasis build_f4_basis();
/// f4 extended by i·(traceless multiplications); rank 78.
LieBasis build_e6_basis();
/// e6 (with nu = 0) + {Phi(0, A, -tau A, 0)} + {Phi(0, 0, 0, i)}; rank 133.
LieBasis build_e7_basis();

/// Residuals of the compact-form conditions for an algebra element.
struct CompactnessResiduals {
  double skew_herm = 0;   // ||m* G + G m|| / ||m||
  double tau_lambda = 0;  // ||m L - L conj(m)|| / ||m||
};
CompactnessResiduals compactness_residuals(const LieElement& b);

enum class SubgroupLabel { E6, F4, Spin8, Spin9, Spin10, Spin11 };
const char* subgroup_name(SubgroupLabel s);

/// Every fixed-point condition the element satisfies within tol.
std::set<SubgroupLabel> subgroup_label(const GroupElement& a, double tol = 1e-9);

struct StabilizerResult {
  int dim = 0;
  double gap = 0;
  bool gap_ok = false;
  RankCertificate certificate;
};

/// dim{B in e7 | B P = 0} = 133 - rank of the 112x133 real coefficient matrix.
StabilizerResult stabilizer_dimension(const FreudenthalVector<cd>& p, const LieBasis& e7_basis);

GroupElement random_group_element(const LieBasis& e7_basis, std::mt19937_64& rng,
                                  int n_factors = 8);

FreudenthalVector<cd> random_orbit_sample(const LieBasis& e7_basis,
                                          const std::array<double, 4>& pattern,
                                          std::mt19937_64& rng);

/// Unit-scale random test vectors (complex standard normal coordinates).
JordanElement<cd> random_jordan(std::mt19937_64& rng);
FreudenthalVector<cd> random_freudenthal(std::mt19937_64& rng);

}  // namespace e7

#endif
