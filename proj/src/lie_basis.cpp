#include "e7/lie_basis.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

namespace e7 {

Vec56 pack56(const FreudenthalVector<cd>& p) {
  Vec56 v;
  for (int i = 0; i < 56; ++i) v(i) = p.coord(i);
  return v;
}

FreudenthalVector<cd> unpack56(const Vec56& v) {
  FreudenthalVector<cd> p;
  for (int i = 0; i < 56; ++i) p.coord(i) = v(i);
  return p;
}

const Eigen::Matrix<double, 56, 1>& gram56() {
  static const Eigen::Matrix<double, 56, 1> g = [] {
    Eigen::Matrix<double, 56, 1> w;
    for (int i = 0; i < 56; ++i) w(i) = freudenthal_gram_weight(i);
    return w;
  }();
  return g;
}

cd herm56(const Vec56& v, const Vec56& w) {
  cd s = 0;
  for (int i = 0; i < 56; ++i) s += gram56()(i) * std::conj(v(i)) * w(i);
  return s;
}

double herm_norm56(const Vec56& v) { return std::sqrt(std::real(herm56(v, v))); }

const Mat56& lambda_matrix() {
  static const Mat56 l = [] {
    Mat56 m = Mat56::Zero();
    for (int i = 0; i < 27; ++i) {
      m(i, 27 + i) = 1.0;   // X' = Y
      m(27 + i, i) = -1.0;  // Y' = -X
    }
    m(54, 55) = 1.0;
    m(55, 54) = -1.0;
    return m;
  }();
  return l;
}

Mat56 action_matrix(const E7Tuple<cd>& t) {
  Mat56 m;
  for (int j = 0; j < 56; ++j) {
    FreudenthalVector<cd> ej;
    ej.coord(j) = 1.0;
    const FreudenthalVector<cd> col = t.apply(ej);
    for (int i = 0; i < 56; ++i) m(i, j) = col.coord(i);
  }
  return m;
}

double hs_norm(const Mat56& m) {
  double s = 0;
  const auto& g = gram56();
  for (int i = 0; i < 56; ++i)
    for (int j = 0; j < 56; ++j) s += g(i) / g(j) * std::norm(m(i, j));
  return std::sqrt(s);
}

double CertificateResiduals::worst() const {
  return std::max(unitarity, std::max(tau_lambda, equivariance));
}

Mat56 group_inverse(const Mat56& a) {
  const auto& g = gram56();
  Mat56 inv;
  for (int i = 0; i < 56; ++i)
    for (int j = 0; j < 56; ++j) inv(i, j) = std::conj(a(j, i)) * (g(j) / g(i));
  return inv;
}

JordanElement<cd> random_jordan(std::mt19937_64& rng) {
  std::normal_distribution<double> n01;
  JordanElement<cd> x;
  const double scale = 1.0 / std::sqrt(2.0 * 51.0);
  for (int i = 0; i < 27; ++i) x.coord(i) = scale * cd(n01(rng), n01(rng));
  return x;
}

FreudenthalVector<cd> random_freudenthal(std::mt19937_64& rng) {
  std::normal_distribution<double> n01;
  FreudenthalVector<cd> p;
  const double scale = 1.0 / std::sqrt(2.0 * 104.0);
  for (int i = 0; i < 56; ++i) p.coord(i) = scale * cd(n01(rng), n01(rng));
  return p;
}

CertificateResiduals certify(const Mat56& a, std::mt19937_64& rng, int n_pairs) {
  CertificateResiduals r;
  const auto& g = gram56();

  Mat56 gm;  // a* G a - G
  for (int i = 0; i < 56; ++i)
    for (int j = 0; j < 56; ++j) {
      cd s = 0;
      for (int k = 0; k < 56; ++k) s += std::conj(a(k, i)) * g(k) * a(k, j);
      gm(i, j) = s - (i == j ? cd(g(i)) : cd(0));
    }
  r.unitarity = gm.norm() / gram56().norm();

  const Mat56& l = lambda_matrix();
  r.tau_lambda = (a * l - l * a.conjugate()).norm() / a.norm();

  const Mat56 ainv = group_inverse(a);
  for (int k = 0; k < n_pairs; ++k) {
    const FreudenthalVector<cd> p = random_freudenthal(rng);
    const FreudenthalVector<cd> q = random_freudenthal(rng);
    const Mat56 lhs = a * action_matrix(cross_p(p, q)) * ainv;
    const FreudenthalVector<cd> ap = unpack56(a * pack56(p));
    const FreudenthalVector<cd> aq = unpack56(a * pack56(q));
    const Mat56 rhs = action_matrix(cross_p(ap, aq));
    const double res = (lhs - rhs).norm() / (1.0 + rhs.norm());
    r.equivariance = std::max(r.equivariance, res);
  }
  return r;
}

namespace {
Mat56 raw_exp(const Mat56& m) { return m.exp(); }

GroupElement make_certified(Mat56 mat, std::vector<std::string> provenance, double cert_tol) {
  std::mt19937_64 rng(0x5eed5eedULL);
  GroupElement ge{std::move(mat), std::move(provenance), {}};
  ge.cert = certify(ge.mat, rng);
  if (!ge.cert.ok(cert_tol))
    throw std::runtime_error("group element failed certification (residual " +
                             std::to_string(ge.cert.worst()) + ")");
  return ge;
}
}  // namespace

GroupElement exp_element(const LieElement& b, double t, double cert_tol) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "exp(%+.17g*B)", t);
  return make_certified(raw_exp(t * b.mat), {buf}, cert_tol);
}

GroupElement identity_group_element() {
  return GroupElement{Mat56::Identity(), {"id"}, {}};
}

GroupElement compose(const GroupElement& u, const GroupElement& v, double cert_tol) {
  std::vector<std::string> prov = u.provenance;
  prov.insert(prov.end(), v.provenance.begin(), v.provenance.end());
  return make_certified(u.mat * v.mat, std::move(prov), cert_tol);
}

RankCertificate numeric_rank(const Eigen::MatrixXd& m, double rel_tol) {
  RankCertificate c;
  // JacobiSVD: BDCSVD mis-resolves the highly degenerate spectra that show up
  // here (clusters of equal singular values), corrupting the small tail.
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  c.singular_values = svd.singularValues();
  const double smax = c.singular_values.size() ? c.singular_values(0) : 0.0;
  c.threshold = rel_tol * smax;
  c.rank = 0;
  for (int i = 0; i < c.singular_values.size(); ++i)
    if (c.singular_values(i) > c.threshold) ++c.rank;
  const double inf = std::numeric_limits<double>::infinity();
  if (c.rank == 0 || c.rank == c.singular_values.size())
    c.gap = inf;
  else {
    const double below = c.singular_values(c.rank);
    c.gap = below == 0 ? inf : c.singular_values(c.rank - 1) / below;
  }
  return c;
}

namespace {

JordanElement<cd> jordan_basis_element(int i) {
  JordanElement<cd> e;
  e.coord(i) = 1.0;
  return e;
}

LieElement normalized(E7Tuple<cd> t) {
  LieElement e(std::move(t));
  const double n = hs_norm(e.mat);
  e.tuple = cd(1.0 / n, 0.0) * e.tuple;
  e.mat /= n;
  return e;
}

Eigen::VectorXd vectorize_real27(const JordanOperator<cd>& op) {
  Eigen::VectorXd v(27 * 27);
  for (int i = 0; i < 27 * 27; ++i) v(i) = op.m[i].real();
  return v;
}

}  // namespace

LieBasis build_f4_basis() {
  std::vector<JordanOperator<cd>> mult(27);
  for (int i = 0; i < 27; ++i) mult[i] = mult_operator(jordan_basis_element(i));

  Eigen::MatrixXd rows(27 * 26 / 2, 27 * 27);
  int r = 0;
  for (int i = 0; i < 27; ++i)
    for (int j = i + 1; j < 27; ++j) rows.row(r++) = vectorize_real27(commutator(mult[i], mult[j]));

  // JacobiSVD, not BDCSVD: the commutator spectrum has a four-fold degenerate
  // cluster on which BDCSVD returns vectors with |A v - s u| = O(1).
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(rows, Eigen::ComputeThinV);
  RankCertificate cert;
  cert.singular_values = svd.singularValues();
  cert.threshold = 1e-8 * cert.singular_values(0);
  cert.rank = 0;
  for (int i = 0; i < cert.singular_values.size(); ++i)
    if (cert.singular_values(i) > cert.threshold) ++cert.rank;
  cert.gap = cert.rank < cert.singular_values.size() && cert.singular_values(cert.rank) > 0
                 ? cert.singular_values(cert.rank - 1) / cert.singular_values(cert.rank)
                 : std::numeric_limits<double>::infinity();
  if (cert.rank != 52)
    throw std::runtime_error("f4 rank certificate failed: rank " + std::to_string(cert.rank));

  LieBasis basis;
  basis.label = LieBasis::Label::f4;
  basis.certificate = cert;
  for (int k = 0; k < 52; ++k) {
    JordanOperator<cd> d;
    for (int i = 0; i < 27 * 27; ++i) d.m[i] = svd.matrixV().col(k)(i);
    basis.elements.push_back(normalized(E7Tuple<cd>(d, {}, {}, cd(0))));
  }
  return basis;
}

namespace {

std::vector<JordanElement<cd>> traceless_real_basis() {
  std::vector<JordanElement<cd>> out;
  JordanElement<cd> d1, d2;
  d1.d = {cd(1), cd(-1), cd(0)};
  d2.d = {cd(0), cd(1), cd(-1)};
  out.push_back(d1);
  out.push_back(d2);
  for (int i = 3; i < 27; ++i) out.push_back(jordan_basis_element(i));
  return out;
}

}  // namespace

LieBasis build_e6_basis() {
  LieBasis basis = build_f4_basis();
  basis.label = LieBasis::Label::e6;

  const cd iu(0.0, 1.0);
  for (const auto& a : traceless_real_basis())
    basis.elements.push_back(normalized(E7Tuple<cd>(iu * mult_operator(a), {}, {}, cd(0))));

  Eigen::MatrixXd rows(static_cast<int>(basis.elements.size()), 2 * 27 * 27);
  for (int k = 0; k < rows.rows(); ++k) {
    const auto& phi = basis.elements[k].tuple.phi;
    for (int i = 0; i < 27 * 27; ++i) {
      rows(k, 2 * i) = phi.m[i].real();
      rows(k, 2 * i + 1) = phi.m[i].imag();
    }
  }
  basis.certificate = numeric_rank(rows);
  if (basis.certificate.rank != 78)
    throw std::runtime_error("e6 rank certificate failed: rank " +
                             std::to_string(basis.certificate.rank));
  return basis;
}

LieBasis build_e7_basis() {
  LieBasis basis = build_e6_basis();
  basis.label = LieBasis::Label::e7;

  const cd iu(0.0, 1.0);
  for (int i = 0; i < 27; ++i) {
    const JordanElement<cd> a = jordan_basis_element(i);
    // A real: Phi(0, A, -A, 0); A imaginary: tau(iA) = -iA, so B = +iA.
    basis.elements.push_back(normalized(E7Tuple<cd>({}, a, -a, cd(0))));
    basis.elements.push_back(normalized(E7Tuple<cd>({}, iu * a, iu * a, cd(0))));
  }
  basis.elements.push_back(normalized(E7Tuple<cd>({}, {}, {}, iu)));

  for (auto& e : basis.elements) {  // uniform scale across the three layers
    const double n = hs_norm(e.mat);
    e.tuple = cd(1.0 / n, 0.0) * e.tuple;
    e.mat /= n;
  }

  Eigen::MatrixXd rows(static_cast<int>(basis.elements.size()), 2 * 56 * 56);
  for (int k = 0; k < rows.rows(); ++k) {
    const Mat56& m = basis.elements[k].mat;
    for (int i = 0; i < 56; ++i)
      for (int j = 0; j < 56; ++j) {
        rows(k, 2 * (i * 56 + j)) = m(i, j).real();
        rows(k, 2 * (i * 56 + j) + 1) = m(i, j).imag();
      }
  }
  basis.certificate = numeric_rank(rows);
  if (basis.certificate.rank != 133)
    throw std::runtime_error("e7 rank certificate failed: rank " +
                             std::to_string(basis.certificate.rank));
  return basis;
}

CompactnessResiduals compactness_residuals(const LieElement& b) {
  CompactnessResiduals r;
  const auto& g = gram56();
  Mat56 sk;  // m* G + G m
  for (int i = 0; i < 56; ++i)
    for (int j = 0; j < 56; ++j) sk(i, j) = std::conj(b.mat(j, i)) * g(j) + g(i) * b.mat(i, j);
  r.skew_herm = sk.norm() / b.mat.norm();
  const Mat56& l = lambda_matrix();
  r.tau_lambda = (b.mat * l - l * b.mat.conjugate()).norm() / b.mat.norm();
  return r;
}

const char* subgroup_name(SubgroupLabel s) {
  switch (s) {
    case SubgroupLabel::E6: return "E6";
    case SubgroupLabel::F4: return "F4";
    case SubgroupLabel::Spin8: return "Spin(8)";
    case SubgroupLabel::Spin9: return "Spin(9)";
    case SubgroupLabel::Spin10: return "Spin(10)";
    case SubgroupLabel::Spin11: return "Spin(11)";
  }
  return "?";
}

namespace {

FreudenthalVector<cd> jordan_probe(int diag_count) {
  FreudenthalVector<cd> p;
  for (int k = 0; k < diag_count; ++k) p.X.d[k] = 1.0;
  return p;
}

bool fixes(const GroupElement& a, const FreudenthalVector<cd>& p, double tol) {
  const Vec56 v = pack56(p);
  return (a.mat * v - v).norm() <= tol * v.norm();
}

}  // namespace

std::set<SubgroupLabel> subgroup_label(const GroupElement& a, double tol) {
  std::set<SubgroupLabel> out;
  FreudenthalVector<cd> one_slot;  // (0, 0, 1, 0)
  one_slot.xi = 1.0;
  const bool e6 = fixes(a, one_slot, tol);
  if (e6) out.insert(SubgroupLabel::E6);

  const bool f4 = e6 && fixes(a, jordan_probe(3), tol);
  if (f4) out.insert(SubgroupLabel::F4);

  FreudenthalVector<cd> e1;  // (E1, 0, 0, 0)
  e1.X.d[0] = 1.0;
  const bool fix_e1 = fixes(a, e1, tol);
  if (f4 && fix_e1) out.insert(SubgroupLabel::Spin9);
  if (e6 && fix_e1) out.insert(SubgroupLabel::Spin10);

  if (f4 && fix_e1) {
    FreudenthalVector<cd> e2, e3;
    e2.X.d[1] = 1.0;
    e3.X.d[2] = 1.0;
    if (fixes(a, e2, tol) && fixes(a, e3, tol)) out.insert(SubgroupLabel::Spin8);
  }

  FreudenthalVector<cd> spin11_probe = e1;  // (E1, 0, 1, 0)
  spin11_probe.xi = 1.0;
  if (fixes(a, spin11_probe, tol)) out.insert(SubgroupLabel::Spin11);
  return out;
}

StabilizerResult stabilizer_dimension(const FreudenthalVector<cd>& p, const LieBasis& e7_basis) {
  const Vec56 v = pack56(p);
  Eigen::MatrixXd m(112, e7_basis.dim());
  for (int k = 0; k < e7_basis.dim(); ++k) {
    const Vec56 w = e7_basis.elements[k].mat * v;
    for (int i = 0; i < 56; ++i) {
      m(i, k) = w(i).real();
      m(56 + i, k) = w(i).imag();
    }
  }
  StabilizerResult r;
  r.certificate = numeric_rank(m);
  r.dim = e7_basis.dim() - r.certificate.rank;
  r.gap = r.certificate.gap;
  r.gap_ok = !(r.gap < 10.0);  // infinity counts as ok
  return r;
}

GroupElement random_group_element(const LieBasis& e7_basis, std::mt19937_64& rng, int n_factors) {
  std::uniform_int_distribution<int> pick(0, e7_basis.dim() - 1);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  Mat56 prod = Mat56::Identity();
  std::vector<std::string> prov;
  if (n_factors == 0) prov.push_back("id");
  for (int i = 0; i < n_factors; ++i) {
    const int k = pick(rng);
    const double t = angle(rng);
    prod = raw_exp(t * e7_basis.elements[k].mat) * prod;
    char buf[64];
    std::snprintf(buf, sizeof buf, "exp(%+.17g*e7[%d])", t, k);
    prov.push_back(buf);
  }
  return make_certified(std::move(prod), std::move(prov), 1e-9);
}

FreudenthalVector<cd> random_orbit_sample(const LieBasis& e7_basis,
                                          const std::array<double, 4>& pattern,
                                          std::mt19937_64& rng) {
  const FreudenthalVector<cd> p0 =
      diagonal_vector<cd>(pattern[0], pattern[1], pattern[2], pattern[3]);
  return random_group_element(e7_basis, rng).apply(p0);
}

}  // namespace e7
