#include "e7/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace e7 {

const char* orbit_name(OrbitType t) {
  switch (t) {
    case OrbitType::E7: return "E7";
    case OrbitType::E6: return "E6";
    case OrbitType::F4: return "F4";
    case OrbitType::SPIN11: return "Spin(11)";
    case OrbitType::SPIN10: return "Spin(10)";
    case OrbitType::SPIN9: return "Spin(9)";
    case OrbitType::SPIN8: return "Spin(8)";
  }
  return "?";
}

std::string orbit_quotient(OrbitType t) { return std::string("E7/") + orbit_name(t); }

int stabilizer_dim_of(OrbitType t) {
  switch (t) {
    case OrbitType::E7: return 133;
    case OrbitType::E6: return 78;
    case OrbitType::F4: return 52;
    case OrbitType::SPIN11: return 55;
    case OrbitType::SPIN10: return 45;
    case OrbitType::SPIN9: return 36;
    case OrbitType::SPIN8: return 28;
  }
  return -1;
}

std::optional<OrbitType> orbit_from_stab_dim(int dim) {
  switch (dim) {
    case 133: return OrbitType::E7;
    case 78: return OrbitType::E6;
    case 52: return OrbitType::F4;
    case 55: return OrbitType::SPIN11;
    case 45: return OrbitType::SPIN10;
    case 36: return OrbitType::SPIN9;
    case 28: return OrbitType::SPIN8;
    default: return std::nullopt;
  }
}

DiagonalForm::DiagonalForm(std::array<double, 4> e, double tolerance)
    : entries(e), tol(tolerance) {
  std::sort(entries.begin(), entries.end(), std::greater<double>());
}

std::array<double, 4> DiagonalForm::normalized() const {
  std::array<double, 4> v = entries;
  if (v[0] > 0)
    for (double& x : v) x /= entries[0];
  return v;
}

namespace {

// Pattern of a normalized descending multiset at threshold eps: number of
// zeros plus sizes of the equality groups among the nonzero entries
// (consecutive-gap grouping).
OrbitType pattern_of(const std::array<double, 4>& v, double eps) {
  int zeros = 0;
  while (zeros < 4 && v[3 - zeros] <= eps) ++zeros;
  std::vector<int> groups;
  for (int i = 0; i < 4 - zeros; ++i) {
    if (i == 0 || v[i - 1] - v[i] > eps)
      groups.push_back(1);
    else
      ++groups.back();
  }
  std::sort(groups.begin(), groups.end(), std::greater<int>());

  if (zeros == 4) return OrbitType::E7;
  if (zeros == 3) return OrbitType::E6;
  if (groups.size() == 1 && groups[0] == 4) return OrbitType::E6;
  if (groups[0] == 3) return OrbitType::F4;  // fourth entry zero or distinct
  if (groups[0] == 2) {
    // A nonzero pair plus two zeros has a 55-dimensional stabilizer; two
    // nonzero pairs drop to 45 (the annihilator loses the mixing directions
    // between the two eigenvalue levels).
    if (zeros == 2) return OrbitType::SPIN11;
    if (groups.size() == 2 && groups[1] == 2) return OrbitType::SPIN10;
    return OrbitType::SPIN9;  // one pair plus two further distinct values
  }
  if (zeros == 2) return OrbitType::SPIN10;  // two distinct nonzero
  return OrbitType::SPIN8;                   // all values distinct
}

}  // namespace

PatternDecision classify_multiset(const DiagonalForm& m, double eps) {
  const std::array<double, 4> v = m.normalized();
  PatternDecision d;
  d.type = pattern_of(v, eps);

  // Statistics compared against eps: each entry (zero test) and each
  // consecutive gap (equality test).  Confidence is multiplicative, so exact
  // zeros and exact equalities sit infinitely far from the threshold.
  double closest = -1;
  double margin = std::numeric_limits<double>::infinity();
  auto consider = [&](double stat) {
    const double ratio = stat <= 0 ? std::numeric_limits<double>::infinity()
                                   : (stat > eps ? stat / eps : eps / stat);
    if (ratio < margin) {
      margin = ratio;
      closest = stat;
    }
  };
  for (int i = 0; i < 4; ++i) consider(v[i]);
  for (int i = 0; i < 3; ++i) consider(v[i] - v[i + 1]);
  d.margin = margin;
  d.ambiguous = margin < kAmbiguityBand;
  if (d.ambiguous) {
    const double flipped = closest > eps ? closest * (1 + 1e-12) : closest * (1 - 1e-12);
    const OrbitType alt = pattern_of(v, flipped);
    if (alt != d.type) d.alternative = alt;
  }
  return d;
}

namespace {

// Number of equality groups (and zero count) of a sorted-descending triple.
struct TriplePattern {
  int zeros = 0;
  std::vector<int> groups;
};

TriplePattern triple_pattern(std::array<double, 3> v, double eps, bool signed_entries) {
  std::sort(v.begin(), v.end(), std::greater<double>());
  double scale = 0;
  for (double x : v) scale = std::max(scale, std::abs(x));
  TriplePattern p;
  if (scale == 0) {
    p.zeros = 3;
    return p;
  }
  for (double& x : v) x /= scale;
  if (!signed_entries)
    while (p.zeros < 3 && v[2 - p.zeros] <= eps) ++p.zeros;
  for (int i = 0; i < 3 - p.zeros; ++i) {
    if (i == 0 || v[i - 1] - v[i] > eps)
      p.groups.push_back(1);
    else
      ++p.groups.back();
  }
  std::sort(p.groups.begin(), p.groups.end(), std::greater<int>());
  return p;
}

}  // namespace

JordanOrbit classify_jordan(const std::array<double, 3>& diag, double eps) {
  const TriplePattern p = triple_pattern(diag, eps, /*signed_entries=*/true);
  if (p.zeros == 3 || p.groups[0] == 3) return JordanOrbit::F4;
  if (p.groups[0] == 2) return JordanOrbit::SPIN9;
  return JordanOrbit::SPIN8;
}

const char* jordan_orbit_name(JordanOrbit t) {
  switch (t) {
    case JordanOrbit::F4: return "F4/F4";
    case JordanOrbit::SPIN9: return "F4/Spin(9)";
    case JordanOrbit::SPIN8: return "F4/Spin(8)";
  }
  return "?";
}

JordanCOrbit classify_jordanC(const std::array<double, 3>& diag, double eps) {
  const TriplePattern p = triple_pattern(diag, eps, /*signed_entries=*/false);
  if (p.zeros == 3) return JordanCOrbit::E6;
  if (p.zeros == 2) return JordanCOrbit::SPIN10;
  if (p.groups[0] == 3) return JordanCOrbit::F4;
  if (p.groups[0] == 2) return JordanCOrbit::SPIN9;  // third entry zero or distinct
  return JordanCOrbit::SPIN8;
}

const char* jordanC_orbit_name(JordanCOrbit t) {
  switch (t) {
    case JordanCOrbit::E6: return "E6/E6";
    case JordanCOrbit::F4: return "E6/F4";
    case JordanCOrbit::SPIN10: return "E6/Spin(10)";
    case JordanCOrbit::SPIN9: return "E6/Spin(9)";
    case JordanCOrbit::SPIN8: return "E6/Spin(8)";
  }
  return "?";
}

std::array<Rational, 4> exact_elementary(const FreudenthalVector<ExactComplex>& p) {
  const InvariantSet<ExactComplex> inv = invariants_of(p);
  return {inv.i1, inv.i2 / 3, inv.i3 * make_rational(4, 9),
          ScalarOps<ExactComplex>::abs2(inv.i4) / 36};
}

HsCalibration calibrate_hs(std::mt19937_64& rng, int n_samples) {
  std::uniform_real_distribution<double> u(0.25, 2.25);
  Eigen::MatrixXd a(n_samples, 2);
  Eigen::VectorXd b(n_samples);
  for (int k = 0; k < n_samples; ++k) {
    const double d1 = u(rng), d2 = u(rng), d3 = u(rng), r = u(rng);
    const double q1 = d1 * d1, q2 = d2 * d2, q3 = d3 * d3, qr = r * r;
    const double e1 = q1 + q2 + q3 + qr;
    const double e2 = q1 * q2 + q1 * q3 + q1 * qr + q2 * q3 + q2 * qr + q3 * qr;
    a(k, 0) = e1 * e1;
    a(k, 1) = e2;
    b(k) = invariants_of(diagonal_vector<cd>(d1, d2, d3, r)).i2;
  }
  HsCalibration c;
  const Eigen::Vector2d kappa = a.colPivHouseholderQr().solve(b);
  c.kappa1 = kappa(0);
  c.kappa2 = kappa(1);
  const Eigen::VectorXd res = a * kappa - b;
  c.residual = 0;
  for (int k = 0; k < n_samples; ++k)
    c.residual = std::max(c.residual, std::abs(res(k)) / std::abs(b(k)));
  c.ok = c.residual <= 1e-8 && std::abs(c.kappa2) > 1e-6;
  return c;
}

RecoveredMultiset recover_multiset(const FreudenthalVector<cd>& p, const HsCalibration& calib) {
  if (!calib.ok) throw std::runtime_error("HS calibration unavailable");
  const InvariantSet<cd> inv = invariants_of(p);

  RecoveredMultiset out;
  const double e1 = inv.i1;
  const double correction = calib.kappa1 * inv.i1 * inv.i1;
  const double e2 = (inv.i2 - correction) / calib.kappa2;
  const double e3 = 4.0 / 9.0 * inv.i3;
  const double i4abs = std::abs(inv.i4);
  const double e4 = (i4abs / 6.0) * (i4abs / 6.0);
  out.elementary = {e1, e2, e3, e4};
  const double cancel_num = std::abs(inv.i2 - correction);
  out.cancellation_warning =
      cancel_num > 0 && (std::abs(inv.i2) + std::abs(correction)) > 1e6 * cancel_num;

  std::array<double, 4> entries{0, 0, 0, 0};
  if (e1 > 1e-150) {
    // Solve in units of s = e1 so the companion matrix is well scaled.
    const double s = e1;
    Eigen::Matrix4d comp = Eigen::Matrix4d::Zero();
    comp(1, 0) = comp(2, 1) = comp(3, 2) = 1.0;
    comp(0, 3) = -e4 / (s * s * s * s);
    comp(1, 3) = e3 / (s * s * s);
    comp(2, 3) = -e2 / (s * s);
    comp(3, 3) = e1 / s;
    const Eigen::EigenSolver<Eigen::Matrix4d> es(comp, /*computeEigenvectors=*/false);

    // A root of multiplicity m is resolved only to O(eps^(1/m)), splitting
    // into a conjugate-balanced star around the true value.  Cluster the
    // roots by real part and average each cluster: the star cancels to
    // leading order, and the imaginary parts only signal a genuine complex
    // pair when they exceed the cluster radius.  Roots live in [0, 1] after
    // the s-rescaling, so the radius is absolute.
    std::array<cd, 4> roots;
    for (int i = 0; i < 4; ++i) roots[i] = es.eigenvalues()(i);
    std::sort(roots.begin(), roots.end(),
              [](const cd& a, const cd& b) { return a.real() < b.real(); });

    constexpr double kClusterRadius = 1.5e-3;
    int idx = 0;
    for (int lo = 0; lo < 4;) {
      int hi = lo + 1;
      while (hi < 4 && roots[hi].real() - roots[hi - 1].real() <= kClusterRadius) ++hi;
      double mean = 0;
      for (int i = lo; i < hi; ++i) {
        if (std::abs(roots[i].imag()) > kClusterRadius)
          throw std::runtime_error("quartic root with nonreal part " +
                                   std::to_string(roots[i].imag()));
        mean += roots[i].real();
      }
      mean /= hi - lo;
      if (std::abs(mean) < 1e-7) mean = 0;
      if (mean < 0)
        throw std::runtime_error("quartic root negative: " + std::to_string(mean));
      for (int i = lo; i < hi; ++i) entries[idx++] = std::sqrt(mean * s);
      lo = hi;
    }
  }
  out.form = DiagonalForm(entries, 1e-5);
  return out;
}

ClassificationReport classify(const FreudenthalVector<cd>& p, double eps,
                              const LieBasis& e7_basis, const HsCalibration& calib) {
  ClassificationReport rep;

  try {
    const RecoveredMultiset rec = recover_multiset(p, calib);
    const PatternDecision pd = classify_multiset(rec.form, std::max(eps, rec.form.tol));
    rep.invariant_type = pd.type;
    rep.multiset = rec.form.entries;
    rep.margin = pd.margin;
    if (rec.cancellation_warning) rep.notes.push_back("e2 extraction lost > 6 digits");
    if (pd.ambiguous) {
      rep.ambiguous = true;
      std::string note = "multiset pattern within margin of threshold";
      if (pd.alternative) note += std::string("; alternative ") + orbit_name(*pd.alternative);
      rep.notes.push_back(note);
    }
  } catch (const std::exception& ex) {
    rep.notes.push_back(std::string("invariant path failed: ") + ex.what());
  }

  const StabilizerResult sr = stabilizer_dimension(p, e7_basis);
  rep.stab_dim = sr.dim;
  rep.stab_gap = sr.gap;
  const std::optional<OrbitType> st = orbit_from_stab_dim(sr.dim);
  if (st) rep.stabilizer_type = st;
  if (!sr.gap_ok) {
    rep.ambiguous = true;
    rep.notes.push_back("stabilizer singular-value gap below 10");
  }
  if (!st) {
    rep.ambiguous = true;
    rep.notes.push_back("stabilizer dimension " + std::to_string(sr.dim) +
                        " matches no orbit type");
  }

  if (rep.stabilizer_type && rep.invariant_type) {
    rep.method_agreement = *rep.stabilizer_type == *rep.invariant_type;
    rep.type = *rep.stabilizer_type;
    if (!rep.method_agreement)
      rep.notes.push_back(std::string("invariant path disagrees: ") +
                          orbit_name(*rep.invariant_type));
  } else if (rep.stabilizer_type) {
    rep.type = *rep.stabilizer_type;
  } else if (rep.invariant_type) {
    rep.type = *rep.invariant_type;
    rep.notes.push_back("falling back to invariant path");
  } else {
    throw std::runtime_error("both classification paths failed");
  }
  return rep;
}

}  // namespace e7
