// Acceptance gate: ten criteria, one PASS/FAIL line each, nonzero exit on any
// failure.  Tolerances are pinned here and must not be loosened.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "e7/classifier.hpp"
#include "e7/diagonalizer.hpp"

using namespace e7;

namespace {

struct Gate {
  int failures = 0;

  void criterion(int id, bool pass, const std::string& label, const std::string& detail,
                 double seconds) {
    std::printf("criterion %2d: %s  %s (%s; %.2f s)\n", id, pass ? "PASS" : "FAIL", label.c_str(),
                detail.c_str(), seconds);
    std::fflush(stdout);
    if (!pass) ++failures;
  }
};

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

using EC = ExactComplex;

EC rq(long n, long d = 1) { return EC(make_rational(n, d)); }

FreudenthalVector<EC> diag_ec(long r1, long r2, long r3, long r) {
  return diagonal_vector<EC>(rq(r1), rq(r2), rq(r3), rq(r));
}

/// The eight diagonal identities with r = 2, s = 3, t = 5; returns the number
/// of equalities that hold in exact arithmetic.
int identity_suite_hits() {
  const EC th = rq(3, 2);
  const EC mh = rq(-1, 2);
  const std::pair<FreudenthalVector<EC>, FreudenthalVector<EC>> rows[] = {
      {t_covariant(diag_ec(1, 1, 1, 0)), th * diag_ec(0, 0, 0, 1)},
      {t_covariant(diag_ec(1, 1, 1, 2)), th * diag_ec(2, 2, 2, 1)},
      {t_covariant(diag_ec(1, 2, 2, 1)), th * diag_ec(4, 2, 2, 4)},
      {s_covariant(diag_ec(1, 0, 0, 2)), mh * diag_ec(4, 0, 0, 2)},
      {t_covariant(diag_ec(1, 1, 2, 0)), th * diag_ec(0, 0, 0, 2)},
      {t_covariant(diag_ec(1, 1, 2, 3)), th * diag_ec(6, 6, 3, 2)},
      {t_covariant(diag_ec(1, 2, 3, 0)), th * diag_ec(0, 0, 0, 6)},
      {t_covariant(diag_ec(1, 2, 3, 5)), th * diag_ec(30, 15, 10, 6)},
  };
  int hits = 0;
  for (const auto& [got, want] : rows)
    if ((got - want).is_zero()) ++hits;
  return hits;
}

FreudenthalVector<EC> random_rational_fv(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-3, 3);
  std::uniform_int_distribution<long> den(1, 2);
  FreudenthalVector<EC> p;
  for (int i = 0; i < 56; ++i)
    p.coord(i) = EC(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)));
  return p;
}

/// Exact derivation identity [RxS, PxQ] = (RxS)P x Q + P x (RxS)Q on random
/// rational inputs; the detector for the phi and nu cross constants.
bool derivation_identity_holds(std::mt19937_64& rng) {
  for (int trial = 0; trial < 2; ++trial) {
    const auto phi = cross_p(random_rational_fv(rng), random_rational_fv(rng));
    const auto p = random_rational_fv(rng), q = random_rational_fv(rng);
    const auto v = random_rational_fv(rng);
    const auto m = cross_p(p, q);
    const auto lhs = phi.apply(m.apply(v)) - m.apply(phi.apply(v));
    const auto rhs = (cross_p(phi.apply(p), q) + cross_p(p, phi.apply(q))).apply(v);
    if (!(lhs - rhs).is_zero()) return false;
  }
  return true;
}

double max_abs(const FreudenthalVector<cd>& p) {
  double m = 0;
  for (int i = 0; i < 56; ++i) m = std::max(m, std::abs(p.coord(i)));
  return m;
}

double max_abs_tuple(const E7Tuple<cd>& t) {
  double m = std::abs(t.nu);
  for (const cd& z : t.phi.m) m = std::max(m, std::abs(z));
  for (int i = 0; i < 27; ++i) {
    m = std::max(m, std::abs(t.A.coord(i)));
    m = std::max(m, std::abs(t.B.coord(i)));
  }
  return m;
}

double herm_norm(const FreudenthalVector<cd>& p) {
  return std::sqrt(std::abs(herm_inner(p, p)));
}

/// Draw a diagonal pattern whose orbit type is known by construction;
/// entry values are well separated relative to the classifier tolerance.
std::array<double, 4> pattern_for(OrbitType type, std::mt19937_64& rng) {
  std::array<double, 4> grid = {0, 0, 0, 0};
  {
    double pool[] = {0.4, 0.7, 1.0, 1.3, 1.6, 1.9, 2.2};
    std::shuffle(std::begin(pool), std::end(pool), rng);
    std::uniform_real_distribution<double> jitter(-0.05, 0.05);
    for (int i = 0; i < 4; ++i) grid[i] = pool[i] + jitter(rng);
  }
  const double a = grid[0], b = grid[1], c = grid[2], d = grid[3];
  const bool coin = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
  switch (type) {
    case OrbitType::E7: return {0, 0, 0, 0};
    case OrbitType::E6: return coin ? std::array<double, 4>{0, 0, 0, a}
                                    : std::array<double, 4>{a, a, a, a};
    case OrbitType::F4: return coin ? std::array<double, 4>{a, a, a, 0}
                                    : std::array<double, 4>{a, a, a, b};
    case OrbitType::SPIN11: return coin ? std::array<double, 4>{a, 0, 0, a}
                                        : std::array<double, 4>{a, a, 0, 0};
    case OrbitType::SPIN10: return coin ? std::array<double, 4>{a, 0, 0, b}
                                        : std::array<double, 4>{a, b, b, a};
    case OrbitType::SPIN9: return coin ? std::array<double, 4>{a, a, b, 0}
                                       : std::array<double, 4>{a, a, b, c};
    case OrbitType::SPIN8: return coin ? std::array<double, 4>{a, b, c, 0}
                                       : std::array<double, 4>{a, b, c, d};
  }
  return {0, 0, 0, 0};
}

}  // namespace

int main() {
  Gate gate;

  {  // 1. exact identity suite
    const Timer timer;
    const int hits = identity_suite_hits();
    const double secs = timer.seconds();
    gate.criterion(1, hits == 8 && secs < 5.0, "exact identity suite, r=2 s=3 t=5",
                   std::to_string(hits) + "/8 exact, budget 5 s", secs);
  }

  {  // 2. closed-orbit membership
    const Timer timer;
    const auto p = diag_ec(0, 0, 0, 1);
    const bool exact_ok =
        cross_p(p, p).is_zero() && herm_inner(p, p) == ScalarOps<EC>::one();

    const double c = 1.0 / (2.0 * std::sqrt(2.0));
    FreudenthalVector<cd> q;
    q.X = cd(c) * JordanElement<cd>::identity();
    q.Y = q.X;
    q.xi = c;
    q.eta = c;
    const double cross_resid = max_abs_tuple(cross_p(q, q));
    const double norm_resid = std::abs(herm_inner(q, q) - cd(1.0));
    const bool float_ok = cross_resid <= 1e-12 && norm_resid <= 1e-12;
    char detail[128];
    std::snprintf(detail, sizeof detail, "exact %s, float residuals %.2e / %.2e",
                  exact_ok ? "ok" : "BAD", cross_resid, norm_resid);
    gate.criterion(2, exact_ok && float_ok, "membership PxP = 0, <P,P> = 1", detail,
                   timer.seconds());
  }

  {  // 3. su2 rotation displays
    const Timer timer;
    const double s = 1.0 / std::sqrt(2.0);
    const SU2Matrix<cd> u(cd(s), cd(-s));
    double worst = 0;
    for (int which = 0; which < 2; ++which) {
      FreudenthalVector<cd> p, want;
      p.X = which == 0 ? JordanElement<cd>::identity() : JordanElement<cd>::diag_unit(0);
      p.xi = 1.0;
      want.X = cd(s) * p.X;
      want.Y = want.X;
      want.xi = s;
      want.eta = s;
      worst = std::max(worst, max_abs(u.apply(p) - want));
    }
    char detail[64];
    std::snprintf(detail, sizeof detail, "worst residual %.2e", worst);
    gate.criterion(3, worst <= 1e-12, "phi(A) maps (E,0,1,0) and (E1,0,1,0)", detail,
                   timer.seconds());
  }

  LieBasis e7;
  bool basis_ok = false;
  {  // 4. algebra rank certificates
    const Timer timer;
    std::string detail;
    try {
      const LieBasis f4 = build_f4_basis();
      const LieBasis e6 = build_e6_basis();
      e7 = build_e7_basis();
      basis_ok = f4.dim() == 52 && e6.dim() == 78 && e7.dim() == 133 &&
                 f4.certificate.gap >= 10.0 && e6.certificate.gap >= 10.0 &&
                 e7.certificate.gap >= 10.0;
      char buf[128];
      std::snprintf(buf, sizeof buf, "ranks %d/%d/%d, gaps %.1e/%.1e/%.1e", f4.dim(), e6.dim(),
                    e7.dim(), f4.certificate.gap, e6.certificate.gap, e7.certificate.gap);
      detail = buf;
    } catch (const std::exception& e) {
      detail = e.what();
    }
    const double secs = timer.seconds();
    gate.criterion(4, basis_ok && secs < 60.0, "lie algebra ranks 52/78/133", detail, secs);
  }
  if (!basis_ok) {
    std::printf("criteria 5-9 skipped: no certified e7 basis\n");
    for (int id = 5; id <= 9; ++id) gate.criterion(id, false, "skipped", "no e7 basis", 0.0);
    return gate.failures;
  }

  {  // 5. stabilizer dimension table
    const Timer timer;
    const struct {
      std::array<double, 4> rep;
      int dim;
    } table[] = {
        {{0, 0, 0, 0}, 133}, {{0, 0, 0, 1}, 78}, {{0, 0, 1, 1}, 55}, {{0, 0, 1, 2}, 45},
        {{0, 1, 1, 1}, 52},  {{0, 1, 1, 2}, 36}, {{0, 1, 2, 3}, 28}, {{1, 1, 1, 1}, 78},
        {{1, 1, 1, 2}, 52},  {{1, 1, 2, 2}, 45}, {{1, 1, 2, 3}, 36}, {{1, 2, 3, 5}, 28},
    };
    int hits = 0;
    std::string bad;
    for (const auto& row : table) {
      const auto p = diagonal_vector<cd>(row.rep[0], row.rep[1], row.rep[2], row.rep[3]);
      const StabilizerResult st = stabilizer_dimension(p, e7);
      if (st.dim == row.dim && st.gap_ok)
        ++hits;
      else if (bad.empty())
        bad = "first miss: got " + std::to_string(st.dim) + " want " + std::to_string(row.dim);
    }
    gate.criterion(5, hits == 12, "stabilizer dimensions of 12 representatives",
                   std::to_string(hits) + "/12" + (bad.empty() ? "" : ", " + bad),
                   timer.seconds());
  }

  {  // 6. group element certificates
    const Timer timer;
    std::mt19937_64 rng(0xace1u);
    std::uniform_int_distribution<int> pick(0, 132);
    std::uniform_real_distribution<double> angle(-M_PI, M_PI);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double worst = 0;
    int ok_count = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      try {
        GroupElement g = trial % 2 == 0
                             ? exp_element(e7.elements[pick(rng)], angle(rng))
                             : [&] {
                                 E7Tuple<cd> combo;
                                 for (int k = 0; k < 133; ++k)
                                   combo = combo + cd(gauss(rng) / 8.0, 0.0) * e7.elements[k].tuple;
                                 return exp_element(LieElement(combo), angle(rng));
                               }();
        worst = std::max(worst, g.cert.worst());
        ++ok_count;
      } catch (const std::exception&) {
      }
    }
    char detail[96];
    std::snprintf(detail, sizeof detail, "%d/1000 certified, worst residual %.2e", ok_count,
                  worst);
    gate.criterion(6, ok_count == 1000 && worst <= 1e-9, "1000 random exponentials", detail,
                   timer.seconds());
  }

  {  // 7. covariant equivariance
    const Timer timer;
    std::mt19937_64 rng(0xace2u);
    double worst = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const GroupElement a = random_group_element(e7, rng);
      const auto p = random_freudenthal(rng);
      const auto tp = t_covariant(p), sp = s_covariant(p);
      const double rt =
          herm_norm(t_covariant(a.apply(p)) - a.apply(tp)) / (1.0 + herm_norm(tp));
      const double rs =
          herm_norm(s_covariant(a.apply(p)) - a.apply(sp)) / (1.0 + herm_norm(sp));
      worst = std::max(worst, std::max(rt, rs));
    }
    char detail[64];
    std::snprintf(detail, sizeof detail, "worst residual %.2e", worst);
    gate.criterion(7, worst <= 1e-9, "T and S equivariance on 100 random (alpha, P)", detail,
                   timer.seconds());
  }

  HsCalibration calib;
  {  // 8. classifier consistency
    const Timer timer;
    std::mt19937_64 rng(0xace3u);
    calib = calibrate_hs(rng);
    const OrbitType types[] = {OrbitType::E7,     OrbitType::E6,    OrbitType::F4,
                               OrbitType::SPIN11, OrbitType::SPIN10, OrbitType::SPIN9,
                               OrbitType::SPIN8};
    int hits = 0;
    std::string bad;
    for (int trial = 0; trial < 200; ++trial) {
      const OrbitType want = types[trial % 7];
      const auto pattern = pattern_for(want, rng);
      const auto p = random_orbit_sample(e7, pattern, rng);
      const ClassificationReport rep = classify(p, 1e-6, e7, calib);
      const bool good = rep.invariant_type && rep.stabilizer_type &&
                        *rep.invariant_type == want && *rep.stabilizer_type == want &&
                        rep.method_agreement && !rep.ambiguous;
      if (good)
        ++hits;
      else if (bad.empty())
        bad = std::string(", first miss at trial ") + std::to_string(trial) + " (want " +
              orbit_name(want) + ", got " + orbit_name(rep.type) + ")";
    }
    gate.criterion(8, hits == 200, "classifier consistency on 200 orbit samples",
                   std::to_string(hits) + "/200" + bad, timer.seconds());
  }

  {  // 9. diagonalizer round trip
    const Timer timer;
    std::mt19937_64 rng(0xace4u);
    const OrbitType types[] = {OrbitType::E7,     OrbitType::E6,    OrbitType::F4,
                               OrbitType::SPIN11, OrbitType::SPIN10, OrbitType::SPIN9,
                               OrbitType::SPIN8};
    int hits = 0;
    std::string bad;
    for (int trial = 0; trial < 20; ++trial) {
      auto pattern = pattern_for(types[trial % 7], rng);
      std::sort(pattern.begin(), pattern.end(), std::greater<double>());
      const auto p = random_orbit_sample(e7, pattern, rng);
      const ReductionResult res = reduce(p, e7);
      double mismatch = 0;
      for (int i = 0; i < 4; ++i)
        mismatch = std::max(mismatch, std::abs(res.diagonal.entries[i] - pattern[i]));
      const bool good =
          res.certified && res.residual < 1e-10 && mismatch <= 1e-5 * (1.0 + pattern[0]);
      if (good)
        ++hits;
      else if (bad.empty()) {
        char buf[96];
        std::snprintf(buf, sizeof buf, ", first miss at trial %d (mismatch %.2e, residual %.2e)",
                      trial, mismatch, res.residual);
        bad = buf;
      }
    }
    const double secs = timer.seconds();
    gate.criterion(9, hits == 20 && secs < 600.0, "diagonalizer on 20 known multisets",
                   std::to_string(hits) + "/20" + bad, secs);
  }

  {  // 10. fault injection flips criterion 1
    const Timer timer;
    // The jordan-cross, cross-a and cross-b constants enter the diagonal
    // identity suite directly; phi and nu multiply terms that vanish on
    // diagonal elements, so their detector is the exact derivation identity.
    bool all_detected = true;
    std::string detail;
    for (FaultKnob knob : {FaultKnob::jordan_cross_half, FaultKnob::cross_a, FaultKnob::cross_b}) {
      inject_fault(knob);
      const int hits = identity_suite_hits();
      clear_faults();
      if (hits == 8) {
        all_detected = false;
        detail += " identity suite blind to knob";
      }
    }
    for (FaultKnob knob : {FaultKnob::cross_phi, FaultKnob::cross_nu}) {
      std::mt19937_64 rng(0xace5u);
      inject_fault(knob);
      const bool held = derivation_identity_holds(rng);
      clear_faults();
      if (held) {
        all_detected = false;
        detail += " derivation identity blind to knob";
      }
    }
    const bool clean_after = identity_suite_hits() == 8;
    gate.criterion(10, all_detected && clean_after, "1% fault injection is detected",
                   detail.empty() ? "5/5 knobs detected, clean after reset" : detail,
                   timer.seconds());
  }

  if (gate.failures) std::printf("%d criterion(s) failed\n", gate.failures);
  return gate.failures;
}
