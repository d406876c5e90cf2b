#include "e7/diagonalizer.hpp"

#include <cmath>
#include <functional>

#include <unsupported/Eigen/MatrixFunctions>

namespace e7 {

double off_form_energy(const FreudenthalVector<cd>& p) {
  double s = 0;
  for (int k = 0; k < 3; ++k) {
    for (int i = 0; i < 8; ++i) s += std::norm(p.X.x[k].c[i]);
    const double im = p.X.d[k].imag();
    s += im * im;
  }
  for (int i = 0; i < 27; ++i) s += std::norm(p.Y.coord(i));
  s += p.xi.imag() * p.xi.imag();
  s += std::norm(p.eta);
  return s;
}

SU2Matrix<cd> su2_direction(int which, double t) {
  switch (which) {
    case 0: return {std::polar(1.0, t), cd(0)};
    case 1: return {cd(std::cos(t)), cd(std::sin(t))};
    default: return {cd(std::cos(t)), cd(0, std::sin(t))};
  }
}

namespace {

// Eigen-decomposed one-parameter subgroup of a skew-Hermitian (w.r.t. the
// Gram form) direction: exp(tB) v = V diag(e^{-i t mu}) Vt v.
struct DirectionFlow {
  Mat56 v, vt;
  Eigen::Matrix<double, 56, 1> mu;

  Vec56 apply(double t, const Vec56& w_pre) const {
    Vec56 scaled;
    for (int i = 0; i < 56; ++i) scaled(i) = std::polar(1.0, -t * mu(i)) * w_pre(i);
    return v * scaled;
  }
};

DirectionFlow make_flow(const Mat56& b) {
  const auto& g = gram56();
  Eigen::Matrix<double, 56, 1> w, winv;
  for (int i = 0; i < 56; ++i) {
    w(i) = std::sqrt(g(i));
    winv(i) = 1.0 / w(i);
  }
  Mat56 h;  // i * W b W^{-1}, Hermitian
  for (int i = 0; i < 56; ++i)
    for (int j = 0; j < 56; ++j) h(i, j) = cd(0, 1) * w(i) * b(i, j) * winv(j);
  const Eigen::SelfAdjointEigenSolver<Mat56> es(h);
  DirectionFlow f;
  f.mu = es.eigenvalues();
  for (int i = 0; i < 56; ++i)
    for (int j = 0; j < 56; ++j) {
      f.v(i, j) = winv(i) * es.eigenvectors()(i, j);
      f.vt(i, j) = std::conj(es.eigenvectors()(j, i)) * w(j);
    }
  return f;
}

double golden_section(const std::function<double(double)>& f, double lo, double hi, int iters) {
  constexpr double invphi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - invphi * (b - a), d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iters; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  return fc < fd ? c : d;
}

// Grid scan + golden-section refinement of f over [-pi, pi]; returns the
// best parameter and value, which may be t = 0 (no improvement).
std::pair<double, double> line_search(const std::function<double(double)>& f, double f0) {
  constexpr int kGrid = 40;
  double best_t = 0, best_f = f0;
  const double step = 2 * M_PI / kGrid;
  for (int i = 0; i < kGrid; ++i) {
    const double t = -M_PI + step * (i + 0.5);
    const double ft = f(t);
    if (ft < best_f) {
      best_f = ft;
      best_t = t;
    }
  }
  const double t = golden_section(f, best_t - step, best_t + step, 48);
  const double ft = f(t);
  if (ft < best_f) return {t, ft};
  return {best_t, best_f};
}

FreudenthalVector<cd> apply_su2(int which, double t, const FreudenthalVector<cd>& p) {
  return su2_direction(which, t).apply(p);
}

std::array<double, 4> final_diagonal(const FreudenthalVector<cd>& p) {
  std::array<double, 4> d{std::abs(p.X.d[0].real()), std::abs(p.X.d[1].real()),
                          std::abs(p.X.d[2].real()), std::abs(p.xi.real())};
  double top = 0;
  for (double x : d) top = std::max(top, x);
  for (double& x : d)
    if (x <= 1e-9 * top) x = 0;  // zero-snap
  return d;
}

}  // namespace

ReductionResult reduce(const FreudenthalVector<cd>& p, const LieBasis& e7_basis,
                       const ReductionConfig& cfg) {
  ReductionResult res;
  const double norm0 = std::real(herm_inner(p, p));

  double energy = off_form_energy(p);
  if (energy < cfg.tol) {  // already in normal form
    res.diagonal = DiagonalForm(final_diagonal(p), 1e-7);
    res.residual = energy;
    res.certified = true;
    res.phase_absorbed = true;
    return res;
  }

  std::vector<DirectionFlow> flows;
  flows.reserve(e7_basis.dim());
  for (const auto& b : e7_basis.elements) flows.push_back(make_flow(b.mat));

  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> pick(0, e7_basis.dim() - 1);
  std::uniform_real_distribution<double> kick_angle(-0.5, 0.5);

  Vec56 v = pack56(p);
  int restarts_left = cfg.restarts;

  // Tier 1 uses moves that fix the orbit invariants: one-parameter subgroups
  // of the algebra plus the global phase family (s = 0), so the recovered
  // multiset is the one pinned by the invariants.  The remaining rotation
  // families merge orbits of equal type while moving the multiset; they are
  // enabled only if tier 1 exhausts its restarts above the tolerance.
  bool allow_moduli = false;

  for (int sweep = 0; sweep < cfg.max_sweeps && energy >= cfg.tol; ++sweep) {
    const double sweep_start = energy;
    for (int d = 0; d < e7_basis.dim(); ++d) {
      const Vec56 w_pre = flows[d].vt * v;
      auto objective = [&](double t) {
        return off_form_energy(unpack56(flows[d].apply(t, w_pre)));
      };
      const auto [t, ft] = line_search(objective, energy);
      if (ft < energy && t != 0) {
        v = flows[d].apply(t, w_pre);
        energy = ft;
        res.transform.push_back({ReductionFactor::Kind::E7Exp, d, t, {}});
      }
    }
    for (int s = 0; s < (allow_moduli ? 3 : 1); ++s) {
      const FreudenthalVector<cd> cur = unpack56(v);
      auto objective = [&](double t) { return off_form_energy(apply_su2(s, t, cur)); };
      const auto [t, ft] = line_search(objective, energy);
      if (ft < energy && t != 0) {
        const SU2Matrix<cd> m = su2_direction(s, t);
        v = pack56(m.apply(cur));
        energy = ft;
        res.transform.push_back({ReductionFactor::Kind::SU2, s, t, m});
      }
    }
    res.iterations = sweep + 1;
    // Stagnation is relative: far from the minimum the line searches always
    // scrape off some absolute slack, which must not count as progress.
    const double stall = std::max(cfg.sweep_improvement, 1e-6 * energy);
    if (energy >= cfg.tol && sweep_start - energy < stall) {
      if (restarts_left-- <= 0) {
        if (allow_moduli) break;
        allow_moduli = true;
        restarts_left = cfg.restarts;
        continue;
      }
      // Stagnated at a nonzero local minimum: kick along a few random
      // one-parameter subgroups (staying on the orbit, factors recorded).
      for (int i = 0; i < 6; ++i) {
        const int d = pick(rng);
        const double t = kick_angle(rng);
        v = flows[d].apply(t, flows[d].vt * v);
        res.transform.push_back({ReductionFactor::Kind::E7Exp, d, t, {}});
      }
      energy = off_form_energy(unpack56(v));
    }
  }

  const FreudenthalVector<cd> final_p = unpack56(v);
  res.residual = energy;
  res.certified = energy < cfg.tol;
  res.diagonal = DiagonalForm(final_diagonal(final_p), 1e-7);
  res.phase_absorbed = true;
  const double norm1 = std::real(herm_inner(final_p, final_p));
  res.norm_drift = std::abs(norm1 - norm0) / (1.0 + norm0);
  return res;
}

ReductionVerification verify_reduction(const FreudenthalVector<cd>& p,
                                       const ReductionResult& result, const LieBasis& e7_basis,
                                       const HsCalibration& calib, double eps) {
  ReductionVerification rep;
  Vec56 v = pack56(p);
  for (const auto& f : result.transform) {
    if (f.kind == ReductionFactor::Kind::E7Exp) {
      const Mat56 step = (f.t * e7_basis.elements[f.direction].mat).exp();
      v = step * v;
    } else {
      v = pack56(f.su2.apply(unpack56(v)));
    }
  }
  const FreudenthalVector<cd> q = unpack56(v);

  rep.replay_energy = off_form_energy(q);
  if (rep.replay_energy > result.residual + 1e-10) {
    rep.failure = "replayed residual " + std::to_string(rep.replay_energy) +
                  " exceeds reported " + std::to_string(result.residual);
    return rep;
  }

  std::array<double, 4> d{std::abs(q.X.d[0].real()), std::abs(q.X.d[1].real()),
                          std::abs(q.X.d[2].real()), std::abs(q.xi.real())};
  std::sort(d.begin(), d.end(), std::greater<double>());
  const double scale = 1.0 + result.diagonal.entries[0];
  for (int i = 0; i < 4; ++i)
    rep.diagonal_mismatch =
        std::max(rep.diagonal_mismatch, std::abs(d[i] - result.diagonal.entries[i]) / scale);
  if (rep.diagonal_mismatch > 1e-8) {
    rep.failure = "replayed diagonal deviates by " + std::to_string(rep.diagonal_mismatch);
    return rep;
  }

  const double n0 = std::real(herm_inner(p, p));
  const double n1 = std::real(herm_inner(q, q));
  rep.norm_drift = std::abs(n1 - n0) / (1.0 + n0);
  if (rep.norm_drift > 1e-9) {
    rep.failure = "norm drift " + std::to_string(rep.norm_drift);
    return rep;
  }

  const OrbitType from_p = classify(p, eps, e7_basis, calib).type;
  const OrbitType from_diag =
      classify_multiset(result.diagonal, std::max(eps, result.diagonal.tol)).type;
  rep.classification_match = from_p == from_diag;
  if (!rep.classification_match) {
    rep.failure = std::string("classification mismatch: ") + orbit_name(from_p) + " vs " +
                  orbit_name(from_diag);
    return rep;
  }

  rep.ok = true;
  return rep;
}

}  // namespace e7
