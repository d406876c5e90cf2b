// e7orbit: identity verification, orbit classification, diagonalization and
// sampling for the 56-dimensional Freudenthal vector space.
//
// Exit codes: 0 ok, 2 parse error, 3 verification failure, 4 classifier
// ambiguity, 5 diagonalizer non-convergence.

#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "e7/serialize.hpp"

namespace {

using namespace e7;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitVerify = 3;
constexpr int kExitAmbiguous = 4;
constexpr int kExitNonConverge = 5;

// ---------------------------------------------------------------------------
// shared I/O helpers

ParsedElement load_element(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json doc = json::parse(in);
  return parse_element(doc);
}

std::string format_multiset(const std::array<double, 4>& m) {
  std::ostringstream out;
  out << std::setprecision(12) << "(" << m[0] << ", " << m[1] << ", " << m[2] << "; " << m[3]
      << ")";
  return out.str();
}

/// Accepts "(1,1,2;3)" or "1,1,2;3"; entries may be rationals like "1/2".
std::array<double, 4> parse_pattern(std::string text) {
  auto strip = [](std::string s) {
    std::string t;
    for (char ch : s)
      if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '(' && ch != ')') t += ch;
    return t;
  };
  text = strip(text);
  const auto semi = text.find(';');
  if (semi == std::string::npos)
    throw std::invalid_argument("pattern must look like (r1,r2,r3;r)");
  std::vector<std::string> parts;
  std::stringstream head(text.substr(0, semi));
  for (std::string tok; std::getline(head, tok, ',');) parts.push_back(tok);
  parts.push_back(text.substr(semi + 1));
  if (parts.size() != 4) throw std::invalid_argument("pattern needs four entries (r1,r2,r3;r)");
  std::array<double, 4> out{};
  for (int i = 0; i < 4; ++i) {
    const std::string& tok = parts[i];
    if (tok.empty()) throw std::invalid_argument("empty pattern entry");
    if (tok.find('/') != std::string::npos)
      out[i] = rational_from_string(tok).get_d();
    else {
      size_t used = 0;
      out[i] = std::stod(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("bad pattern entry: " + tok);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// verification suite

struct CheckList {
  bool json_mode = false;
  json results = json::array();
  int failures = 0;
  std::string first_failure;

  void add(const std::string& name, bool pass, const std::string& detail = "") {
    if (json_mode) {
      results.push_back(json{{"name", name}, {"pass", pass}, {"detail", detail}});
    } else {
      std::cout << (pass ? "[ok]   " : "[FAIL] ") << name;
      if (!pass && !detail.empty()) std::cout << "  (" << detail << ")";
      std::cout << "\n";
    }
    if (!pass && failures++ == 0) first_failure = name;
  }
};

using EC = ExactComplex;

EC rq(long n, long d = 1) { return EC(make_rational(n, d)); }

FreudenthalVector<EC> diag_ec(long r1, long r2, long r3, long r) {
  return diagonal_vector<EC>(rq(r1), rq(r2), rq(r3), rq(r));
}

FreudenthalVector<EC> random_rational_fv(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-3, 3);
  std::uniform_int_distribution<long> den(1, 2);
  FreudenthalVector<EC> p;
  for (int i = 0; i < 56; ++i)
    p.coord(i) = EC(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)));
  return p;
}

JordanElement<EC> random_rational_jordan(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-3, 3);
  std::uniform_int_distribution<long> den(1, 2);
  JordanElement<EC> x;
  for (int i = 0; i < 27; ++i)
    x.coord(i) = EC(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)));
  return x;
}

Octonion<EC> random_rational_octonion(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-3, 3);
  std::uniform_int_distribution<long> den(1, 2);
  Octonion<EC> x;
  for (int i = 0; i < 8; ++i)
    x.c[i] = EC(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)));
  return x;
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

/// The eight diagonal identities with r = 2, s = 3, t = 5, all in exact
/// arithmetic with zero tolerance.
void run_identity_suite(CheckList& checks) {
  const EC th = rq(3, 2);
  const EC mh = rq(-1, 2);
  struct Row {
    const char* name;
    FreudenthalVector<EC> got, want;
  };
  const Row rows[] = {
      {"T(1,1,1;0) = (3/2)(0,0,0;1)", t_covariant(diag_ec(1, 1, 1, 0)), th * diag_ec(0, 0, 0, 1)},
      {"T(1,1,1;2) = (3/2)(2,2,2;1)", t_covariant(diag_ec(1, 1, 1, 2)), th * diag_ec(2, 2, 2, 1)},
      {"T(1,2,2;1) = (3/2)(4,2,2;4)", t_covariant(diag_ec(1, 2, 2, 1)), th * diag_ec(4, 2, 2, 4)},
      {"S(1,0,0;2) = -(1/2)(4,0,0;2)", s_covariant(diag_ec(1, 0, 0, 2)), mh * diag_ec(4, 0, 0, 2)},
      {"T(1,1,2;0) = (3/2)(0,0,0;2)", t_covariant(diag_ec(1, 1, 2, 0)), th * diag_ec(0, 0, 0, 2)},
      {"T(1,1,2;3) = (3/2)(6,6,3;2)", t_covariant(diag_ec(1, 1, 2, 3)), th * diag_ec(6, 6, 3, 2)},
      {"T(1,2,3;0) = (3/2)(0,0,0;6)", t_covariant(diag_ec(1, 2, 3, 0)), th * diag_ec(0, 0, 0, 6)},
      {"T(1,2,3;5) = (3/2)(30,15,10;6)", t_covariant(diag_ec(1, 2, 3, 5)),
       th * diag_ec(30, 15, 10, 6)},
  };
  for (const Row& row : rows)
    checks.add(row.name, (row.got - row.want).is_zero(), "nonzero residual in exact arithmetic");

  // General diagonal law and the derived S fixture.
  checks.add("T(2,3,5;7) = (3/2)(105,70,42;30)",
             (t_covariant(diag_ec(2, 3, 5, 7)) - th * diag_ec(105, 70, 42, 30)).is_zero(),
             "nonzero residual in exact arithmetic");
  {
    FreudenthalVector<EC> want;
    want.X = -JordanElement<EC>::identity();
    checks.add("S(1,1,1;0) = (-E,0,0,0)", (s_covariant(diag_ec(1, 1, 1, 0)) - want).is_zero(),
               "nonzero residual in exact arithmetic");
  }
}

void run_structure_checks(CheckList& checks, std::mt19937_64& rng) {
  // Octonion axioms that pin the multiplication table (exact, random inputs).
  {
    bool alt = true, norm_comp = true, conj_anti = true;
    for (int trial = 0; trial < 4; ++trial) {
      const Octonion<EC> x = random_rational_octonion(rng);
      const Octonion<EC> y = random_rational_octonion(rng);
      alt = alt && ((x * x) * y - x * (x * y)).is_zero() &&
            ((y * x) * x - y * (x * x)).is_zero();
      norm_comp = norm_comp && ScalarOps<EC>::is_zero(oct_bilinear(x * y, x * y) -
                                                      oct_bilinear(x, x) * oct_bilinear(y, y));
      conj_anti = conj_anti && ((x * y).conj() - y.conj() * x.conj()).is_zero();
    }
    checks.add("octonion alternativity (xx)y = x(xy), (yx)x = y(xx)", alt);
    checks.add("octonion norm composition N(xy) = N(x)N(y)", norm_comp);
    checks.add("octonion conjugation anti-automorphism", conj_anti);
  }

  // Jordan algebra: commutative power-associative structure and the trace
  // form's associativity (exact, random inputs).
  {
    bool jordan_id = true, trace_assoc = true;
    for (int trial = 0; trial < 3; ++trial) {
      const JordanElement<EC> x = random_rational_jordan(rng);
      const JordanElement<EC> y = random_rational_jordan(rng);
      const JordanElement<EC> z = random_rational_jordan(rng);
      const JordanElement<EC> xx = jordan_mul(x, x);
      jordan_id = jordan_id && (jordan_mul(jordan_mul(x, y), xx) -
                                jordan_mul(x, jordan_mul(y, xx)))
                                   .is_zero();
      trace_assoc = trace_assoc && ScalarOps<EC>::is_zero(jordan_inner(jordan_mul(x, y), z) -
                                                          jordan_inner(x, jordan_mul(y, z)));
    }
    checks.add("Jordan identity (X.Y).X^2 = X.(Y.X^2)", jordan_id);
    checks.add("trace associativity (X.Y, Z) = (X, Y.Z)", trace_assoc);
  }

  // lambda/tau structure (exact, random inputs).
  {
    bool ok = true;
    for (int trial = 0; trial < 3; ++trial) {
      const FreudenthalVector<EC> p = random_rational_fv(rng);
      const FreudenthalVector<EC> q = random_rational_fv(rng);
      ok = ok && (lambda_map(lambda_map(p)) + p).is_zero() &&
           ScalarOps<EC>::is_zero(herm_inner(p, q) - symplectic(tau_map(lambda_map(p)), q));
    }
    checks.add("lambda^2 = -id and <P,Q> = {tau lambda P, Q}", ok);
  }

  // The cross product acts skew-symmetrically on the symplectic form and as a
  // derivation of itself (exact, random inputs).  The derivation identity is
  // sensitive to every coefficient of the cross product.
  {
    bool skew = true;
    for (int trial = 0; trial < 2; ++trial) {
      const auto m = cross_p(random_rational_fv(rng), random_rational_fv(rng));
      const FreudenthalVector<EC> r = random_rational_fv(rng);
      const FreudenthalVector<EC> s = random_rational_fv(rng);
      skew = skew &&
             ScalarOps<EC>::is_zero(symplectic(m.apply(r), s) + symplectic(r, m.apply(s)));
    }
    checks.add("{(PxQ)R, S} + {R, (PxQ)S} = 0", skew);

    bool deriv = true;
    for (int trial = 0; trial < 2; ++trial) {
      const auto phi = cross_p(random_rational_fv(rng), random_rational_fv(rng));
      const FreudenthalVector<EC> p = random_rational_fv(rng);
      const FreudenthalVector<EC> q = random_rational_fv(rng);
      const FreudenthalVector<EC> v = random_rational_fv(rng);
      const auto m = cross_p(p, q);
      const FreudenthalVector<EC> lhs = phi.apply(m.apply(v)) - m.apply(phi.apply(v));
      const FreudenthalVector<EC> rhs =
          (cross_p(phi.apply(p), q) + cross_p(p, phi.apply(q))).apply(v);
      deriv = deriv && (lhs - rhs).is_zero();
    }
    checks.add("[PxQ, RxS] = (PxQ)R x S + R x (PxQ)S", deriv);
  }

  // M-membership: (0,0,1,0) exactly; (1/(2 sqrt 2))(E,E,1,1) in floating
  // point at 1e-12.
  {
    const FreudenthalVector<EC> p = diag_ec(0, 0, 0, 1);
    checks.add("(0,0,1,0): PxP = 0 and <P,P> = 1 (exact)",
               cross_p(p, p).is_zero() &&
                   ScalarOps<EC>::is_zero(herm_inner(p, p) - ScalarOps<EC>::one()));
  }
  {
    const double c = 1.0 / (2.0 * std::sqrt(2.0));
    FreudenthalVector<cd> p;
    p.X = cd(c) * JordanElement<cd>::identity();
    p.Y = p.X;
    p.xi = c;
    p.eta = c;
    const double cross_resid = max_abs_tuple(cross_p(p, p));
    const double norm_resid = std::abs(herm_inner(p, p) - cd(1.0));
    checks.add("(1/(2sqrt2))(E,E,1,1): PxP = 0 and <P,P> = 1 (1e-12)",
               cross_resid <= 1e-12 && norm_resid <= 1e-12,
               "residuals " + std::to_string(cross_resid) + ", " + std::to_string(norm_resid));
  }

  // The SU(2) action: the two displays and the composition law.
  {
    const double s = 1.0 / std::sqrt(2.0);
    const SU2Matrix<cd> u(cd(s), cd(-s));
    FreudenthalVector<cd> p;  // (E, 0, 1, 0)
    p.X = JordanElement<cd>::identity();
    p.xi = 1.0;
    FreudenthalVector<cd> want;  // (1/sqrt2)(E, E, 1, 1)
    want.X = cd(s) * JordanElement<cd>::identity();
    want.Y = want.X;
    want.xi = s;
    want.eta = s;
    const double r1 = max_abs(u.apply(p) - want);

    FreudenthalVector<cd> p1;  // (E1, 0, 1, 0)
    p1.X = JordanElement<cd>::diag_unit(0);
    p1.xi = 1.0;
    FreudenthalVector<cd> want1;
    want1.X = cd(s) * JordanElement<cd>::diag_unit(0);
    want1.Y = want1.X;
    want1.xi = s;
    want1.eta = s;
    const double r2 = max_abs(u.apply(p1) - want1);
    checks.add("phi(A)(E,0,1,0) and phi(A)(E1,0,1,0) displays (1e-12)",
               r1 <= 1e-12 && r2 <= 1e-12,
               "residuals " + std::to_string(r1) + ", " + std::to_string(r2));
  }
  {
    std::uniform_real_distribution<double> ang(-3.0, 3.0);
    bool ok = true;
    for (int trial = 0; trial < 3; ++trial) {
      const SU2Matrix<cd> u = su2_direction(trial % 3, ang(rng));
      const SU2Matrix<cd> v = su2_direction((trial + 1) % 3, ang(rng));
      FreudenthalVector<cd> p;
      std::normal_distribution<double> g(0.0, 1.0);
      for (int i = 0; i < 56; ++i) p.coord(i) = cd(g(rng), g(rng));
      ok = ok && max_abs(compose(u, v).apply(p) - u.apply(v.apply(p))) <= 1e-12 * max_abs(p);
    }
    checks.add("phi(A) composition phi(AB) = phi(A)phi(B) (1e-12)", ok);
  }
}

void run_group_checks(CheckList& checks, std::mt19937_64& rng) {
  const LieBasis f4 = build_f4_basis();
  checks.add("f4 basis rank 52, spectral gap >= 10",
             f4.dim() == 52 && f4.certificate.gap >= 10.0,
             "rank " + std::to_string(f4.certificate.rank));
  const LieBasis e6 = build_e6_basis();
  checks.add("e6 basis rank 78, spectral gap >= 10",
             e6.dim() == 78 && e6.certificate.gap >= 10.0,
             "rank " + std::to_string(e6.certificate.rank));
  const LieBasis e7 = build_e7_basis();
  checks.add("e7 basis rank 133, spectral gap >= 10",
             e7.dim() == 133 && e7.certificate.gap >= 10.0,
             "rank " + std::to_string(e7.certificate.rank));

  {
    double worst = 0;
    for (int trial = 0; trial < 10; ++trial)
      worst = std::max(worst, random_group_element(e7, rng).cert.worst());
    checks.add("10 random group elements certified (1e-9)", worst <= 1e-9,
               "worst residual " + std::to_string(worst));
  }

  {
    double worst = 0;
    for (int trial = 0; trial < 5; ++trial) {
      const GroupElement a = random_group_element(e7, rng);
      const FreudenthalVector<cd> p = random_freudenthal(rng);
      const FreudenthalVector<cd> tp = t_covariant(p);
      const FreudenthalVector<cd> sp = s_covariant(p);
      worst = std::max(worst,
                       max_abs(t_covariant(a.apply(p)) - a.apply(tp)) / (1.0 + max_abs(tp)));
      worst = std::max(worst,
                       max_abs(s_covariant(a.apply(p)) - a.apply(sp)) / (1.0 + max_abs(sp)));
    }
    checks.add("T and S equivariance on 5 random (alpha, P) (1e-9)", worst <= 1e-9,
               "worst residual " + std::to_string(worst));
  }

  {
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
        bad = format_multiset(row.rep) + " -> " + std::to_string(st.dim) + " want " +
              std::to_string(row.dim);
    }
    checks.add("stabilizer dimensions of the 12 representatives", hits == 12, bad);
  }
}

int cmd_verify(bool quick, const std::string& fault, std::uint64_t seed, bool json_mode) {
  if (!fault.empty()) {
    if (fault == "jordan-cross")
      inject_fault(FaultKnob::jordan_cross_half);
    else if (fault == "cross-phi")
      inject_fault(FaultKnob::cross_phi);
    else if (fault == "cross-a")
      inject_fault(FaultKnob::cross_a);
    else if (fault == "cross-b")
      inject_fault(FaultKnob::cross_b);
    else if (fault == "cross-nu")
      inject_fault(FaultKnob::cross_nu);
    else
      throw std::invalid_argument("unknown fault knob: " + fault);
  }

  CheckList checks;
  checks.json_mode = json_mode;
  std::mt19937_64 rng(seed);

  run_identity_suite(checks);
  if (!quick) {
    run_structure_checks(checks, rng);
    run_group_checks(checks, rng);
  }
  clear_faults();

  if (json_mode) {
    json out{{"checks", checks.results},
             {"failures", checks.failures},
             {"ok", checks.failures == 0}};
    if (checks.failures) out["first_failure"] = checks.first_failure;
    std::cout << out.dump(2) << "\n";
  } else if (checks.failures) {
    std::cout << checks.failures << " check(s) failed; first failure: " << checks.first_failure
              << "\n";
  } else {
    std::cout << "all checks passed\n";
  }
  return checks.failures ? kExitVerify : kExitOk;
}

// ---------------------------------------------------------------------------
// classification / invariants / diagonalization / sampling

void print_report(const ClassificationReport& rep) {
  std::cout << "type:        " << orbit_quotient(rep.type) << "\n";
  std::cout << "multiset:    " << format_multiset(rep.multiset) << "\n";
  std::cout << "stabilizer:  dim " << rep.stab_dim << " (gap " << std::setprecision(4)
            << rep.stab_gap << ")\n";
  std::cout << "margin:      " << std::setprecision(6) << rep.margin << "\n";
  std::cout << "agreement:   " << (rep.method_agreement ? "yes" : "no") << "\n";
  if (rep.invariant_type) std::cout << "invariant path:  " << orbit_name(*rep.invariant_type) << "\n";
  if (rep.stabilizer_type)
    std::cout << "stabilizer path: " << orbit_name(*rep.stabilizer_type) << "\n";
  for (const std::string& note : rep.notes) std::cout << "note: " << note << "\n";
  if (rep.ambiguous) std::cout << "ambiguous: yes\n";
}

int cmd_classify(const std::string& path, double eps, bool json_mode) {
  const ParsedElement elem = load_element(path);
  const LieBasis e7 = build_e7_basis();
  std::mt19937_64 rng(0);
  const HsCalibration calib = calibrate_hs(rng);
  const ClassificationReport rep = classify(elem.value, eps, e7, calib);
  if (json_mode)
    std::cout << to_json(rep).dump(2) << "\n";
  else
    print_report(rep);
  // Disagreement between two healthy paths is uncertainty just like a
  // below-band margin: the caller should not trust the label blindly.
  const bool disagree =
      rep.invariant_type && rep.stabilizer_type && !rep.method_agreement;
  return rep.ambiguous || disagree ? kExitAmbiguous : kExitOk;
}

int cmd_invariants(const std::string& path, bool json_mode) {
  const ParsedElement elem = load_element(path);
  const InvariantSet<cd> inv = invariants_of(elem.value);
  json out = to_json(inv);
  if (elem.exact_value) {
    const auto e = exact_elementary(*elem.exact_value);
    out["elementary"] = json::array(
        {e[0].get_str(), e[1].get_str(), e[2].get_str(), e[3].get_str()});
  }
  if (json_mode) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << std::setprecision(15);
    std::cout << "I1 = <P,P>          = " << inv.i1 << "\n";
    std::cout << "I2 = |PxP|^2        = " << inv.i2 << "\n";
    std::cout << "I3 = <T(P),T(P)>    = " << inv.i3 << "\n";
    std::cout << "I4 = <T(P),P>       = " << inv.i4.real() << " + " << inv.i4.imag() << "i\n";
    if (out.contains("elementary"))
      std::cout << "elementary symmetric (exact): " << out["elementary"].dump() << "\n";
  }
  return kExitOk;
}

int cmd_diagonalize(const std::string& path, const ReductionConfig& cfg, double eps,
                    bool json_mode) {
  const ParsedElement elem = load_element(path);
  const LieBasis e7 = build_e7_basis();
  std::mt19937_64 rng(0);
  const HsCalibration calib = calibrate_hs(rng);
  const ReductionResult res = reduce(elem.value, e7, cfg);
  const ReductionVerification ver = verify_reduction(elem.value, res, e7, calib, eps);
  if (json_mode) {
    json out = to_json(res);
    out["verification"] = to_json(ver);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "diagonal:   " << format_multiset(res.diagonal.entries) << "\n";
    std::cout << "residual:   " << res.residual << "\n";
    std::cout << "sweeps:     " << res.iterations << "\n";
    std::cout << "factors:    " << res.transform.size() << "\n";
    std::cout << "certified:  " << (res.certified ? "yes" : "no") << "\n";
    std::cout << "verified:   " << (ver.ok ? "yes" : "no");
    if (!ver.ok) std::cout << "  (" << ver.failure << ")";
    std::cout << "\n";
  }
  if (!res.certified) return kExitNonConverge;
  return ver.ok ? kExitOk : kExitVerify;
}

int cmd_sample(const std::string& pattern_text, std::uint64_t seed, int count,
               const std::string& out_dir, bool json_mode) {
  const std::array<double, 4> pattern = parse_pattern(pattern_text);
  const PatternDecision expect = classify_multiset(DiagonalForm(pattern, 1e-6), 1e-6);
  const LieBasis e7 = build_e7_basis();
  std::mt19937_64 rng(seed);
  std::filesystem::create_directories(out_dir);
  json files = json::array();
  for (int i = 0; i < count; ++i) {
    const FreudenthalVector<cd> p = random_orbit_sample(e7, pattern, rng);
    std::ostringstream name;
    name << "sample_" << std::setw(3) << std::setfill('0') << i << ".json";
    const std::filesystem::path file = std::filesystem::path(out_dir) / name.str();
    std::ofstream out(file);
    out << element_to_json(p).dump(2) << "\n";
    files.push_back(file.string());
  }
  if (json_mode) {
    std::cout << json{{"pattern", pattern},
                      {"expected_type", orbit_quotient(expect.type)},
                      {"files", files}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "pattern " << format_multiset(pattern) << " -> expected orbit "
              << orbit_quotient(expect.type) << "\n";
    for (const auto& f : files) std::cout << "wrote " << f.get<std::string>() << "\n";
  }
  return kExitOk;
}

int cmd_table(bool json_mode) {
  const struct {
    OrbitType type;
    const char* rep;
  } rows[] = {
      {OrbitType::E7, "(0, 0, 0; 0)"},     {OrbitType::E6, "(0, 0, 0; 1)"},
      {OrbitType::F4, "(0, 1, 1; 1)"},     {OrbitType::SPIN11, "(0, 0, 1; 1)"},
      {OrbitType::SPIN10, "(0, 0, 1; r)"}, {OrbitType::SPIN9, "(0, 1, 1; r)"},
      {OrbitType::SPIN8, "(0, 1, r; s)"},
  };
  if (json_mode) {
    json out = json::array();
    for (const auto& row : rows)
      out.push_back(json{{"orbit", orbit_quotient(row.type)},
                         {"representative", row.rep},
                         {"stabilizer_dim", stabilizer_dim_of(row.type)}});
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "orbit type      representative   stabilizer dim\n";
  for (const auto& row : rows) {
    std::ostringstream q;
    q << orbit_quotient(row.type);
    std::cout << std::left << std::setw(16) << q.str() << std::setw(17) << row.rep
              << stabilizer_dim_of(row.type) << "\n";
  }
  std::cout << "(r, s positive, 0, 1, r, s distinct; representatives up to a constant)\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbit machinery for the 56-dimensional Freudenthal vector space"};
  app.require_subcommand(1);
  bool json_mode = false;
  app.add_flag("--json", json_mode, "machine-readable output");

  auto* verify = app.add_subcommand("verify", "run the identity and property suites");
  bool quick = false;
  std::string fault;
  std::uint64_t verify_seed = 0;
  verify->add_flag("--quick", quick, "identity suite only");
  verify->add_option("--fault-inject", fault, "perturb a cross-product constant by 1% (test-only)")
      ->check(CLI::IsMember({"jordan-cross", "cross-phi", "cross-a", "cross-b", "cross-nu"}));
  verify->add_option("--seed", verify_seed, "seed for the randomized property checks");

  auto* classify_cmd = app.add_subcommand("classify", "classify an element file");
  std::string classify_file;
  double eps = 1e-6;
  classify_cmd->add_option("file", classify_file, "element JSON file")->required();
  classify_cmd->add_option("--eps", eps, "relative multiset tolerance");

  auto* invariants_cmd = app.add_subcommand("invariants", "print the orbit invariants");
  std::string invariants_file;
  invariants_cmd->add_option("file", invariants_file, "element JSON file")->required();

  auto* diag_cmd = app.add_subcommand("diagonalize", "reduce an element to diagonal form");
  std::string diag_file;
  ReductionConfig cfg;
  double diag_eps = 1e-6;
  diag_cmd->add_option("file", diag_file, "element JSON file")->required();
  diag_cmd->add_option("--tol", cfg.tol, "target off-form energy");
  diag_cmd->add_option("--max-sweeps", cfg.max_sweeps, "sweep limit");
  diag_cmd->add_option("--restarts", cfg.restarts, "random restarts on stagnation");
  diag_cmd->add_option("--seed", cfg.seed, "restart seed");
  diag_cmd->add_option("--eps", diag_eps, "classification tolerance for verification");

  auto* sample_cmd = app.add_subcommand("sample", "sample random elements from an orbit");
  std::string pattern_text, out_dir = ".";
  std::uint64_t sample_seed = 0;
  int count = 1;
  sample_cmd->add_option("pattern", pattern_text, "diagonal pattern, e.g. \"(1,1,2;3)\"")
      ->required();
  sample_cmd->add_option("--seed", sample_seed, "sampling seed");
  sample_cmd->add_option("-n,--count", count, "number of samples");
  sample_cmd->add_option("--out", out_dir, "output directory");

  auto* table_cmd = app.add_subcommand("table", "print the seven orbit types");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (verify->parsed()) return cmd_verify(quick, fault, verify_seed, json_mode);
    if (classify_cmd->parsed()) return cmd_classify(classify_file, eps, json_mode);
    if (invariants_cmd->parsed()) return cmd_invariants(invariants_file, json_mode);
    if (diag_cmd->parsed()) return cmd_diagonalize(diag_file, cfg, diag_eps, json_mode);
    if (sample_cmd->parsed())
      return cmd_sample(pattern_text, sample_seed, count, out_dir, json_mode);
    if (table_cmd->parsed()) return cmd_table(json_mode);
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerify;
  }
  return kExitOk;
}
