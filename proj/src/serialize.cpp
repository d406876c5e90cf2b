#include "e7/serialize.hpp"

#include <stdexcept>

namespace e7 {

json to_json(const cd& z) { return json::array({z.real(), z.imag()}); }

json to_json(const ExactComplex& z) {
  return json::array({z.re.get_str(), z.im.get_str()});
}

cd cd_from_json(const json& j) {
  if (j.is_number()) return cd(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return cd(j[0].get<double>(), j[1].get<double>());
  throw std::invalid_argument("expected complex number as [re, im]");
}

namespace {
Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return rational_from_string(j.get<std::string>());
  throw std::invalid_argument("expected exact rational as integer or \"p/q\" string");
}
}  // namespace

ExactComplex exact_from_json(const json& j) {
  if (j.is_number_integer() || j.is_string()) return ExactComplex(rational_from_json(j));
  if (j.is_array() && j.size() == 2)
    return {rational_from_json(j[0]), rational_from_json(j[1])};
  throw std::invalid_argument("expected exact complex as [\"p/q\", \"p/q\"]");
}

namespace {

template <class F, class Conv>
json jordan_to_json_impl(const JordanElement<F>& x, Conv conv) {
  json d = json::array(), xs = json::array();
  for (int k = 0; k < 3; ++k) d.push_back(conv(x.d[k]));
  for (int k = 0; k < 3; ++k) {
    json o = json::array();
    for (int i = 0; i < 8; ++i) o.push_back(conv(x.x[k].c[i]));
    xs.push_back(o);
  }
  return json{{"d", d}, {"x", xs}};
}

template <class F, class Conv>
JordanElement<F> jordan_from_json_impl(const json& j, Conv conv) {
  if (!j.is_object() || !j.contains("d") || !j.contains("x"))
    throw std::invalid_argument("Jordan element needs \"d\" and \"x\"");
  JordanElement<F> x;
  const json& d = j.at("d");
  const json& xs = j.at("x");
  if (!d.is_array() || d.size() != 3 || !xs.is_array() || xs.size() != 3)
    throw std::invalid_argument("Jordan element shape: 3 diagonals, 3 octonions");
  for (int k = 0; k < 3; ++k) {
    x.d[k] = conv(d[k]);
    if (!xs[k].is_array() || xs[k].size() != 8)
      throw std::invalid_argument("octonion needs 8 coordinates");
    for (int i = 0; i < 8; ++i) x.x[k].c[i] = conv(xs[k][i]);
  }
  return x;
}

}  // namespace

json to_json(const JordanElement<cd>& x) {
  return jordan_to_json_impl(x, [](const cd& z) { return to_json(z); });
}
json to_json(const JordanElement<ExactComplex>& x) {
  return jordan_to_json_impl(x, [](const ExactComplex& z) { return to_json(z); });
}

json element_to_json(const FreudenthalVector<cd>& p) {
  return json{{"mode", "float"},
              {"X", to_json(p.X)},
              {"Y", to_json(p.Y)},
              {"xi", to_json(p.xi)},
              {"eta", to_json(p.eta)}};
}

json element_to_json(const FreudenthalVector<ExactComplex>& p) {
  return json{{"mode", "exact"},
              {"X", to_json(p.X)},
              {"Y", to_json(p.Y)},
              {"xi", to_json(p.xi)},
              {"eta", to_json(p.eta)}};
}

FreudenthalVector<cd> to_float(const FreudenthalVector<ExactComplex>& p) {
  FreudenthalVector<cd> q;
  for (int i = 0; i < 56; ++i) q.coord(i) = ScalarOps<ExactComplex>::to_cd(p.coord(i));
  return q;
}

ParsedElement parse_element(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("element file must be a JSON object");
  ParsedElement out;
  out.exact = j.value("mode", "float") == "exact";

  if (j.contains("diag")) {
    const json& d = j.at("diag");
    if (!d.is_array() || d.size() != 4)
      throw std::invalid_argument("\"diag\" must hold [r1, r2, r3, r]");
    if (out.exact) {
      FreudenthalVector<ExactComplex> p = diagonal_vector<ExactComplex>(
          exact_from_json(d[0]), exact_from_json(d[1]), exact_from_json(d[2]),
          exact_from_json(d[3]));
      out.exact_value = p;
      out.value = to_float(p);
    } else {
      out.value = diagonal_vector<cd>(cd_from_json(d[0]), cd_from_json(d[1]), cd_from_json(d[2]),
                                      cd_from_json(d[3]));
    }
    return out;
  }

  for (const char* key : {"X", "Y", "xi", "eta"})
    if (!j.contains(key))
      throw std::invalid_argument(std::string("element file missing \"") + key + "\"");

  if (out.exact) {
    FreudenthalVector<ExactComplex> p;
    auto conv = [](const json& v) { return exact_from_json(v); };
    p.X = jordan_from_json_impl<ExactComplex>(j.at("X"), conv);
    p.Y = jordan_from_json_impl<ExactComplex>(j.at("Y"), conv);
    p.xi = conv(j.at("xi"));
    p.eta = conv(j.at("eta"));
    out.exact_value = p;
    out.value = to_float(p);
  } else {
    auto conv = [](const json& v) { return cd_from_json(v); };
    out.value.X = jordan_from_json_impl<cd>(j.at("X"), conv);
    out.value.Y = jordan_from_json_impl<cd>(j.at("Y"), conv);
    out.value.xi = conv(j.at("xi"));
    out.value.eta = conv(j.at("eta"));
  }
  return out;
}

json to_json(const InvariantSet<cd>& inv) {
  return json{{"I1", inv.i1}, {"I2", inv.i2}, {"I3", inv.i3}, {"I4", to_json(inv.i4)}};
}

json to_json(const ClassificationReport& rep) {
  json margins{{"pattern_margin", rep.margin}, {"stabilizer_gap", rep.stab_gap}};
  json out{{"type", orbit_name(rep.type)},
           {"quotient", orbit_quotient(rep.type)},
           {"multiset", rep.multiset},
           {"stab_dim", rep.stab_dim},
           {"margins", margins},
           {"method_agreement", rep.method_agreement},
           {"ambiguous", rep.ambiguous},
           {"notes", rep.notes}};
  if (rep.invariant_type) out["invariant_type"] = orbit_name(*rep.invariant_type);
  if (rep.stabilizer_type) out["stabilizer_type"] = orbit_name(*rep.stabilizer_type);
  return out;
}

json to_json(const ReductionResult& res) {
  json factors = json::array();
  for (const auto& f : res.transform) {
    if (f.kind == ReductionFactor::Kind::E7Exp)
      factors.push_back(json{{"kind", "exp"}, {"direction", f.direction}, {"t", f.t}});
    else
      factors.push_back(json{{"kind", "su2"},
                             {"family", f.direction},
                             {"t", f.t},
                             {"a", to_json(f.su2.a)},
                             {"b", to_json(f.su2.b)}});
  }
  return json{{"diagonal", res.diagonal.entries},
              {"tolerance", res.diagonal.tol},
              {"residual", res.residual},
              {"iterations", res.iterations},
              {"certified", res.certified},
              {"norm_drift", res.norm_drift},
              {"phase_absorbed", res.phase_absorbed},
              {"transform", factors}};
}

json to_json(const ReductionVerification& v) {
  return json{{"ok", v.ok},
              {"replay_energy", v.replay_energy},
              {"diagonal_mismatch", v.diagonal_mismatch},
              {"norm_drift", v.norm_drift},
              {"classification_match", v.classification_match},
              {"failure", v.failure}};
}

json to_json(const GroupElement& a) {
  json m = json::array();
  for (int i = 0; i < 56; ++i)
    for (int j = 0; j < 56; ++j) m.push_back(to_json(a.mat(i, j)));
  return json{{"matrix", m},
              {"provenance", a.provenance},
              {"certificate",
               json{{"unitarity", a.cert.unitarity},
                    {"tau_lambda", a.cert.tau_lambda},
                    {"equivariance", a.cert.equivariance}}}};
}

namespace {
json tuple_to_json(const E7Tuple<cd>& t) {
  json phi = json::array();
  for (int i = 0; i < 27 * 27; ++i) phi.push_back(to_json(t.phi.m[i]));
  JordanElement<cd> a = t.A, b = t.B;
  return json{{"phi", phi}, {"A", to_json(a)}, {"B", to_json(b)}, {"nu", to_json(t.nu)}};
}
}  // namespace

json to_json(const LieBasis& basis) {
  const char* label = basis.label == LieBasis::Label::f4   ? "f4"
                      : basis.label == LieBasis::Label::e6 ? "e6"
                                                           : "e7";
  json elements = json::array();
  for (const auto& e : basis.elements) elements.push_back(tuple_to_json(e.tuple));
  std::vector<double> sv(basis.certificate.singular_values.data(),
                         basis.certificate.singular_values.data() +
                             basis.certificate.singular_values.size());
  return json{{"version", 1},
              {"label", label},
              {"rank", basis.certificate.rank},
              {"gap", basis.certificate.gap},
              {"singular_values", sv},
              {"elements", elements}};
}

}  // namespace e7
