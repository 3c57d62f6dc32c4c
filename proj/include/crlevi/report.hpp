#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "crlevi/inertia.hpp"
#include "crlevi/manifest.hpp"

namespace crlevi {

using Json = nlohmann::json;

/// Output of one CLI command. Keys serialize sorted, numbers as canonical
/// strings, so equal inputs give byte-identical text.
struct Report {
  std::string command;
  std::string input_digest;
  Json result = Json::object();
  std::vector<std::string> warnings;

  Json to_json() const {
    Json j;
    j["command"] = command;
    j["input_digest"] = input_digest;
    j["result"] = result;
    j["warnings"] = warnings;
    return j;
  }
};

inline Json signature_json(const Signature& s) { return Json::array({s.n_pos, s.n_zero, s.n_neg}); }

inline Json matrix_json(const CMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json vector_json(std::span<const GaussianRational> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

inline Json rationals_json(std::span<const Rational> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

/// Type, scalar Levi matrix, signature and dual-cone flag at a point.
inline Json embedded_report(const EmbeddedCR& M, const PointC& x, const std::vector<Rational>& xi) {
  PointData pd = analyze_point(M, x);
  ConormalCovector cv{xi};
  HermitianMatrix L = scalar_levi(M, pd, cv);
  Signature s = inertia(L);
  Json j;
  j["point"] = vector_json(x);
  j["conormal"] = rationals_json(xi);
  j["cr_dim"] = pd.n;
  j["cr_codim"] = pd.k;
  j["generic"] = pd.generic;
  j["levi_matrix"] = matrix_json(L.matrix());
  j["signature"] = signature_json(s);
  j["dual_cone_member"] = s.n_neg == 0;
  return j;
}

inline const char* kind_name(LeviParam::Kind k) {
  switch (k) {
    case LeviParam::Kind::Real: return "real";
    case LeviParam::Kind::Complex: return "complex";
    case LeviParam::Kind::ConjugateOf: return "conjugate";
  }
  return "?";
}

/// Parameter values for specialize(): the given ones, with every missing
/// independent parameter set to 0 (and a warning).
inline std::map<std::string, GaussianRational> complete_values(const ParamLevi& L, std::map<std::string, GaussianRational> given,
                                                               std::vector<std::string>& warnings) {
  for (const auto& [name, v] : given) (void)L.param_index(name);
  for (const auto& p : L.params) {
    if (given.count(p.name)) continue;
    if (p.kind == LeviParam::Kind::ConjugateOf) continue;
    if (p.kind == LeviParam::Kind::Complex && given.count(L.params[p.partner].name)) continue;
    given[p.name] = GaussianRational();
    warnings.push_back("parameter " + p.name + " not given, using 0");
  }
  return given;
}

inline Json homogeneous_report(const Manifest& m, const std::vector<std::map<std::string, GaussianRational>>& specializations,
                               std::vector<std::string>& warnings) {
  const CRAlgebra& A = *m.algebra;
  CRType type = cr_type(A);
  ParamLevi L = param_levi(A, m.t10_complement, m.quotient);
  Json j;
  j["cr_type"] = Json::array({type.n, type.k});
  Json names = Json::array();
  Json kinds = Json::object();
  for (const auto& p : L.params) {
    names.push_back(p.name);
    kinds[p.name] = kind_name(p.kind);
  }
  j["param_names"] = names;
  j["param_kinds"] = kinds;
  Json entries = Json::array();
  for (std::size_t a = 0; a < L.n; ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < L.n; ++b) row.push_back(L.entry_string(a, b));
    entries.push_back(std::move(row));
  }
  j["levi_entries"] = entries;
  Json specs = Json::array();
  for (const auto& given : specializations) {
    auto values = complete_values(L, given, warnings);
    HermitianMatrix h = specialize(L, values);
    Json vj = Json::object();
    for (const auto& [name, v] : values) vj[name] = v.to_string();
    specs.push_back({{"values", vj}, {"levi_matrix", matrix_json(h.matrix())}, {"signature", signature_json(inertia(h))}});
  }
  j["specializations"] = specs;
  return j;
}

inline Json almost_report(const Manifest& m, std::vector<std::string>& warnings) {
  Json j;
  std::optional<bool> integrable;
  if (m.complex_structure) {
    const AlmostComplex& ac = *m.complex_structure;
    const std::size_t d = ac.dim();
    Json nonzero = Json::array();
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = a + 1; b < d; ++b) {
        PolyVectorField n = nijenhuis(ac, PolyVectorField::coordinate(d, a), PolyVectorField::coordinate(d, b));
        if (n.is_zero()) continue;
        Json comps = Json::array();
        for (const auto& c : n.components) comps.push_back(to_real_string(c));
        nonzero.push_back({{"pair", Json::array({a + 1, b + 1})}, {"value", comps}});
      }
    integrable = nonzero.empty();
    j["nijenhuis_nonzero"] = nonzero;
  }
  if (m.frame) {
    const AlmostCRFrame& f = *m.frame;
    PartialIntegrability pi = partial_integrability(f);
    if (pi.pointwise) warnings.push_back("pointwise integrability check only");
    j["cr_type"] = Json::array({f.cr_dim(), f.cr_codim()});
    j["cr2"] = pi.cr2;
    j["cr3"] = pi.cr3;
    j["pointwise"] = pi.pointwise;
    integrable = integrable.value_or(true) && pi.cr2 && pi.cr3;
    Json values = Json::array();
    if (f.cr_codim() > 0) {
      std::vector<Rational> xi;
      if (m.conormal) {
        xi = *m.conormal;
      } else {
        xi.assign(f.cr_codim(), Rational(0));
        xi[0] = 1;
        warnings.push_back("conormal not given, using the first form");
      }
      j["conormal"] = rationals_json(xi);
      for (std::size_t i = 0; i < f.frame().size(); ++i) {
        std::vector<Rational> a(f.frame().size(), Rational(0));
        a[i] = 1;
        values.push_back(to_string(abstract_levi(f, f.base_point(), xi, a)));
      }
    }
    j["levi_values"] = values;
  }
  j["integrable"] = *integrable;
  return j;
}

// ---------------------------------------------------------------------------
// Human-readable rendering of a report.

namespace detail {

inline bool is_scalar_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j)
    if (e.is_structured()) return false;
  return true;
}

inline std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

inline void render(const Json& j, const std::string& indent, std::string& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = j.is_object() ? it.key() : "-";
    const std::string label = j.is_object() ? key + ": " : "- ";
    const Json& v = *it;
    if (!v.is_structured()) {
      out += indent + label + scalar_text(v) + "\n";
    } else if (is_scalar_array(v)) {
      std::string row;
      for (const auto& e : v) row += (row.empty() ? "" : ", ") + scalar_text(e);
      out += indent + label + "[" + row + "]\n";
    } else if (v.empty()) {
      out += indent + label + (v.is_array() ? "[]" : "{}") + "\n";
    } else if (j.is_array() && v.is_object()) {
      // "- " marks the first line of each list item
      std::string item;
      render(v, indent + "  ", item);
      item.replace(indent.size(), 2, "- ");
      out += item;
    } else {
      out += indent + key + ":\n";
      render(v, indent + "  ", out);
    }
  }
}

}  // namespace detail

inline std::string render_text(const Report& r) {
  std::string out = "command: " + r.command + "\ninput_digest: " + r.input_digest + "\n";
  detail::render(r.result, "", out);
  for (const auto& w : r.warnings) out += "warning: " + w + "\n";
  return out;
}

inline std::string render_json(const Report& r) { return r.to_json().dump(2) + "\n"; }

}  // namespace crlevi
