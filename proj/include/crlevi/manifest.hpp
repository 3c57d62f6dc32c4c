#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "crlevi/almost_structures.hpp"
#include "crlevi/embedded_cr.hpp"
#include "crlevi/homogeneous_cr.hpp"
#include "crlevi/parser.hpp"

namespace crlevi {

enum class ManifestKind { Embedded, Tube, Homogeneous, AlmostStructure };

inline const char* to_string(ManifestKind k) {
  switch (k) {
    case ManifestKind::Embedded: return "embedded";
    case ManifestKind::Tube: return "tube";
    case ManifestKind::Homogeneous: return "homogeneous";
    case ManifestKind::AlmostStructure: return "almost_structure";
  }
  return "?";
}

/// Validated manifest. Only the members for its kind are populated.
struct Manifest {
  ManifestKind kind = ManifestKind::Embedded;
  std::size_t ambient_dim = 0;

  // embedded, tube
  std::optional<EmbeddedCR> manifold;
  std::optional<PointC> point;
  std::optional<std::vector<Rational>> conormal;

  // homogeneous
  std::optional<CRAlgebra> algebra;
  std::optional<std::vector<CMatrix>> t10_complement;
  std::optional<QuotientSpec> quotient;

  // almost_structure: a structure J on R^d, an almost CR frame, or both
  std::optional<AlmostComplex> complex_structure;
  std::optional<AlmostCRFrame> frame;
};

namespace detail {

using json = nlohmann::json;

inline const json& field(const json& j, const std::string& name) {
  auto it = j.find(name);
  if (it == j.end()) throw ValidationError("missing field \"" + name + "\"");
  return *it;
}

inline const json* optional_field(const json& j, const std::string& name) {
  auto it = j.find(name);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

inline const json& array_field(const json& v, const std::string& where) {
  if (!v.is_array()) throw ValidationError("field \"" + where + "\" must be an array");
  return v;
}

inline std::string string_of(const json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw ValidationError("field \"" + where + "\" must be a string");
}

// Re-throws a parse failure naming the field it came from.
template <class F>
auto in_field(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.category() == ErrorCategory::Validation && e.name() == "ValidationError" && std::string(e.what()).rfind("field", 0) == 0) throw;
    throw ValidationError("field \"" + where + "\": " + e.what());
  }
}

inline GaussianRational gaussian_of(const json& v, const std::string& where) {
  return in_field(where, [&] { return GaussianRational::parse(string_of(v, where)); });
}

inline std::vector<GaussianRational> gaussian_vector(const json& v, const std::string& where) {
  std::vector<GaussianRational> out;
  for (std::size_t k = 0; k < array_field(v, where).size(); ++k) out.push_back(gaussian_of(v[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

inline std::vector<Rational> rational_vector(const json& v, const std::string& where) {
  std::vector<Rational> out;
  for (std::size_t k = 0; k < array_field(v, where).size(); ++k) {
    std::string w = where + "[" + std::to_string(k) + "]";
    out.push_back(in_field(w, [&] { return parse_rational(string_of(v[k], w)); }));
  }
  return out;
}

inline CMatrix matrix_of(const json& v, std::size_t n, const std::string& where) {
  if (!v.is_array() || v.size() != n) throw ValidationError("field \"" + where + "\" must be a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  CMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    std::string wr = where + "[" + std::to_string(r) + "]";
    if (!v[r].is_array() || v[r].size() != n) throw ValidationError("field \"" + wr + "\" must be a row of length " + std::to_string(n));
    for (std::size_t c = 0; c < n; ++c) m(r, c) = gaussian_of(v[r][c], wr + "[" + std::to_string(c) + "]");
  }
  return m;
}

inline std::vector<CMatrix> matrix_list(const json& v, std::size_t n, const std::string& where) {
  std::vector<CMatrix> out;
  for (std::size_t k = 0; k < array_field(v, where).size(); ++k) out.push_back(matrix_of(v[k], n, where + "[" + std::to_string(k) + "]"));
  return out;
}

inline Poly real_poly_of(const json& v, std::size_t d, const std::string& where) {
  return in_field(where, [&] { return parse_real_poly(string_of(v, where), d); });
}

inline std::vector<Poly> real_poly_vector(const json& v, std::size_t d, const std::string& where) {
  std::vector<Poly> out;
  for (std::size_t k = 0; k < array_field(v, where).size(); ++k) out.push_back(real_poly_of(v[k], d, where + "[" + std::to_string(k) + "]"));
  return out;
}

inline PolyMatrix real_poly_matrix(const json& v, std::size_t d, const std::string& where) {
  PolyMatrix out;
  for (std::size_t k = 0; k < array_field(v, where).size(); ++k) out.push_back(real_poly_vector(v[k], d, where + "[" + std::to_string(k) + "]"));
  return out;
}

inline std::size_t size_field(const json& j, const std::string& name) {
  const json& v = field(j, name);
  if (!v.is_number_integer() || v.get<long long>() < 1) throw ValidationError("field \"" + name + "\" must be a positive integer");
  return static_cast<std::size_t>(v.get<long long>());
}

inline void load_embedded(Manifest& m, const json& j) {
  std::vector<WPoly> rho;
  if (m.kind == ManifestKind::Embedded) {
    const json& fs = array_field(field(j, "defining_functions"), "defining_functions");
    for (std::size_t k = 0; k < fs.size(); ++k) {
      std::string w = "defining_functions[" + std::to_string(k) + "]";
      WPoly p = in_field(w, [&] { return parse_wpoly(string_of(fs[k], w), m.ambient_dim); });
      if (!is_real_valued(p)) throw ValidationError("field \"" + w + "\": defining function is not real-valued: " + to_string(p));
      rho.push_back(std::move(p));
    }
    m.manifold.emplace(m.ambient_dim, std::move(rho));
  } else {
    std::vector<Poly> base = real_poly_vector(field(j, "tube_base"), m.ambient_dim, "tube_base");
    m.manifold.emplace(make_tube(base));
  }
  if (m.manifold->codim() == 0) throw ValidationError("field \"defining_functions\" is empty");
  if (const json* p = optional_field(j, "point")) {
    m.point = gaussian_vector(*p, "point");
    if (m.point->size() != m.ambient_dim) throw ValidationError("field \"point\" needs " + std::to_string(m.ambient_dim) + " coordinates");
  }
  if (const json* c = optional_field(j, "conormal")) {
    m.conormal = rational_vector(*c, "conormal");
    if (m.conormal->size() != m.manifold->codim()) throw ValidationError("field \"conormal\" needs " + std::to_string(m.manifold->codim()) + " entries");
  }
}

inline void load_homogeneous(Manifest& m, const json& j) {
  const std::size_t n = size_field(j, "matrix_size");
  m.ambient_dim = n;
  std::vector<CMatrix> q = matrix_list(field(j, "q_basis"), n, "q_basis");
  const json& conj = field(j, "conjugation");
  std::string flavor = string_of(field(conj, "flavor"), "conjugation.flavor");
  Conjugation::Flavor fl;
  if (flavor == "neg_star_conj") fl = Conjugation::Flavor::NegStarConj;
  else if (flavor == "entrywise") fl = Conjugation::Flavor::Entrywise;
  else throw ValidationError("field \"conjugation.flavor\" must be \"neg_star_conj\" or \"entrywise\"");
  CMatrix s = optional_field(conj, "S") ? matrix_of(conj["S"], n, "conjugation.S") : CMatrix::identity(n);
  CRAlgebra::Ambient ambient = CRAlgebra::Ambient::SL;
  std::optional<CMatrix> bilinear;
  if (const json* a = optional_field(j, "ambient")) {
    std::string am = string_of(*a, "ambient");
    if (am == "so") {
      ambient = CRAlgebra::Ambient::SO;
      bilinear = matrix_of(field(j, "bilinear"), n, "bilinear");
    } else if (am != "sl") {
      throw ValidationError("field \"ambient\" must be \"sl\" or \"so\"");
    }
  }
  m.algebra.emplace(in_field("q_basis", [&] { return CRAlgebra(n, std::move(q), Conjugation(fl, s), ambient, bilinear); }));
  if (const json* t = optional_field(j, "t10_complement")) m.t10_complement = matrix_list(*t, n, "t10_complement");
  if (const json* qc = optional_field(j, "quotient_complement")) {
    QuotientSpec spec;
    spec.matrices = matrix_list(*qc, n, "quotient_complement");
    const json& names = array_field(field(j, "param_names"), "param_names");
    if (names.size() != spec.matrices.size()) throw ValidationError("field \"param_names\" must name each quotient_complement matrix");
    for (std::size_t k = 0; k < names.size(); ++k) spec.names.push_back(string_of(names[k], "param_names[" + std::to_string(k) + "]"));
    m.quotient = std::move(spec);
  } else if (optional_field(j, "param_names")) {
    throw ValidationError("field \"param_names\" needs \"quotient_complement\"");
  }
}

inline void load_almost(Manifest& m, const json& j) {
  const std::size_t d = m.ambient_dim;
  if (const json* jm = optional_field(j, "J")) m.complex_structure.emplace(real_poly_matrix(*jm, d, "J"));
  if (const json* fr = optional_field(j, "frame")) {
    std::vector<PolyVectorField> frame;
    for (std::size_t k = 0; k < array_field(*fr, "frame").size(); ++k) {
      std::string w = "frame[" + std::to_string(k) + "]";
      auto comps = real_poly_vector((*fr)[k], d, w);
      if (comps.size() != d) throw ValidationError("field \"" + w + "\" needs " + std::to_string(d) + " components");
      frame.emplace_back(std::move(comps));
    }
    std::vector<PolyOneForm> theta;
    const json& th = field(j, "theta");
    for (std::size_t k = 0; k < array_field(th, "theta").size(); ++k) theta.push_back({real_poly_vector(th[k], d, "theta[" + std::to_string(k) + "]")});
    PolyMatrix jmat = real_poly_matrix(field(j, "Jmat"), d, "Jmat");
    std::vector<GaussianRational> base = gaussian_vector(field(j, "point"), "point");
    std::optional<std::vector<std::vector<GaussianRational>>> samples;
    if (const json* sp = optional_field(j, "sample_points")) {
      samples.emplace();
      for (std::size_t k = 0; k < array_field(*sp, "sample_points").size(); ++k) samples->push_back(gaussian_vector((*sp)[k], "sample_points[" + std::to_string(k) + "]"));
    }
    try {
      m.frame.emplace(std::move(frame), std::move(theta), std::move(jmat), std::move(base), std::move(samples));
    } catch (const InvalidFrame& e) {
      throw ValidationError(std::string("field \"frame\": ") + e.what());
    }
    if (const json* c = optional_field(j, "conormal")) {
      m.conormal = rational_vector(*c, "conormal");
      if (m.conormal->size() != m.frame->cr_codim()) throw ValidationError("field \"conormal\" needs " + std::to_string(m.frame->cr_codim()) + " entries");
    }
  }
  if (!m.complex_structure && !m.frame) throw ValidationError("almost_structure manifest needs \"J\" or \"frame\"");
}

}  // namespace detail

inline Manifest parse_manifest(const nlohmann::json& j) {
  if (!j.is_object()) throw ValidationError("manifest must be a JSON object");
  Manifest m;
  std::string kind = detail::string_of(detail::field(j, "kind"), "kind");
  if (kind == "embedded") m.kind = ManifestKind::Embedded;
  else if (kind == "tube") m.kind = ManifestKind::Tube;
  else if (kind == "homogeneous") m.kind = ManifestKind::Homogeneous;
  else if (kind == "almost_structure") m.kind = ManifestKind::AlmostStructure;
  else throw ValidationError("field \"kind\" has unknown value \"" + kind + "\"");

  if (m.kind == ManifestKind::Homogeneous) {
    detail::load_homogeneous(m, j);
    return m;
  }
  m.ambient_dim = detail::size_field(j, "ambient_dim");
  if (m.kind == ManifestKind::AlmostStructure) detail::load_almost(m, j);
  else detail::load_embedded(m, j);
  return m;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Manifest parse_manifest_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("manifest is not valid JSON: ") + e.what());
  }
  return parse_manifest(j);
}

inline Manifest load_manifest(const std::string& path) { return parse_manifest_text(read_file(path)); }

}  // namespace crlevi
