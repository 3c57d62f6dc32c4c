// crlevi: Levi forms, CR types and integrability checks from JSON manifests.

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "crlevi/golden.hpp"
#include "crlevi/report.hpp"

using namespace crlevi;

namespace {

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) throw std::runtime_error("SHA-256 failed");
  std::string out = "sha256:";
  char buf[3];
  for (unsigned int k = 0; k < len; ++k) {
    std::snprintf(buf, sizeof buf, "%02x", md[k]);
    out += buf;
  }
  return out;
}

struct Loaded {
  Manifest manifest;
  std::string digest;
};

Loaded load(const std::string& path) {
  std::string text = read_file(path);
  return {parse_manifest_text(text), sha256_hex(text)};
}

std::string echo(int argc, char** argv) {
  std::string out;
  for (int k = 1; k < argc; ++k) out += (k > 1 ? " " : "") + std::string(argv[k]);
  return out;
}

Report analyze(const std::string& path, const std::vector<std::string>& point, const std::vector<std::string>& conormal) {
  Loaded in = load(path);
  const Manifest& m = in.manifest;
  if (m.kind != ManifestKind::Embedded && m.kind != ManifestKind::Tube)
    throw ValidationError(std::string("analyze needs an embedded or tube manifest, got ") + to_string(m.kind));
  Report r;
  r.input_digest = in.digest;
  PointC x;
  if (!point.empty()) {
    for (std::size_t k = 0; k < point.size(); ++k) x.push_back(detail::in_field("--point", [&] { return GaussianRational::parse(point[k]); }));
    if (x.size() != m.ambient_dim) throw ValidationError("--point needs " + std::to_string(m.ambient_dim) + " coordinates");
  } else if (m.point) {
    x = *m.point;
  } else {
    throw ValidationError("no point: give --point or the manifest field \"point\"");
  }
  std::vector<Rational> xi;
  if (!conormal.empty()) {
    for (const auto& s : conormal) xi.push_back(detail::in_field("--conormal", [&] { return parse_rational(s); }));
    if (xi.size() != m.manifold->codim()) throw ValidationError("--conormal needs " + std::to_string(m.manifold->codim()) + " entries");
  } else if (m.conormal) {
    xi = *m.conormal;
  } else {
    xi.assign(m.manifold->codim(), Rational(0));
    xi[0] = 1;
    r.warnings.push_back("conormal not given, using the first defining function");
  }
  r.result = embedded_report(*m.manifold, x, xi);
  r.result["kind"] = to_string(m.kind);
  return r;
}

Report nijenhuis_cmd(const std::string& path) {
  Loaded in = load(path);
  if (in.manifest.kind != ManifestKind::AlmostStructure)
    throw ValidationError(std::string("nijenhuis needs an almost_structure manifest, got ") + to_string(in.manifest.kind));
  Report r;
  r.input_digest = in.digest;
  r.result = almost_report(in.manifest, r.warnings);
  return r;
}

Report homogeneous_cmd(const std::string& path, const std::vector<std::string>& assignments) {
  Loaded in = load(path);
  if (in.manifest.kind != ManifestKind::Homogeneous)
    throw ValidationError(std::string("homogeneous needs a homogeneous manifest, got ") + to_string(in.manifest.kind));
  Report r;
  r.input_digest = in.digest;
  std::vector<std::map<std::string, GaussianRational>> specs;
  if (!assignments.empty()) {
    std::map<std::string, GaussianRational> values;
    for (const auto& a : assignments) {
      auto eq = a.find('=');
      if (eq == std::string::npos || eq == 0) throw ValidationError("--specialize expects name=value, got \"" + a + "\"");
      std::string name = a.substr(0, eq);
      if (values.count(name)) throw ValidationError("parameter " + name + " given twice");
      values[name] = detail::in_field("--specialize " + name, [&] { return GaussianRational::parse(a.substr(eq + 1)); });
    }
    specs.push_back(std::move(values));
  }
  r.result = homogeneous_report(in.manifest, specs, r.warnings);
  return r;
}

Report selftest(bool& all_ok) {
  Report r;
  r.input_digest = "none";
  Json checks = Json::array();
  std::size_t passed = 0;
  for (const auto& g : run_golden_suite()) {
    Json c{{"name", g.name}, {"ok", g.ok}};
    if (!g.detail.empty()) c["error"] = g.detail;
    checks.push_back(std::move(c));
    passed += g.ok ? 1 : 0;
  }
  all_ok = passed == checks.size();
  r.result["checks"] = checks;
  r.result["passed"] = passed;
  r.result["failed"] = checks.size() - passed;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Levi forms, CR types and integrability of CR manifolds"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "print the report as JSON");

  std::string path;
  std::vector<std::string> point, conormal, assignments;
  auto* an = app.add_subcommand("analyze", "type, Levi matrix and signature of an embedded or tube manifold");
  an->add_option("manifest", path, "manifest file")->required();
  an->add_option("--point", point, "point of C^m, comma separated")->delimiter(',');
  an->add_option("--conormal", conormal, "conormal coefficients, comma separated")->delimiter(',');
  auto* nj = app.add_subcommand("nijenhuis", "integrability of an almost complex or almost CR structure");
  nj->add_option("manifest", path, "manifest file")->required();
  auto* ho = app.add_subcommand("homogeneous", "type and parametrized Levi form of a CR algebra");
  ho->add_option("manifest", path, "manifest file")->required();
  ho->add_option("--specialize", assignments, "parameter value, name=value (repeatable)");
  auto* st = app.add_subcommand("selftest", "run the built-in golden suite");
  for (auto* sub : {an, nj, ho, st}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  bool ok = true;
  Report report;
  try {
    if (*an) report = analyze(path, point, conormal);
    else if (*nj) report = nijenhuis_cmd(path);
    else if (*ho) report = homogeneous_cmd(path, assignments);
    else report = selftest(ok);
  } catch (const Error& e) {
    std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
    return e.category() == ErrorCategory::Validation ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: InternalError: " << e.what() << "\n";
    return 2;
  }
  report.command = echo(argc, argv);
  std::cout << (json ? render_json(report) : render_text(report));
  return ok ? 0 : 2;
}
