#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "findim/certificate.hpp"
#include "findim/enumerate.hpp"
#include "findim/findim.hpp"
#include "findim/ghost.hpp"
#include "findim/invariants.hpp"
#include "findim/io.hpp"
#include "findim/resolution.hpp"
#include "findim/theorem.hpp"
#include "findim/version.hpp"

using namespace findim;
using io::json;

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kParseError = 2;
constexpr int kBudgetError = 3;
constexpr int kNotPerfect = 4;

struct NotPerfect : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string command;
  std::string field;
  std::size_t max_dim = 3;
  std::size_t cutoff = 6;
  std::uint64_t seed = 1;
  std::string json_out;
  bool verify_theorem = false;
  std::size_t samples = 50;
  std::size_t n = 1;
  std::string algebra, module, x, y, certificate, target, input;
};

AlgebraPtr load_algebra(const Config& c) {
  std::optional<Field> f;
  if (!c.field.empty()) f = io::parse_field(json(c.field));
  return io::parse_algebra(io::read_json_file(c.algebra), f);
}

// A complex file, or a module file read as a stalk in degree 0.
Complex load_complex(const std::string& path, const AlgebraPtr& a) {
  json j = io::read_json_file(path);
  if (j.is_object() && (j.contains("dim_vector") || j.contains("proj")))
    return Complex::stalk(io::parse_module(j, a), 0);
  return io::parse_complex(j, a);
}

json meta(const Config& c, json config) {
  config["command"] = c.command;
  config["field"] = c.field.empty() ? json(nullptr) : json(c.field);
  config["cutoff"] = c.cutoff;
  return {{"tool", "findim"}, {"version", kVersion}, {"seed", c.seed}, {"config", std::move(config)}};
}

// Writes the JSON report; the human summary goes to stdout unless the
// report itself is sent there with --json -.
void emit(const Config& c, json report, const std::string& summary) {
  if (c.json_out == "-") {
    std::cout << report.dump(2) << "\n";
    return;
  }
  std::cout << summary;
  if (!c.json_out.empty()) io::write_json_file(c.json_out, report);
}

std::string status_line(const ResolutionReport& r) {
  std::string s = to_string(r.status);
  if (r.periodicity) s += "; periodic (" + io::periodicity_text(*r.periodicity) + ")";
  return s;
}

int cmd_pd(const Config& c) {
  AlgebraPtr a = load_algebra(c);
  Module m = io::parse_module(io::read_json_file(c.module), a);
  ResolutionReport r = minimal_resolution(m, c.cutoff);
  json rep = meta(c, {{"algebra", c.algebra}, {"module", c.module}});
  rep["resolution"] = io::resolution_to_json(r);
  emit(c, rep, status_line(r) + "\n");
  return kOk;
}

int cmd_findim(const Config& c) {
  AlgebraPtr a = load_algebra(c);
  FinDimReport fd = findim_estimate(a, c.max_dim, c.cutoff);
  const std::size_t amp = amplitude(finitistic_generator(a, fd.best));
  json rep = meta(c, {{"algebra", c.algebra}, {"max_dim", c.max_dim}, {"verify_theorem", c.verify_theorem}});
  rep["findim"] = io::findim_to_json(fd);
  rep["generator_amplitude"] = amp;
  std::ostringstream out;
  out << "fin.dim estimate: " << fd.best << " (" << fd.enumerated << " modules, total dim <= " << c.max_dim
      << ", excluded " << fd.excluded.size() << ")\n";
  out << "amp(A (+) S^" << fd.best << " A) = " << amp << "\n";
  int code = kOk;
  if (c.verify_theorem) {
    TheoremOptions opts;
    opts.samples = c.samples;
    opts.seed = c.seed;
    opts.max_total_dim = c.max_dim;
    opts.cutoff = c.cutoff;
    TheoremReport t = run_theorem_suite(a, opts);
    rep["theorem"] = io::theorem_to_json(t);
    out << "theorem suite: " << (t.pass() ? "PASS" : "FAIL") << " (" << t.samples.size() << " samples, "
        << t.failures << " failures, p = " << t.p << ", q = " << t.q << ")\n";
    if (!t.pass()) code = kVerifyFailed;
  }
  emit(c, rep, out.str());
  return code;
}

int cmd_invariants(const Config& c) {
  AlgebraPtr a = load_algebra(c);
  Complex x = load_complex(c.x, a);
  Complex y = load_complex(c.y, a);
  if (!x.is_perfect()) throw NotPerfect("x is not perfect");
  HomSupport s = hom_support(x, y);
  const std::size_t h = h_value(s);
  const std::size_t amp = amplitude(x);
  json rep = meta(c, {{"algebra", c.algebra}, {"x", c.x}, {"y", c.y}});
  rep["support"] = io::support_to_json(s);
  rep["h"] = h;
  rep["amplitude_x"] = amp;
  std::ostringstream out;
  out << "support:";
  if (s.empty()) out << " (empty)";
  for (const auto& [n, d] : s.dims) out << " " << n << ":" << d;
  out << "\nh = " << h << "\namplitude(x) = " << amp << "\n";
  emit(c, rep, out.str());
  return kOk;
}

int cmd_verify(const Config& c) {
  AlgebraPtr a = load_algebra(c);
  json j = io::read_json_file(c.certificate);
  // A certify report carries the certificate under "certificate".
  if (j.is_object() && !j.contains("steps") && j.contains("certificate")) j = j.at("certificate");
  ThickCertificate cert = io::parse_certificate(j, a);
  Complex target = load_complex(c.target, a);
  VerifyResult v = verify_certificate(cert, target);
  json rep = meta(c, {{"algebra", c.algebra}, {"certificate", c.certificate}, {"target", c.target}});
  rep["verify"] = io::verify_to_json(v);
  std::ostringstream out;
  if (v.ok) {
    out << "PASS: level " << v.computed_level << "\n";
  } else {
    out << "FAIL";
    if (v.failed_step) out << " at step " << *v.failed_step;
    out << ": " << v.message << "\n";
  }
  emit(c, rep, out.str());
  return v.ok ? kOk : kVerifyFailed;
}

int cmd_ghost(const Config& c) {
  if (c.n < 1) throw io::ParseError("n must be at least 1");
  AlgebraPtr a = load_algebra(c);
  Module m = io::parse_module(io::read_json_file(c.module), a);
  GhostMaps g = ghost_maps(m, c.n + 1);
  const bool null = null_homotopy(g.composite).has_value();
  PdStatus pd = proj_dim(m, c.cutoff);
  // null <=> pd <= n; an AtLeastCutoff pd is consistent only with "not null" when cutoff >= n.
  const bool pd_le_n = pd.finite && pd.value <= c.n;
  const bool decided = pd.finite || c.cutoff >= c.n;
  const bool consistent = decided && null == pd_le_n;
  json rep = meta(c, {{"algebra", c.algebra}, {"module", c.module}, {"n", c.n}});
  rep["ghost"] = {{"maps_composed", c.n + 1},
                  {"null_homotopic", null},
                  {"all_ghost", g.all_ghost},
                  {"pd", to_string(pd)},
                  {"consistent", consistent}};
  std::ostringstream out;
  out << (null ? "null-homotopic" : "not null-homotopic") << "; "
      << (consistent ? "consistent with pd " : "INCONSISTENT with pd ")
      << (pd.finite ? std::to_string(pd.value) : to_string(pd)) << "\n";
  if (!g.all_ghost) out << "some constructed map is not a ghost\n";
  emit(c, rep, out.str());
  return consistent && g.all_ghost ? kOk : kVerifyFailed;
}

int cmd_certify(const Config& c) {
  AlgebraPtr a = load_algebra(c);
  json j = io::read_json_file(c.input);
  ThickCertificate cert;
  Complex target = Complex::zero(a);
  if (j.is_object() && (j.contains("dim_vector") || j.contains("proj"))) {
    Module m = io::parse_module(j, a);
    cert = certificate_from_resolution(m, c.cutoff);
    target = Complex::stalk(m, 0);
  } else {
    target = io::parse_complex(j, a);
    std::size_t d = 0;
    if (!target.is_zero())
      for (int n = target.lo(); n <= target.hi(); ++n) {
        PdStatus s = proj_dim(cohomology(target, n), c.cutoff);
        if (!s.finite) throw PdError("H^" + std::to_string(n) + " has pd beyond the cutoff");
        d = std::max(d, s.value);
      }
    cert = certificate_for_hom_p(target, d, c.cutoff);
  }
  VerifyResult v = verify_certificate(cert, target);
  json rep = meta(c, {{"algebra", c.algebra}, {"input", c.input}});
  rep["certificate"] = io::certificate_to_json(cert);
  rep["verify"] = io::verify_to_json(v);
  std::ostringstream out;
  out << "certificate level " << cert.level << ", " << cert.steps.size() << " steps: "
      << (v.ok ? "verified" : "FAILED: " + v.message) << "\n";
  emit(c, rep, out.str());
  return v.ok ? kOk : kVerifyFailed;
}

int cmd_regularity(const Config& c) {
  AlgebraPtr a = load_algebra(c);
  RegularityReport r = regularity_check(a, c.max_dim, c.cutoff);
  PdStatus top_id = inj_dim(top_of_algebra(a), c.cutoff);
  json rep = meta(c, {{"algebra", c.algebra}, {"max_dim", c.max_dim}});
  rep["regularity"] = io::regularity_to_json(r);
  rep["inj_dim_top"] = to_string(top_id);
  std::ostringstream out;
  out << (r.regular_up_to_bound ? "regular" : "non-regular") << " up to total dim " << c.max_dim << " ("
      << r.infinite_count << " of " << r.enumerated << " modules AtLeastCutoff)\n"
      << "gl.dim estimate: " << to_string(r.gl_dim_estimate) << "\n"
      << "inj.dim(top A): " << to_string(top_id) << "\n";
  emit(c, rep, out.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  Config c;
  CLI::App app{"Homological invariants of finite-dimensional path algebras with relations"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  auto common = [&](CLI::App* s) {
    s->add_option("--field", c.field, "Override the algebra field: gfp:p or Q");
    s->add_option("--cutoff", c.cutoff, "Resolution length cutoff")->check(CLI::PositiveNumber);
    s->add_option("--seed", c.seed, "Random seed, recorded in the report");
    s->add_option("--json", c.json_out, "Write the JSON report here; '-' prints it instead of the summary");
    s->add_option("algebra", c.algebra, "Algebra file")->required();
  };

  auto* pd = app.add_subcommand("pd", "Minimal projective resolution and projective dimension");
  common(pd);
  pd->add_option("module", c.module, "Module file")->required();

  auto* fd = app.add_subcommand("findim", "Finitistic dimension estimate by exhaustive enumeration");
  common(fd);
  fd->add_option("--max-dim", c.max_dim, "Largest total module dimension to enumerate");
  fd->add_flag("--verify-theorem", c.verify_theorem, "Run the sampled certificate suite");
  fd->add_option("--samples", c.samples, "Sample count for --verify-theorem");

  auto* inv = app.add_subcommand("invariants", "Hom support, h(x, y) and amplitude(x)");
  common(inv);
  inv->add_option("x", c.x, "Perfect complex (or module) file")->required();
  inv->add_option("y", c.y, "Complex (or module) file")->required();

  auto* ver = app.add_subcommand("verify-certificate", "Check a thick-subcategory certificate");
  common(ver);
  ver->add_option("certificate", c.certificate, "Certificate file")->required();
  ver->add_option("target", c.target, "Target complex (or module) file")->required();

  auto* gh = app.add_subcommand("ghost", "Ghost-map null-homotopy test against pd");
  common(gh);
  gh->add_option("module", c.module, "Module file")->required();
  gh->add_option("-n", c.n, "Test pd <= n with n + 1 composed ghost maps")->check(CLI::PositiveNumber);

  auto* cert = app.add_subcommand("certify", "Build and verify a certificate for a module or complex");
  common(cert);
  cert->add_option("input", c.input, "Module or complex file")->required();

  auto* reg = app.add_subcommand("regularity", "Regularity check and gl.dim estimate");
  common(reg);
  reg->add_option("--max-dim", c.max_dim, "Largest total module dimension to enumerate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParseError;
  }

  c.command = app.get_subcommands().front()->get_name();
  try {
    if (*pd) return cmd_pd(c);
    if (*fd) return cmd_findim(c);
    if (*inv) return cmd_invariants(c);
    if (*ver) return cmd_verify(c);
    if (*gh) return cmd_ghost(c);
    if (*cert) return cmd_certify(c);
    if (*reg) return cmd_regularity(c);
  } catch (const io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const BudgetError& e) {
    std::cerr << "budget error: " << e.what() << " (search size " << e.search_size << ")\n";
    return kBudgetError;
  } catch (const PdError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return kBudgetError;
  } catch (const NotPerfect& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNotPerfect;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  }
  return kParseError;
}
