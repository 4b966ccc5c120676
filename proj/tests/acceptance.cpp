// Acceptance suite: one PASS/FAIL line per criterion.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "findim/certificate.hpp"
#include "findim/enumerate.hpp"
#include "findim/findim.hpp"
#include "findim/ghost.hpp"
#include "findim/invariants.hpp"
#include "findim/io.hpp"
#include "findim/resolution.hpp"
#include "findim/sampling.hpp"
#include "findim/theorem.hpp"
#include "fixtures.hpp"
#include "properties.hpp"

using namespace findim;
using namespace fixtures;

namespace {

int failed = 0;

void report(const char* id, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS " : "FAIL ") << id << ": " << detail << std::endl;
  if (!ok) ++failed;
}

template <class F>
void run(const char* id, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(id, false, std::string("exception: ") + e.what());
  }
}

// Theorem suite over GF(2): amp(A (+) S^d A) = d and verified certificates of level <= p + d.
void ac1() {
  std::ostringstream detail;
  bool ok = true;
  TheoremOptions opts;
  opts.samples = 60;
  opts.seed = 2024;
  for (const auto& a : {field_k(), a2(), nakayama3()}) {
    TheoremReport r = run_theorem_suite(a, opts);
    std::size_t verified = 0;
    for (const auto& s : r.samples) verified += s.verified && s.within_bound && s.generator_shift;
    const bool good = r.exhaustive && r.amplitude_ok() && r.failures == 0 && verified == r.samples.size() &&
                      r.samples.size() >= 50 && r.inequality_ok();
    ok = ok && good;
    detail << a->name() << ": d=" << r.d << " amp=" << r.amplitude << " p=" << r.p << " q=" << r.q << " "
           << verified << "/" << r.samples.size() << " verified; ";
  }
  report("AC1", ok, detail.str());
}

// Certificates from resolutions have level pd + 1; truncated ones fail.
void ac2() {
  std::size_t checked = 0, negatives = 0, disagreements = 0;
  for (const auto& a : {a2(), nakayama3()}) {
    for_each_module(a, 4, [&](const Module& m) {
      if (m.is_zero()) return;
      PdStatus pd = proj_dim(m, 8);
      if (!pd.finite) return;
      ++checked;
      ThickCertificate c = certificate_from_resolution(m, 8);
      Complex target = Complex::stalk(m, 0);
      VerifyResult v = verify_certificate(c, target);
      if (!v.ok || v.computed_level != pd.value + 1 || c.level != pd.value + 1) ++disagreements;
      ThickCertificate t = pd.value >= 1 ? truncate_certificate(c, a) : c;
      if (pd.value == 0) t.level = 0;
      ++negatives;
      if (verify_certificate(t, target).ok) ++disagreements;
    });
  }
  report("AC2", disagreements == 0 && checked > 0,
         std::to_string(checked) + " modules with finite pd, " + std::to_string(negatives) + " negative controls, " +
             std::to_string(disagreements) + " disagreements");
}

// ghost_pd_oracle(m, n) <=> pd m <= n for 1 <= n <= 6, and every phi_i is a ghost.
void ac3() {
  std::size_t cases = 0, disagreements = 0, non_ghost = 0, maps = 0;
  for (const auto& a : {a2(), nakayama3()}) {
    for_each_module(a, 4, [&](const Module& m) {
      PdStatus pd = proj_dim(m, 8);
      for (std::size_t n = 1; n <= 6; ++n) {
        GhostMaps g = ghost_maps(m, n + 1);
        maps += g.maps.size();
        if (!g.all_ghost) ++non_ghost;
        const bool oracle = null_homotopy(g.composite).has_value();
        const bool expect = pd.finite && pd.value <= n;
        ++cases;
        if (oracle != expect) ++disagreements;
      }
    });
  }
  report("AC3", disagreements == 0 && non_ghost == 0,
         std::to_string(cases) + " (module, n) pairs, " + std::to_string(disagreements) + " disagreements, " +
             std::to_string(maps) + " ghost maps, " + std::to_string(non_ghost) + " with H*(phi) != 0");
}

// Hom-basic properties (1)-(6) on 200 random perfect complexes per algebra.
void ac4() {
  constexpr int kSamples = 200;
  std::size_t counterexamples = 0, total = 0;
  std::string first;
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> shift_d(-3, 3);
  std::uniform_int_distribution<std::size_t> pow_d(1, 3);
  for (const auto& a : all_gf2()) {
    for (int t = 0; t < kSamples; ++t) {
      auto [x, y] = properties::draw(a, rng);
      for (const std::string& e :
           {properties::check_12(x, y), properties::check_3(x, y, shift_d(rng)),
            properties::check_4(x, y, shift_d(rng), 8), properties::check_5(x, y, pow_d(rng)),
            properties::check_6(x, y, pow_d(rng), pow_d(rng), rng)}) {
        ++total;
        if (!e.empty()) {
          ++counterexamples;
          if (first.empty()) first = a->name() + ": " + e;
        }
      }
    }
  }
  report("AC4", counterexamples == 0,
         std::to_string(kSamples) + " complexes x " + std::to_string(all_gf2().size()) + " algebras, " +
             std::to_string(total) + " property checks, " + std::to_string(counterexamples) + " counterexamples" +
             (first.empty() ? "" : " (first: " + first + ")"));
}

// k[x]/(x^2): fin.dim 0, periodic non-projectives, not regular, gl.dim AtLeastCutoff.
void ac5() {
  auto a = dual_numbers();
  FinDimReport r = findim_estimate(a, 3, 8);
  std::size_t with_witness = 0;
  bool simple_ok = false;
  for (const auto& e : r.excluded) {
    if (e.periodicity && e.periodicity->later == e.periodicity->earlier + 1) ++with_witness;
    if (e.module == simple(a, 0) && e.periodicity && e.periodicity->earlier == 0 && e.periodicity->later == 1)
      simple_ok = true;
  }
  RegularityReport reg = regularity_check(a, 3, 8);
  const bool ok = r.best == 0 && !r.excluded.empty() && with_witness == r.excluded.size() && simple_ok &&
                  !reg.regular_up_to_bound && !reg.gl_dim_estimate.finite;
  report("AC5", ok,
         "findim " + std::to_string(r.best) + ", " + std::to_string(with_witness) + "/" +
             std::to_string(r.excluded.size()) + " excluded with periodicity witness, simple " +
             (simple_ok ? "Ω¹ ≅ Ω⁰" : "missing witness") + ", " +
             (reg.regular_up_to_bound ? "regular" : "non-regular") + ", gl.dim " + to_string(reg.gl_dim_estimate));
}

// gl.dim estimate <= inj.dim(top A) when the latter is finite.
void ac6() {
  std::ostringstream detail;
  bool ok = true;
  std::size_t applicable = 0;
  std::vector<AlgebraPtr> algs = all_gf2();
  algs.push_back(commutative_square());
  for (const auto& a : algs) {
    PdStatus t = inj_dim(top_of_algebra(a), 8);
    PdStatus g = gl_dim_estimate(a, 8);
    detail << a->name() << " inj.dim(top)=" << to_string(t) << " gl.dim=" << to_string(g) << "; ";
    if (!t.finite) continue;
    ++applicable;
    ok = ok && g.finite && g.value <= t.value;
  }
  report("AC6", ok && applicable > 0, detail.str());
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Identical seeds give byte-identical reports.
void ac7() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "findim_acceptance";
  fs::create_directories(dir);
  const std::string cli = FINDIM_CLI_PATH;
  const std::string data = FINDIM_DATA_DIR;
  const std::vector<std::string> commands = {
      "findim " + data + "/algebras/A2.json --verify-theorem --samples 20 --seed 9",
      "findim " + data + "/algebras/kx_x2.json --cutoff 8",
      "pd " + data + "/algebras/kx_x2.json " + data + "/modules/kx_x2_simple.json",
      "certify " + data + "/algebras/A2.json " + data + "/complexes/A2_S1_S2.json",
      "regularity " + data + "/algebras/nakayama3.json",
  };
  std::size_t identical = 0;
  std::string bad;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    std::string outs[2];
    for (int run = 0; run < 2; ++run) {
      const fs::path out = dir / ("report_" + std::to_string(i) + "_" + std::to_string(run) + ".json");
      fs::remove(out);
      const std::string cmd = "\"" + cli + "\" " + commands[i] + " --json \"" + out.string() + "\" > /dev/null";
      const int rc = std::system(cmd.c_str());
      outs[run] = rc == 0 ? slurp(out) : "";
    }
    if (!outs[0].empty() && outs[0] == outs[1])
      ++identical;
    else if (bad.empty())
      bad = commands[i];
  }
  bool serial_ok = true;
  for (const auto& a : all_gf2())
    serial_ok = serial_ok && io::findim_to_json(findim_estimate(a, 3, 6)).dump() ==
                                 io::findim_to_json(findim_estimate_serial(a, 3, 6)).dump();
  TheoremOptions opts;
  opts.samples = 10;
  opts.seed = 31;
  const bool theorem_ok = io::theorem_to_json(run_theorem_suite(a2(), opts)).dump() ==
                          io::theorem_to_json(run_theorem_suite(a2(), opts)).dump();
  report("AC7", identical == commands.size() && serial_ok && theorem_ok,
         std::to_string(identical) + "/" + std::to_string(commands.size()) +
             " CLI reports byte-identical across runs" + (bad.empty() ? "" : " (differs: " + bad + ")") +
             ", serial/parallel findim " + (serial_ok ? "equal" : "DIFFERENT") + ", theorem suite " +
             (theorem_ok ? "reproducible" : "NOT reproducible"));
}

}  // namespace

int main() {
  run("AC1", ac1);
  run("AC2", ac2);
  run("AC3", ac3);
  run("AC4", ac4);
  run("AC5", ac5);
  run("AC6", ac6);
  run("AC7", ac7);
  return failed == 0 ? 0 : 1;
}
