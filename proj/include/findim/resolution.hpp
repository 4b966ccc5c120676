#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "findim/module.hpp"

namespace findim {

// Finite(value) when pd = value <= cutoff; AtLeastCutoff when the resolution
// was still running after `cutoff` + 1 terms (pd > cutoff or infinite).
struct PdStatus {
  bool finite = true;
  std::size_t value = 0;

  static PdStatus finite_pd(std::size_t n) { return {true, n}; }
  static PdStatus at_least(std::size_t cutoff) { return {false, cutoff}; }
  bool operator==(const PdStatus&) const = default;
};

std::string to_string(const PdStatus& s);

// Omega^later is isomorphic to Omega^earlier (Omega^0 = the module itself),
// with later > earlier and both nonzero: a proof of infinite pd.
struct Periodicity {
  std::size_t earlier = 0;
  std::size_t later = 0;
  ModuleMap iso;  // Omega^earlier -> Omega^later
};

struct ResolutionReport {
  std::size_t cutoff = 0;
  // multiplicities[k] describes P_k.
  std::vector<std::vector<std::size_t>> multiplicities;
  std::vector<Module> terms;
  // differentials[k-1] : P_k -> P_{k-1} for k >= 1.
  std::vector<ModuleMap> differentials;
  // P_0 -> M; absent for the zero module.
  std::optional<ModuleMap> augmentation;
  // syzygies[k] = Omega^k, syzygies[0] = M.
  std::vector<Module> syzygies;
  PdStatus status;
  std::optional<Periodicity> periodicity;
  // True when every syzygy pair was decided by an exhaustive search.
  bool periodicity_search_complete = true;
};

struct ResolutionOptions {
  bool detect_periodicity = true;
  std::size_t max_iso_candidates = 4096;
};

// Computes P_0 .. P_k with k = min(pd, cutoff) by covering tops.
ResolutionReport minimal_resolution(const Module& m, std::size_t cutoff, ResolutionOptions opts = {});
PdStatus proj_dim(const Module& m, std::size_t cutoff);
PdStatus inj_dim(const Module& m, std::size_t cutoff);

}  // namespace findim
