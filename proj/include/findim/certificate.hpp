#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "findim/complex.hpp"
#include "findim/resolution.hpp"

namespace findim {

// Raw chain map or homotopy data: degree -> one matrix per vertex. The
// verifier rebuilds every object itself and only then attaches these.
using MapData = std::map<int, std::vector<Matrix>>;

MapData to_map_data(const ChainMap& f);
MapData to_map_data(const Homotopy& h);
// Throws ComplexError when shapes do not fit.
ChainMap chain_map_from(const Complex& source, const Complex& target, const MapData& data);
Homotopy homotopy_from(const Complex& source, const Complex& target, const MapData& data);

// Stalk P_summand in degree -shift, i.e. S^shift P_summand. Level 1.
struct LeafStep {
  std::size_t summand = 0;
  int shift = 0;
};
// Direct sum of earlier steps; level = max, the empty sum is the zero object.
struct SumStep {
  std::vector<std::size_t> parts;
};
// cone(map : object(u) -> object(v)) with level(u) <= 1; level = level(v) + 1.
struct ConeStep {
  std::size_t u = 0;
  std::size_t v = 0;
  MapData map;
};
// y is a summand of object(z): p : z -> y, s : y -> z, h : y -> y with
// p s - id = d h + h d. Level = level(z).
struct RetractStep {
  std::size_t z = 0;
  Complex y;
  MapData p;
  MapData s;
  MapData h;
};
using Step = std::variant<LeafStep, SumStep, ConeStep, RetractStep>;

// Membership certificate in thick^level(A), generator A = (+)_i P_i.
struct ThickCertificate {
  std::string generator = "A";
  std::size_t level = 0;
  std::vector<Step> steps;
  MapData compare;  // object(last step) -> target, must be a quasi-isomorphism
};

struct VerifyResult {
  bool ok = false;
  std::size_t computed_level = 0;
  std::optional<std::size_t> failed_step;  // index into steps
  std::string message;
};

VerifyResult verify_certificate(const ThickCertificate& c, const Complex& target);
// The object built by the steps (no checks beyond construction).
Complex certificate_object(const ThickCertificate& c, const AlgebraPtr& a);

// Tower of cones on the terms of a perfect complex whose terms are
// projective_sum(...) modules: top term first, then one cone per lower
// nonzero term. Level = number of nonzero terms.
ThickCertificate tower_certificate(const Complex& p, const ChainMap& compare);

// Iterated cones on the minimal resolution: level pd + 1 (level 0 for m = 0).
// Throws PdError when pd is not finite within cutoff.
ThickCertificate certificate_from_resolution(const Module& m, std::size_t cutoff);

// A minimal perfect complex p with a quasi-isomorphism p -> y; p has
// projective_sum terms. Throws PdError when some cohomology of y has pd
// exceeding `max_pd` or not finite within cutoff.
struct PerfectModel {
  Complex p;
  ChainMap to_y;
};
PerfectModel perfect_model(const Complex& y, std::size_t max_pd, std::size_t cutoff);

// Certificate of level <= width + d for y whose cohomology modules all have
// pd <= d; level 0 for acyclic y.
ThickCertificate certificate_for_hom_p(const Complex& y, std::size_t d, std::size_t cutoff);

// Negative control: drops the last cone step and declares one level less.
// Meaningful for certificates ending in a cone.
ThickCertificate truncate_certificate(const ThickCertificate& c, const AlgebraPtr& a);

}  // namespace findim
