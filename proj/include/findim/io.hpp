#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "findim/certificate.hpp"
#include "findim/findim.hpp"
#include "findim/invariants.hpp"
#include "findim/theorem.hpp"

namespace findim::io {

using json = nlohmann::json;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "Q", "gfp:7", {"gfp": 7}.
Field parse_field(const json& j);
json field_to_json(const Field& f);

json read_json_file(const std::string& path);
// Pretty-printed with a trailing newline.
void write_json_file(const std::string& path, const json& j);

// Entries are integers or "a/b" strings; rows x cols is enforced.
Matrix parse_matrix(const json& j, const Field& f, std::size_t rows, std::size_t cols);
json matrix_to_json(const Matrix& m);

// `field_override` replaces the field named in the file.
AlgebraPtr parse_algebra(const json& j, std::optional<Field> field_override = std::nullopt);
json algebra_to_json(const Algebra& a);

Module parse_module(const json& j, const AlgebraPtr& a);
json module_to_json(const Module& m);

Complex parse_complex(const json& j, const AlgebraPtr& a);
json complex_to_json(const Complex& x);

MapData parse_map_data(const json& j, const AlgebraPtr& a);
json map_data_to_json(const MapData& m);

ThickCertificate parse_certificate(const json& j, const AlgebraPtr& a);
json certificate_to_json(const ThickCertificate& c);

// "Ω¹ ≅ Ω⁰".
std::string periodicity_text(const Periodicity& p);

json resolution_to_json(const ResolutionReport& r);
json findim_to_json(const FinDimReport& r);
json regularity_to_json(const RegularityReport& r);
json support_to_json(const HomSupport& s);
json verify_to_json(const VerifyResult& r);
json theorem_to_json(const TheoremReport& r);

}  // namespace findim::io
