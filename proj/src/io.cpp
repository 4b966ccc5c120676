#include "findim/io.hpp"

#include <fstream>
#include <sstream>

namespace findim::io {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw ParseError(msg); }

const json& field_of(const json& j, const char* key, const char* where) {
  if (!j.is_object() || !j.contains(key)) fail(std::string(where) + ": missing \"" + key + "\"");
  return j.at(key);
}

long long as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where + ": expected an integer");
  return j.get<long long>();
}

std::size_t as_count(const json& j, const std::string& where) {
  long long v = as_int(j, where);
  if (v < 0) fail(where + ": expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

int parse_degree(const std::string& key, const std::string& where) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(key, &pos);
    if (pos != key.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    fail(where + ": degree key '" + key + "' is not an integer");
  }
}

Rational parse_scalar(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    try {
      auto slash = s.find('/');
      if (slash == std::string::npos) return Rational(Integer(s));
      Integer num(s.substr(0, slash)), den(s.substr(slash + 1));
      if (den == 0) fail(where + ": zero denominator");
      return Rational(num, den);
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      fail(where + ": bad scalar '" + s + "'");
    }
  }
  fail(where + ": scalar must be an integer or an \"a/b\" string");
}

json scalar_to_json(const Rational& x) {
  if (denominator(x) == 1) {
    const Integer& n = numerator(x);
    if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max())
      return static_cast<long long>(n);
    return n.str();
  }
  return numerator(x).str() + "/" + denominator(x).str();
}

}  // namespace

Matrix parse_matrix(const json& j, const Field& f, std::size_t rows, std::size_t cols, const std::string& where);

namespace {

std::vector<Matrix> parse_vertex_matrices(const json& j, const Module& s, const Module& t, const std::string& where) {
  const std::size_t v = s.dims().size();
  if (!j.is_array() || j.size() != v)
    fail(where + ": expected a list of " + std::to_string(v) + " per-vertex matrices");
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < v; ++i)
    out.push_back(parse_matrix(j[i], s.field(), t.dim(i), s.dim(i), where + " vertex " + std::to_string(i)));
  return out;
}

}  // namespace

Field parse_field(const json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "Q") return Field::rationals();
    if (s.rfind("gfp:", 0) == 0) {
      try {
        return Field::prime(static_cast<std::uint32_t>(std::stoul(s.substr(4))));
      } catch (const std::invalid_argument& e) {
        fail(std::string("field: ") + e.what());
      }
    }
    fail("field: unknown field '" + s + "'");
  }
  if (j.is_object() && j.contains("gfp")) {
    try {
      return Field::prime(static_cast<std::uint32_t>(as_count(j.at("gfp"), "field")));
    } catch (const std::invalid_argument& e) {
      fail(std::string("field: ") + e.what());
    }
  }
  fail("field: expected \"Q\" or {\"gfp\": p}");
}

json field_to_json(const Field& f) {
  if (f.is_prime()) return json{{"gfp", f.characteristic()}};
  return "Q";
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

Matrix parse_matrix(const json& j, const Field& f, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array()) fail(where + ": matrix must be a list of rows");
  // [] stands for any matrix with no entries.
  if (j.empty() && (rows == 0 || cols == 0)) return Matrix(f, rows, cols);
  if (j.size() != rows)
    fail(where + ": expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      fail(where + ": row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, parse_scalar(j[r][c], where));
  }
  return m;
}

Matrix parse_matrix(const json& j, const Field& f, std::size_t rows, std::size_t cols) {
  return parse_matrix(j, f, rows, cols, "matrix");
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

AlgebraPtr parse_algebra(const json& j, std::optional<Field> field_override) {
  Field f = field_override ? *field_override : parse_field(field_of(j, "field", "algebra"));
  std::size_t v = as_count(field_of(j, "vertices", "algebra"), "algebra.vertices");
  std::vector<Arrow> arrows;
  const json& ja = field_of(j, "arrows", "algebra");
  if (!ja.is_array()) fail("algebra.arrows: expected a list");
  for (const auto& a : ja) {
    const json& id = field_of(a, "id", "arrow");
    if (!id.is_string()) fail("arrow.id: expected a string");
    arrows.push_back({id.get<std::string>(), as_count(field_of(a, "from", "arrow"), "arrow.from"),
                      as_count(field_of(a, "to", "arrow"), "arrow.to")});
  }
  std::vector<Relation> rels;
  try {
    Quiver q(v, arrows);
    if (j.contains("relations")) {
      for (const auto& jr : j.at("relations")) {
        Relation rel;
        if (!jr.is_array()) fail("relation: expected a list of terms");
        for (const auto& t : jr) {
          RelationTerm term;
          term.coeff = parse_scalar(field_of(t, "coeff", "relation term"), "relation coeff");
          for (const auto& id : field_of(t, "path", "relation term")) {
            if (!id.is_string()) fail("relation path: expected arrow ids");
            term.arrows.push_back(q.arrow_index(id.get<std::string>()));
          }
          rel.terms.push_back(std::move(term));
        }
        rels.push_back(std::move(rel));
      }
    }
    std::size_t max_len = as_count(field_of(j, "max_len", "algebra"), "algebra.max_len");
    std::string name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "";
    return Algebra::build(q, rels, f, max_len, name);
  } catch (const AlgebraError& e) {
    fail(std::string("algebra: ") + e.what());
  }
}

json algebra_to_json(const Algebra& a) {
  json j;
  j["field"] = field_to_json(a.field());
  j["vertices"] = a.vertex_count();
  j["max_len"] = a.max_len();
  if (!a.name().empty()) j["name"] = a.name();
  json arrows = json::array();
  for (const auto& arr : a.quiver().arrows()) arrows.push_back({{"id", arr.id}, {"from", arr.source}, {"to", arr.target}});
  j["arrows"] = arrows;
  json rels = json::array();
  for (const auto& r : a.relations()) {
    json terms = json::array();
    for (const auto& t : r.terms) {
      json path = json::array();
      for (auto i : t.arrows) path.push_back(a.quiver().arrow(i).id);
      terms.push_back({{"coeff", scalar_to_json(t.coeff)}, {"path", path}});
    }
    rels.push_back(terms);
  }
  j["relations"] = rels;
  return j;
}

Module parse_module(const json& j, const AlgebraPtr& a) {
  if (j.is_object() && j.contains("proj")) {
    std::vector<std::size_t> mult;
    for (const auto& x : j.at("proj")) mult.push_back(as_count(x, "proj"));
    if (mult.size() != a->vertex_count()) fail("proj: expected one multiplicity per vertex");
    return projective_sum(a, mult);
  }
  std::vector<std::size_t> dims;
  for (const auto& x : field_of(j, "dim_vector", "module")) dims.push_back(as_count(x, "dim_vector"));
  if (dims.size() != a->vertex_count()) fail("module: dim_vector needs one entry per vertex");
  const json empty = json::object();
  const json& ja = j.contains("arrows") ? j.at("arrows") : empty;
  if (!ja.is_object()) fail("module.arrows: expected an object keyed by arrow id");
  for (const auto& [key, _] : ja.items())
    try {
      (void)a->quiver().arrow_index(key);
    } catch (const AlgebraError& e) {
      fail(std::string("module: ") + e.what());
    }
  std::vector<Matrix> arrows;
  for (const auto& arr : a->quiver().arrows()) {
    const std::size_t r = dims[arr.target], c = dims[arr.source];
    if (!ja.contains(arr.id)) {
      if (r * c != 0) fail("module: missing matrix for arrow '" + arr.id + "'");
      arrows.emplace_back(a->field(), r, c);
      continue;
    }
    arrows.push_back(parse_matrix(ja.at(arr.id), a->field(), r, c, "arrow '" + arr.id + "'"));
  }
  try {
    return Module(a, dims, arrows);
  } catch (const ModuleError& e) {
    fail(std::string("module: ") + e.what());
  }
}

json module_to_json(const Module& m) {
  json arrows = json::object();
  const auto& q = m.algebra()->quiver();
  for (std::size_t i = 0; i < q.arrows().size(); ++i) arrows[q.arrow(i).id] = matrix_to_json(m.arrow(i));
  return {{"dim_vector", m.dims()}, {"arrows", arrows}};
}

Complex parse_complex(const json& j, const AlgebraPtr& a) {
  const json& jt = field_of(j, "terms", "complex");
  if (!jt.is_object()) fail("complex.terms: expected an object keyed by degree");
  std::map<int, Module> terms;
  for (const auto& [key, val] : jt.items()) terms.emplace(parse_degree(key, "complex.terms"), parse_module(val, a));
  if (terms.empty()) return Complex::zero(a);
  const int lo = terms.begin()->first, hi = terms.rbegin()->first;
  auto term = [&](int n) { return terms.count(n) ? terms.at(n) : Module::zero(a); };
  std::map<int, ModuleMap> diffs;
  if (j.contains("differentials")) {
    const json& jd = j.at("differentials");
    if (!jd.is_object()) fail("complex.differentials: expected an object keyed by degree");
    for (const auto& [key, val] : jd.items()) {
      int n = parse_degree(key, "complex.differentials");
      Module s = term(n), t = term(n + 1);
      diffs.emplace(n, ModuleMap(s, t, parse_vertex_matrices(val, s, t, "differential " + key)));
    }
  }
  std::vector<Module> ts;
  std::vector<ModuleMap> ds;
  for (int n = lo; n <= hi; ++n) {
    ts.push_back(term(n));
    if (n < hi) ds.push_back(diffs.count(n) ? diffs.at(n) : ModuleMap::zero(term(n), term(n + 1)));
  }
  try {
    return Complex(a, lo, ts, ds);
  } catch (const std::exception& e) {
    fail(std::string("complex: ") + e.what());
  }
}

json complex_to_json(const Complex& x) {
  json terms = json::object(), diffs = json::object();
  if (!x.is_zero())
    for (int n = x.lo(); n <= x.hi(); ++n) {
      terms[std::to_string(n)] = module_to_json(x.term(n));
      if (n < x.hi()) {
        json mats = json::array();
        const ModuleMap d = x.d(n);
        for (const auto& m : d.components()) mats.push_back(matrix_to_json(m));
        diffs[std::to_string(n)] = mats;
      }
    }
  return {{"terms", terms}, {"differentials", diffs}};
}

MapData parse_map_data(const json& j, const AlgebraPtr& a) {
  if (!j.is_object()) fail("chain map: expected an object keyed by degree");
  MapData out;
  for (const auto& [key, val] : j.items()) {
    int n = parse_degree(key, "chain map");
    if (!val.is_array() || val.size() != a->vertex_count())
      fail("chain map degree " + key + ": expected one matrix per vertex");
    std::vector<Matrix> mats;
    for (std::size_t v = 0; v < val.size(); ++v) {
      // Shapes are checked against the objects by the verifier.
      const json& m = val[v];
      if (!m.is_array()) fail("chain map degree " + key + ": matrix must be a list of rows");
      const std::size_t rows = m.size();
      const std::size_t cols = rows == 0 ? 0 : (m[0].is_array() ? m[0].size() : 0);
      mats.push_back(parse_matrix(m, a->field(), rows, cols, "chain map degree " + key));
    }
    out.emplace(n, std::move(mats));
  }
  return out;
}

json map_data_to_json(const MapData& m) {
  json j = json::object();
  for (const auto& [n, mats] : m) {
    json arr = json::array();
    for (const auto& x : mats) arr.push_back(matrix_to_json(x));
    j[std::to_string(n)] = arr;
  }
  return j;
}

ThickCertificate parse_certificate(const json& j, const AlgebraPtr& a) {
  ThickCertificate c;
  if (j.contains("generator")) {
    if (!j.at("generator").is_string()) fail("certificate.generator: only \"A\" is supported");
    c.generator = j.at("generator").get<std::string>();
  }
  c.level = as_count(field_of(j, "level", "certificate"), "certificate.level");
  const json& steps = field_of(j, "steps", "certificate");
  if (!steps.is_array()) fail("certificate.steps: expected a list");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const json& s = steps[i];
    const std::string where = "step " + std::to_string(i);
    if (s.contains("leaf")) {
      const json& l = s.at("leaf");
      c.steps.push_back(LeafStep{as_count(field_of(l, "summand", "leaf"), where),
                                 static_cast<int>(as_int(field_of(l, "shift", "leaf"), where))});
    } else if (s.contains("sum")) {
      SumStep sum;
      if (!s.at("sum").is_array()) fail(where + ": sum expects a list of step indices");
      for (const auto& x : s.at("sum")) sum.parts.push_back(as_count(x, where));
      c.steps.push_back(sum);
    } else if (s.contains("cone")) {
      const json& k = s.at("cone");
      c.steps.push_back(ConeStep{as_count(field_of(k, "u", "cone"), where), as_count(field_of(k, "v", "cone"), where),
                                 parse_map_data(field_of(k, "map", "cone"), a)});
    } else if (s.contains("retract")) {
      const json& r = s.at("retract");
      c.steps.push_back(RetractStep{as_count(field_of(r, "z", "retract"), where),
                                    parse_complex(field_of(r, "y", "retract"), a),
                                    parse_map_data(field_of(r, "p", "retract"), a),
                                    parse_map_data(field_of(r, "s", "retract"), a),
                                    parse_map_data(field_of(r, "h", "retract"), a)});
    } else {
      fail(where + ": expected one of leaf, sum, cone, retract");
    }
  }
  c.compare = j.contains("compare") ? parse_map_data(j.at("compare"), a) : MapData{};
  return c;
}

json certificate_to_json(const ThickCertificate& c) {
  json steps = json::array();
  for (const auto& s : c.steps)
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, LeafStep>)
            steps.push_back({{"leaf", {{"summand", x.summand}, {"shift", x.shift}}}});
          else if constexpr (std::is_same_v<T, SumStep>)
            steps.push_back({{"sum", x.parts}});
          else if constexpr (std::is_same_v<T, ConeStep>)
            steps.push_back({{"cone", {{"u", x.u}, {"v", x.v}, {"map", map_data_to_json(x.map)}}}});
          else
            steps.push_back({{"retract",
                              {{"z", x.z},
                               {"y", complex_to_json(x.y)},
                               {"p", map_data_to_json(x.p)},
                               {"s", map_data_to_json(x.s)},
                               {"h", map_data_to_json(x.h)}}}});
        },
        s);
  return {{"generator", c.generator}, {"level", c.level}, {"steps", steps}, {"compare", map_data_to_json(c.compare)}};
}

std::string periodicity_text(const Periodicity& p) {
  static const char* sup[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  auto script = [](std::size_t n) {
    std::string digits = std::to_string(n), out;
    for (char ch : digits) out += sup[ch - '0'];
    return out;
  };
  return "Ω" + script(p.later) + " ≅ Ω" + script(p.earlier);
}

json resolution_to_json(const ResolutionReport& r) {
  json j;
  j["status"] = to_string(r.status);
  j["pd"] = r.status.finite ? json(r.status.value) : json(nullptr);
  j["cutoff"] = r.cutoff;
  j["terms"] = r.multiplicities;
  json diffs = json::array();
  for (const auto& d : r.differentials) {
    json mats = json::array();
    for (const auto& m : d.components()) mats.push_back(matrix_to_json(m));
    diffs.push_back(mats);
  }
  j["differentials"] = diffs;
  if (r.periodicity) {
    j["periodicity"] = {{"earlier", r.periodicity->earlier},
                        {"later", r.periodicity->later},
                        {"text", periodicity_text(*r.periodicity)}};
    j["infinite_by_periodicity"] = true;
  } else {
    j["periodicity"] = nullptr;
    j["infinite_by_periodicity"] = false;
  }
  j["periodicity_search_complete"] = r.periodicity_search_complete;
  return j;
}

json findim_to_json(const FinDimReport& r) {
  json j;
  j["field"] = r.field;
  j["algebra"] = r.algebra;
  j["max_total_dim"] = r.max_total_dim;
  j["cutoff"] = r.cutoff;
  j["enumerated"] = r.enumerated;
  j["best"] = r.best;
  j["exhaustive"] = r.exhaustive;
  j["pd_histogram"] = r.pd_histogram;
  if (r.witness) {
    j["witness"] = {{"index", *r.witness_index},
                    {"module", module_to_json(*r.witness)},
                    {"resolution", resolution_to_json(*r.witness_resolution)}};
  } else {
    j["witness"] = nullptr;
  }
  json ex = json::array();
  std::size_t with_witness = 0;
  for (const auto& e : r.excluded) {
    json x{{"index", e.index}, {"module", module_to_json(e.module)}, {"status", "AtLeastCutoff"},
           {"note", "membership in P(A) undetermined"}};
    if (e.periodicity) {
      ++with_witness;
      x["periodicity"] = {{"earlier", e.periodicity->earlier},
                          {"later", e.periodicity->later},
                          {"text", periodicity_text(*e.periodicity)}};
    } else {
      x["periodicity"] = nullptr;
    }
    ex.push_back(std::move(x));
  }
  j["excluded"] = ex;
  j["excluded_count"] = r.excluded.size();
  j["excluded_with_periodicity"] = with_witness;
  return j;
}

json regularity_to_json(const RegularityReport& r) {
  json simples = json::array();
  for (const auto& s : r.simple_pds) simples.push_back(to_string(s));
  return {{"enumerated", r.enumerated},
          {"infinite_count", r.infinite_count},
          {"regular_up_to_bound", r.regular_up_to_bound},
          {"gl_dim_estimate", to_string(r.gl_dim_estimate)},
          {"simple_pds", simples}};
}

json support_to_json(const HomSupport& s) {
  json sup = json::object();
  for (const auto& [n, d] : s.dims) sup[std::to_string(n)] = d;
  return sup;
}

json verify_to_json(const VerifyResult& r) {
  return {{"ok", r.ok},
          {"computed_level", r.computed_level},
          {"failed_step", r.failed_step ? json(*r.failed_step) : json(nullptr)},
          {"message", r.message}};
}

json theorem_to_json(const TheoremReport& r) {
  json samples = json::array();
  for (const auto& s : r.samples)
    samples.push_back({{"kind", s.kind},
                       {"width", s.width},
                       {"level", s.level},
                       {"verified", s.verified},
                       {"within_bound", s.within_bound},
                       {"generator_shift", s.generator_shift},
                       {"message", s.message}});
  return {{"algebra", r.algebra},
          {"d", r.d},
          {"exhaustive", r.exhaustive},
          {"amplitude", r.amplitude},
          {"amplitude_ok", r.amplitude_ok()},
          {"p", r.p},
          {"q", r.q},
          {"inequality_d_lt_p_plus_q", r.inequality_ok()},
          {"failures", r.failures},
          {"pass", r.pass()},
          {"samples", samples}};
}

}  // namespace findim::io
