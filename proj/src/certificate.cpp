#include "findim/certificate.hpp"

#include <algorithm>

#include "findim/invariants.hpp"

namespace findim {

MapData to_map_data(const ChainMap& f) {
  MapData out;
  for (int n : f.degrees()) out.emplace(n, f.at(n).components());
  return out;
}

MapData to_map_data(const Homotopy& h) {
  MapData out;
  for (const auto& [n, m] : h.components)
    if (!m.source().is_zero() && !m.target().is_zero()) out.emplace(n, m.components());
  return out;
}

namespace {

// Empty matrices carry no shape in serialized form; give them the block's shape.
ModuleMap fitted(const Module& s, const Module& t, std::vector<Matrix> mats) {
  if (mats.size() == s.dims().size())
    for (std::size_t v = 0; v < mats.size(); ++v)
      if (mats[v].size() == 0 && s.dim(v) * t.dim(v) == 0) mats[v] = Matrix(s.field(), t.dim(v), s.dim(v));
  return ModuleMap(s, t, std::move(mats));
}

}  // namespace

ChainMap chain_map_from(const Complex& source, const Complex& target, const MapData& data) {
  std::map<int, ModuleMap> comps;
  for (const auto& [n, mats] : data) comps.emplace(n, fitted(source.term(n), target.term(n), mats));
  return ChainMap(source, target, std::move(comps));
}

Homotopy homotopy_from(const Complex& source, const Complex& target, const MapData& data) {
  Homotopy h{source, target, {}};
  for (const auto& [n, mats] : data) h.components.emplace(n, fitted(source.term(n), target.term(n - 1), mats));
  return h;
}

namespace {

struct Built {
  std::vector<Complex> objects;
  std::vector<std::size_t> levels;
};

struct StepFailure {
  std::string message;
};

void require(bool cond, const std::string& message) {
  if (!cond) throw StepFailure{message};
}

// Builds every step; `check` enables the chain map and homotopy checks.
Built build_steps(const ThickCertificate& c, const AlgebraPtr& a, bool check, std::size_t* failed) {
  Built b;
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    if (failed) *failed = i;
    auto earlier = [&](std::size_t j, const char* what) {
      require(j < i, std::string(what) + " refers to step " + std::to_string(j) + ", which is not earlier");
    };
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, LeafStep>) {
            require(s.summand < a->vertex_count(), "leaf summand " + std::to_string(s.summand) + " out of range");
            b.objects.push_back(Complex::stalk(projective(a, s.summand), -s.shift));
            b.levels.push_back(1);
          } else if constexpr (std::is_same_v<T, SumStep>) {
            std::vector<Complex> parts;
            std::size_t level = 0;
            for (auto j : s.parts) {
              earlier(j, "sum");
              parts.push_back(b.objects[j]);
              level = std::max(level, b.levels[j]);
            }
            b.objects.push_back(direct_sum(parts, a));
            b.levels.push_back(level);
          } else if constexpr (std::is_same_v<T, ConeStep>) {
            earlier(s.u, "cone source");
            earlier(s.v, "cone target");
            require(b.levels[s.u] <= 1, "cone source has level " + std::to_string(b.levels[s.u]) + " > 1");
            ChainMap f = chain_map_from(b.objects[s.u], b.objects[s.v], s.map);
            if (check) require(f.is_chain_map(), "cone map is not a chain map");
            b.objects.push_back(cone(f).cone);
            b.levels.push_back(b.levels[s.v] + 1);
          } else {
            earlier(s.z, "retract");
            require(s.y.algebra()->same_presentation(*a), "retract object over a different algebra");
            const Complex& z = b.objects[s.z];
            if (check) {
              ChainMap p = chain_map_from(z, s.y, s.p);
              ChainMap sec = chain_map_from(s.y, z, s.s);
              Homotopy h = homotopy_from(s.y, s.y, s.h);
              require(p.is_chain_map() && sec.is_chain_map(), "retract maps are not chain maps");
              require(is_homotopy(h, compose(p, sec), ChainMap::identity(s.y)),
                      "retract homotopy does not verify p s - id = d h + h d");
            }
            b.objects.push_back(s.y);
            b.levels.push_back(b.levels[s.z]);
          }
        },
        c.steps[i]);
  }
  return b;
}

}  // namespace

Complex certificate_object(const ThickCertificate& c, const AlgebraPtr& a) {
  if (c.steps.empty()) return Complex::zero(a);
  try {
    return build_steps(c, a, false, nullptr).objects.back();
  } catch (const StepFailure& f) {
    throw ComplexError(f.message);
  }
}

VerifyResult verify_certificate(const ThickCertificate& c, const Complex& target) {
  VerifyResult r;
  const AlgebraPtr& a = target.algebra();
  if (c.generator != "A") {
    r.message = "unsupported generator '" + c.generator + "'";
    return r;
  }
  if (c.steps.empty()) {
    r.message = "certificate has no steps";
    return r;
  }
  std::size_t failed = 0;
  Built b;
  try {
    b = build_steps(c, a, true, &failed);
  } catch (const StepFailure& f) {
    r.failed_step = failed;
    r.message = "step " + std::to_string(failed) + ": " + f.message;
    return r;
  } catch (const std::exception& e) {
    r.failed_step = failed;
    r.message = "step " + std::to_string(failed) + ": " + e.what();
    return r;
  }
  r.computed_level = b.levels.back();
  if (c.level < r.computed_level) {
    r.message = "declared level " + std::to_string(c.level) + " is below the computed level " +
                std::to_string(r.computed_level);
    return r;
  }
  try {
    ChainMap f = chain_map_from(b.objects.back(), target, c.compare);
    if (!f.is_chain_map()) {
      r.message = "comparison map is not a chain map";
      return r;
    }
    if (!is_quasi_isomorphism(f)) {
      r.message = "comparison map is not a quasi-isomorphism";
      return r;
    }
  } catch (const std::exception& e) {
    r.message = std::string("comparison map: ") + e.what();
    return r;
  }
  r.ok = true;
  return r;
}

namespace {

// Leaves for each indecomposable summand of a projective_sum term, then their sum.
std::size_t push_term(ThickCertificate& c, const Module& term, int shift) {
  std::vector<std::size_t> leaves;
  auto mult = top_dims(term);
  for (std::size_t i = 0; i < mult.size(); ++i)
    for (std::size_t k = 0; k < mult[i]; ++k) {
      leaves.push_back(c.steps.size());
      c.steps.push_back(LeafStep{i, shift});
    }
  c.steps.push_back(SumStep{leaves});
  return c.steps.size() - 1;
}

}  // namespace

ThickCertificate tower_certificate(const Complex& p, const ChainMap& compare) {
  ThickCertificate c;
  c.compare = to_map_data(compare);
  if (p.is_zero()) {
    c.steps.push_back(SumStep{});
    return c;
  }
  std::size_t cur = push_term(c, p.term(p.hi()), -p.hi());
  c.level = 1;
  for (int n = p.hi() - 1; n >= p.lo(); --n) {
    Module t = p.term(n);
    if (t.is_zero()) continue;
    std::size_t u = push_term(c, t, -(n + 1));
    c.steps.push_back(ConeStep{u, cur, MapData{{n + 1, p.d(n).components()}}});
    cur = c.steps.size() - 1;
    ++c.level;
  }
  return c;
}

ThickCertificate certificate_from_resolution(const Module& m, std::size_t cutoff) {
  auto r = minimal_resolution(m, cutoff, {.detect_periodicity = false});
  if (!r.status.finite) throw PdError("pd at least cutoff");
  Complex target = Complex::stalk(m, 0);
  if (m.is_zero()) return tower_certificate(Complex::zero(m.algebra()), ChainMap::zero(target, target));
  Complex p = resolution_complex(r);
  return tower_certificate(p, ChainMap(p, target, {{0, *r.augmentation}}));
}

PerfectModel perfect_model(const Complex& y, std::size_t max_pd, std::size_t cutoff) {
  const AlgebraPtr& alg = y.algebra();
  if (y.is_zero()) return {y, ChainMap::identity(y)};
  for (int n = y.lo(); n <= y.hi(); ++n) {
    Module h = cohomology(y, n);
    if (h.is_zero()) continue;
    PdStatus s = proj_dim(h, cutoff);
    if (!s.finite) throw PdError("H^" + std::to_string(n) + " has pd at least cutoff");
    if (s.value > max_pd)
      throw PdError("H^" + std::to_string(n) + " has pd " + std::to_string(s.value) + " > " + std::to_string(max_pd));
  }
  std::map<int, Module> terms;
  std::map<int, ModuleMap> diff, pi;
  auto term = [&](int n) { return terms.count(n) ? terms.at(n) : Module::zero(alg); };
  const int floor = y.lo() - static_cast<int>(max_pd) - 2;
  // Descending: C = cone(pi) restricted to degrees >= n is exact above n; P^n
  // covers the cycles of C^n modulo the image of Y^{n-1}.
  for (int n = y.hi();; --n) {
    if (n < floor) throw PdError("perfect model does not terminate");
    Module yn = y.term(n), p1 = term(n + 1), p2 = term(n + 2);
    Module cn = direct_sum(yn, p1);
    ModuleMap pi1 = pi.count(n + 1) ? pi.at(n + 1) : ModuleMap::zero(p1, y.term(n + 1));
    ModuleMap d1 = diff.count(n + 1) ? diff.at(n + 1) : ModuleMap::zero(p1, p2);
    ModuleMap dc = vjoin(hjoin(y.d(n), pi1), hjoin(ModuleMap::zero(yn, p2), -d1));
    Submodule z = kernel(dc);
    ModuleMap from_y = vjoin(y.d(n - 1), ModuleMap::zero(y.term(n - 1), p1));
    auto b = image_bases(from_y);
    std::vector<Matrix> coords;
    for (std::size_t v = 0; v < b.size(); ++v) {
      auto c = solve(z.inclusion.at(v), b[v]);
      if (!c) throw ComplexError("perfect model: boundary outside the cycles");
      coords.push_back(std::move(*c));
    }
    Quotient q = quotient(z.module, coords);
    if (q.module.is_zero()) {
      if (n < y.lo()) break;
      continue;
    }
    Quotient tq = top(q.module);
    std::vector<Generator> gens;
    for (std::size_t v = 0; v < tq.section.size(); ++v)
      for (std::size_t k = 0; k < tq.section[v].cols(); ++k)
        gens.push_back({v, z.inclusion.at(v) * (q.section[v] * tq.section[v].column(k))});
    ModuleMap g = map_from_generators(cn, gens);
    const Module& pn = g.source();
    std::vector<Matrix> to_y, to_p;
    for (std::size_t v = 0; v < alg->vertex_count(); ++v) {
      const Matrix& gv = g.at(v);
      to_y.push_back(gv.block(0, 0, yn.dim(v), gv.cols()));
      to_p.push_back(gv.block(yn.dim(v), 0, p1.dim(v), gv.cols()).scaled(Rational(-1)));
    }
    terms.emplace(n, pn);
    pi.emplace(n, ModuleMap(pn, yn, std::move(to_y)));
    diff.emplace(n, ModuleMap(pn, p1, std::move(to_p)));
  }
  if (terms.empty()) {
    Complex zero = Complex::zero(alg);
    return {zero, ChainMap::zero(zero, y)};
  }
  const int lo = terms.begin()->first, hi = terms.rbegin()->first;
  std::vector<Module> ts;
  std::vector<ModuleMap> ds;
  for (int n = lo; n <= hi; ++n) {
    ts.push_back(term(n));
    if (n < hi) ds.push_back(diff.count(n) ? diff.at(n) : ModuleMap::zero(term(n), term(n + 1)));
  }
  Complex p(alg, lo, std::move(ts), std::move(ds));
  return {p, ChainMap(p, y, pi)};
}

ThickCertificate certificate_for_hom_p(const Complex& y, std::size_t d, std::size_t cutoff) {
  PerfectModel m = perfect_model(y, d, cutoff);
  return tower_certificate(m.p, m.to_y);
}

ThickCertificate truncate_certificate(const ThickCertificate& c, const AlgebraPtr& a) {
  if (c.steps.empty() || !std::holds_alternative<ConeStep>(c.steps.back()))
    throw ComplexError("truncate_certificate: last step is not a cone");
  ThickCertificate t = c;
  t.steps.pop_back();
  t.level = c.level == 0 ? 0 : c.level - 1;
  Complex v = certificate_object(t, a);
  MapData restricted;
  for (const auto& [n, mats] : c.compare) {
    Module vn = v.term(n);
    if (vn.is_zero()) continue;
    std::vector<Matrix> cols;
    for (std::size_t i = 0; i < mats.size(); ++i) cols.push_back(mats[i].block(0, 0, mats[i].rows(), vn.dim(i)));
    restricted.emplace(n, std::move(cols));
  }
  t.compare = std::move(restricted);
  return t;
}

}  // namespace findim
