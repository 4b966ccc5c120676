#include "findim/module.hpp"

#include <map>
#include <numeric>

namespace findim {

namespace {

void check_shapes(const Algebra& a, const std::vector<std::size_t>& dims,
                  const std::vector<Matrix>& arrows) {
  if (dims.size() != a.vertex_count())
    throw ModuleError("dimension vector has " + std::to_string(dims.size()) + " entries, expected " +
                      std::to_string(a.vertex_count()));
  if (arrows.size() != a.arrow_count())
    throw ModuleError("module has " + std::to_string(arrows.size()) + " arrow matrices, expected " +
                      std::to_string(a.arrow_count()));
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const auto& arr = a.quiver().arrow(i);
    if (!(arrows[i].field() == a.field()) || arrows[i].rows() != dims[arr.target] ||
        arrows[i].cols() != dims[arr.source])
      throw ModuleError("arrow '" + arr.id + "' matrix has shape " + std::to_string(arrows[i].rows()) +
                        "x" + std::to_string(arrows[i].cols()) + ", expected " +
                        std::to_string(dims[arr.target]) + "x" + std::to_string(dims[arr.source]));
  }
}

}  // namespace

Module::Module(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> arrows)
    : Module(trusted(std::move(algebra), std::move(dims), std::move(arrows))) {
  if (!satisfies_relations()) throw ModuleError("module does not satisfy the relations of the algebra");
}

Module Module::trusted(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> arrows) {
  if (!algebra) throw ModuleError("module without an algebra");
  check_shapes(*algebra, dims, arrows);
  return Module(std::make_shared<const Rep>(Rep{std::move(algebra), std::move(dims), std::move(arrows)}));
}

Module Module::zero(AlgebraPtr algebra) {
  std::vector<std::size_t> dims(algebra->vertex_count(), 0);
  std::vector<Matrix> arrows(algebra->arrow_count(), Matrix(algebra->field(), 0, 0));
  return trusted(std::move(algebra), std::move(dims), std::move(arrows));
}

std::size_t Module::total_dim() const noexcept {
  return std::accumulate(rep_->dims.begin(), rep_->dims.end(), std::size_t(0));
}

Matrix Module::path_action(const Path& path) const {
  Matrix m = Matrix::identity(field(), dim(path.source));
  for (auto a : path.arrows) m = arrow(a) * m;
  return m;
}

bool Module::satisfies_relations() const {
  const auto& q = algebra()->quiver();
  for (const auto& rel : algebra()->relations()) {
    const auto& first = rel.terms.front().arrows;
    const std::size_t s = q.arrow(first.front()).source;
    const std::size_t t = q.arrow(first.back()).target;
    Matrix sum(field(), dim(t), dim(s));
    for (const auto& term : rel.terms)
      sum = sum + path_action(Path{s, t, term.arrows}).scaled(term.coeff);
    if (!sum.is_zero()) return false;
  }
  return true;
}

bool same_algebra(const Module& a, const Module& b) {
  return a.algebra() == b.algebra() || a.algebra()->same_presentation(*b.algebra());
}

bool Module::operator==(const Module& other) const {
  if (rep_ == other.rep_) return true;
  return same_algebra(*this, other) && dims() == other.dims() && arrows() == other.arrows();
}

ModuleMap::ModuleMap(Module source, Module target, std::vector<Matrix> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  if (!same_algebra(source_, target_)) throw ModuleError("module map between different algebras");
  if (components_.size() != source_.dims().size())
    throw ModuleError("module map needs one matrix per vertex");
  for (std::size_t v = 0; v < components_.size(); ++v)
    if (components_[v].rows() != target_.dim(v) || components_[v].cols() != source_.dim(v) ||
        !(components_[v].field() == source_.field()))
      throw ModuleError("module map block at vertex " + std::to_string(v) + " has shape " +
                        std::to_string(components_[v].rows()) + "x" +
                        std::to_string(components_[v].cols()) + ", expected " +
                        std::to_string(target_.dim(v)) + "x" + std::to_string(source_.dim(v)));
}

ModuleMap ModuleMap::zero(Module source, Module target) {
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < source.dims().size(); ++v)
    comps.emplace_back(source.field(), target.dim(v), source.dim(v));
  return ModuleMap(std::move(source), std::move(target), std::move(comps));
}

ModuleMap ModuleMap::identity(Module m) {
  std::vector<Matrix> comps;
  for (auto d : m.dims()) comps.push_back(Matrix::identity(m.field(), d));
  return ModuleMap(m, m, std::move(comps));
}

bool ModuleMap::is_zero() const {
  for (const auto& c : components_)
    if (!c.is_zero()) return false;
  return true;
}

bool ModuleMap::is_homomorphism() const {
  const auto& q = source_.algebra()->quiver();
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto& arr = q.arrow(a);
    if (!(target_.arrow(a) * components_[arr.source] == components_[arr.target] * source_.arrow(a)))
      return false;
  }
  return true;
}

bool ModuleMap::is_isomorphism() const {
  for (const auto& c : components_)
    if (c.rows() != c.cols() || rank(c) != c.rows()) return false;
  return is_homomorphism();
}

Matrix ModuleMap::flatten() const {
  std::size_t n = 0;
  for (const auto& c : components_) n += c.size();
  Matrix out(source_.field(), n, 1);
  std::size_t off = 0;
  for (const auto& c : components_) {
    out.set_block(off, 0, c.reshaped(c.size(), 1));
    off += c.size();
  }
  return out;
}

ModuleMap ModuleMap::unflatten(const Module& source, const Module& target, const Matrix& column) {
  std::vector<Matrix> comps;
  std::size_t off = 0;
  for (std::size_t v = 0; v < source.dims().size(); ++v) {
    const std::size_t r = target.dim(v), c = source.dim(v);
    comps.push_back(column.block(off, 0, r * c, 1).reshaped(r, c));
    off += r * c;
  }
  if (off != column.rows()) throw ModuleError("unflatten: length mismatch");
  return ModuleMap(source, target, std::move(comps));
}

ModuleMap ModuleMap::operator+(const ModuleMap& other) const {
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < components_.size(); ++v)
    comps.push_back(components_[v] + other.components_.at(v));
  return ModuleMap(source_, target_, std::move(comps));
}

ModuleMap ModuleMap::operator-() const { return scaled(Rational(-1)); }

ModuleMap ModuleMap::scaled(const Rational& s) const {
  std::vector<Matrix> comps;
  for (const auto& c : components_) comps.push_back(c.scaled(s));
  return ModuleMap(source_, target_, std::move(comps));
}

bool ModuleMap::operator==(const ModuleMap& other) const {
  return source_ == other.source_ && target_ == other.target_ && components_ == other.components_;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  if (!(g.source().dims() == f.target().dims())) throw ModuleError("compose: shapes do not chain");
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < f.components().size(); ++v) comps.push_back(g.at(v) * f.at(v));
  return ModuleMap(f.source(), g.target(), std::move(comps));
}

Module projective(const AlgebraPtr& a, std::size_t vertex) {
  if (vertex >= a->vertex_count()) throw ModuleError("vertex out of range");
  return Module::trusted(a, a->projective_dims(vertex), a->projective_arrows(vertex));
}

Module simple(const AlgebraPtr& a, std::size_t vertex) {
  if (vertex >= a->vertex_count()) throw ModuleError("vertex out of range");
  std::vector<std::size_t> dims(a->vertex_count(), 0);
  dims[vertex] = 1;
  std::vector<Matrix> arrows;
  for (const auto& arr : a->quiver().arrows())
    arrows.emplace_back(a->field(), dims[arr.target], dims[arr.source]);
  return Module::trusted(a, std::move(dims), std::move(arrows));
}

Module direct_sum(const Module& a, const Module& b) {
  if (!same_algebra(a, b)) throw ModuleError("direct sum across algebras");
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < a.dims().size(); ++v) dims.push_back(a.dim(v) + b.dim(v));
  std::vector<Matrix> arrows;
  for (std::size_t i = 0; i < a.arrows().size(); ++i)
    arrows.push_back(Matrix::direct_sum(a.arrow(i), b.arrow(i)));
  return Module::trusted(a.algebra(), std::move(dims), std::move(arrows));
}

Module direct_sum(const std::vector<Module>& parts, const AlgebraPtr& algebra) {
  Module out = Module::zero(algebra);
  for (const auto& p : parts) out = direct_sum(out, p);
  return out;
}

Module projective_sum(const AlgebraPtr& a, const std::vector<std::size_t>& multiplicities) {
  if (multiplicities.size() != a->vertex_count()) throw ModuleError("multiplicity vector has wrong length");
  Module out = Module::zero(a);
  for (std::size_t i = 0; i < multiplicities.size(); ++i)
    for (std::size_t c = 0; c < multiplicities[i]; ++c) out = direct_sum(out, projective(a, i));
  return out;
}

Module dual_module(const Module& m, const AlgebraPtr& opposite) {
  if (opposite->vertex_count() != m.dims().size() || opposite->arrow_count() != m.arrows().size())
    throw ModuleError("dual_module: algebra is not the opposite of the module's algebra");
  std::vector<Matrix> arrows;
  for (const auto& x : m.arrows()) arrows.push_back(x.transpose());
  return Module::trusted(opposite, m.dims(), std::move(arrows));
}

ModuleMap direct_sum(const ModuleMap& f, const ModuleMap& g) {
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < f.components().size(); ++v)
    comps.push_back(Matrix::direct_sum(f.at(v), g.at(v)));
  return ModuleMap(direct_sum(f.source(), g.source()), direct_sum(f.target(), g.target()),
                   std::move(comps));
}

ModuleMap hjoin(const ModuleMap& f, const ModuleMap& g) {
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < f.components().size(); ++v)
    comps.push_back(Matrix::hstack(f.source().field(), f.target().dim(v),
                                   std::vector<Matrix>{f.at(v), g.at(v)}));
  return ModuleMap(direct_sum(f.source(), g.source()), f.target(), std::move(comps));
}

ModuleMap vjoin(const ModuleMap& f, const ModuleMap& g) {
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < f.components().size(); ++v)
    comps.push_back(Matrix::vstack(f.source().field(), f.source().dim(v),
                                   std::vector<Matrix>{f.at(v), g.at(v)}));
  return ModuleMap(f.source(), direct_sum(f.target(), g.target()), std::move(comps));
}

ModuleMap inclusion_into_sum(const Module& a, const Module& b, bool second) {
  auto first_part = second ? ModuleMap::zero(b, a) : ModuleMap::identity(a);
  auto second_part = second ? ModuleMap::identity(b) : ModuleMap::zero(a, b);
  return vjoin(first_part, second_part);
}

ModuleMap projection_from_sum(const Module& a, const Module& b, bool second) {
  if (second) return hjoin(ModuleMap::zero(a, b), ModuleMap::identity(b));
  return hjoin(ModuleMap::identity(a), ModuleMap::zero(b, a));
}

std::vector<ModuleMap> hom_space(const Module& m, const Module& n) {
  if (!same_algebra(m, n)) throw ModuleError("hom_space: modules over different algebras");
  const auto& alg = *m.algebra();
  const Field& f = m.field();
  const std::size_t v = alg.vertex_count();
  std::vector<std::size_t> off(v + 1, 0);
  for (std::size_t i = 0; i < v; ++i) off[i + 1] = off[i] + n.dim(i) * m.dim(i);
  const std::size_t unknowns = off[v];
  if (unknowns == 0) return {};

  // Row-major vec: vec(N_a F_s) = (N_a (x) I) vec F_s, vec(F_t M_a) = (I (x) M_a^T) vec F_t.
  std::size_t eq_rows = 0;
  for (const auto& arr : alg.quiver().arrows()) eq_rows += n.dim(arr.target) * m.dim(arr.source);
  Matrix eq(f, eq_rows, unknowns);
  std::size_t row = 0;
  for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
    const auto& arr = alg.quiver().arrow(a);
    const std::size_t s = arr.source, t = arr.target;
    const std::size_t block_rows = n.dim(t) * m.dim(s);
    if (block_rows == 0) continue;
    eq.add_block(row, off[s], Matrix::kron(n.arrow(a), Matrix::identity(f, m.dim(s))));
    eq.add_block(row, off[t], -Matrix::kron(Matrix::identity(f, n.dim(t)), m.arrow(a).transpose()));
    row += block_rows;
  }
  Matrix k = kernel_basis(eq);
  std::vector<ModuleMap> basis;
  for (std::size_t c = 0; c < k.cols(); ++c) basis.push_back(ModuleMap::unflatten(m, n, k.column(c)));
  return basis;
}

std::size_t hom_dim(const Module& m, const Module& n) { return hom_space(m, n).size(); }

Submodule submodule(const Module& m, std::vector<Matrix> bases) {
  const auto& alg = *m.algebra();
  std::vector<std::size_t> dims;
  for (const auto& b : bases) dims.push_back(b.cols());
  std::vector<Matrix> arrows;
  for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
    const auto& arr = alg.quiver().arrow(a);
    auto x = solve(bases[arr.target], m.arrow(a) * bases[arr.source]);
    if (!x) throw ModuleError("submodule: subspace is not stable under arrow '" + arr.id + "'");
    arrows.push_back(std::move(*x));
  }
  Module sub = Module::trusted(m.algebra(), std::move(dims), std::move(arrows));
  ModuleMap inc(sub, m, std::move(bases));
  return {sub, inc};
}

Quotient quotient(const Module& m, const std::vector<Matrix>& sub_bases) {
  const auto& alg = *m.algebra();
  const Field& f = m.field();
  std::vector<Matrix> section, proj;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < alg.vertex_count(); ++v) {
    const Matrix& u = sub_bases.at(v);
    Matrix c = complement_basis(u);
    Matrix full = Matrix::hstack(f, m.dim(v), std::vector<Matrix>{u, c});
    auto inv = inverse(full);
    if (!inv) throw ModuleError("quotient: subspace basis is not independent");
    proj.push_back(inv->block(u.cols(), 0, c.cols(), m.dim(v)));
    dims.push_back(c.cols());
    section.push_back(std::move(c));
  }
  std::vector<Matrix> arrows;
  for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
    const auto& arr = alg.quiver().arrow(a);
    arrows.push_back(proj[arr.target] * m.arrow(a) * section[arr.source]);
  }
  Module q = Module::trusted(m.algebra(), std::move(dims), std::move(arrows));
  ModuleMap pi(m, q, std::move(proj));
  return {q, pi, std::move(section)};
}

Submodule kernel(const ModuleMap& f) {
  std::vector<Matrix> bases;
  for (const auto& c : f.components()) bases.push_back(kernel_basis(c));
  return submodule(f.source(), std::move(bases));
}

std::vector<Matrix> image_bases(const ModuleMap& f) {
  std::vector<Matrix> out;
  for (const auto& c : f.components()) out.push_back(image_basis(c));
  return out;
}

std::vector<Matrix> radical_bases(const Module& m) {
  const auto& alg = *m.algebra();
  std::vector<std::vector<Matrix>> incoming(alg.vertex_count());
  for (std::size_t a = 0; a < alg.arrow_count(); ++a)
    incoming[alg.quiver().arrow(a).target].push_back(m.arrow(a));
  std::vector<Matrix> out;
  for (std::size_t v = 0; v < alg.vertex_count(); ++v)
    out.push_back(image_basis(Matrix::hstack(m.field(), m.dim(v), incoming[v])));
  return out;
}

Quotient top(const Module& m) { return quotient(m, radical_bases(m)); }

std::vector<std::size_t> top_dims(const Module& m) {
  auto rad = radical_bases(m);
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < rad.size(); ++v) out.push_back(m.dim(v) - rad[v].cols());
  return out;
}

ModuleMap map_from_generators(const Module& m, const std::vector<Generator>& gens) {
  const auto& alg = m.algebra();
  std::vector<std::size_t> mult(alg->vertex_count(), 0);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (g > 0 && gens[g].vertex < gens[g - 1].vertex)
      throw ModuleError("map_from_generators: generators must be sorted by vertex");
    ++mult[gens[g].vertex];
  }
  Module p = projective_sum(alg, mult);
  std::map<std::size_t, Matrix> action;  // basis index -> path action on m
  auto act = [&](std::size_t idx) -> const Matrix& {
    auto it = action.find(idx);
    if (it == action.end()) it = action.emplace(idx, m.path_action(alg->basis()[idx])).first;
    return it->second;
  };
  std::vector<Matrix> comps;
  for (std::size_t j = 0; j < alg->vertex_count(); ++j) {
    std::vector<Matrix> cols;
    for (const auto& g : gens)
      for (auto idx : alg->basis_between(g.vertex, j)) cols.push_back(act(idx) * g.vector);
    comps.push_back(Matrix::hstack(m.field(), m.dim(j), cols));
  }
  return ModuleMap(p, m, std::move(comps));
}

ProjectiveCover projective_cover(const Module& m) {
  if (m.is_zero()) throw ModuleError("projective_cover of the zero module");
  Quotient t = top(m);
  std::vector<Generator> gens;
  for (std::size_t v = 0; v < t.section.size(); ++v)
    for (std::size_t c = 0; c < t.section[v].cols(); ++c) gens.push_back({v, t.section[v].column(c)});
  return {t.module.dims(), map_from_generators(m, gens)};
}

Submodule syzygy(const Module& m) { return kernel(projective_cover(m).cover); }

bool is_projective(const Module& m) {
  if (m.is_zero()) return true;
  auto t = top_dims(m);
  std::size_t cover_dim = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto d = m.algebra()->projective_dims(i);
    cover_dim += t[i] * std::accumulate(d.begin(), d.end(), std::size_t(0));
  }
  return cover_dim == m.total_dim();
}

std::optional<ModuleMap> find_isomorphism(const Module& x, const Module& y, std::size_t max_candidates,
                                          bool* exhaustive) {
  auto set_exhaustive = [&](bool e) {
    if (exhaustive) *exhaustive = e;
  };
  set_exhaustive(true);
  if (!same_algebra(x, y) || x.dims() != y.dims()) return std::nullopt;
  if (x.is_zero()) return ModuleMap::identity(x);
  if (top_dims(x) != top_dims(y)) return std::nullopt;
  auto basis = hom_space(x, y);
  if (basis.empty()) return std::nullopt;
  const Field& f = x.field();
  if (!f.is_prime()) {
    set_exhaustive(false);
    return std::nullopt;
  }
  const std::uint64_t p = f.characteristic();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    count *= p;
    if (count > max_candidates) {
      set_exhaustive(false);
      return std::nullopt;
    }
  }
  std::vector<Matrix> cols;
  for (const auto& b : basis) cols.push_back(b.flatten());
  Matrix flat = Matrix::hstack(f, cols.front().rows(), cols);
  Matrix coeffs(f, basis.size(), 1);
  std::vector<std::uint64_t> digits(basis.size(), 0);
  for (std::uint64_t n = 0; n < count; ++n) {
    for (std::size_t i = 0; i < digits.size(); ++i) coeffs.set(i, 0, Rational(digits[i]));
    ModuleMap cand = ModuleMap::unflatten(x, y, flat * coeffs);
    bool invertible = true;
    for (const auto& c : cand.components())
      if (rank(c) != c.rows()) {
        invertible = false;
        break;
      }
    if (invertible) return cand;
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (++digits[i] < p) break;
      digits[i] = 0;
    }
  }
  return std::nullopt;
}

}  // namespace findim
