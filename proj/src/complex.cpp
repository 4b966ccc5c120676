#include "findim/complex.hpp"

#include <algorithm>

namespace findim {

namespace {

bool same_components(const ModuleMap& a, const ModuleMap& b) { return a.components() == b.components(); }

Rational sign(int k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace

Complex Complex::trusted(AlgebraPtr algebra, int lo, std::vector<Module> terms, std::vector<ModuleMap> diffs) {
  if (!terms.empty() && diffs.size() + 1 != terms.size())
    throw ComplexError("complex needs one differential between consecutive terms");
  if (terms.empty() && !diffs.empty()) throw ComplexError("differentials without terms");
  Complex c(std::move(algebra));
  c.lo_ = lo;
  c.terms_ = std::move(terms);
  c.diffs_ = std::move(diffs);
  for (std::size_t i = 0; i < c.diffs_.size(); ++i) {
    const auto& f = c.diffs_[i];
    if (f.source().dims() != c.terms_[i].dims() || f.target().dims() != c.terms_[i + 1].dims())
      throw ComplexError("differential in degree " + std::to_string(lo + static_cast<int>(i)) +
                         " has the wrong shape");
  }
  c.trim();
  return c;
}

Complex::Complex(AlgebraPtr algebra, int lo, std::vector<Module> terms, std::vector<ModuleMap> diffs)
    : Complex(trusted(std::move(algebra), lo, std::move(terms), std::move(diffs))) {
  for (std::size_t i = 0; i < diffs_.size(); ++i) {
    if (!diffs_[i].is_homomorphism())
      throw ComplexError("differential in degree " + std::to_string(lo_ + static_cast<int>(i)) +
                         " is not a module homomorphism");
    if (i + 1 < diffs_.size() && !compose(diffs_[i + 1], diffs_[i]).is_zero())
      throw ComplexError("d.d != 0 at degree " + std::to_string(lo_ + static_cast<int>(i)));
  }
}

void Complex::trim() {
  while (!terms_.empty() && terms_.front().is_zero()) {
    terms_.erase(terms_.begin());
    if (!diffs_.empty()) diffs_.erase(diffs_.begin());
    ++lo_;
  }
  while (!terms_.empty() && terms_.back().is_zero()) {
    terms_.pop_back();
    if (!diffs_.empty()) diffs_.pop_back();
  }
  if (terms_.empty()) lo_ = 0;
}

Complex Complex::zero(AlgebraPtr algebra) { return Complex(std::move(algebra)); }

Complex Complex::stalk(const Module& m, int degree) { return trusted(m.algebra(), degree, {m}, {}); }

Module Complex::term(int n) const {
  if (n < lo_ || n > hi()) return Module::zero(algebra_);
  return terms_[static_cast<std::size_t>(n - lo_)];
}

ModuleMap Complex::d(int n) const {
  if (n >= lo_ && n < hi()) return diffs_[static_cast<std::size_t>(n - lo_)];
  return ModuleMap::zero(term(n), term(n + 1));
}

bool Complex::is_perfect() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Module& m) { return is_projective(m); });
}

std::size_t Complex::total_dim() const {
  std::size_t n = 0;
  for (const auto& t : terms_) n += t.total_dim();
  return n;
}

bool Complex::operator==(const Complex& other) const {
  if (lo_ != other.lo_ || terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i] == other.terms_[i])) return false;
  for (std::size_t i = 0; i < diffs_.size(); ++i)
    if (!same_components(diffs_[i], other.diffs_[i])) return false;
  return true;
}

ChainMap::ChainMap(Complex source, Complex target, std::map<int, ModuleMap> components)
    : source_(std::move(source)), target_(std::move(target)) {
  for (auto& [n, f] : components) {
    Module s = source_.term(n), t = target_.term(n);
    if (f.source().dims() != s.dims() || f.target().dims() != t.dims())
      throw ComplexError("chain map component in degree " + std::to_string(n) + " has the wrong shape");
    if (s.is_zero() || t.is_zero()) continue;
    components_.emplace(n, ModuleMap(s, t, f.components()));
  }
}

ChainMap ChainMap::zero(Complex source, Complex target) {
  return ChainMap(std::move(source), std::move(target), {});
}

ChainMap ChainMap::identity(Complex x) {
  std::map<int, ModuleMap> comps;
  for (int n = x.lo(); n <= x.hi(); ++n) comps.emplace(n, ModuleMap::identity(x.term(n)));
  return ChainMap(x, x, std::move(comps));
}

ModuleMap ChainMap::at(int n) const {
  auto it = components_.find(n);
  if (it != components_.end()) return it->second;
  return ModuleMap::zero(source_.term(n), target_.term(n));
}

std::vector<int> ChainMap::degrees() const {
  std::vector<int> out;
  if (source_.is_zero() || target_.is_zero()) return out;
  for (int n = std::max(source_.lo(), target_.lo()); n <= std::min(source_.hi(), target_.hi()); ++n)
    out.push_back(n);
  return out;
}

bool ChainMap::is_chain_map() const {
  for (const auto& [n, f] : components_)
    if (!f.is_homomorphism()) return false;
  if (source_.is_zero() || target_.is_zero()) return true;
  for (int n = std::min(source_.lo(), target_.lo()) - 1; n <= std::max(source_.hi(), target_.hi()); ++n) {
    if (!same_components(compose(target_.d(n), at(n)), compose(at(n + 1), source_.d(n)))) return false;
  }
  return true;
}

bool ChainMap::is_zero() const {
  return std::all_of(components_.begin(), components_.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

ChainMap ChainMap::operator+(const ChainMap& other) const {
  std::map<int, ModuleMap> comps;
  for (int n : degrees()) comps.emplace(n, at(n) + other.at(n));
  return ChainMap(source_, target_, std::move(comps));
}

ChainMap ChainMap::operator-(const ChainMap& other) const { return *this + other.scaled(Rational(-1)); }

ChainMap ChainMap::scaled(const Rational& s) const {
  std::map<int, ModuleMap> comps;
  for (const auto& [n, f] : components_) comps.emplace(n, f.scaled(s));
  return ChainMap(source_, target_, std::move(comps));
}

bool ChainMap::operator==(const ChainMap& other) const {
  if (!(source_ == other.source_) || !(target_ == other.target_)) return false;
  for (int n : degrees())
    if (!same_components(at(n), other.at(n))) return false;
  return true;
}

ModuleMap Homotopy::at(int n) const {
  auto it = components.find(n);
  if (it != components.end()) return it->second;
  return ModuleMap::zero(source.term(n), target.term(n - 1));
}

bool is_homotopy(const Homotopy& h, const ChainMap& f, const ChainMap& g) {
  const Complex& x = f.source();
  const Complex& y = f.target();
  if (x.is_zero() || y.is_zero()) return true;
  for (const auto& [n, c] : h.components) {
    if (c.source().dims() != x.term(n).dims() || c.target().dims() != y.term(n - 1).dims()) return false;
    if (!c.is_homomorphism()) return false;
  }
  for (int n = x.lo(); n <= x.hi(); ++n) {
    ModuleMap lhs = f.at(n) + (-g.at(n));
    ModuleMap rhs = compose(y.d(n - 1), h.at(n)) + compose(h.at(n + 1), x.d(n));
    if (!same_components(lhs, rhs)) return false;
  }
  return true;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  std::map<int, ModuleMap> comps;
  for (int n : f.degrees()) comps.emplace(n, compose(g.at(n), f.at(n)));
  return ChainMap(f.source(), g.target(), std::move(comps));
}

Complex shift(const Complex& x, int k) {
  if (x.is_zero() || k == 0) return x;
  std::vector<Module> terms;
  std::vector<ModuleMap> diffs;
  for (int n = x.lo(); n <= x.hi(); ++n) {
    terms.push_back(x.term(n));
    if (n < x.hi()) diffs.push_back(x.d(n).scaled(sign(k)));
  }
  return Complex::trusted(x.algebra(), x.lo() - k, std::move(terms), std::move(diffs));
}

ChainMap shift(const ChainMap& f, int k) {
  std::map<int, ModuleMap> comps;
  for (int n : f.degrees()) comps.emplace(n - k, f.at(n));
  return ChainMap(shift(f.source(), k), shift(f.target(), k), std::move(comps));
}

Triangle cone(const ChainMap& f) {
  const Complex& x = f.source();
  const Complex& y = f.target();
  const AlgebraPtr& alg = y.algebra();
  Complex sx = shift(x, 1);
  if (x.is_zero() && y.is_zero()) {
    Complex z = Complex::zero(alg);
    return {z, ChainMap::zero(y, z), ChainMap::zero(z, sx)};
  }
  int lo = y.is_zero() ? x.lo() - 1 : (x.is_zero() ? y.lo() : std::min(y.lo(), x.lo() - 1));
  int hi = y.is_zero() ? x.hi() - 1 : (x.is_zero() ? y.hi() : std::max(y.hi(), x.hi() - 1));
  std::vector<Module> terms;
  std::vector<ModuleMap> diffs;
  for (int n = lo; n <= hi; ++n) {
    terms.push_back(direct_sum(y.term(n), x.term(n + 1)));
    if (n == hi) break;
    ModuleMap top = hjoin(y.d(n), f.at(n + 1));
    ModuleMap bottom = hjoin(ModuleMap::zero(y.term(n), x.term(n + 2)), -x.d(n + 1));
    diffs.push_back(vjoin(top, bottom));
  }
  Complex c = Complex::trusted(alg, lo, std::move(terms), std::move(diffs));
  std::map<int, ModuleMap> inc, proj;
  for (int n = lo; n <= hi; ++n) {
    inc.emplace(n, inclusion_into_sum(y.term(n), x.term(n + 1), false));
    proj.emplace(n, projection_from_sum(y.term(n), x.term(n + 1), true));
  }
  ChainMap to_cone(y, c, std::move(inc));
  ChainMap from_cone(c, sx, std::move(proj));
  return {c, to_cone, from_cone};
}

Complex stupid_truncate(const Complex& x, Keep mode, int k) {
  if (x.is_zero()) return x;
  int lo = mode == Keep::AtLeast ? std::max(x.lo(), k) : x.lo();
  int hi = mode == Keep::AtMost ? std::min(x.hi(), k) : x.hi();
  if (lo > hi) return Complex::zero(x.algebra());
  std::vector<Module> terms;
  std::vector<ModuleMap> diffs;
  for (int n = lo; n <= hi; ++n) {
    terms.push_back(x.term(n));
    if (n < hi) diffs.push_back(x.d(n));
  }
  return Complex::trusted(x.algebra(), lo, std::move(terms), std::move(diffs));
}

ChainMap truncation_map(const Complex& x, Keep mode, int k) {
  Complex t = stupid_truncate(x, mode, k);
  std::map<int, ModuleMap> comps;
  if (!t.is_zero())
    for (int n = t.lo(); n <= t.hi(); ++n) comps.emplace(n, ModuleMap::identity(x.term(n)));
  if (mode == Keep::AtMost) return ChainMap(x, t, std::move(comps));
  return ChainMap(t, x, std::move(comps));
}

Complex direct_sum(const Complex& a, const Complex& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  int lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
  std::vector<Module> terms;
  std::vector<ModuleMap> diffs;
  for (int n = lo; n <= hi; ++n) {
    terms.push_back(direct_sum(a.term(n), b.term(n)));
    if (n < hi) diffs.push_back(direct_sum(a.d(n), b.d(n)));
  }
  return Complex::trusted(a.algebra(), lo, std::move(terms), std::move(diffs));
}

Complex direct_sum(const std::vector<Complex>& xs, const AlgebraPtr& algebra) {
  Complex out = Complex::zero(algebra);
  for (const auto& x : xs) out = direct_sum(out, x);
  return out;
}

namespace {

// Degree range covered by either complex; empty when both are zero.
std::pair<int, int> joint_range(const Complex& a, const Complex& b) {
  if (a.is_zero() && b.is_zero()) return {0, -1};
  if (a.is_zero()) return {b.lo(), b.hi()};
  if (b.is_zero()) return {a.lo(), a.hi()};
  return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

}  // namespace

ChainMap direct_sum(const ChainMap& f, const ChainMap& g) {
  Complex s = direct_sum(f.source(), g.source());
  Complex t = direct_sum(f.target(), g.target());
  std::map<int, ModuleMap> comps;
  auto [lo, hi] = joint_range(s, t);
  for (int n = lo; n <= hi; ++n) comps.emplace(n, direct_sum(f.at(n), g.at(n)));
  return ChainMap(s, t, std::move(comps));
}

ChainMap hjoin(const ChainMap& f, const ChainMap& g) {
  Complex s = direct_sum(f.source(), g.source());
  std::map<int, ModuleMap> comps;
  auto [lo, hi] = joint_range(s, f.target());
  for (int n = lo; n <= hi; ++n) comps.emplace(n, hjoin(f.at(n), g.at(n)));
  return ChainMap(s, f.target(), std::move(comps));
}

ChainMap vjoin(const ChainMap& f, const ChainMap& g) {
  Complex t = direct_sum(f.target(), g.target());
  std::map<int, ModuleMap> comps;
  auto [lo, hi] = joint_range(f.source(), t);
  for (int n = lo; n <= hi; ++n) comps.emplace(n, vjoin(f.at(n), g.at(n)));
  return ChainMap(f.source(), t, std::move(comps));
}

CohomologyData cohomology_data(const Complex& x, int n) {
  Submodule z = kernel(x.d(n));
  auto b = image_bases(x.d(n - 1));
  std::vector<Matrix> coords;
  for (std::size_t v = 0; v < b.size(); ++v) {
    auto c = solve(z.inclusion.at(v), b[v]);
    if (!c) throw ComplexError("d.d != 0 at degree " + std::to_string(n - 1));
    coords.push_back(std::move(*c));
  }
  Quotient q = quotient(z.module, coords);
  return {z, q};
}

Module cohomology(const Complex& x, int n) { return cohomology_data(x, n).quotient.module; }

std::vector<std::size_t> cohomology_dims(const Complex& x, int n) {
  Module t = x.term(n);
  ModuleMap out = x.d(n), in = x.d(n - 1);
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < t.dims().size(); ++v)
    dims.push_back(t.dim(v) - rank(out.at(v)) - rank(in.at(v)));
  return dims;
}

bool is_acyclic(const Complex& x) {
  if (x.is_zero()) return true;
  for (int n = x.lo(); n <= x.hi(); ++n)
    for (auto d : cohomology_dims(x, n))
      if (d != 0) return false;
  return true;
}

ModuleMap induced_on_cohomology(const ChainMap& f, int n) {
  CohomologyData hx = cohomology_data(f.source(), n);
  CohomologyData hy = cohomology_data(f.target(), n);
  ModuleMap fn = f.at(n);
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < fn.components().size(); ++v) {
    Matrix image = fn.at(v) * (hx.cycles.inclusion.at(v) * hx.quotient.section[v]);
    auto zc = solve(hy.cycles.inclusion.at(v), image);
    if (!zc) throw ComplexError("map does not send cycles to cycles in degree " + std::to_string(n));
    comps.push_back(hy.quotient.projection.at(v) * *zc);
  }
  return ModuleMap(hx.quotient.module, hy.quotient.module, std::move(comps));
}

bool induces_zero_on_cohomology(const ChainMap& f) {
  const Complex& x = f.source();
  const Complex& y = f.target();
  for (int n : f.degrees()) {
    ModuleMap fn = f.at(n), dx = x.d(n), dy = y.d(n - 1);
    for (std::size_t v = 0; v < fn.components().size(); ++v) {
      Matrix img = fn.at(v) * kernel_basis(dx.at(v));
      Matrix b = image_basis(dy.at(v));
      Matrix joined = Matrix::hstack(b.field(), b.rows(), std::vector<Matrix>{b, img});
      if (rank(joined) != b.cols()) return false;
    }
  }
  return true;
}

bool is_quasi_isomorphism(const ChainMap& f) { return is_acyclic(cone(f).cone); }

HomComplex::HomComplex(Complex x, Complex y, int from, int to)
    : x_(std::move(x)), y_(std::move(y)), from_(from), to_(to) {
  if (to < from) throw ComplexError("empty Hom complex range");
  const Field& field = x_.algebra()->field();
  for (int n = from; n <= to; ++n) {
    Degree deg;
    if (!x_.is_zero() && !y_.is_zero())
      for (int k = x_.lo(); k <= x_.hi(); ++k) {
        Module yk = y_.term(k + n);
        if (yk.is_zero()) continue;
        Module xk = x_.term(k);
        auto basis = hom_space(xk, yk);
        if (basis.empty()) continue;
        std::vector<Matrix> cols;
        for (const auto& b : basis) cols.push_back(b.flatten());
        Matrix flat = Matrix::hstack(field, cols.front().rows(), cols);
        deg.summands.push_back({k, std::move(basis), std::move(flat), deg.dim});
        deg.dim += deg.summands.back().basis.size();
      }
    degrees_.push_back(std::move(deg));
  }
  for (int n = from; n < to; ++n) {
    const Degree& deg = degree(n);
    Matrix delta(field, dim(n + 1), deg.dim);
    for (const auto& s : deg.summands)
      for (std::size_t j = 0; j < s.basis.size(); ++j) {
        std::map<int, ModuleMap> g{{s.k, s.basis[j]}};
        delta.set_block(0, s.offset + j, apply_delta(n, g));
      }
    deltas_.push_back(std::move(delta));
  }
}

const HomComplex::Degree& HomComplex::degree(int n) const {
  if (n < from_ || n > to_) throw ComplexError("Hom complex degree out of range");
  return degrees_[static_cast<std::size_t>(n - from_)];
}

std::size_t HomComplex::dim(int n) const { return degree(n).dim; }

const Matrix& HomComplex::delta(int n) const {
  if (n < from_ || n >= to_) throw ComplexError("Hom complex differential out of range");
  return deltas_[static_cast<std::size_t>(n - from_)];
}

std::size_t HomComplex::cohomology_dim(int n) const {
  if (n <= from_ || n >= to_) throw ComplexError("Hom complex cohomology needs both neighbours");
  return dim(n) - rank(delta(n)) - rank(delta(n - 1));
}

Matrix HomComplex::apply_delta(int n, const std::map<int, ModuleMap>& g) const {
  std::map<int, ModuleMap> out;
  const Rational s = -sign(n);
  for (const auto& [k, gk] : g) {
    // d_Y g^k lands in Hom(X^k, Y^{k+n+1}); g^k d_X^{k-1} in Hom(X^{k-1}, Y^{k+n}).
    ModuleMap a = compose(y_.d(k + n), gk);
    ModuleMap b = compose(gk, x_.d(k - 1)).scaled(s);
    auto add = [&](int key, const ModuleMap& m) {
      auto it = out.find(key);
      if (it == out.end()) out.emplace(key, m);
      else it->second = it->second + m;
    };
    add(k, a);
    add(k - 1, b);
  }
  return coordinates(n + 1, out);
}

Matrix HomComplex::coordinates(int n, const std::map<int, ModuleMap>& components) const {
  const Degree& deg = degree(n);
  const Field& field = x_.algebra()->field();
  Matrix out(field, deg.dim, 1);
  std::map<int, const Summand*> by_k;
  for (const auto& s : deg.summands) by_k.emplace(s.k, &s);
  for (const auto& [k, m] : components) {
    auto it = by_k.find(k);
    if (it == by_k.end()) {
      if (!m.is_zero()) throw ComplexError("component outside the Hom complex support");
      continue;
    }
    auto c = solve(it->second->flat, m.flatten());
    if (!c) throw ComplexError("component in degree " + std::to_string(k) + " is not a homomorphism");
    out.set_block(it->second->offset, 0, *c);
  }
  return out;
}

std::map<int, ModuleMap> HomComplex::element(int n, const Matrix& coords) const {
  const Degree& deg = degree(n);
  std::map<int, ModuleMap> out;
  for (const auto& s : deg.summands) {
    Matrix c = coords.block(s.offset, 0, s.basis.size(), 1);
    out.emplace(s.k, ModuleMap::unflatten(x_.term(s.k), y_.term(s.k + n), s.flat * c));
  }
  return out;
}

HomComplex hom_complex(const Complex& x, const Complex& y) {
  if (!x.is_perfect()) throw ComplexError("x is not perfect");
  if (x.is_zero() || y.is_zero()) return HomComplex(x, y, -1, 1);
  return HomComplex(x, y, y.lo() - x.hi() - 1, y.hi() - x.lo() + 1);
}

std::map<int, std::size_t> hom_cohomology(const Complex& x, const Complex& y) {
  HomComplex h = hom_complex(x, y);
  std::map<int, std::size_t> out;
  for (int n = h.from() + 1; n < h.to(); ++n)
    if (auto d = h.cohomology_dim(n)) out.emplace(n, d);
  return out;
}

std::optional<Homotopy> null_homotopy(const ChainMap& f) {
  const Complex& x = f.source();
  const Complex& y = f.target();
  if (f.is_zero()) return Homotopy{x, y, {}};
  HomComplex h(x, y, -1, 0);
  std::map<int, ModuleMap> comps;
  for (int n : f.degrees()) comps.emplace(n, f.at(n));
  Matrix target = h.coordinates(0, comps);
  auto c = solve(h.delta(-1), target);
  if (!c) return std::nullopt;
  return Homotopy{x, y, h.element(-1, *c)};
}

std::vector<ChainMap> chain_map_space(const Complex& x, const Complex& y) {
  HomComplex h(x, y, 0, 1);
  Matrix k = kernel_basis(h.delta(0));
  std::vector<ChainMap> out;
  for (std::size_t c = 0; c < k.cols(); ++c) out.emplace_back(x, y, h.element(0, k.column(c)));
  return out;
}

}  // namespace findim
