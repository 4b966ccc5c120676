#include "findim/algebra.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <tuple>

namespace findim {

Quiver::Quiver(std::size_t vertex_count, std::vector<Arrow> arrows)
    : vertices_(vertex_count), arrows_(std::move(arrows)) {
  if (vertices_ == 0) throw AlgebraError("quiver needs at least one vertex");
  std::set<std::string> ids;
  for (const auto& a : arrows_) {
    if (a.source >= vertices_ || a.target >= vertices_)
      throw AlgebraError("arrow '" + a.id + "' has an endpoint out of range");
    if (!ids.insert(a.id).second) throw AlgebraError("duplicate arrow id '" + a.id + "'");
  }
}

std::size_t Quiver::arrow_index(std::string_view id) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].id == id) return i;
  throw AlgebraError("unknown arrow id '" + std::string(id) + "'");
}

Quiver Quiver::opposite() const {
  std::vector<Arrow> rev;
  for (const auto& a : arrows_) rev.push_back({a.id, a.target, a.source});
  return Quiver(vertices_, std::move(rev));
}

std::vector<Path> paths_of_length(const Quiver& q, std::size_t length) {
  std::vector<Path> current;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) current.push_back({v, v, {}});
  for (std::size_t step = 0; step < length; ++step) {
    std::vector<Path> next;
    for (const auto& p : current)
      for (std::size_t a = 0; a < q.arrows().size(); ++a)
        if (q.arrow(a).source == p.target) {
          Path ext = p;
          ext.arrows.push_back(a);
          ext.target = q.arrow(a).target;
          next.push_back(std::move(ext));
        }
    current = std::move(next);
  }
  std::sort(current.begin(), current.end(), [](const Path& x, const Path& y) {
    return std::tie(x.source, x.arrows) < std::tie(y.source, y.arrows);
  });
  return current;
}

namespace {

Path make_path(const Quiver& q, std::size_t source, const std::vector<std::size_t>& arrows) {
  Path p{source, source, arrows};
  for (auto a : arrows) {
    if (q.arrow(a).source != p.target) throw AlgebraError("relation path is not composable");
    p.target = q.arrow(a).target;
  }
  return p;
}

// Columns are ordered largest path first so that row reduction expresses
// large paths through smaller ones; the surviving columns are the basis.
bool column_before(const Path& x, const Path& y) {
  if (x.length() != y.length()) return x.length() > y.length();
  return std::tie(x.source, x.arrows) > std::tie(y.source, y.arrows);
}

struct Truncated {
  std::vector<Path> columns;
  std::map<Path, std::size_t> index;
  RrefResult rref;
};

// Row-reduces the span of all u*r*w with every term longer than `keep`
// dropped, inside the space of paths of length <= keep.
Truncated reduce_ideal(const Quiver& q, const std::vector<Relation>& rels,
                       const std::vector<std::vector<Path>>& by_length, std::size_t keep,
                       const Field& field) {
  Truncated t;
  for (std::size_t len = 0; len <= keep; ++len)
    t.columns.insert(t.columns.end(), by_length[len].begin(), by_length[len].end());
  std::sort(t.columns.begin(), t.columns.end(), column_before);
  for (std::size_t c = 0; c < t.columns.size(); ++c) t.index[t.columns[c]] = c;

  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
  for (const auto& rel : rels) {
    std::size_t min_len = rel.terms.front().arrows.size();
    for (const auto& term : rel.terms) min_len = std::min(min_len, term.arrows.size());
    if (min_len > keep) continue;
    const Path shape = make_path(q, q.arrow(rel.terms.front().arrows.front()).source,
                                 rel.terms.front().arrows);
    const std::size_t slack = keep - min_len;
    for (std::size_t lu = 0; lu <= slack; ++lu)
      for (const auto& u : by_length[lu]) {
        if (u.target != shape.source) continue;
        for (std::size_t lw = 0; lu + lw <= slack; ++lw)
          for (const auto& w : by_length[lw]) {
            if (w.source != shape.target) continue;
            std::vector<std::pair<std::size_t, Rational>> row;
            for (const auto& term : rel.terms) {
              if (lu + lw + term.arrows.size() > keep) continue;
              Path p{u.source, w.target, u.arrows};
              p.arrows.insert(p.arrows.end(), term.arrows.begin(), term.arrows.end());
              p.arrows.insert(p.arrows.end(), w.arrows.begin(), w.arrows.end());
              row.emplace_back(t.index.at(p), term.coeff);
            }
            if (!row.empty()) rows.push_back(std::move(row));
          }
      }
  }
  Matrix g(field, rows.size(), t.columns.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, x] : rows[r]) g.set(r, c, g.at(r, c) + x);
  t.rref = rref(g);
  return t;
}

}  // namespace

Algebra::Algebra(Quiver quiver, std::vector<Relation> relations, Field field, std::size_t max_len,
                 std::string name)
    : quiver_(std::move(quiver)),
      relations_(std::move(relations)),
      field_(field),
      max_len_(max_len),
      name_(std::move(name)) {}

AlgebraPtr Algebra::build(Quiver quiver, std::vector<Relation> relations, Field field,
                          std::size_t max_len, std::string name) {
  for (auto& rel : relations) {
    if (rel.terms.empty()) throw AlgebraError("empty relation");
    std::optional<Path> shape;
    for (auto& term : rel.terms) {
      if (term.arrows.size() < 2)
        throw AlgebraError("relation term of length < 2: relations must lie in the square of the arrow ideal");
      for (auto a : term.arrows)
        if (a >= quiver.arrows().size()) throw AlgebraError("relation uses an unknown arrow");
      Path p = make_path(quiver, quiver.arrow(term.arrows.front()).source, term.arrows);
      if (shape && (shape->source != p.source || shape->target != p.target))
        throw AlgebraError("relation paths are not parallel");
      shape = p;
      term.coeff = field.normalize(term.coeff);
    }
  }
  std::shared_ptr<Algebra> a(
      new Algebra(std::move(quiver), std::move(relations), field, max_len, std::move(name)));
  a->compute_basis();
  return a;
}

void Algebra::compute_basis() {
  const auto& q = quiver_;
  std::vector<std::vector<Path>> by_length;
  by_length.push_back(paths_of_length(q, 0));
  for (std::size_t n = 1; n <= max_len_; ++n) {
    by_length.push_back(paths_of_length(q, n));
    // Is every path of length n in I + (paths of length > n)?
    auto t = reduce_ideal(q, relations_, by_length, n, field_);
    const auto& r = t.rref;
    std::map<std::size_t, std::size_t> pivot_row;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) pivot_row[r.pivots[i]] = i;
    bool all_in = true;
    for (const auto& p : by_length[n]) {
      auto c = t.index.at(p);
      auto it = pivot_row.find(c);
      if (it == pivot_row.end()) {
        all_in = false;
        break;
      }
      for (std::size_t j = 0; j < t.columns.size() && all_in; ++j)
        if (j != c && r.reduced.at(it->second, j) != 0) all_in = false;
      if (!all_in) break;
    }
    if (!all_in) continue;

    loewy_ = n;
    auto low = reduce_ideal(q, relations_, by_length, n - 1, field_);
    // Basis = non-pivot columns; order them canonically.
    std::set<std::size_t> pivots(low.rref.pivots.begin(), low.rref.pivots.end());
    std::vector<Path> basis;
    for (std::size_t c = 0; c < low.columns.size(); ++c)
      if (!pivots.count(c)) basis.push_back(low.columns[c]);
    std::sort(basis.begin(), basis.end(), [](const Path& x, const Path& y) {
      return std::make_tuple(x.source, x.target, x.length(), x.arrows) <
             std::make_tuple(y.source, y.target, y.length(), y.arrows);
    });
    basis_ = basis;
    std::map<Path, std::size_t> basis_index;
    for (std::size_t i = 0; i < basis_.size(); ++i) basis_index[basis_[i]] = i;

    const std::size_t v = q.vertex_count();
    between_.assign(v, std::vector<std::vector<std::size_t>>(v));
    for (std::size_t i = 0; i < basis_.size(); ++i)
      between_[basis_[i].source][basis_[i].target].push_back(i);

    std::map<std::size_t, std::size_t> row_of;
    for (std::size_t i = 0; i < low.rref.pivots.size(); ++i) row_of[low.rref.pivots[i]] = i;
    for (std::size_t c = 0; c < low.columns.size(); ++c) {
      const Path& p = low.columns[c];
      std::vector<std::pair<std::size_t, Rational>> nf;
      if (auto it = row_of.find(c); it == row_of.end()) {
        nf.emplace_back(basis_index.at(p), Rational(1));
      } else {
        for (std::size_t j = 0; j < low.columns.size(); ++j) {
          if (j == c || pivots.count(j)) continue;
          Rational x = low.rref.reduced.at(it->second, j);
          if (x != 0) nf.emplace_back(basis_index.at(low.columns[j]), field_.normalize(-x));
        }
      }
      normal_form_[p] = std::move(nf);
    }

    proj_arrows_.assign(v, {});
    for (std::size_t i = 0; i < v; ++i) {
      for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const auto& arr = q.arrow(a);
        const auto& from = between_[i][arr.source];
        const auto& to = between_[i][arr.target];
        Matrix m(field_, to.size(), from.size());
        for (std::size_t col = 0; col < from.size(); ++col) {
          Path ext = basis_[from[col]];
          ext.arrows.push_back(a);
          ext.target = arr.target;
          Matrix coords = reduce(ext);
          for (std::size_t row = 0; row < to.size(); ++row) m.set(row, col, coords.at(to[row], 0));
        }
        proj_arrows_[i].push_back(std::move(m));
      }
    }
    return;
  }
  throw AlgebraError("not finite-dimensional within max_len = " + std::to_string(max_len_));
}

const std::vector<std::size_t>& Algebra::basis_between(std::size_t i, std::size_t j) const {
  return between_.at(i).at(j);
}

Matrix Algebra::reduce(const Path& path) const {
  Matrix out(field_, dim(), 1);
  if (path.length() >= loewy_) return out;
  auto it = normal_form_.find(path);
  if (it == normal_form_.end()) throw AlgebraError("reduce: path is not composable");
  for (const auto& [idx, x] : it->second) out.set(idx, 0, x);
  return out;
}

Matrix Algebra::product(std::size_t i, std::size_t j) const {
  const Path& x = basis_.at(i);
  const Path& y = basis_.at(j);
  if (x.target != y.source) return Matrix(field_, dim(), 1);
  Path p{x.source, y.target, x.arrows};
  p.arrows.insert(p.arrows.end(), y.arrows.begin(), y.arrows.end());
  return reduce(p);
}

std::vector<std::size_t> Algebra::projective_dims(std::size_t i) const {
  std::vector<std::size_t> dims;
  for (std::size_t j = 0; j < vertex_count(); ++j) dims.push_back(between_.at(i).at(j).size());
  return dims;
}

AlgebraPtr Algebra::opposite() const {
  std::vector<Relation> rels = relations_;
  for (auto& rel : rels)
    for (auto& term : rel.terms) std::reverse(term.arrows.begin(), term.arrows.end());
  return build(quiver_.opposite(), std::move(rels), field_, max_len_,
               name_.empty() ? std::string() : name_ + "^op");
}

bool Algebra::same_presentation(const Algebra& other) const {
  if (!(field_ == other.field_) || vertex_count() != other.vertex_count() ||
      arrow_count() != other.arrow_count() || relations_.size() != other.relations_.size())
    return false;
  for (std::size_t a = 0; a < arrow_count(); ++a) {
    const auto& x = quiver_.arrow(a);
    const auto& y = other.quiver_.arrow(a);
    if (x.id != y.id || x.source != y.source || x.target != y.target) return false;
  }
  for (std::size_t r = 0; r < relations_.size(); ++r) {
    const auto& x = relations_[r].terms;
    const auto& y = other.relations_[r].terms;
    if (x.size() != y.size()) return false;
    for (std::size_t t = 0; t < x.size(); ++t)
      if (x[t].coeff != y[t].coeff || x[t].arrows != y[t].arrows) return false;
  }
  return true;
}

}  // namespace findim
