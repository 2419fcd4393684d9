#include "kneserlab/subspace.hpp"

#include <functional>
#include <optional>

#include "kneserlab/error.hpp"

namespace kneserlab {

namespace {

void check_tower(const Subspace& a, const Subspace& b) {
  if (a.tower_ptr() != b.tower_ptr()) throw Error(ErrorCode::TowerMismatch, "subspaces of different towers");
}

}  // namespace

Subspace::Subspace(TowerPtr tower) : tower_(std::move(tower)) {}

Subspace::Subspace(TowerPtr tower, std::vector<Row> rows, std::vector<std::size_t> pivots)
    : tower_(std::move(tower)), rows_(std::move(rows)), pivots_(std::move(pivots)) {}

std::vector<Element> Subspace::basis() const {
  std::vector<Element> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.emplace_back(tower_, r);
  return out;
}

Row Subspace::residue(Row x) const {
  reduce_against(x, rows_, pivots_);
  return x;
}

bool Subspace::contains(const Element& x) const {
  if (x.tower_ptr() != tower_) throw Error(ErrorCode::TowerMismatch, "element of another tower");
  return is_zero_row(residue(x.coords()));
}

bool Subspace::contains(const Subspace& other) const {
  check_tower(*this, other);
  if (other.dim() > dim()) return false;
  for (const auto& r : other.rows_)
    if (!is_zero_row(residue(r))) return false;
  return true;
}

std::size_t Subspace::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL ^ rows_.size();
  std::hash<std::string> hs;
  for (const auto& r : rows_)
    for (const auto& s : r) h = (h ^ hs(s.to_string())) * 0x100000001b3ULL;
  return h;
}

std::vector<std::string> Subspace::serialize() const {
  std::vector<std::string> out;
  for (const auto& r : rows_) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) line += (i ? "," : "") + r[i].to_string();
    out.push_back(std::move(line));
  }
  return out;
}

std::string Subspace::to_string() const {
  std::string out = "span{";
  const auto& labels = tower_->spec().labels;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) out += ", ";
    std::string term;
    for (std::size_t k = 0; k < rows_[i].size(); ++k) {
      const Scalar& c = rows_[i][k];
      if (c.is_zero()) continue;
      if (!term.empty()) term += " + ";
      if (c.is_one()) {
        term += labels[k];
      } else {
        std::string cs = c.to_string();
        if (cs.find_first_of("+-") != std::string::npos) cs = "(" + cs + ")";
        term += labels[k] == "1" ? cs : cs + "*" + labels[k];
      }
    }
    out += term;
  }
  return out + "}";
}

Subspace span_rows(const TowerPtr& tower, std::vector<Row> rows) {
  auto pivots = rref(rows, tower->dim());
  return Subspace(tower, std::move(rows), std::move(pivots));
}

Subspace span(const Tower& tower, const std::vector<Element>& vectors) {
  TowerPtr t = tower.shared_from_this();
  std::vector<Row> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.tower_ptr() != t) throw Error(ErrorCode::TowerMismatch, "span of elements from different towers");
    rows.push_back(v.coords());
  }
  return span_rows(t, std::move(rows));
}

Subspace deserialize_subspace(const Tower& tower, const std::vector<std::string>& rows) {
  std::vector<Element> vs;
  for (const auto& line : rows) {
    std::vector<std::string> coords;
    std::string cur;
    int depth = 0;
    for (char c : line) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0) {
        coords.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    coords.push_back(cur);
    if (coords.size() != tower.dim())
      throw Error(ErrorCode::Parse, "subspace row '" + line + "' does not have " + std::to_string(tower.dim()) +
                                        " coordinates");
    vs.push_back(tower.parse_element(coords));
  }
  return span(tower, vs);
}

Subspace zero_space(const Tower& tower) { return Subspace(tower.shared_from_this()); }

Subspace full_space(const Tower& tower) {
  std::vector<Element> vs;
  for (std::size_t i = 0; i < tower.dim(); ++i) vs.push_back(tower.basis(i));
  return span(tower, vs);
}

Subspace unit_space(const Tower& tower) { return span(tower, {tower.one()}); }

Subspace sum(const Subspace& x, const Subspace& y) {
  check_tower(x, y);
  std::vector<Row> rows = x.rows();
  rows.insert(rows.end(), y.rows().begin(), y.rows().end());
  return span_rows(x.tower_ptr(), std::move(rows));
}

Subspace intersect(const Subspace& x, const Subspace& y) {
  check_tower(x, y);
  if (x.is_zero() || y.is_zero()) return Subspace(x.tower_ptr());
  if (x.contains(y)) return y;
  if (y.contains(x)) return x;
  // Zassenhaus: rows (x | x) and (y | 0); rows with zero left half span X n Y.
  const std::size_t m = x.ambient().dim();
  const Scalar zero = Scalar::zero(x.ambient().base());
  std::vector<Row> rows;
  for (const auto& r : x.rows()) {
    Row z = r;
    z.insert(z.end(), r.begin(), r.end());
    rows.push_back(std::move(z));
  }
  for (const auto& r : y.rows()) {
    Row z = r;
    z.resize(2 * m, zero);
    rows.push_back(std::move(z));
  }
  auto pivots = rref(rows, 2 * m);
  std::vector<Row> inter;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (pivots[i] >= m) inter.emplace_back(rows[i].begin() + static_cast<std::ptrdiff_t>(m), rows[i].end());
  return span_rows(x.tower_ptr(), std::move(inter));
}

Subspace product(const Subspace& x, const Subspace& y) {
  check_tower(x, y);
  const Tower& t = x.ambient();
  std::vector<Row> rows;
  rows.reserve(x.dim() * y.dim());
  const auto xb = x.basis();
  const auto yb = y.basis();
  for (const auto& a : xb)
    for (const auto& b : yb) rows.push_back(t.mul(a, b).coords());
  return span_rows(x.tower_ptr(), std::move(rows));
}

Subspace scale(const Element& a, const Subspace& x) {
  if (a.tower_ptr() != x.tower_ptr()) throw Error(ErrorCode::TowerMismatch, "scaling by an element of another tower");
  std::vector<Row> rows;
  for (const auto& b : x.basis()) rows.push_back((a * b).coords());
  return span_rows(x.tower_ptr(), std::move(rows));
}

std::size_t boundary(const Subspace& s, const Subspace& x, BoundaryMode mode) {
  check_tower(s, x);
  if (s.is_zero()) throw Error(ErrorCode::UnitNotInSpan, "boundary with respect to the zero subspace");
  const Subspace xs = product(x, s);
  if (mode == BoundaryMode::strict) {
    if (!s.contains(s.ambient().one())) throw Error(ErrorCode::UnitNotInSpan, "boundary requires 1 in S");
    return xs.dim() - x.dim();
  }
  return xs.dim() - intersect(x, xs).dim();
}

namespace {

// Kernel of c -> (residue of sum_i c_i cand_i g mod P)_g, mapped back to L.
Subspace transporter_within(const Subspace& p, const std::vector<Row>& cand, const std::vector<Element>& gens) {
  const Tower& t = p.ambient();
  if (cand.empty() || gens.empty()) return span_rows(p.tower_ptr(), cand);
  std::vector<Row> images;
  images.reserve(cand.size());
  for (const auto& r : cand) {
    Row img;
    img.reserve(gens.size() * t.dim());
    const Element a = t.element(r);
    for (const auto& g : gens) {
      const Row res = p.residue(t.mul(a, g).coords());
      img.insert(img.end(), res.begin(), res.end());
    }
    images.push_back(std::move(img));
  }
  const auto combos = left_kernel(images, gens.size() * t.dim(), t.base());
  std::vector<Row> out;
  for (const auto& c : combos) {
    Row v(t.dim(), Scalar::zero(t.base()));
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i].is_zero()) continue;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (!cand[i][j].is_zero()) v[j] += c[i] * cand[i][j];
    }
    out.push_back(std::move(v));
  }
  return span_rows(p.tower_ptr(), std::move(out));
}

}  // namespace

Subspace transporter(const Subspace& p, const std::vector<Element>& gens) {
  const Tower& t = p.ambient();
  std::vector<Element> rest;
  std::optional<Element> g0;
  for (const auto& g : gens) {
    if (g.tower_ptr() != p.tower_ptr()) throw Error(ErrorCode::TowerMismatch, "generator of another tower");
    if (g.is_zero()) continue;
    if (!g0 || (g == t.one() && !(*g0 == t.one()))) {
      if (g0) rest.push_back(*g0);
      g0 = g;
    } else {
      rest.push_back(g);
    }
  }
  if (!g0) return full_space(t);
  // x g0 in P forces x in P g0^{-1}
  if (*g0 == t.one()) return transporter_within(p, p.rows(), rest);
  return transporter_within(p, scale(t.inverse(*g0), p).rows(), rest);
}

Subspace transporter_in(const Subspace& p, const Subspace& domain, const std::vector<Element>& gens) {
  if (domain.tower_ptr() != p.tower_ptr()) throw Error(ErrorCode::TowerMismatch, "domain of another tower");
  for (const auto& g : gens)
    if (g.tower_ptr() != p.tower_ptr()) throw Error(ErrorCode::TowerMismatch, "generator of another tower");
  return transporter_within(p, domain.rows(), gens);
}

Subspace generated_subfield(const Subspace& x) {
  const Tower& t = x.ambient();
  Subspace cur = sum(unit_space(t), x);
  while (true) {
    Subspace next = product(cur, cur);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

bool is_subfield(const Subspace& x) { return x.contains(x.ambient().one()) && product(x, x) == x; }

}  // namespace kneserlab

namespace kneserlab {

Subspace SubTower::lift(const Subspace& y) const {
  const Tower& big = field.ambient();
  std::vector<Row> rows;
  for (const auto& r : y.rows()) {
    Row v(big.dim(), Scalar::zero(big.base()));
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (r[k].is_zero()) continue;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (!field.rows()[k][j].is_zero()) v[j] += r[k] * field.rows()[k][j];
    }
    rows.push_back(std::move(v));
  }
  return span_rows(field.tower_ptr(), std::move(rows));
}

Subspace SubTower::push(const Subspace& x) const {
  // coordinates in the RREF basis of E are the entries at its pivot columns
  std::vector<Row> rows;
  for (const auto& r : x.rows()) {
    if (!is_zero_row(field.residue(r))) throw Error(ErrorCode::TowerMismatch, "subspace not contained in the subfield");
    Row v;
    for (auto p : field.pivots()) v.push_back(r[p]);
    rows.push_back(std::move(v));
  }
  return span_rows(tower, std::move(rows));
}

SubTower restrict_to_subfield(const Subspace& field) {
  if (!is_subfield(field)) throw Error(ErrorCode::TowerInvariant, "restriction target is not a subfield");
  const Tower& big = field.ambient();
  const auto basis = field.basis();
  const std::size_t d = basis.size();
  TowerSpec spec;
  spec.base = big.spec().base;
  spec.dim = d;
  spec.tensor.assign(d * d * d, Scalar::zero(big.base()));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Element p = basis[i] * basis[j];
      for (std::size_t k = 0; k < d; ++k) spec.c(i, j, k) = p[field.pivots()[k]];
    }
  for (const auto& b : basis) {
    std::string label = span(big, {b}).to_string();
    spec.labels.push_back(label.substr(5, label.size() - 6));
  }
  spec.name = "subfield of " + big.spec().name;
  return SubTower{Tower::create(std::move(spec)), field};
}

Element random_element(const Tower& tower, std::mt19937_64& rng, unsigned max_degree) {
  std::vector<Scalar> c;
  c.reserve(tower.dim());
  for (std::size_t i = 0; i < tower.dim(); ++i) c.push_back(random_scalar(tower.base(), rng, max_degree));
  return tower.element(std::move(c));
}

}  // namespace kneserlab
