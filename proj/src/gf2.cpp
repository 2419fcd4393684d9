#include "kneserlab/gf2.hpp"

#include <algorithm>
#include <bit>

#include "kneserlab/enumerate.hpp"
#include "kneserlab/error.hpp"
#include "kneserlab/subspace.hpp"

namespace kneserlab::gf2 {

namespace {

inline Mask lowbit(Mask v) { return v & (~v + 1); }

inline int pivot_of(Mask v) { return std::countr_zero(v); }

void check_same(const Space& a, const Space& b) {
  if (&a.ambient() != &b.ambient()) throw Error(ErrorCode::TowerMismatch, "subspaces of different algebras");
}

// Adds v to an RREF row list, keeping it canonical.
void insert_row(std::vector<Mask>& rows, Mask v) {
  for (Mask r : rows)
    if (v & lowbit(r)) v ^= r;
  if (!v) return;
  const Mask p = lowbit(v);
  for (Mask& r : rows)
    if (r & p) r ^= v;
  auto pos = std::lower_bound(rows.begin(), rows.end(), v, [](Mask a, Mask b) { return lowbit(a) < lowbit(b); });
  rows.insert(pos, v);
}

}  // namespace

Algebra::Algebra(const Tower& tower) : m_(tower.dim()) {
  if (tower.base().kind() != FieldKind::prime || tower.base().characteristic() != 2)
    throw Error(ErrorCode::Unsupported, "the bit-packed engine needs base field GF(2)");
  if (m_ > kMaxDim) throw Error(ErrorCode::DimensionOverflow, "bit-packed engine supports dimension <= 32");
  products_.assign(m_ * m_, 0);
  for (std::size_t i = 0; i < m_; ++i)
    for (std::size_t j = 0; j < m_; ++j)
      for (std::size_t k = 0; k < m_; ++k)
        if (!tower.spec().c(i, j, k).is_zero()) products_[i * m_ + j] |= Mask{1} << k;
  labels_ = tower.spec().labels;
  build_table();
}

Algebra::Algebra(std::size_t m, std::vector<Mask> products, std::vector<std::string> labels)
    : m_(m), products_(std::move(products)), labels_(std::move(labels)) {
  if (m_ == 0 || m_ > kMaxDim) throw Error(ErrorCode::DimensionOverflow, "bit-packed engine supports dimension 1..32");
  if (products_.size() != m_ * m_) throw Error(ErrorCode::TowerInvariant, "product table must have m^2 entries");
  if (labels_.size() != m_) {
    labels_.clear();
    for (std::size_t i = 0; i < m_; ++i) labels_.push_back("e" + std::to_string(i + 1));
  }
  build_table();
}

void Algebra::build_table() {
  if (m_ > 8) return;
  const std::size_t n = std::size_t{1} << m_;
  std::vector<std::uint16_t> table(n * n, 0);
  // products of a with single basis vectors, then extend linearly in b
  for (std::size_t a = 0; a < n; ++a) {
    std::uint16_t* row = &table[a * n];
    for (std::size_t j = 0; j < m_; ++j) {
      Mask v = 0;
      for (Mask bits = a; bits; bits &= bits - 1) v ^= products_[pivot_of(bits) * m_ + j];
      row[std::size_t{1} << j] = static_cast<std::uint16_t>(v);
    }
    for (std::size_t b = 1; b < n; ++b) {
      const std::size_t lb = b & (~b + 1);
      if (lb != b) row[b] = row[lb] ^ row[b ^ lb];
    }
  }
  table_ = std::move(table);
}

Element Algebra::mul(Element a, Element b) const {
  if (!table_.empty()) return {table_[(a.bits << m_) | b.bits]};
  Mask r = 0;
  for (Mask x = a.bits; x; x &= x - 1) {
    const std::size_t i = static_cast<std::size_t>(pivot_of(x));
    for (Mask y = b.bits; y; y &= y - 1) r ^= products_[i * m_ + static_cast<std::size_t>(pivot_of(y))];
  }
  return {r};
}

Element Algebra::inverse(Element a) const {
  if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero element");
  // solve x * a = 1 by elimination over the images e_i * a, tracking combinations
  std::vector<std::pair<Mask, Mask>> rows;  // (image, combination)
  for (std::size_t i = 0; i < m_; ++i) {
    Mask img = mul(basis(i), a).bits, comb = Mask{1} << i;
    for (const auto& [r, c] : rows)
      if (img & lowbit(r)) {
        img ^= r;
        comb ^= c;
      }
    if (img) rows.push_back({img, comb});
  }
  Mask target = 1, comb = 0;
  for (const auto& [r, c] : rows)
    if (target & lowbit(r)) {
      target ^= r;
      comb ^= c;
    }
  if (target) throw Error(ErrorCode::SingularMultiplicationMap, "multiplication by " + format(a) + " is singular");
  return {comb};
}

std::string Algebra::format(Element a) const {
  if (a.is_zero()) return "0";
  std::string out;
  for (Mask x = a.bits; x; x &= x - 1) out += (out.empty() ? "" : "+") + labels_[pivot_of(x)];
  return out;
}

std::vector<Element> Space::basis() const {
  std::vector<Element> out;
  out.reserve(rows_.size());
  for (Mask r : rows_) out.push_back({r});
  return out;
}

bool Space::contains(const Space& other) const {
  check_same(*this, other);
  if (other.dim() > dim()) return false;
  for (Mask r : other.rows_)
    if (residue(r)) return false;
  return true;
}

std::size_t Space::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL ^ rows_.size();
  for (Mask r : rows_) h = (h ^ r) * 0x100000001b3ULL;
  return h;
}

std::vector<std::string> Space::serialize() const {
  std::vector<std::string> out;
  for (Mask r : rows_) {
    std::string line;
    for (std::size_t i = 0; i < algebra_->dim(); ++i) line += std::string(i ? "," : "") + ((r >> i) & 1 ? "1" : "0");
    out.push_back(std::move(line));
  }
  return out;
}

std::string Space::to_string() const {
  std::string out = "span{";
  for (std::size_t i = 0; i < rows_.size(); ++i) out += (i ? ", " : "") + algebra_->format({rows_[i]});
  return out + "}";
}

DualityContext::DualityContext(const Algebra& algebra, Mask sigma) : algebra_(&algebra), sigma_(sigma) {
  const std::size_t m = algebra.dim();
  if ((sigma & ~algebra.full_mask()) != 0) throw Error(ErrorCode::DegenerateForm, "sigma has bits beyond the dimension");
  if (!sigma) throw Error(ErrorCode::DegenerateForm, "sigma is the zero form");
  gram_.assign(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (std::popcount(algebra.mul(algebra.basis(i), algebra.basis(j)).bits & sigma) & 1) gram_[i] |= Mask{1} << j;
  if (span_masks(algebra, gram_).dim() != m) throw Error(ErrorCode::DegenerateForm, "the form sigma(xy) is degenerate");
}

bool DualityContext::pairing(Element x, Element y) const {
  return std::popcount(algebra_->mul(x, y).bits & sigma_) & 1;
}

Space span_masks(const Algebra& algebra, const std::vector<Mask>& vectors) {
  std::vector<Mask> rows;
  rows.reserve(std::min(vectors.size(), algebra.dim()));
  for (Mask v : vectors) {
    insert_row(rows, v);
    if (rows.size() == algebra.dim()) break;
  }
  return Space(algebra, std::move(rows));
}

Space span(const Algebra& algebra, const std::vector<Element>& vectors) {
  std::vector<Mask> rows;
  for (const auto& v : vectors) {
    insert_row(rows, v.bits);
    if (rows.size() == algebra.dim()) break;
  }
  return Space(algebra, std::move(rows));
}

Space zero_space(const Algebra& algebra) { return Space(algebra); }

Space full_space(const Algebra& algebra) {
  std::vector<Mask> rows;
  for (std::size_t i = 0; i < algebra.dim(); ++i) rows.push_back(Mask{1} << i);
  return Space(algebra, std::move(rows));
}

Space unit_space(const Algebra& algebra) { return Space(algebra, {1}); }

Space sum(const Space& x, const Space& y) {
  check_same(x, y);
  std::vector<Mask> rows = x.rows();
  for (Mask r : y.rows()) {
    if (rows.size() == x.ambient().dim()) break;
    insert_row(rows, r);
  }
  return Space(x.ambient(), std::move(rows));
}

Space intersect(const Space& x, const Space& y) {
  check_same(x, y);
  if (x.is_zero() || y.is_zero()) return Space(x.ambient());
  if (x.contains(y)) return y;
  if (y.contains(x)) return x;
  // Zassenhaus on 2m bits: low half (v | v) for X, (w | 0) for Y
  const std::size_t m = x.ambient().dim();
  std::vector<Mask> rows;
  for (Mask r : x.rows()) insert_row(rows, r | (r << m));
  for (Mask r : y.rows()) insert_row(rows, r);
  std::vector<Mask> inter;
  for (Mask r : rows)
    if (static_cast<std::size_t>(pivot_of(r)) >= m) insert_row(inter, r >> m);
  return Space(x.ambient(), std::move(inter));
}

Space product(const Space& x, const Space& y) {
  check_same(x, y);
  const Algebra& a = x.ambient();
  std::vector<Mask> rows;
  for (Mask u : x.rows())
    for (Mask v : y.rows()) {
      insert_row(rows, a.mul({u}, {v}).bits);
      if (rows.size() == a.dim()) return Space(a, std::move(rows));
    }
  return Space(a, std::move(rows));
}

Space scale(Element e, const Space& x) {
  std::vector<Mask> rows;
  for (Mask u : x.rows()) insert_row(rows, x.ambient().mul(e, {u}).bits);
  return Space(x.ambient(), std::move(rows));
}

std::size_t boundary(const Space& s, const Space& x) {
  check_same(s, x);
  if (!s.contains(s.ambient().one())) throw Error(ErrorCode::UnitNotInSpan, "boundary requires 1 in S");
  return product(x, s).dim() - x.dim();
}

Space transporter(const Space& p, const std::vector<Element>& gens) {
  return transporter_in(p, full_space(p.ambient()), gens);
}

Space transporter_in(const Space& p, const Space& domain, const std::vector<Element>& gens) {
  const Algebra& a = p.ambient();
  if (&domain.ambient() != &a) throw Error(ErrorCode::TowerMismatch, "domain of another algebra");
  std::vector<Mask> k = domain.rows();
  for (const auto& g : gens) {
    if (k.empty()) break;
    // kernel of x -> x*g mod P restricted to span(k)
    std::vector<std::pair<Mask, Mask>> rows;  // (reduced image, combination of k)
    std::vector<Mask> next;
    for (std::size_t i = 0; i < k.size(); ++i) {
      Mask img = p.residue(a.mul({k[i]}, g).bits);
      Mask comb = Mask{1} << i;
      for (const auto& [r, c] : rows)
        if (img & lowbit(r)) {
          img ^= r;
          comb ^= c;
        }
      if (img) {
        rows.push_back({img, comb});
      } else {
        Mask v = 0;
        for (Mask c = comb; c; c &= c - 1) v ^= k[static_cast<std::size_t>(pivot_of(c))];
        next.push_back(v);
      }
    }
    k = span_masks(a, next).rows();
  }
  return Space(a, std::move(k));
}

Space generated_subfield(const Space& x) {
  Space cur = sum(unit_space(x.ambient()), x);
  while (true) {
    Space next = product(cur, cur);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

bool is_subfield(const Space& x) { return x.contains(x.ambient().one()) && product(x, x) == x; }

Space saturate(const Space& s, const Space& x) {
  if (!s.contains(s.ambient().one())) throw Error(ErrorCode::UnitNotInSpan, "S must contain 1");
  const Space xs = product(x, s);
  if (xs.is_full()) return xs;
  return transporter(xs, s.basis());
}

bool is_saturated(const Space& s, const Space& x) { return saturate(s, x) == x; }

Space perp(const DualityContext& ctx, const Space& x) {
  const Algebra& a = x.ambient();
  if (&ctx.ambient() != &a) throw Error(ErrorCode::TowerMismatch, "duality context of another algebra");
  std::vector<Mask> funcs;
  for (Mask r : x.rows()) {
    Mask f = 0;
    for (Mask b = r; b; b &= b - 1) f ^= ctx.gram()[static_cast<std::size_t>(pivot_of(b))];
    funcs.push_back(f);
  }
  const Space fs = span_masks(a, funcs);
  Mask pivots = 0;
  for (Mask r : fs.rows()) pivots |= lowbit(r);
  std::vector<Mask> null;
  for (std::size_t c = 0; c < a.dim(); ++c) {
    const Mask bit = Mask{1} << c;
    if (pivots & bit) continue;
    Mask v = bit;
    for (Mask r : fs.rows())
      if (r & bit) v |= lowbit(r);
    null.push_back(v);
  }
  return span_masks(a, null);
}

Space dual(const DualityContext& ctx, const Space& s, const Space& x) {
  if (!s.contains(s.ambient().one())) throw Error(ErrorCode::UnitNotInSpan, "S must contain 1");
  return perp(ctx, product(x, s));
}

Space stabilizer(const Space& x) {
  if (x.is_zero()) return full_space(x.ambient());
  return transporter(x, x.basis());
}

Space from_generic(const Algebra& algebra, const Subspace& x) {
  if (x.ambient().dim() != algebra.dim()) throw Error(ErrorCode::TowerMismatch, "dimension mismatch");
  std::vector<Mask> rows;
  for (const auto& r : x.rows()) {
    Mask v = 0;
    for (std::size_t i = 0; i < r.size(); ++i)
      if (!r[i].is_zero()) v |= Mask{1} << i;
    rows.push_back(v);
  }
  return span_masks(algebra, rows);
}

Subspace to_generic(const TowerPtr& tower, const Space& x) {
  const FieldDescriptor& f = tower->base();
  std::vector<Row> rows;
  for (Mask r : x.rows()) {
    Row row(tower->dim(), Scalar::zero(f));
    for (std::size_t i = 0; i < row.size(); ++i)
      if ((r >> i) & 1) row[i] = Scalar::one(f);
    rows.push_back(std::move(row));
  }
  return span_rows(tower, std::move(rows));
}

std::vector<Space> enumerate_subspaces(const Algebra& algebra, std::uint64_t cap, int dim_filter) {
  const std::size_t m = algebra.dim();
  const auto total = dim_filter < 0 ? count_subspaces(2, m) : gaussian_binomial(2, m, static_cast<std::size_t>(dim_filter));
  if (!total || *total > cap)
    throw Error(ErrorCode::EnumerationTooLarge, "subspace count exceeds the enumeration cap " + std::to_string(cap));
  std::vector<Space> out;
  out.reserve(static_cast<std::size_t>(*total));
  for (std::size_t r = 0; r <= m; ++r) {
    if (dim_filter >= 0 && r != static_cast<std::size_t>(dim_filter)) continue;
    for_each_pivot_set(m, r, [&](const std::vector<std::size_t>& piv) {
      // free slots: (row, column) with column > pivot of row and not a pivot column
      std::vector<std::pair<std::size_t, std::size_t>> slots;
      Mask pivmask = 0;
      for (auto p : piv) pivmask |= Mask{1} << p;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t c = piv[i] + 1; c < m; ++c)
          if (!((pivmask >> c) & 1)) slots.push_back({i, c});
      const std::uint64_t combos = std::uint64_t{1} << slots.size();
      for (std::uint64_t v = 0; v < combos; ++v) {
        std::vector<Mask> rows(r);
        for (std::size_t i = 0; i < r; ++i) rows[i] = Mask{1} << piv[i];
        for (std::size_t s = 0; s < slots.size(); ++s)
          if ((v >> s) & 1) rows[slots[s].first] |= Mask{1} << slots[s].second;
        out.emplace_back(algebra, std::move(rows));
      }
    });
  }
  return out;
}

Element random_element(const Algebra& algebra, std::mt19937_64& rng) { return {rng() & algebra.full_mask()}; }

Space SubAlgebra::lift(const Space& y) const {
  std::vector<Mask> vs;
  for (Mask r : y.rows()) {
    Mask v = 0;
    for (Mask b = r; b; b &= b - 1) v ^= field.rows()[static_cast<std::size_t>(pivot_of(b))];
    vs.push_back(v);
  }
  return span_masks(field.ambient(), vs);
}

Space SubAlgebra::push(const Space& x) const {
  // coordinates in the RREF basis of E are the entries at the pivot columns
  std::vector<Mask> vs;
  for (Mask r : x.rows()) {
    if (field.residue(r)) throw Error(ErrorCode::TowerMismatch, "subspace not contained in the subfield");
    Mask v = 0;
    for (std::size_t k = 0; k < field.rows().size(); ++k)
      if (r & lowbit(field.rows()[k])) v |= Mask{1} << k;
    vs.push_back(v);
  }
  return span_masks(*algebra, vs);
}

SubAlgebra restrict_to_subfield(const Space& field) {
  if (!is_subfield(field)) throw Error(ErrorCode::TowerInvariant, "restriction target is not a subfield");
  const Algebra& a = field.ambient();
  const auto& b = field.rows();
  const std::size_t d = b.size();
  std::vector<Mask> products(d * d, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Mask p = a.mul({b[i]}, {b[j]}).bits;
      for (std::size_t k = 0; k < d; ++k)
        if (p & lowbit(b[k])) products[i * d + j] |= Mask{1} << k;
    }
  std::vector<std::string> labels;
  for (Mask r : b) labels.push_back(a.format({r}));
  SubAlgebra out{std::make_shared<Algebra>(d, std::move(products), std::move(labels)), field};
  return out;
}

}  // namespace kneserlab::gf2
