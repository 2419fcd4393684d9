#include "kneserlab/linalg.hpp"

#include <algorithm>
#include <memory>
#include <random>
#include <unordered_map>
#include <variant>

namespace kneserlab {

bool is_zero_row(const Row& r) {
  return std::all_of(r.begin(), r.end(), [](const Scalar& s) { return s.is_zero(); });
}

namespace {

using PolyRow = std::vector<MPoly>;

std::size_t poly_weight(const MPoly& a) {
  return a.terms.size() * (a.is_zero() ? 1 : a.leading().mono.total_degree() + 1);
}

void make_primitive(const MPolyRing& R, PolyRow& row) {
  MPoly g;
  for (const auto& e : row) {
    if (e.is_zero()) continue;
    g = R.gcd(g, e);
    if (g.is_constant()) break;
  }
  if (g.is_zero()) return;
  if (g.is_constant()) {
    // scale so the leading entry is monic
    for (const auto& e : row)
      if (!e.is_zero()) {
        const std::uint32_t inv = R.field().inv(e.leading().coef);
        if (inv != 1)
          for (auto& x : row) x = R.scale(x, inv);
        return;
      }
    return;
  }
  for (auto& e : row)
    if (!e.is_zero()) e = R.divexact(e, g);
}

// Evaluation of F(t_1..t_k) at a fixed point of a large finite field E of
// the same characteristic.
class Evaluator {
 public:
  explicit Evaluator(const FieldDescriptor& f) {
    const std::uint32_t p = f.characteristic();
    if (p >= (1u << 24)) {
      e_ = FieldDescriptor::prime(p).get();
    } else {
      unsigned k = 1;
      for (std::uint64_t q = p; q < (1u << 24); q *= p) ++k;
      e_ = FieldDescriptor::poly_quotient(p, upoly::default_irreducible(PrimeField(p), k)).get();
    }
    std::mt19937_64 rng(0x6b6e6573);
    for (std::size_t v = 0; v < f.variables().size(); ++v)
      powers_.push_back({Scalar::one(*e_), random_scalar(*e_, rng)});
  }

  const FieldDescriptor& field() const { return *e_; }

  Scalar eval(const MPoly& a) {
    Scalar r = Scalar::zero(*e_);
    for (const auto& t : a.terms) {
      Scalar x = Scalar::from_int(*e_, t.coef);
      for (std::size_t v = 0; v < powers_.size(); ++v) {
        const unsigned d = t.mono.exp(static_cast<unsigned>(v));
        if (d) x = x * power(v, d);
      }
      r += x;
    }
    return r;
  }

 private:
  const Scalar& power(std::size_t v, unsigned d) {
    auto& pw = powers_[v];
    while (pw.size() <= d) pw.push_back(pw.back() * pw[1]);
    return pw[d];
  }

  const FieldDescriptor* e_;
  std::vector<std::vector<Scalar>> powers_;
};

// Rank can only drop under specialization, so full rank at one point
// certifies full rank.
bool full_rank_at_point(const std::vector<Row>& rows, std::size_t ncols) {
  if (rows.size() < ncols) return false;
  const FieldDescriptor& f = rows.front().front().field();
  thread_local std::unordered_map<const FieldDescriptor*, std::unique_ptr<Evaluator>> cache;
  auto& ev = cache[&f];
  if (!ev) ev = std::make_unique<Evaluator>(f);
  std::vector<Row> image;
  image.reserve(rows.size());
  for (const auto& row : rows) {
    Row r;
    r.reserve(ncols);
    for (std::size_t c = 0; c < ncols; ++c) {
      const auto& x = std::get<RationalFunction>(row[c].payload());
      if (x.num.is_zero()) {
        r.push_back(Scalar::zero(ev->field()));
        continue;
      }
      const Scalar den = ev->eval(x.den);
      if (den.is_zero()) return false;
      r.push_back(ev->eval(x.num) / den);
    }
    image.push_back(std::move(r));
  }
  return rref(image, ncols).size() == ncols;
}

// Gauss-Jordan over the polynomial ring: rows are cleared of denominators and
// kept primitive, and the rational RREF is recovered by one division per entry.
std::vector<std::size_t> rref_rational(std::vector<Row>& rows, std::size_t ncols) {
  const FieldDescriptor& f = rows.front().front().field();
  if (full_rank_at_point(rows, ncols)) {
    rows.assign(ncols, Row(ncols, Scalar::zero(f)));
    std::vector<std::size_t> pivots(ncols);
    for (std::size_t i = 0; i < ncols; ++i) {
      rows[i][i] = Scalar::one(f);
      pivots[i] = i;
    }
    return pivots;
  }
  const MPolyRing& R = f.ring();
  std::vector<PolyRow> P;
  P.reserve(rows.size());
  for (const auto& row : rows) {
    MPoly l = R.constant(1);
    for (std::size_t c = 0; c < ncols; ++c) {
      const auto& x = std::get<RationalFunction>(row[c].payload());
      if (x.num.is_zero() || x.den.is_constant()) continue;
      l = R.mul(l, R.divexact(x.den, R.gcd(l, x.den)));
    }
    PolyRow pr(ncols);
    bool nonzero = false;
    for (std::size_t c = 0; c < ncols; ++c) {
      const auto& x = std::get<RationalFunction>(row[c].payload());
      if (x.num.is_zero()) continue;
      nonzero = true;
      pr[c] = x.den.is_constant() ? R.scale(R.mul(x.num, l), R.field().inv(x.den.terms[0].coef))
                                  : R.mul(x.num, R.divexact(l, x.den));
    }
    if (!nonzero) continue;
    make_primitive(R, pr);
    P.push_back(std::move(pr));
  }
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < P.size(); ++col) {
    std::size_t best = P.size();
    std::size_t best_weight = 0;
    for (std::size_t r = rank; r < P.size(); ++r) {
      if (P[r][col].is_zero()) continue;
      const std::size_t w = poly_weight(P[r][col]);
      if (best == P.size() || w < best_weight) {
        best = r;
        best_weight = w;
      }
    }
    if (best == P.size()) continue;
    std::swap(P[rank], P[best]);
    const PolyRow& piv = P[rank];
    for (std::size_t r = 0; r < P.size(); ++r) {
      if (r == rank || P[r][col].is_zero()) continue;
      MPoly a = P[r][col], b = piv[col];
      if (!a.is_constant() && !b.is_constant()) {
        const MPoly g = R.gcd(a, b);
        if (!g.is_constant()) {
          a = R.divexact(a, g);
          b = R.divexact(b, g);
        }
      }
      PolyRow& row = P[r];
      for (std::size_t c = 0; c < ncols; ++c) {
        if (piv[c].is_zero() && row[c].is_zero()) continue;
        row[c] = c == col ? MPoly{} : R.sub(R.mul(b, row[c]), R.mul(a, piv[c]));
      }
      make_primitive(R, row);
    }
    pivots.push_back(col);
    ++rank;
  }
  P.resize(rank);
  rows.assign(rank, Row(ncols, Scalar::zero(f)));
  for (std::size_t i = 0; i < rank; ++i) {
    const MPoly& d = P[i][pivots[i]];
    for (std::size_t c = 0; c < ncols; ++c) {
      if (P[i][c].is_zero()) continue;
      rows[i][c] = c == pivots[i] ? Scalar::one(f) : Scalar::from_payload(f, RationalFunction{P[i][c], d});
    }
  }
  return pivots;
}

}  // namespace

std::vector<std::size_t> rref(std::vector<Row>& rows, std::size_t ncols) {
  if (!rows.empty() && ncols > 0 && rows.front().front().field().kind() == FieldKind::rational_function)
    return rref_rational(rows, ncols);
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    // smallest pivot keeps rational-function entries from swelling
    std::size_t best = rows.size();
    std::size_t best_weight = 0;
    for (std::size_t r = rank; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      const std::size_t w = rows[r][col].weight();
      if (best == rows.size() || w < best_weight) {
        best = r;
        best_weight = w;
        if (w <= 1) break;
      }
    }
    if (best == rows.size()) continue;
    std::swap(rows[rank], rows[best]);
    Row& piv = rows[rank];
    if (!piv[col].is_one()) {
      const Scalar inv = piv[col].inverse();
      for (std::size_t c = col; c < ncols; ++c)
        if (!piv[c].is_zero()) piv[c] = piv[c] * inv;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      const Scalar factor = rows[r][col];
      for (std::size_t c = col; c < ncols; ++c)
        if (!piv[c].is_zero()) rows[r][c] = rows[r][c] - factor * piv[c];
    }
    pivots.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

void reduce_against(Row& v, const std::vector<Row>& rref_rows, const std::vector<std::size_t>& pivots) {
  for (std::size_t i = 0; i < rref_rows.size(); ++i) {
    const std::size_t p = pivots[i];
    if (v[p].is_zero()) continue;
    const Scalar factor = v[p];
    const Row& row = rref_rows[i];
    for (std::size_t c = p; c < v.size(); ++c)
      if (!row[c].is_zero()) v[c] = v[c] - factor * row[c];
  }
}

std::vector<Row> left_kernel(const std::vector<Row>& rows, std::size_t ncols, const FieldDescriptor& f) {
  const std::size_t n = rows.size();
  std::vector<Row> aug;
  aug.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Row r = rows[i];
    r.reserve(ncols + n);
    for (std::size_t j = 0; j < n; ++j) r.push_back(i == j ? Scalar::one(f) : Scalar::zero(f));
    aug.push_back(std::move(r));
  }
  auto pivots = rref(aug, ncols + n);
  std::vector<Row> kernel;
  for (std::size_t i = 0; i < aug.size(); ++i) {
    if (pivots[i] < ncols) continue;
    kernel.emplace_back(aug[i].begin() + static_cast<std::ptrdiff_t>(ncols), aug[i].end());
  }
  return kernel;
}

std::optional<Row> solve_left(const std::vector<Row>& rows, const Row& target, const FieldDescriptor& f) {
  const std::size_t n = rows.size();
  const std::size_t ncols = target.size();
  std::vector<Row> aug;
  for (std::size_t i = 0; i < n; ++i) {
    Row r = rows[i];
    for (std::size_t j = 0; j < n; ++j) r.push_back(i == j ? Scalar::one(f) : Scalar::zero(f));
    aug.push_back(std::move(r));
  }
  auto pivots = rref(aug, ncols + n);
  Row residual = target;
  Row coeffs(n, Scalar::zero(f));
  for (std::size_t i = 0; i < aug.size(); ++i) {
    const std::size_t p = pivots[i];
    if (p >= ncols) break;
    if (residual[p].is_zero()) continue;
    const Scalar factor = residual[p];
    for (std::size_t c = 0; c < ncols; ++c) residual[c] = residual[c] - factor * aug[i][c];
    for (std::size_t j = 0; j < n; ++j) coeffs[j] = coeffs[j] + factor * aug[i][ncols + j];
  }
  if (!is_zero_row(residual)) return std::nullopt;
  return coeffs;
}

}  // namespace kneserlab
