#include "kneserlab/operators.hpp"

#include "kneserlab/error.hpp"

namespace kneserlab {

namespace {

void require_unit(const Subspace& s) {
  if (!s.contains(s.ambient().one())) throw Error(ErrorCode::UnitNotInSpan, "S must contain 1");
}

}  // namespace

DualityContext::DualityContext(TowerPtr tower, std::vector<Scalar> sigma)
    : tower_(std::move(tower)), sigma_(std::move(sigma)) {
  const std::size_t m = tower_->dim();
  if (sigma_.size() != m) throw Error(ErrorCode::DegenerateForm, "sigma must have one entry per basis vector");
  for (const auto& s : sigma_)
    if (s.field_ptr() != &tower_->base()) throw Error(ErrorCode::DescriptorMismatch, "sigma outside the base field");
  if (is_zero_row(sigma_)) throw Error(ErrorCode::DegenerateForm, "sigma is the zero form");
  gram_.assign(m, Row(m, Scalar::zero(tower_->base())));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      const Element p = tower_->basis(i) * tower_->basis(j);
      Scalar v = Scalar::zero(tower_->base());
      for (std::size_t k = 0; k < m; ++k)
        if (!p[k].is_zero() && !sigma_[k].is_zero()) v += p[k] * sigma_[k];
      gram_[i][j] = v;
      gram_[j][i] = v;
    }
  std::vector<Row> copy = gram_;
  if (rref(copy, m).size() != m) throw Error(ErrorCode::DegenerateForm, "the form sigma(xy) is degenerate");
}

Scalar DualityContext::pairing(const Element& x, const Element& y) const {
  const Element p = x * y;
  Scalar v = Scalar::zero(tower_->base());
  for (std::size_t k = 0; k < sigma_.size(); ++k) v += p[k] * sigma_[k];
  return v;
}

Subspace saturate(const Subspace& s, const Subspace& x) {
  require_unit(s);
  return transporter(product(x, s), s.basis());
}

bool is_saturated(const Subspace& s, const Subspace& x) { return saturate(s, x) == x; }

Subspace perp(const DualityContext& ctx, const Subspace& x) {
  if (x.tower_ptr() != ctx.tower_ptr()) throw Error(ErrorCode::TowerMismatch, "duality context of another tower");
  const Tower& t = x.ambient();
  const std::size_t m = t.dim();
  // y is in the complement iff sum_j y_j * (x_r G)_j = 0 for every basis row x_r:
  // the left kernel of the m x r matrix whose column r is G x_r.
  std::vector<Row> cols(m, Row(x.dim(), Scalar::zero(t.base())));
  for (std::size_t r = 0; r < x.dim(); ++r) {
    const Row& xr = x.rows()[r];
    for (std::size_t j = 0; j < m; ++j) {
      Scalar v = Scalar::zero(t.base());
      for (std::size_t i = 0; i < m; ++i)
        if (!xr[i].is_zero() && !ctx.gram()[i][j].is_zero()) v += xr[i] * ctx.gram()[i][j];
      cols[j][r] = v;
    }
  }
  return span_rows(x.tower_ptr(), left_kernel(cols, x.dim(), t.base()));
}

Subspace dual(const DualityContext& ctx, const Subspace& s, const Subspace& x) {
  require_unit(s);
  return perp(ctx, product(x, s));
}

Subspace stabilizer(const Subspace& x) {
  if (x.is_zero()) return full_space(x.ambient());
  return transporter(x, x.basis());
}

}  // namespace kneserlab
