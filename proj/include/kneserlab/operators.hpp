#pragma once

#include <vector>

#include "kneserlab/subspace.hpp"

namespace kneserlab {

// The Frobenius form <x|y> = sigma(xy) for a nonzero linear form sigma.
class DualityContext {
 public:
  DualityContext(TowerPtr tower, std::vector<Scalar> sigma);

  const Tower& ambient() const { return *tower_; }
  const TowerPtr& tower_ptr() const { return tower_; }
  const std::vector<Scalar>& sigma() const { return sigma_; }
  // gram()[i][j] = sigma(e_i e_j)
  const std::vector<Row>& gram() const { return gram_; }

  Scalar pairing(const Element& x, const Element& y) const;

 private:
  TowerPtr tower_;
  std::vector<Scalar> sigma_;
  std::vector<Row> gram_;
};

// {x : xS in XS}; requires 1 in S.
Subspace saturate(const Subspace& s, const Subspace& x);
bool is_saturated(const Subspace& s, const Subspace& x);

Subspace perp(const DualityContext& ctx, const Subspace& x);

// (XS)^perp; requires 1 in S.
Subspace dual(const DualityContext& ctx, const Subspace& s, const Subspace& x);

// H(X) = {k : kX in X}; the zero subspace is stabilized by all of L.
Subspace stabilizer(const Subspace& x);

}  // namespace kneserlab
