#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "kneserlab/linalg.hpp"
#include "kneserlab/tower.hpp"

namespace kneserlab {

class DualityContext;

// An F-subspace of L stored as its canonical reduced row echelon basis.
class Subspace {
 public:
  using element_type = Element;
  using ambient_type = Tower;
  using duality_type = DualityContext;

  explicit Subspace(TowerPtr tower);  // the zero subspace
  // Rows must already be in RREF with the given pivots.
  Subspace(TowerPtr tower, std::vector<Row> rows, std::vector<std::size_t> pivots);

  const Tower& ambient() const { return *tower_; }
  const TowerPtr& tower_ptr() const { return tower_; }
  std::size_t dim() const { return rows_.size(); }
  bool is_zero() const { return rows_.empty(); }
  bool is_full() const { return rows_.size() == tower_->dim(); }

  const std::vector<Row>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Element> basis() const;

  bool contains(const Element& x) const;
  bool contains(const Subspace& other) const;
  // Normal form of x modulo this subspace (zero iff x is contained).
  Row residue(Row x) const;

  bool operator==(const Subspace& other) const { return tower_ == other.tower_ && rows_ == other.rows_; }
  std::size_t hash() const;

  // Canonical RREF rows, each as comma separated coordinates.
  std::vector<std::string> serialize() const;
  std::string to_string() const;

 private:
  TowerPtr tower_;
  std::vector<Row> rows_;
  std::vector<std::size_t> pivots_;
};

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const { return s.hash(); }
};

Subspace span(const Tower& tower, const std::vector<Element>& vectors);
Subspace span_rows(const TowerPtr& tower, std::vector<Row> rows);
Subspace deserialize_subspace(const Tower& tower, const std::vector<std::string>& rows);

Subspace zero_space(const Tower& tower);
Subspace full_space(const Tower& tower);
Subspace unit_space(const Tower& tower);  // span{1} = F

Subspace sum(const Subspace& x, const Subspace& y);
Subspace intersect(const Subspace& x, const Subspace& y);
Subspace product(const Subspace& x, const Subspace& y);
Subspace scale(const Element& a, const Subspace& x);

enum class BoundaryMode { strict, permissive };

// dim XS - dim X. Strict mode requires 1 in S; permissive mode accepts any
// nonzero S and returns dim XS - dim(X n XS).
std::size_t boundary(const Subspace& s, const Subspace& x, BoundaryMode mode = BoundaryMode::strict);

// {x in L : x * g in P for every g}
Subspace transporter(const Subspace& p, const std::vector<Element>& gens);
// {x in D : x * g in P for every g}; cheap when D has a small, clean basis.
Subspace transporter_in(const Subspace& p, const Subspace& domain, const std::vector<Element>& gens);

// Smallest subfield containing x (the F-algebra generated by x).
Subspace generated_subfield(const Subspace& x);

// Contains 1 and is closed under multiplication.
bool is_subfield(const Subspace& x);

// A subfield E of L viewed as a tower over F on the RREF basis of E.
struct SubTower {
  TowerPtr tower;
  Subspace field;  // E inside L

  const Tower& ambient() const { return *tower; }

  Subspace lift(const Subspace& y) const;  // subspace of E -> subspace of L
  Subspace push(const Subspace& x) const;  // subspace of L inside E -> subspace of E
};

SubTower restrict_to_subfield(const Subspace& field);

Element random_element(const Tower& tower, std::mt19937_64& rng, unsigned max_degree = 2);

// Dimension of the quotient a / b for b contained in a.
inline std::size_t quotient_dim(const Subspace& a, const Subspace& b) { return a.dim() - b.dim(); }

}  // namespace kneserlab
