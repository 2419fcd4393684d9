#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "kneserlab/subspace.hpp"
#include "kneserlab/tower.hpp"

// Bit-packed engine for towers over GF(2): an element of L is a mask of its
// coordinates (bit i = coefficient of e_{i+1}). Same operations and canonical
// forms as the generic engine, much faster on exhaustive enumerations.
namespace kneserlab::gf2 {

using Mask = std::uint64_t;

struct Element {
  Mask bits = 0;

  bool is_zero() const { return bits == 0; }
  Element operator+(Element b) const { return {bits ^ b.bits}; }
  Element operator-(Element b) const { return {bits ^ b.bits}; }
  bool operator==(const Element&) const = default;
};

class Algebra {
 public:
  static constexpr std::size_t kMaxDim = 32;

  // Requires the tower base to be GF(2). Invariants are not rechecked, so a
  // deliberately corrupted tower converts as is.
  explicit Algebra(const Tower& tower);
  // products[i * m + j] = e_i * e_j as a mask; e_0 must be the unit.
  Algebra(std::size_t m, std::vector<Mask> products, std::vector<std::string> labels);

  std::size_t dim() const { return m_; }
  Mask full_mask() const { return m_ == 64 ? ~Mask{0} : ((Mask{1} << m_) - 1); }
  Element zero() const { return {0}; }
  Element one() const { return {1}; }
  Element basis(std::size_t i) const { return {Mask{1} << i}; }
  const std::vector<std::string>& labels() const { return labels_; }

  Element mul(Element a, Element b) const;
  // Throws SingularMultiplicationMap if a is a zero divisor.
  Element inverse(Element a) const;

  std::string format(Element a) const;

 private:
  void build_table();

  std::size_t m_;
  std::vector<Mask> products_;
  std::vector<std::string> labels_;
  std::vector<std::uint16_t> table_;  // full table when m <= 8
};

class DualityContext;

// Canonical RREF basis; the pivot of a row is its lowest set bit.
class Space {
 public:
  using element_type = Element;
  using ambient_type = Algebra;
  using duality_type = DualityContext;

  explicit Space(const Algebra& algebra) : algebra_(&algebra) {}
  Space(const Algebra& algebra, std::vector<Mask> rref_rows) : algebra_(&algebra), rows_(std::move(rref_rows)) {}

  const Algebra& ambient() const { return *algebra_; }
  std::size_t dim() const { return rows_.size(); }
  bool is_zero() const { return rows_.empty(); }
  bool is_full() const { return rows_.size() == algebra_->dim(); }
  const std::vector<Mask>& rows() const { return rows_; }
  std::vector<Element> basis() const;

  Mask residue(Mask v) const {
    for (Mask r : rows_)
      if (v & r & (~r + 1)) v ^= r;
    return v;
  }
  bool contains(Element x) const { return residue(x.bits) == 0; }
  bool contains(const Space& other) const;

  bool operator==(const Space& other) const { return algebra_ == other.algebra_ && rows_ == other.rows_; }
  std::size_t hash() const;

  std::vector<std::string> serialize() const;
  std::string to_string() const;

 private:
  const Algebra* algebra_;
  std::vector<Mask> rows_;
};

struct SpaceHash {
  std::size_t operator()(const Space& s) const { return s.hash(); }
};

class DualityContext {
 public:
  DualityContext(const Algebra& algebra, Mask sigma);

  const Algebra& ambient() const { return *algebra_; }
  Mask sigma() const { return sigma_; }
  const std::vector<Mask>& gram() const { return gram_; }
  bool pairing(Element x, Element y) const;

 private:
  const Algebra* algebra_;
  Mask sigma_;
  std::vector<Mask> gram_;  // bit j of gram_[i] = sigma(e_i e_j)
};

Space span_masks(const Algebra& algebra, const std::vector<Mask>& vectors);
Space span(const Algebra& algebra, const std::vector<Element>& vectors);
Space zero_space(const Algebra& algebra);
Space full_space(const Algebra& algebra);
Space unit_space(const Algebra& algebra);

Space sum(const Space& x, const Space& y);
Space intersect(const Space& x, const Space& y);
Space product(const Space& x, const Space& y);
Space scale(Element a, const Space& x);
std::size_t boundary(const Space& s, const Space& x);
Space transporter(const Space& p, const std::vector<Element>& gens);
Space transporter_in(const Space& p, const Space& domain, const std::vector<Element>& gens);
Space generated_subfield(const Space& x);
bool is_subfield(const Space& x);

Space saturate(const Space& s, const Space& x);
bool is_saturated(const Space& s, const Space& x);
Space perp(const DualityContext& ctx, const Space& x);
Space dual(const DualityContext& ctx, const Space& s, const Space& x);
Space stabilizer(const Space& x);

// Conversions to and from the generic engine (same tower, same basis).
Space from_generic(const Algebra& algebra, const Subspace& x);
Subspace to_generic(const TowerPtr& tower, const Space& x);

// Every subspace of GF(2)^m in canonical order: by dimension, then pivot
// set, then free entries. Throws EnumerationTooLarge above cap.
std::vector<Space> enumerate_subspaces(const Algebra& algebra, std::uint64_t cap, int dim_filter = -1);

Element random_element(const Algebra& algebra, std::mt19937_64& rng);

// A subfield E of L viewed as its own algebra on the RREF basis of E.
struct SubAlgebra {
  std::shared_ptr<const Algebra> algebra;
  Space field;  // E inside L

  const Algebra& ambient() const { return *algebra; }

  Space lift(const Space& y) const;  // subspace of E -> subspace of L
  Space push(const Space& x) const;  // subspace of L inside E -> subspace of E
};

SubAlgebra restrict_to_subfield(const Space& field);

}  // namespace kneserlab::gf2
