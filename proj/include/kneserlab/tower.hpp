#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kneserlab/linalg.hpp"
#include "kneserlab/scalar.hpp"

namespace kneserlab {

// L/F as an m-dimensional commutative F-algebra on a fixed basis whose first
// vector is 1: e_i * e_j = sum_k tensor(i, j, k) e_k (0-based indices).
struct TowerSpec {
  FieldDescriptor::Ptr base;
  std::size_t dim = 0;
  std::vector<Scalar> tensor;  // dim^3 entries, index (i*dim + j)*dim + k
  std::vector<std::string> labels;
  std::optional<std::vector<Scalar>> sigma;
  std::string name;  // builder description, informational

  Scalar& c(std::size_t i, std::size_t j, std::size_t k) { return tensor[(i * dim + j) * dim + k]; }
  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const { return tensor[(i * dim + j) * dim + k]; }
};

struct TowerOptions {
  std::size_t max_dim = 64;
  bool validate = true;
  std::size_t zero_divisor_samples = 500;
  std::uint64_t validation_seed = 0x6b6e65736572ULL;
};

class Tower;
using TowerPtr = std::shared_ptr<const Tower>;

class Element {
 public:
  Element(TowerPtr tower, std::vector<Scalar> coords);

  const Tower& tower() const { return *tower_; }
  const TowerPtr& tower_ptr() const { return tower_; }
  const std::vector<Scalar>& coords() const { return coords_; }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }

  bool is_zero() const { return is_zero_row(coords_); }

  Element operator+(const Element& b) const;
  Element operator-(const Element& b) const;
  Element operator*(const Element& b) const;
  Element inverse() const;
  friend Element operator*(const Scalar& a, const Element& x);

  bool operator==(const Element& b) const { return tower_ == b.tower_ && coords_ == b.coords_; }

  std::string to_string() const;  // comma separated coordinates

 private:
  void check_same(const Element& b) const;

  TowerPtr tower_;
  std::vector<Scalar> coords_;
};

class Tower : public std::enable_shared_from_this<Tower> {
 public:
  // Validates every TowerSpec invariant unless options.validate is false
  // (used only to build deliberately corrupted towers).
  static TowerPtr create(TowerSpec spec, const TowerOptions& options = {});

  const TowerSpec& spec() const { return spec_; }
  const FieldDescriptor& base() const { return *spec_.base; }
  std::size_t dim() const { return spec_.dim; }
  bool is_finite_base() const { return spec_.base->is_finite(); }

  Element zero() const;
  Element one() const;
  Element basis(std::size_t i) const;
  Element element(std::vector<Scalar> coords) const;
  Element parse_element(const std::vector<std::string>& coords) const;

  Element mul(const Element& a, const Element& b) const;
  // Solves the linear system of multiplication by a.
  Element inverse(const Element& a) const;
  // Row i holds the coordinates of e_i * a.
  std::vector<Row> multiplication_matrix(const Element& a) const;

  // sigma from the TowerSpec, else the coordinate functional of the last basis vector
  std::vector<Scalar> default_sigma() const;

  // Stable 64-bit FNV-1a hash of the canonical description, as 16 hex digits.
  std::string hash() const;
  std::string canonical_text() const;

  // Re-runs the structural checks (throws TowerInvariant on failure).
  void check_invariants(const TowerOptions& options) const;

 private:
  explicit Tower(TowerSpec spec);

  struct Entry {
    std::size_t k;
    Scalar c;
  };
  const std::vector<Entry>& products(std::size_t i, std::size_t j) const { return sparse_[i * spec_.dim + j]; }
  std::vector<Scalar> mul_coords(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const;

  TowerSpec spec_;
  std::vector<std::vector<Entry>> sparse_;
};

// finite_field(p, m): F = GF(p), L = GF(p^m) on the power basis 1, a, ..., a^{m-1}.
TowerPtr finite_field(std::uint32_t p, std::size_t m, std::optional<UPoly> modulus = std::nullopt,
                      const TowerOptions& options = {});

// inseparable(p, [t1..tk]): F = GF(p)(t1..tk), L = F(u1..uk) with u_i^p = t_i,
// basis of monomials u^a (0 <= a_i < p), first variable varying fastest.
TowerPtr inseparable(std::uint32_t p, const std::vector<std::string>& variables, const TowerOptions& options = {});

// F[x]/(f) on the power basis; f monic over the base given low to high.
TowerPtr simple_extension(const FieldDescriptor::Ptr& base, const std::vector<Scalar>& monic_coeffs,
                          const TowerOptions& options = {});

// Product basis e_(i1,i2) = e_i1 (x) e_i2 of two towers over the same base.
TowerPtr tensor_product(const Tower& a, const Tower& b, const TowerOptions& options = {});

// "gf:P:M[:MODULUS]" or "insep:P:VAR,VAR,...[:MODULUS]"; a modulus on insep
// tensors the purely inseparable tower with GF(p)[x]/(MODULUS).
TowerPtr build_tower(const std::string& description, const TowerOptions& options = {});

}  // namespace kneserlab
