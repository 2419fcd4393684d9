#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kneserlab/poly.hpp"

namespace kneserlab {

enum class FieldKind { prime, poly_quotient, rational_function };

class Scalar;

// The coefficient field F. Descriptors are interned: equal descriptions
// yield the same object, which lives for the rest of the program, so
// Scalars can hold a plain pointer and compare descriptors by address.
class FieldDescriptor {
 public:
  using Ptr = std::shared_ptr<const FieldDescriptor>;

  static Ptr prime(std::uint32_t p);
  // Moduli of degree <= 12 are checked for irreducibility; larger ones are
  // accepted with irreducibility_verified() == false.
  static Ptr poly_quotient(std::uint32_t p, UPoly modulus, std::string generator = "x");
  static Ptr poly_quotient(std::uint32_t p, std::string_view modulus, std::string generator = "x");
  static Ptr rational_function(std::uint32_t p, std::vector<std::string> variables);

  FieldKind kind() const { return kind_; }
  std::uint32_t characteristic() const { return field_.p(); }
  const PrimeField& prime_field() const { return field_; }
  const UPoly& modulus() const { return modulus_; }
  const std::string& generator() const { return generator_; }
  const std::vector<std::string>& variables() const { return variables_; }
  const MPolyRing& ring() const { return *ring_; }
  bool irreducibility_verified() const { return irreducibility_verified_; }

  bool is_finite() const { return kind_ != FieldKind::rational_function; }
  // Number of elements for finite fields; nullopt when infinite or > 2^63.
  std::optional<std::uint64_t> order() const;
  // All elements of a finite field in a fixed order (zero first).
  std::vector<Scalar> elements() const;

  // Canonical textual description, e.g. "GF(3)[x]/(x^2+1)" or "GF(2)(t,s)".
  const std::string& name() const { return name_; }

 private:
  FieldDescriptor() : field_(2) {}

  FieldKind kind_ = FieldKind::prime;
  PrimeField field_;
  UPoly modulus_;
  std::string generator_;
  std::vector<std::string> variables_;
  std::unique_ptr<MPolyRing> ring_;
  bool irreducibility_verified_ = true;
  std::string name_;
};

// (numerator, denominator) with gcd 1 and monic denominator under grlex.
struct RationalFunction {
  MPoly num;
  MPoly den;
  bool operator==(const RationalFunction&) const = default;
};

// An exact element of a coefficient field. Immutable value type.
class Scalar {
 public:
  using Payload = std::variant<std::uint32_t, UPoly, RationalFunction>;

  Scalar() = default;  // only for containers; must be assigned before use

  static Scalar zero(const FieldDescriptor& f);
  static Scalar one(const FieldDescriptor& f);
  static Scalar from_int(const FieldDescriptor& f, std::int64_t v);
  // Generator of a poly_quotient field, or variable i of a rational one.
  static Scalar generator(const FieldDescriptor& f, unsigned i = 0);
  static Scalar from_payload(const FieldDescriptor& f, Payload payload);  // canonicalizes

  const FieldDescriptor& field() const { return *field_; }
  const FieldDescriptor* field_ptr() const { return field_; }
  const Payload& payload() const { return payload_; }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& b) const;
  Scalar operator-(const Scalar& b) const;
  Scalar operator*(const Scalar& b) const;
  Scalar operator/(const Scalar& b) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar inverse() const;

  bool operator==(const Scalar& b) const { return field_ == b.field_ && payload_ == b.payload_; }

  // Rough size used to prefer small pivots during elimination.
  std::size_t weight() const;

  std::string to_string() const;

 private:
  Scalar(const FieldDescriptor* f, Payload p) : field_(f), payload_(std::move(p)) {}
  void check_same(const Scalar& b) const;

  const FieldDescriptor* field_ = nullptr;
  Payload payload_{std::uint32_t{0}};
};

// Parses an expression over the field: integers, the generator or variable
// names, + - * / ^ and parentheses.
Scalar parse_scalar(const FieldDescriptor& f, std::string_view text);

// Parses a polynomial over GF(p) in one variable, e.g. "x^4+x+1".
UPoly parse_upoly(std::uint32_t p, std::string_view text, const std::string& var = "x");

// Canonicalization of a raw payload (reduces mod p / modulus, cancels gcd).
Scalar::Payload canonicalize(const FieldDescriptor& f, Scalar::Payload payload);

// Random element; rational functions get numerator and denominator of total
// degree <= max_degree.
Scalar random_scalar(const FieldDescriptor& f, std::mt19937_64& rng, unsigned max_degree = 2);

}  // namespace kneserlab
