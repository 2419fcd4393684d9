#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kneserlab {

// Arithmetic in Z/pZ for a prime p < 2^31.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p) : p_(p) {}

  std::uint32_t p() const { return p_; }
  std::uint32_t reduce(std::int64_t v) const {
    auto r = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  // Throws DivisionByZero for a == 0.
  std::uint32_t inv(std::uint32_t a) const;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

// Dense univariate polynomials over GF(p): coefficients low to high, no
// trailing zeros, so the zero polynomial is the empty vector.
using UPoly = std::vector<std::uint32_t>;

namespace upoly {

void trim(UPoly& a);
int degree(const UPoly& a);  // -1 for zero
UPoly add(const PrimeField& f, const UPoly& a, const UPoly& b);
UPoly sub(const PrimeField& f, const UPoly& a, const UPoly& b);
UPoly mul(const PrimeField& f, const UPoly& a, const UPoly& b);
UPoly scale(const PrimeField& f, const UPoly& a, std::uint32_t c);
// Returns (quotient, remainder); b must be nonzero.
std::pair<UPoly, UPoly> divmod(const PrimeField& f, const UPoly& a, const UPoly& b);
UPoly mod(const PrimeField& f, const UPoly& a, const UPoly& b);
UPoly monic(const PrimeField& f, const UPoly& a);
UPoly gcd(const PrimeField& f, UPoly a, UPoly b);

struct ExtGcd {
  UPoly g, s, t;  // g = s*a + t*b, g monic
};
ExtGcd ext_gcd(const PrimeField& f, const UPoly& a, const UPoly& b);

UPoly powmod(const PrimeField& f, UPoly base, std::uint64_t e, const UPoly& modulus);

// Ben-Or: f of degree n is irreducible iff gcd(x^{p^i} - x, f) = 1 for
// 1 <= i <= n/2.
bool is_irreducible(const PrimeField& f, const UPoly& a);

// Smallest-weight, then lexicographically smallest, monic irreducible of
// the given degree.
UPoly default_irreducible(const PrimeField& f, unsigned degree);

std::string format(const UPoly& a, const std::string& var);

}  // namespace upoly

inline constexpr unsigned kMaxVariables = 8;

// Exponents packed into one 128-bit key: total degree in the top 16 bits,
// then 14 bits per variable with variable 0 most significant, so comparing
// keys is graded lexicographic comparison. Total degree is capped at
// kMaxDegree.
struct Monomial {
  using Key = unsigned __int128;
  static constexpr unsigned kBits = 14;
  static constexpr unsigned kMaxDegree = (1u << kBits) - 1;
  static constexpr Key kFieldMask = kMaxDegree;

  Key key = 0;

  static constexpr unsigned shift(unsigned v) { return kBits * (kMaxVariables - 1 - v); }
  unsigned exp(unsigned v) const { return static_cast<unsigned>((key >> shift(v)) & kFieldMask); }
  // Throws Unsupported when the total degree would exceed kMaxDegree.
  void set_exp(unsigned v, unsigned e);
  unsigned total_degree() const { return static_cast<unsigned>(key >> 112); }
  bool is_one() const { return key == 0; }
  bool divides(const Monomial& other) const;
  bool operator==(const Monomial&) const = default;
};

// Graded lexicographic order, variable 0 most significant.
inline bool grlex_less(const Monomial& a, const Monomial& b) { return a.key < b.key; }

struct Term {
  Monomial mono;
  std::uint32_t coef;
  bool operator==(const Term&) const = default;
};

// Multivariate polynomial over GF(p); terms strictly decreasing in grlex,
// coefficients nonzero.
struct MPoly {
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const { return terms.empty() || (terms.size() == 1 && terms[0].mono.is_one()); }
  const Term& leading() const { return terms.front(); }
  bool operator==(const MPoly&) const = default;
};

class MPolyRing {
 public:
  MPolyRing(PrimeField field, unsigned nvars);

  const PrimeField& field() const { return field_; }
  unsigned nvars() const { return nvars_; }

  MPoly constant(std::uint32_t c) const;
  MPoly variable(unsigned v) const;
  MPoly add(const MPoly& a, const MPoly& b) const;
  MPoly sub(const MPoly& a, const MPoly& b) const;
  MPoly neg(const MPoly& a) const;
  MPoly mul(const MPoly& a, const MPoly& b) const;
  MPoly scale(const MPoly& a, std::uint32_t c) const;
  MPoly mul_monomial(const MPoly& a, const Monomial& m) const;
  MPoly pow(const MPoly& a, unsigned e) const;
  // Throws if b does not divide a.
  MPoly divexact(const MPoly& a, const MPoly& b) const;
  // Leading coefficient 1 (zero stays zero).
  MPoly normalize(const MPoly& a) const;
  MPoly gcd(const MPoly& a, const MPoly& b) const;

  unsigned degree_in(const MPoly& a, unsigned v) const;
  std::string format(const MPoly& a, std::span<const std::string> names) const;

 private:
  std::vector<MPoly> to_univariate(const MPoly& a, unsigned v) const;
  MPoly from_univariate(const std::vector<MPoly>& coeffs, unsigned v) const;
  MPoly content(const MPoly& a, unsigned v) const;
  MPoly pseudo_remainder(const MPoly& a, const MPoly& b, unsigned v) const;
  int highest_variable(const MPoly& a) const;

  PrimeField field_;
  unsigned nvars_;
};

}  // namespace kneserlab
