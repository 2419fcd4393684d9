#include "kneserlab/scalar.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <set>

#include "kneserlab/error.hpp"

namespace kneserlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DescriptorMismatch: return "DescriptorMismatch";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::DimensionOverflow: return "DimensionOverflow";
    case ErrorCode::TowerMismatch: return "TowerMismatch";
    case ErrorCode::TowerInvariant: return "TowerInvariant";
    case ErrorCode::SingularMultiplicationMap: return "SingularMultiplicationMap";
    case ErrorCode::UnitNotInSpan: return "UnitNotInSpan";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::InfiniteBaseField: return "InfiniteBaseField";
    case ErrorCode::StabilizerNotTrivial: return "StabilizerNotTrivial";
    case ErrorCode::GeneratesProperSubfield: return "GeneratesProperSubfield";
    case ErrorCode::TheoremViolation: return "TheoremViolation";
    case ErrorCode::NoDeficientT: return "NoDeficientT";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

namespace {

inline constexpr int kIrreducibilityCheckLimit = 12;

std::mutex registry_mutex;
std::map<std::string, FieldDescriptor::Ptr>& registry() {
  static std::map<std::string, FieldDescriptor::Ptr> r;
  return r;
}

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

// Recursive-descent evaluator shared by scalar parsing and modulus parsing.
template <class Ops>
class ExprParser {
 public:
  using Value = typename Ops::Value;

  ExprParser(Ops ops, std::string_view text) : ops_(std::move(ops)), s_(text) {}

  Value parse() {
    Value v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::Parse, "'" + std::string(s_) + "' at " + std::to_string(pos_) + ": " + msg);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_atom() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    const unsigned char c = static_cast<unsigned char>(s_[pos_]);
    return std::isalnum(c) || c == '_' || c == '(';
  }

  Value expr() {
    Value v;
    if (peek('-')) {
      ++pos_;
      v = ops_.neg(term());
    } else {
      if (peek('+')) ++pos_;
      v = term();
    }
    while (true) {
      if (peek('+')) {
        ++pos_;
        v = ops_.add(v, term());
      } else if (peek('-')) {
        ++pos_;
        v = ops_.sub(v, term());
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = power();
    while (true) {
      if (peek('*')) {
        ++pos_;
        v = ops_.mul(v, power());
      } else if (peek('/')) {
        ++pos_;
        v = ops_.div(v, power());
      } else if (starts_atom()) {
        v = ops_.mul(v, power());
      } else {
        return v;
      }
    }
  }

  Value power() {
    Value base = atom();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      std::uint64_t e = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        e = e * 10 + static_cast<unsigned>(s_[pos_] - '0');
        if (e > 1'000'000) fail("exponent too large");
        ++pos_;
      }
      if (start == pos_) fail("expected exponent");
      return ops_.pow(base, static_cast<unsigned>(e));
    }
    return base;
  }

  Value atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end");
    const unsigned char c = static_cast<unsigned char>(s_[pos_]);
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return v;
    }
    if (c == '-') {
      ++pos_;
      return ops_.neg(power());
    }
    if (std::isdigit(c)) {
      std::uint64_t v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        v = (v * 10 + static_cast<unsigned>(s_[pos_] - '0')) % ops_.characteristic();
        ++pos_;
      }
      return ops_.number(v);
    }
    if (std::isalpha(c) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      auto v = ops_.ident(name);
      if (!v) fail("unknown symbol '" + name + "'");
      return *v;
    }
    fail("unexpected '" + std::string(1, static_cast<char>(c)) + "'");
  }

  Ops ops_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

struct UPolyOps {
  using Value = UPoly;
  PrimeField f;
  std::string var;

  std::uint64_t characteristic() const { return f.p(); }
  Value number(std::uint64_t v) const {
    UPoly r{static_cast<std::uint32_t>(v % f.p())};
    upoly::trim(r);
    return r;
  }
  std::optional<Value> ident(const std::string& name) const {
    if (name != var) return std::nullopt;
    return UPoly{0, 1};
  }
  Value add(const Value& a, const Value& b) const { return upoly::add(f, a, b); }
  Value sub(const Value& a, const Value& b) const { return upoly::sub(f, a, b); }
  Value neg(const Value& a) const { return upoly::sub(f, {}, a); }
  Value mul(const Value& a, const Value& b) const { return upoly::mul(f, a, b); }
  Value div(const Value& a, const Value& b) const {
    auto [q, r] = upoly::divmod(f, a, b);
    if (!r.empty()) throw Error(ErrorCode::Parse, "inexact division in polynomial");
    return q;
  }
  Value pow(const Value& a, unsigned e) const {
    UPoly r{1};
    for (unsigned i = 0; i < e; ++i) r = upoly::mul(f, r, a);
    return r;
  }
};

struct ScalarOps {
  using Value = Scalar;
  const FieldDescriptor* f;

  std::uint64_t characteristic() const { return f->characteristic(); }
  Value number(std::uint64_t v) const { return Scalar::from_int(*f, static_cast<std::int64_t>(v)); }
  std::optional<Value> ident(const std::string& name) const {
    if (f->kind() == FieldKind::poly_quotient && name == f->generator()) return Scalar::generator(*f);
    if (f->kind() == FieldKind::rational_function) {
      const auto& vars = f->variables();
      for (unsigned i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return Scalar::generator(*f, i);
    }
    return std::nullopt;
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value neg(const Value& a) const { return -a; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value div(const Value& a, const Value& b) const { return a / b; }
  Value pow(const Value& a, unsigned e) const {
    Value r = Scalar::one(*f), b = a;
    while (e) {
      if (e & 1) r = r * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }
};

}  // namespace

FieldDescriptor::Ptr FieldDescriptor::prime(std::uint32_t p) {
  if (!is_prime(p) || p >= (1u << 31)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not a prime below 2^31");
  const std::string key = "GF(" + std::to_string(p) + ")";
  std::lock_guard lock(registry_mutex);
  auto& slot = registry()[key];
  if (!slot) {
    std::shared_ptr<FieldDescriptor> d(new FieldDescriptor());
    d->kind_ = FieldKind::prime;
    d->field_ = PrimeField(p);
    d->name_ = key;
    slot = d;
  }
  return slot;
}

FieldDescriptor::Ptr FieldDescriptor::poly_quotient(std::uint32_t p, UPoly modulus, std::string generator) {
  if (!is_prime(p) || p >= (1u << 31)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not a prime below 2^31");
  if (!valid_identifier(generator)) throw Error(ErrorCode::Parse, "invalid generator name '" + generator + "'");
  PrimeField f(p);
  for (auto& c : modulus) c %= p;
  upoly::trim(modulus);
  if (upoly::degree(modulus) < 1) throw Error(ErrorCode::ReducibleModulus, "modulus must have degree >= 1");
  if (modulus.back() != 1) throw Error(ErrorCode::Parse, "modulus must be monic");
  const std::string key = "GF(" + std::to_string(p) + ")[" + generator + "]/(" + upoly::format(modulus, generator) + ")";
  std::lock_guard lock(registry_mutex);
  auto& slot = registry()[key];
  if (!slot) {
    bool verified = false;
    if (upoly::degree(modulus) <= kIrreducibilityCheckLimit) {
      if (!upoly::is_irreducible(f, modulus))
        throw Error(ErrorCode::ReducibleModulus, upoly::format(modulus, generator) + " is reducible over GF(" +
                                                     std::to_string(p) + ")");
      verified = true;
    }
    std::shared_ptr<FieldDescriptor> d(new FieldDescriptor());
    d->kind_ = FieldKind::poly_quotient;
    d->field_ = f;
    d->modulus_ = std::move(modulus);
    d->generator_ = std::move(generator);
    d->irreducibility_verified_ = verified;
    d->name_ = key;
    slot = d;
  }
  return slot;
}

FieldDescriptor::Ptr FieldDescriptor::poly_quotient(std::uint32_t p, std::string_view modulus, std::string generator) {
  if (!is_prime(p) || p >= (1u << 31)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not a prime below 2^31");
  UPoly m = ExprParser<UPolyOps>(UPolyOps{PrimeField(p), generator}, modulus).parse();
  return poly_quotient(p, std::move(m), std::move(generator));
}

UPoly parse_upoly(std::uint32_t p, std::string_view text, const std::string& var) {
  if (!is_prime(p) || p >= (1u << 31)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not a prime below 2^31");
  return ExprParser<UPolyOps>(UPolyOps{PrimeField(p), var}, text).parse();
}

FieldDescriptor::Ptr FieldDescriptor::rational_function(std::uint32_t p, std::vector<std::string> variables) {
  if (!is_prime(p) || p >= (1u << 31)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not a prime below 2^31");
  if (variables.empty()) throw Error(ErrorCode::Parse, "rational function field needs at least one variable");
  if (variables.size() > kMaxVariables)
    throw Error(ErrorCode::Unsupported, "at most " + std::to_string(kMaxVariables) + " variables");
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (!valid_identifier(v)) throw Error(ErrorCode::Parse, "invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw Error(ErrorCode::Parse, "duplicate variable '" + v + "'");
  }
  std::string key = "GF(" + std::to_string(p) + ")(";
  for (std::size_t i = 0; i < variables.size(); ++i) key += (i ? "," : "") + variables[i];
  key += ")";
  std::lock_guard lock(registry_mutex);
  auto& slot = registry()[key];
  if (!slot) {
    std::shared_ptr<FieldDescriptor> d(new FieldDescriptor());
    d->kind_ = FieldKind::rational_function;
    d->field_ = PrimeField(p);
    d->ring_ = std::make_unique<MPolyRing>(PrimeField(p), static_cast<unsigned>(variables.size()));
    d->variables_ = std::move(variables);
    d->name_ = key;
    slot = d;
  }
  return slot;
}

std::optional<std::uint64_t> FieldDescriptor::order() const {
  if (kind_ == FieldKind::prime) return field_.p();
  if (kind_ == FieldKind::rational_function) return std::nullopt;
  unsigned __int128 q = 1;
  for (int i = 0; i < upoly::degree(modulus_); ++i) {
    q *= field_.p();
    if (q > (static_cast<unsigned __int128>(1) << 63)) return std::nullopt;
  }
  return static_cast<std::uint64_t>(q);
}

std::vector<Scalar> FieldDescriptor::elements() const {
  auto q = order();
  if (!q) throw Error(ErrorCode::InfiniteBaseField, name_ + " is not enumerable");
  std::vector<Scalar> out;
  out.reserve(*q);
  if (kind_ == FieldKind::prime) {
    for (std::uint32_t v = 0; v < field_.p(); ++v) out.push_back(Scalar::from_int(*this, v));
    return out;
  }
  const int d = upoly::degree(modulus_);
  for (std::uint64_t idx = 0; idx < *q; ++idx) {
    UPoly c(d, 0);
    std::uint64_t v = idx;
    for (int i = 0; i < d; ++i) {
      c[i] = static_cast<std::uint32_t>(v % field_.p());
      v /= field_.p();
    }
    out.push_back(Scalar::from_payload(*this, std::move(c)));
  }
  return out;
}

Scalar::Payload canonicalize(const FieldDescriptor& f, Scalar::Payload payload) {
  switch (f.kind()) {
    case FieldKind::prime: {
      auto* v = std::get_if<std::uint32_t>(&payload);
      if (!v) throw Error(ErrorCode::DescriptorMismatch, "payload is not a prime-field value");
      return *v % f.characteristic();
    }
    case FieldKind::poly_quotient: {
      auto* v = std::get_if<UPoly>(&payload);
      if (!v) throw Error(ErrorCode::DescriptorMismatch, "payload is not a polynomial");
      for (auto& c : *v) c %= f.characteristic();
      upoly::trim(*v);
      return upoly::mod(f.prime_field(), *v, f.modulus());
    }
    case FieldKind::rational_function: {
      auto* v = std::get_if<RationalFunction>(&payload);
      if (!v) throw Error(ErrorCode::DescriptorMismatch, "payload is not a rational function");
      const MPolyRing& R = f.ring();
      if (v->den.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
      if (v->num.is_zero()) return RationalFunction{MPoly{}, R.constant(1)};
      MPoly num = std::move(v->num), den = std::move(v->den);
      if (!den.is_constant()) {
        MPoly g = R.gcd(num, den);
        if (!g.is_constant()) {
          num = R.divexact(num, g);
          den = R.divexact(den, g);
        }
      }
      const std::uint32_t lc = den.leading().coef;
      if (lc != 1) {
        const std::uint32_t inv = f.prime_field().inv(lc);
        num = R.scale(num, inv);
        den = R.scale(den, inv);
      }
      return RationalFunction{std::move(num), std::move(den)};
    }
  }
  return payload;
}

Scalar Scalar::zero(const FieldDescriptor& f) { return from_int(f, 0); }
Scalar Scalar::one(const FieldDescriptor& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const FieldDescriptor& f, std::int64_t v) {
  const std::uint32_t r = f.prime_field().reduce(v);
  switch (f.kind()) {
    case FieldKind::prime: return Scalar(&f, r);
    case FieldKind::poly_quotient: return Scalar(&f, r ? UPoly{r} : UPoly{});
    case FieldKind::rational_function: return Scalar(&f, RationalFunction{f.ring().constant(r), f.ring().constant(1)});
  }
  return {};
}

Scalar Scalar::generator(const FieldDescriptor& f, unsigned i) {
  switch (f.kind()) {
    case FieldKind::prime: throw Error(ErrorCode::Unsupported, "prime fields have no generator symbol");
    case FieldKind::poly_quotient: return from_payload(f, UPoly{0, 1});
    case FieldKind::rational_function:
      if (i >= f.variables().size()) throw Error(ErrorCode::Unsupported, "variable index out of range");
      return Scalar(&f, RationalFunction{f.ring().variable(i), f.ring().constant(1)});
  }
  return {};
}

Scalar Scalar::from_payload(const FieldDescriptor& f, Payload payload) {
  return Scalar(&f, canonicalize(f, std::move(payload)));
}

bool Scalar::is_zero() const {
  return std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::uint32_t>) return v == 0;
        else if constexpr (std::is_same_v<T, UPoly>) return v.empty();
        else return v.num.is_zero();
      },
      payload_);
}

bool Scalar::is_one() const {
  return std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::uint32_t>) return v == 1;
        else if constexpr (std::is_same_v<T, UPoly>) return v.size() == 1 && v[0] == 1;
        else return v.den.is_constant() && v.num.is_constant() && !v.num.is_zero() && v.num.terms[0].coef == 1;
      },
      payload_);
}

void Scalar::check_same(const Scalar& b) const {
  if (field_ != b.field_ || !field_)
    throw Error(ErrorCode::DescriptorMismatch,
                (field_ ? field_->name() : std::string("<unset>")) + " vs " +
                    (b.field_ ? b.field_->name() : std::string("<unset>")));
}

Scalar Scalar::operator+(const Scalar& b) const {
  check_same(b);
  const PrimeField& F = field_->prime_field();
  switch (field_->kind()) {
    case FieldKind::prime:
      return Scalar(field_, F.add(std::get<std::uint32_t>(payload_), std::get<std::uint32_t>(b.payload_)));
    case FieldKind::poly_quotient:
      return Scalar(field_, upoly::add(F, std::get<UPoly>(payload_), std::get<UPoly>(b.payload_)));
    case FieldKind::rational_function: {
      const auto& x = std::get<RationalFunction>(payload_);
      const auto& y = std::get<RationalFunction>(b.payload_);
      if (x.num.is_zero()) return b;
      if (y.num.is_zero()) return *this;
      const MPolyRing& R = field_->ring();
      if (x.den == y.den) {
        if (x.den.is_constant()) return Scalar(field_, RationalFunction{R.add(x.num, y.num), x.den});
        return from_payload(*field_, RationalFunction{R.add(x.num, y.num), x.den});
      }
      return from_payload(*field_,
                          RationalFunction{R.add(R.mul(x.num, y.den), R.mul(y.num, x.den)), R.mul(x.den, y.den)});
    }
  }
  return {};
}

Scalar Scalar::operator-() const {
  const PrimeField& F = field_->prime_field();
  switch (field_->kind()) {
    case FieldKind::prime: return Scalar(field_, F.neg(std::get<std::uint32_t>(payload_)));
    case FieldKind::poly_quotient: return Scalar(field_, upoly::sub(F, {}, std::get<UPoly>(payload_)));
    case FieldKind::rational_function: {
      const auto& x = std::get<RationalFunction>(payload_);
      return Scalar(field_, RationalFunction{field_->ring().neg(x.num), x.den});
    }
  }
  return {};
}

Scalar Scalar::operator-(const Scalar& b) const {
  check_same(b);
  return *this + (-b);
}

Scalar Scalar::operator*(const Scalar& b) const {
  check_same(b);
  const PrimeField& F = field_->prime_field();
  switch (field_->kind()) {
    case FieldKind::prime:
      return Scalar(field_, F.mul(std::get<std::uint32_t>(payload_), std::get<std::uint32_t>(b.payload_)));
    case FieldKind::poly_quotient:
      return Scalar(field_, upoly::mod(F, upoly::mul(F, std::get<UPoly>(payload_), std::get<UPoly>(b.payload_)),
                                       field_->modulus()));
    case FieldKind::rational_function: {
      const auto& x = std::get<RationalFunction>(payload_);
      const auto& y = std::get<RationalFunction>(b.payload_);
      if (x.num.is_zero() || y.num.is_zero()) return zero(*field_);
      const MPolyRing& R = field_->ring();
      if (x.den.is_constant() && y.den.is_constant())
        return Scalar(field_, RationalFunction{R.mul(x.num, y.num), x.den});
      // cross-cancel so the product needs no further gcd
      MPoly g1 = R.gcd(x.num, y.den), g2 = R.gcd(y.num, x.den);
      MPoly a = g1.is_constant() ? x.num : R.divexact(x.num, g1);
      MPoly d = g1.is_constant() ? y.den : R.divexact(y.den, g1);
      MPoly c = g2.is_constant() ? y.num : R.divexact(y.num, g2);
      MPoly bden = g2.is_constant() ? x.den : R.divexact(x.den, g2);
      // both denominators are monic and so is the product
      return Scalar(field_, RationalFunction{R.mul(a, c), R.mul(bden, d)});
    }
  }
  return {};
}

Scalar Scalar::inverse() const {
  if (!field_) throw Error(ErrorCode::DescriptorMismatch, "unset scalar");
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in " + field_->name());
  const PrimeField& F = field_->prime_field();
  switch (field_->kind()) {
    case FieldKind::prime: return Scalar(field_, F.inv(std::get<std::uint32_t>(payload_)));
    case FieldKind::poly_quotient: {
      auto eg = upoly::ext_gcd(F, std::get<UPoly>(payload_), field_->modulus());
      return Scalar(field_, upoly::mod(F, eg.s, field_->modulus()));
    }
    case FieldKind::rational_function: {
      const auto& x = std::get<RationalFunction>(payload_);
      const MPolyRing& R = field_->ring();
      const std::uint32_t inv = F.inv(x.num.leading().coef);
      return Scalar(field_, RationalFunction{R.scale(x.den, inv), R.scale(x.num, inv)});
    }
  }
  return {};
}

Scalar Scalar::operator/(const Scalar& b) const {
  check_same(b);
  return *this * b.inverse();
}

std::size_t Scalar::weight() const {
  return std::visit(
      [](const auto& v) -> std::size_t {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::uint32_t>) return v ? 1 : 0;
        else if constexpr (std::is_same_v<T, UPoly>) return v.size();
        else {
          std::size_t w = v.num.terms.size() + v.den.terms.size();
          for (const auto& t : v.num.terms) w += t.mono.total_degree();
          for (const auto& t : v.den.terms) w += t.mono.total_degree();
          return w;
        }
      },
      payload_);
}

std::string Scalar::to_string() const {
  if (!field_) return "<unset>";
  switch (field_->kind()) {
    case FieldKind::prime: return std::to_string(std::get<std::uint32_t>(payload_));
    case FieldKind::poly_quotient: return upoly::format(std::get<UPoly>(payload_), field_->generator());
    case FieldKind::rational_function: {
      const auto& x = std::get<RationalFunction>(payload_);
      const MPolyRing& R = field_->ring();
      std::string num = R.format(x.num, field_->variables());
      if (x.den.is_constant()) return num;
      std::string den = R.format(x.den, field_->variables());
      if (x.num.terms.size() > 1) num = "(" + num + ")";
      if (x.den.terms.size() > 1 || den.find('*') != std::string::npos) den = "(" + den + ")";
      return num + "/" + den;
    }
  }
  return {};
}

Scalar parse_scalar(const FieldDescriptor& f, std::string_view text) {
  return ExprParser<ScalarOps>(ScalarOps{&f}, text).parse();
}

Scalar random_scalar(const FieldDescriptor& f, std::mt19937_64& rng, unsigned max_degree) {
  const std::uint32_t p = f.characteristic();
  std::uniform_int_distribution<std::uint32_t> coef(0, p - 1);
  switch (f.kind()) {
    case FieldKind::prime: return Scalar::from_int(f, coef(rng));
    case FieldKind::poly_quotient: {
      UPoly c(static_cast<std::size_t>(upoly::degree(f.modulus())));
      for (auto& x : c) x = coef(rng);
      return Scalar::from_payload(f, std::move(c));
    }
    case FieldKind::rational_function: {
      const MPolyRing& R = f.ring();
      const unsigned k = R.nvars();
      auto random_poly = [&](unsigned deg) {
        MPoly out;
        // all monomials of total degree <= deg
        std::vector<Monomial> monos{Monomial{}};
        for (unsigned d = 1; d <= deg; ++d) {
          std::vector<Monomial> next;
          for (const auto& m : monos) {
            if (m.total_degree() != d - 1) continue;
            for (unsigned v = 0; v < k; ++v) {
              Monomial n = m;
              n.set_exp(v, n.exp(v) + 1);
              bool dup = false;
              for (const auto& q : next) dup |= (q == n);
              if (!dup) next.push_back(n);
            }
          }
          monos.insert(monos.end(), next.begin(), next.end());
        }
        for (const auto& m : monos) {
          MPoly t;
          if (auto c = coef(rng)) {
            t.terms.push_back({m, c});
            out = R.add(out, t);
          }
        }
        return out;
      };
      std::uniform_int_distribution<unsigned> deg(0, max_degree);
      MPoly num = random_poly(deg(rng));
      MPoly den;
      do den = random_poly(deg(rng));
      while (den.is_zero());
      return Scalar::from_payload(f, RationalFunction{std::move(num), std::move(den)});
    }
  }
  return {};
}

}  // namespace kneserlab
