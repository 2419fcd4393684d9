#include "kneserlab/tower.hpp"

#include <cstdio>
#include <random>
#include <sstream>
#include <variant>

#include "kneserlab/error.hpp"

namespace kneserlab {

Element::Element(TowerPtr tower, std::vector<Scalar> coords) : tower_(std::move(tower)), coords_(std::move(coords)) {
  if (coords_.size() != tower_->dim())
    throw Error(ErrorCode::TowerMismatch, "coordinate vector of length " + std::to_string(coords_.size()) +
                                              " in a tower of dimension " + std::to_string(tower_->dim()));
}

void Element::check_same(const Element& b) const {
  if (tower_ != b.tower_) throw Error(ErrorCode::TowerMismatch, "elements of different towers");
}

Element Element::operator+(const Element& b) const {
  check_same(b);
  std::vector<Scalar> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] + b.coords_[i];
  return Element(tower_, std::move(c));
}

Element Element::operator-(const Element& b) const {
  check_same(b);
  std::vector<Scalar> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] - b.coords_[i];
  return Element(tower_, std::move(c));
}

Element Element::operator*(const Element& b) const { return tower_->mul(*this, b); }

Element Element::inverse() const { return tower_->inverse(*this); }

Element operator*(const Scalar& a, const Element& x) {
  std::vector<Scalar> c(x.coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a * x.coords_[i];
  return Element(x.tower_, std::move(c));
}

std::string Element::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) out += (i ? "," : "") + coords_[i].to_string();
  return out;
}

Tower::Tower(TowerSpec spec) : spec_(std::move(spec)) {
  const std::size_t m = spec_.dim;
  sparse_.resize(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        if (!spec_.c(i, j, k).is_zero()) sparse_[i * m + j].push_back({k, spec_.c(i, j, k)});
  if (spec_.labels.empty())
    for (std::size_t i = 0; i < m; ++i) spec_.labels.push_back("e" + std::to_string(i + 1));
}

TowerPtr Tower::create(TowerSpec spec, const TowerOptions& options) {
  if (!spec.base) throw Error(ErrorCode::TowerInvariant, "missing base field");
  if (spec.dim == 0) throw Error(ErrorCode::TowerInvariant, "dimension must be positive");
  if (spec.dim > options.max_dim)
    throw Error(ErrorCode::DimensionOverflow,
                "dimension " + std::to_string(spec.dim) + " exceeds cap " + std::to_string(options.max_dim));
  const std::size_t m = spec.dim;
  if (spec.tensor.size() != m * m * m)
    throw Error(ErrorCode::TowerInvariant, "tensor must have dim^3 = " + std::to_string(m * m * m) + " entries");
  for (const auto& s : spec.tensor)
    if (s.field_ptr() != spec.base.get()) throw Error(ErrorCode::TowerInvariant, "tensor entry outside the base field");
  if (!spec.labels.empty() && spec.labels.size() != m)
    throw Error(ErrorCode::TowerInvariant, "labels must have dim entries");
  if (spec.sigma) {
    if (spec.sigma->size() != m) throw Error(ErrorCode::TowerInvariant, "sigma must have dim entries");
    for (const auto& s : *spec.sigma)
      if (s.field_ptr() != spec.base.get()) throw Error(ErrorCode::TowerInvariant, "sigma entry outside the base field");
    if (is_zero_row(*spec.sigma)) throw Error(ErrorCode::TowerInvariant, "sigma is the zero form");
  }
  auto tower = std::shared_ptr<Tower>(new Tower(std::move(spec)));
  if (options.validate) tower->check_invariants(options);
  return tower;
}

void Tower::check_invariants(const TowerOptions& options) const {
  const std::size_t m = spec_.dim;
  auto fail = [](const std::string& what) { throw Error(ErrorCode::TowerInvariant, what); };
  auto idx = [](std::size_t i, std::size_t j, std::size_t k) {
    return "tensor[" + std::to_string(i) + "][" + std::to_string(j) + "][" + std::to_string(k) + "]";
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        if (!(spec_.c(i, j, k) == spec_.c(j, i, k))) fail(idx(i, j, k) + " breaks commutativity");
        const bool unit = (j == k);
        if (unit ? !spec_.c(0, j, k).is_one() : !spec_.c(0, j, k).is_zero())
          fail(idx(0, j, k) + ": the first basis vector must act as 1");
      }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      std::vector<Scalar> eij(m, Scalar::zero(base()));
      for (const auto& e : products(i, j)) eij[e.k] = e.c;
      for (std::size_t k = 0; k < m; ++k) {
        // (e_i e_j) e_k versus e_i (e_j e_k)
        std::vector<Scalar> lhs(m, Scalar::zero(base())), rhs(m, Scalar::zero(base()));
        for (std::size_t l = 0; l < m; ++l) {
          if (!eij[l].is_zero())
            for (const auto& e : products(l, k)) lhs[e.k] += eij[l] * e.c;
        }
        for (const auto& jk : products(j, k))
          for (const auto& e : products(i, jk.k)) rhs[e.k] += jk.c * e.c;
        if (lhs != rhs)
          fail("associativity fails on basis triple (" + std::to_string(i) + "," + std::to_string(j) + "," +
               std::to_string(k) + ")");
      }
    }
  std::mt19937_64 rng(options.validation_seed);
  // clearing denominators preserves zero divisors, so polynomial samples suffice
  auto sample = [&] {
    Scalar s = random_scalar(base(), rng, 1);
    if (base().kind() == FieldKind::rational_function)
      s = Scalar::from_payload(base(), RationalFunction{std::get<RationalFunction>(s.payload()).num, base().ring().constant(1)});
    return s;
  };
  for (std::size_t n = 0; n < options.zero_divisor_samples; ++n) {
    std::vector<Scalar> a(m), b(m);
    do
      for (auto& s : a) s = sample();
    while (is_zero_row(a));
    do
      for (auto& s : b) s = sample();
    while (is_zero_row(b));
    if (is_zero_row(mul_coords(a, b))) fail("zero divisors found: the algebra is not a field");
  }
}

std::vector<Scalar> Tower::mul_coords(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const {
  const std::size_t m = spec_.dim;
  std::vector<Scalar> r(m, Scalar::zero(base()));
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (b[j].is_zero()) continue;
      const Scalar ab = a[i] * b[j];
      for (const auto& e : products(i, j)) r[e.k] += ab * e.c;
    }
  }
  return r;
}

Element Tower::zero() const { return Element(shared_from_this(), std::vector<Scalar>(dim(), Scalar::zero(base()))); }

Element Tower::one() const { return basis(0); }

Element Tower::basis(std::size_t i) const {
  std::vector<Scalar> c(dim(), Scalar::zero(base()));
  c.at(i) = Scalar::one(base());
  return Element(shared_from_this(), std::move(c));
}

Element Tower::element(std::vector<Scalar> coords) const {
  for (const auto& s : coords)
    if (s.field_ptr() != spec_.base.get()) throw Error(ErrorCode::DescriptorMismatch, "coordinate outside the base field");
  return Element(shared_from_this(), std::move(coords));
}

Element Tower::parse_element(const std::vector<std::string>& coords) const {
  std::vector<Scalar> c;
  for (const auto& s : coords) c.push_back(parse_scalar(base(), s));
  return element(std::move(c));
}

Element Tower::mul(const Element& a, const Element& b) const {
  if (&a.tower() != this || &b.tower() != this) throw Error(ErrorCode::TowerMismatch, "element of another tower");
  return Element(shared_from_this(), mul_coords(a.coords(), b.coords()));
}

std::vector<Row> Tower::multiplication_matrix(const Element& a) const {
  std::vector<Row> rows;
  rows.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) rows.push_back(mul(basis(i), a).coords());
  return rows;
}

Element Tower::inverse(const Element& a) const {
  if (&a.tower() != this) throw Error(ErrorCode::TowerMismatch, "element of another tower");
  if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero element");
  auto x = solve_left(multiplication_matrix(a), one().coords(), base());
  if (!x) throw Error(ErrorCode::SingularMultiplicationMap, "multiplication by " + a.to_string() + " is singular");
  return element(std::move(*x));
}

std::vector<Scalar> Tower::default_sigma() const {
  if (spec_.sigma) return *spec_.sigma;
  std::vector<Scalar> s(dim(), Scalar::zero(base()));
  s.back() = Scalar::one(base());
  return s;
}

std::string Tower::canonical_text() const {
  std::ostringstream out;
  out << base().name() << ";" << dim() << ";";
  for (const auto& s : spec_.tensor) out << s.to_string() << ",";
  out << ";";
  if (spec_.sigma)
    for (const auto& s : *spec_.sigma) out << s.to_string() << ",";
  return out.str();
}

std::string Tower::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical_text()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

TowerSpec power_basis_spec(const FieldDescriptor::Ptr& base, const std::vector<Scalar>& f) {
  // f monic of degree m, low to high; reduce x^{i+j} modulo f
  const std::size_t m = f.size() - 1;
  const FieldDescriptor& F = *base;
  std::vector<std::vector<Scalar>> powers;  // x^0 .. x^{2m-2} reduced
  std::vector<Scalar> cur(m, Scalar::zero(F));
  cur[0] = Scalar::one(F);
  for (std::size_t e = 0; e + 1 < 2 * m; ++e) {
    powers.push_back(cur);
    // multiply by x
    Scalar top = cur[m - 1];
    for (std::size_t i = m - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = Scalar::zero(F);
    if (!top.is_zero())
      for (std::size_t i = 0; i < m; ++i) cur[i] -= top * f[i];
  }
  TowerSpec spec;
  spec.base = base;
  spec.dim = m;
  spec.tensor.assign(m * m * m, Scalar::zero(F));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) spec.c(i, j, k) = powers[i + j][k];
  for (std::size_t i = 0; i < m; ++i)
    spec.labels.push_back(i == 0 ? "1" : (i == 1 ? "a" : "a^" + std::to_string(i)));
  return spec;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

TowerPtr finite_field(std::uint32_t p, std::size_t m, std::optional<UPoly> modulus, const TowerOptions& options) {
  auto base = FieldDescriptor::prime(p);
  if (m == 0) throw Error(ErrorCode::TowerInvariant, "dimension must be positive");
  if (m > options.max_dim)
    throw Error(ErrorCode::DimensionOverflow, "dimension " + std::to_string(m) + " exceeds cap " +
                                                  std::to_string(options.max_dim));
  const PrimeField F(p);
  UPoly f = modulus ? *modulus : upoly::default_irreducible(F, static_cast<unsigned>(m));
  for (auto& c : f) c %= p;
  upoly::trim(f);
  if (upoly::degree(f) != static_cast<int>(m))
    throw Error(ErrorCode::TowerInvariant, "modulus degree must equal the extension degree");
  if (f.back() != 1) throw Error(ErrorCode::TowerInvariant, "modulus must be monic");
  if (m <= 12 && !upoly::is_irreducible(F, f))
    throw Error(ErrorCode::ReducibleModulus, upoly::format(f, "x") + " is reducible over GF(" + std::to_string(p) + ")");
  std::vector<Scalar> coeffs;
  for (auto c : f) coeffs.push_back(Scalar::from_int(*base, c));
  TowerSpec spec = power_basis_spec(base, coeffs);
  spec.name = "gf:" + std::to_string(p) + ":" + std::to_string(m) + ":" + upoly::format(f, "x");
  return Tower::create(std::move(spec), options);
}

TowerPtr inseparable(std::uint32_t p, const std::vector<std::string>& variables, const TowerOptions& options) {
  auto base = FieldDescriptor::rational_function(p, variables);
  const std::size_t k = variables.size();
  std::size_t m = 1;
  for (std::size_t i = 0; i < k; ++i) {
    m *= p;
    if (m > options.max_dim)
      throw Error(ErrorCode::DimensionOverflow, "p^k exceeds the dimension cap " + std::to_string(options.max_dim));
  }
  const FieldDescriptor& F = *base;
  auto digits = [&](std::size_t idx) {
    std::vector<std::size_t> d(k);
    for (std::size_t i = 0; i < k; ++i) {
      d[i] = idx % p;
      idx /= p;
    }
    return d;
  };
  TowerSpec spec;
  spec.base = base;
  spec.dim = m;
  spec.tensor.assign(m * m * m, Scalar::zero(F));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      auto da = digits(a), db = digits(b);
      std::size_t target = 0, place = 1;
      Scalar coef = Scalar::one(F);
      for (std::size_t i = 0; i < k; ++i) {
        std::size_t e = da[i] + db[i];
        if (e >= p) {
          e -= p;
          coef = coef * Scalar::generator(F, static_cast<unsigned>(i));  // u_i^p = t_i
        }
        target += e * place;
        place *= p;
      }
      spec.c(a, b, target) = coef;
    }
  static const char* root_names[] = {"u", "v", "w", "x", "y", "z", "q", "r"};
  for (std::size_t idx = 0; idx < m; ++idx) {
    auto d = digits(idx);
    std::string label;
    for (std::size_t i = 0; i < k; ++i) {
      if (!d[i]) continue;
      label += root_names[i];
      if (d[i] > 1) label += "^" + std::to_string(d[i]);
    }
    spec.labels.push_back(label.empty() ? "1" : label);
  }
  spec.name = "insep:" + std::to_string(p) + ":";
  for (std::size_t i = 0; i < k; ++i) spec.name += (i ? "," : "") + variables[i];
  return Tower::create(std::move(spec), options);
}

TowerPtr simple_extension(const FieldDescriptor::Ptr& base, const std::vector<Scalar>& monic_coeffs,
                          const TowerOptions& options) {
  if (monic_coeffs.size() < 2) throw Error(ErrorCode::TowerInvariant, "defining polynomial must have degree >= 1");
  if (!monic_coeffs.back().is_one()) throw Error(ErrorCode::TowerInvariant, "defining polynomial must be monic");
  if (monic_coeffs.size() - 1 > options.max_dim)
    throw Error(ErrorCode::DimensionOverflow, "degree exceeds the dimension cap");
  TowerSpec spec = power_basis_spec(base, monic_coeffs);
  spec.name = "ext:" + base->name();
  return Tower::create(std::move(spec), options);
}

TowerPtr tensor_product(const Tower& a, const Tower& b, const TowerOptions& options) {
  if (&a.base() != &b.base()) throw Error(ErrorCode::DescriptorMismatch, "tensor factors over different bases");
  const std::size_t ma = a.dim(), mb = b.dim(), m = ma * mb;
  if (m > options.max_dim) throw Error(ErrorCode::DimensionOverflow, "tensor product exceeds the dimension cap");
  TowerSpec spec;
  spec.base = a.spec().base;
  spec.dim = m;
  spec.tensor.assign(m * m * m, Scalar::zero(a.base()));
  // index (i1, i2) -> i1 + ma * i2
  for (std::size_t i1 = 0; i1 < ma; ++i1)
    for (std::size_t i2 = 0; i2 < mb; ++i2)
      for (std::size_t j1 = 0; j1 < ma; ++j1)
        for (std::size_t j2 = 0; j2 < mb; ++j2)
          for (std::size_t k1 = 0; k1 < ma; ++k1) {
            const Scalar& ca = a.spec().c(i1, j1, k1);
            if (ca.is_zero()) continue;
            for (std::size_t k2 = 0; k2 < mb; ++k2) {
              const Scalar& cb = b.spec().c(i2, j2, k2);
              if (!cb.is_zero()) spec.c(i1 + ma * i2, j1 + ma * j2, k1 + ma * k2) = ca * cb;
            }
          }
  for (std::size_t i2 = 0; i2 < mb; ++i2)
    for (std::size_t i1 = 0; i1 < ma; ++i1) {
      const std::string& la = a.spec().labels[i1];
      const std::string& lb = b.spec().labels[i2];
      spec.labels.push_back(la == "1" ? lb : (lb == "1" ? la : la + "*" + lb));
    }
  spec.name = "(" + a.spec().name + ")x(" + b.spec().name + ")";
  return Tower::create(std::move(spec), options);
}

TowerPtr build_tower(const std::string& description, const TowerOptions& options) {
  auto parts = split(description, ':');
  auto parse_uint = [&](const std::string& s, const char* field) -> std::uint64_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::Parse, "tower '" + description + "': " + field + " must be a positive integer");
    return std::stoull(s);
  };
  if (parts[0] == "gf") {
    if (parts.size() < 3 || parts.size() > 4)
      throw Error(ErrorCode::Parse, "tower '" + description + "': expected gf:P:M[:MODULUS]");
    const auto p = parse_uint(parts[1], "P");
    const auto m = parse_uint(parts[2], "M");
    if (p >= (1ull << 31) || !is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    std::optional<UPoly> modulus;
    if (parts.size() == 4) modulus = parse_upoly(static_cast<std::uint32_t>(p), parts[3]);
    return finite_field(static_cast<std::uint32_t>(p), m, modulus, options);
  }
  if (parts[0] == "insep") {
    if (parts.size() < 3 || parts.size() > 4)
      throw Error(ErrorCode::Parse, "tower '" + description + "': expected insep:P:VARS[:MODULUS]");
    const auto p = parse_uint(parts[1], "P");
    if (p >= (1ull << 31) || !is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    auto purely = inseparable(static_cast<std::uint32_t>(p), split(parts[2], ','), options);
    if (parts.size() == 3) return purely;
    // A modulus irreducible over GF(p) stays irreducible over GF(p)(t...).
    const PrimeField F(static_cast<std::uint32_t>(p));
    UPoly f = parse_upoly(static_cast<std::uint32_t>(p), parts[3]);
    if (upoly::degree(f) < 1 || f.back() != 1) throw Error(ErrorCode::TowerInvariant, "modulus must be monic of degree >= 1");
    if (!upoly::is_irreducible(F, f))
      throw Error(ErrorCode::ReducibleModulus, upoly::format(f, "x") + " is reducible over GF(" + std::to_string(p) + ")");
    std::vector<Scalar> coeffs;
    for (auto c : f) coeffs.push_back(Scalar::from_int(purely->base(), c));
    auto ext = simple_extension(purely->spec().base, coeffs, options);
    TowerSpec spec = tensor_product(*purely, *ext, options)->spec();
    spec.name = description;
    return Tower::create(std::move(spec), options);
  }
  throw Error(ErrorCode::Parse, "unknown tower builder '" + parts[0] + "' (expected gf or insep)");
}

}  // namespace kneserlab
