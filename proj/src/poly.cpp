#include "kneserlab/poly.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "kneserlab/error.hpp"

namespace kneserlab {

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint64_t r = 1 % p_, b = a % p_;
  while (e) {
    if (e & 1) r = r * b % p_;
    b = b * b % p_;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw Error(ErrorCode::DivisionByZero, "inverse of 0 in GF(" + std::to_string(p_) + ")");
  return pow(a, p_ - 2);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace upoly {

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

UPoly add(const PrimeField& f, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = f.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

UPoly sub(const PrimeField& f, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = f.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

namespace {

// GF(2)[x] packed 64 coefficients per word.
using Bits = std::vector<std::uint64_t>;

Bits pack2(const UPoly& a) {
  Bits r((a.size() + 63) / 64, 0);
  for (std::size_t w = 0; w < r.size(); ++w) {
    const std::size_t lo = w * 64, n = std::min<std::size_t>(64, a.size() - lo);
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < n; ++i) bits |= std::uint64_t{a[lo + i] & 1} << i;
    r[w] = bits;
  }
  return r;
}

UPoly unpack2(const Bits& a) {
  std::size_t words = a.size();
  while (words && !a[words - 1]) --words;
  if (!words) return {};
  UPoly r((words - 1) * 64 + 64 - static_cast<std::size_t>(std::countl_zero(a[words - 1])), 0);
  for (std::size_t w = 0; w < words; ++w)
    for (std::uint64_t bits = a[w]; bits; bits &= bits - 1) r[w * 64 + static_cast<std::size_t>(std::countr_zero(bits))] = 1;
  return r;
}

// r ^= b * x^shift
void xor_shifted(Bits& r, const Bits& b, std::size_t shift) {
  const std::size_t w = shift / 64, k = shift % 64;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!b[i]) continue;
    r[i + w] ^= b[i] << k;
    if (k) r[i + w + 1] ^= b[i] >> (64 - k);
  }
}

UPoly mul2(const UPoly& a, const UPoly& b) {
  const Bits pa = pack2(a), pb = pack2(b);
  Bits r(pa.size() + pb.size() + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if ((pa[i / 64] >> (i % 64)) & 1) xor_shifted(r, pb, i);
  return unpack2(r);
}

std::pair<UPoly, UPoly> divmod2(const UPoly& a, const UPoly& b) {
  Bits r = pack2(a);
  r.push_back(0);
  const Bits pb = pack2(b);
  const std::size_t db = b.size() - 1;
  UPoly q(a.size() - db, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const std::size_t top = k + db;
    if (!((r[top / 64] >> (top % 64)) & 1)) continue;
    q[k] = 1;
    xor_shifted(r, pb, k);
  }
  trim(q);
  return {q, unpack2(r)};
}

// Index of the top set bit, or -1 for zero.
long degree2(const Bits& a) {
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i]) return static_cast<long>(i * 64 + 63 - std::countl_zero(a[i]));
  return -1;
}

// a mod b in place.
void reduce2(Bits& a, const Bits& b, long db) {
  for (long da = degree2(a); da >= db; da = degree2(a)) xor_shifted(a, b, static_cast<std::size_t>(da - db));
}

UPoly gcd2(const UPoly& a, const UPoly& b) {
  Bits pa = pack2(a), pb = pack2(b);
  const std::size_t words = std::max(pa.size(), pb.size()) + 1;
  pa.resize(words, 0);
  pb.resize(words, 0);
  for (long db = degree2(pb); db >= 0; db = degree2(pb)) {
    reduce2(pa, pb, db);
    std::swap(pa, pb);
  }
  return unpack2(pa);
}

constexpr std::size_t kPackedThreshold = 16;

}  // namespace

UPoly mul(const PrimeField& f, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  if (f.p() == 2 && a.size() >= kPackedThreshold && b.size() >= kPackedThreshold) return mul2(a, b);
  if (f.p() < (1u << 16)) {
    // products fit in 32 bits, so 2^32 of them fit in a 64-bit accumulator
    std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += std::uint64_t{a[i]} * b[j];
    }
    UPoly r(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<std::uint32_t>(acc[i] % f.p());
    trim(r);
    return r;
  }
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

UPoly scale(const PrimeField& f, const UPoly& a, std::uint32_t c) {
  UPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(a[i], c);
  trim(r);
  return r;
}

std::pair<UPoly, UPoly> divmod(const PrimeField& f, const UPoly& a, const UPoly& b) {
  if (b.empty()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.size() < b.size()) return {UPoly{}, a};
  if (f.p() == 2 && a.size() >= kPackedThreshold) return divmod2(a, b);
  UPoly r = a;
  UPoly q(r.size() - b.size() + 1, 0);
  const std::uint32_t lead_inv = f.inv(b.back());
  for (std::size_t k = q.size(); k-- > 0;) {
    const std::uint32_t c = f.mul(r[k + b.size() - 1], lead_inv);
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] = f.sub(r[k + j], f.mul(c, b[j]));
  }
  trim(q);
  trim(r);
  return {q, r};
}

UPoly mod(const PrimeField& f, const UPoly& a, const UPoly& b) { return divmod(f, a, b).second; }

UPoly monic(const PrimeField& f, const UPoly& a) {
  if (a.empty()) return a;
  return scale(f, a, f.inv(a.back()));
}

UPoly gcd(const PrimeField& f, UPoly a, UPoly b) {
  if (f.p() == 2 && std::max(a.size(), b.size()) >= kPackedThreshold) return gcd2(a, b);
  while (!b.empty()) {
    UPoly r = mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, a);
}

ExtGcd ext_gcd(const PrimeField& f, const UPoly& a, const UPoly& b) {
  UPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(f, r0, r1);
    UPoly s2 = sub(f, s0, mul(f, q, s1));
    UPoly t2 = sub(f, t0, mul(f, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {r0, s0, t0};
  const std::uint32_t c = f.inv(r0.back());
  return {scale(f, r0, c), scale(f, s0, c), scale(f, t0, c)};
}

UPoly powmod(const PrimeField& f, UPoly base, std::uint64_t e, const UPoly& modulus) {
  UPoly r = mod(f, UPoly{1}, modulus);
  base = mod(f, base, modulus);
  while (e) {
    if (e & 1) r = mod(f, mul(f, r, base), modulus);
    base = mod(f, mul(f, base, base), modulus);
    e >>= 1;
  }
  return r;
}

bool is_irreducible(const PrimeField& f, const UPoly& a) {
  const int n = degree(a);
  if (n <= 0) return false;
  if (n == 1) return true;
  const UPoly x{0, 1};
  UPoly h = x;
  for (int i = 1; i <= n / 2; ++i) {
    h = powmod(f, h, f.p(), a);
    if (degree(gcd(f, sub(f, h, x), a)) > 0) return false;
  }
  return true;
}

namespace {

// Visits tails (coefficients below the leading term) with exactly k nonzero
// entries, in increasing base-p value.
template <class Fn>
bool visit_tails(const PrimeField& f, unsigned degree, unsigned k, Fn&& fn) {
  std::vector<UPoly> candidates;
  std::vector<unsigned> idx(k);
  for (unsigned i = 0; i < k; ++i) idx[i] = i;
  if (k > degree) return false;
  while (true) {
    std::vector<std::uint32_t> coef(k, 1);
    while (true) {
      UPoly t(degree + 1, 0);
      t[degree] = 1;
      for (unsigned i = 0; i < k; ++i) t[idx[i]] = coef[i];
      candidates.push_back(std::move(t));
      unsigned c = 0;
      while (c < k && coef[c] == f.p() - 1) coef[c++] = 1;
      if (c == k) break;
      ++coef[c];
    }
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && idx[i] == degree - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (unsigned j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  auto value_less = [](const UPoly& a, const UPoly& b) {
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  };
  std::sort(candidates.begin(), candidates.end(), value_less);
  for (auto& c : candidates)
    if (fn(c)) return true;
  return false;
}

}  // namespace

UPoly default_irreducible(const PrimeField& f, unsigned degree) {
  if (degree == 0) throw Error(ErrorCode::Unsupported, "irreducible of degree 0");
  UPoly result;
  for (unsigned k = 0; k <= degree; ++k) {
    bool ok = visit_tails(f, degree, k, [&](const UPoly& c) {
      if (is_irreducible(f, c)) {
        result = c;
        return true;
      }
      return false;
    });
    if (ok) return result;
  }
  throw Error(ErrorCode::Unsupported, "no irreducible polynomial found");
}

std::string format(const UPoly& a, const std::string& var) {
  if (a.empty()) return "0";
  std::string out;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(a[i]);
      continue;
    }
    if (a[i] != 1) out += std::to_string(a[i]) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace upoly

void Monomial::set_exp(unsigned v, unsigned e) {
  const unsigned total = total_degree() - exp(v) + e;
  if (total > kMaxDegree) throw Error(ErrorCode::Unsupported, "monomial degree overflow");
  key &= ~((kFieldMask << shift(v)) | (Key{0xffff} << 112));
  key |= (Key{e} << shift(v)) | (Key{total} << 112);
}

bool Monomial::divides(const Monomial& other) const {
  for (unsigned i = 0; i < kMaxVariables; ++i)
    if (exp(i) > other.exp(i)) return false;
  return true;
}

namespace {

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  if (a.total_degree() + b.total_degree() > Monomial::kMaxDegree)
    throw Error(ErrorCode::Unsupported, "monomial degree overflow");
  return Monomial{a.key + b.key};
}

Monomial mono_div(const Monomial& a, const Monomial& b) { return Monomial{a.key - b.key}; }

bool term_greater(const Term& a, const Term& b) { return grlex_less(b.mono, a.mono); }

}  // namespace

MPolyRing::MPolyRing(PrimeField field, unsigned nvars) : field_(field), nvars_(nvars) {
  if (nvars > kMaxVariables)
    throw Error(ErrorCode::Unsupported, "at most " + std::to_string(kMaxVariables) + " variables");
}

MPoly MPolyRing::constant(std::uint32_t c) const {
  MPoly r;
  c %= field_.p();
  if (c) r.terms.push_back({Monomial{}, c});
  return r;
}

MPoly MPolyRing::variable(unsigned v) const {
  MPoly r;
  Monomial m;
  m.set_exp(v, 1);
  r.terms.push_back({m, 1});
  return r;
}

MPoly MPolyRing::add(const MPoly& a, const MPoly& b) const {
  MPoly r;
  r.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    if (j == b.terms.size() || (i < a.terms.size() && term_greater(a.terms[i], b.terms[j]))) {
      r.terms.push_back(a.terms[i++]);
    } else if (i == a.terms.size() || term_greater(b.terms[j], a.terms[i])) {
      r.terms.push_back(b.terms[j++]);
    } else {
      const std::uint32_t c = field_.add(a.terms[i].coef, b.terms[j].coef);
      if (c) r.terms.push_back({a.terms[i].mono, c});
      ++i;
      ++j;
    }
  }
  return r;
}

MPoly MPolyRing::neg(const MPoly& a) const {
  MPoly r = a;
  for (auto& t : r.terms) t.coef = field_.neg(t.coef);
  return r;
}

MPoly MPolyRing::sub(const MPoly& a, const MPoly& b) const { return add(a, neg(b)); }

MPoly MPolyRing::scale(const MPoly& a, std::uint32_t c) const {
  c %= field_.p();
  if (c == 0) return {};
  MPoly r = a;
  for (auto& t : r.terms) t.coef = field_.mul(t.coef, c);
  return r;
}

MPoly MPolyRing::mul_monomial(const MPoly& a, const Monomial& m) const {
  MPoly r = a;
  for (auto& t : r.terms) t.mono = mono_mul(t.mono, m);
  return r;
}

MPoly MPolyRing::mul(const MPoly& a, const MPoly& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms.size() == 1) return scale(mul_monomial(b, a.terms[0].mono), a.terms[0].coef);
  if (b.terms.size() == 1) return scale(mul_monomial(a, b.terms[0].mono), b.terms[0].coef);
  std::vector<Term> raw;
  raw.reserve(a.terms.size() * b.terms.size());
  for (const auto& x : a.terms)
    for (const auto& y : b.terms) raw.push_back({mono_mul(x.mono, y.mono), field_.mul(x.coef, y.coef)});
  std::sort(raw.begin(), raw.end(), term_greater);
  MPoly r;
  for (const auto& t : raw) {
    if (!r.terms.empty() && r.terms.back().mono == t.mono) {
      r.terms.back().coef = field_.add(r.terms.back().coef, t.coef);
      if (r.terms.back().coef == 0) r.terms.pop_back();
    } else {
      r.terms.push_back(t);
    }
  }
  return r;
}

MPoly MPolyRing::pow(const MPoly& a, unsigned e) const {
  MPoly r = constant(1), b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return r;
}

MPoly MPolyRing::divexact(const MPoly& a, const MPoly& b) const {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (b.is_constant()) return scale(a, field_.inv(b.terms[0].coef));
  MPoly q, r = a;
  const Term& lb = b.leading();
  const std::uint32_t lb_inv = field_.inv(lb.coef);
  while (!r.is_zero()) {
    const Term& lr = r.leading();
    if (!lb.mono.divides(lr.mono)) throw Error(ErrorCode::Unsupported, "inexact polynomial division");
    Term t{mono_div(lr.mono, lb.mono), field_.mul(lr.coef, lb_inv)};
    q.terms.push_back(t);
    MPoly tb = scale(mul_monomial(b, t.mono), t.coef);
    r = sub(r, tb);
  }
  return q;
}

MPoly MPolyRing::normalize(const MPoly& a) const {
  if (a.is_zero() || a.leading().coef == 1) return a;
  return scale(a, field_.inv(a.leading().coef));
}

unsigned MPolyRing::degree_in(const MPoly& a, unsigned v) const {
  unsigned d = 0;
  for (const auto& t : a.terms) d = std::max<unsigned>(d, t.mono.exp(v));
  return d;
}

int MPolyRing::highest_variable(const MPoly& a) const {
  int h = -1;
  for (const auto& t : a.terms)
    for (int v = static_cast<int>(nvars_) - 1; v > h; --v)
      if (t.mono.exp(v)) {
        h = v;
        break;
      }
  return h;
}

std::vector<MPoly> MPolyRing::to_univariate(const MPoly& a, unsigned v) const {
  std::vector<MPoly> c(degree_in(a, v) + 1);
  for (const auto& t : a.terms) {
    Term s = t;
    const unsigned d = s.mono.exp(v);
    s.mono.set_exp(v, 0);
    c[d].terms.push_back(s);  // order is preserved within a fixed power of v
  }
  return c;
}

MPoly MPolyRing::from_univariate(const std::vector<MPoly>& coeffs, unsigned v) const {
  MPoly r;
  for (std::size_t d = 0; d < coeffs.size(); ++d)
    for (auto t : coeffs[d].terms) {
      t.mono.set_exp(v, static_cast<unsigned>(d));
      r.terms.push_back(t);
    }
  std::sort(r.terms.begin(), r.terms.end(), term_greater);
  return r;
}

MPoly MPolyRing::content(const MPoly& a, unsigned v) const {
  MPoly g;
  for (const auto& c : to_univariate(a, v)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

MPoly MPolyRing::pseudo_remainder(const MPoly& a, const MPoly& b, unsigned v) const {
  const unsigned db = degree_in(b, v);
  const auto bc = to_univariate(b, v);
  const MPoly& lb = bc.back();
  MPoly r = a;
  while (!r.is_zero()) {
    const unsigned dr = degree_in(r, v);
    if (dr < db) break;
    const MPoly lr = to_univariate(r, v).back();
    Monomial shift;
    shift.set_exp(v, dr - db);
    r = sub(mul(lb, r), mul(lr, mul_monomial(b, shift)));
  }
  return r;
}

namespace {

// Dense bivariate form: entry i is the coefficient of y^i as a polynomial in x.
using BiPoly = std::vector<UPoly>;

unsigned variable_mask(const MPoly& a) {
  unsigned mask = 0;
  for (const auto& t : a.terms)
    for (unsigned v = 0; v < kMaxVariables; ++v)
      if (t.mono.exp(v)) mask |= 1u << v;
  return mask;
}

UPoly to_upoly(const MPoly& a, unsigned x) {
  UPoly r;
  for (const auto& t : a.terms) {
    const unsigned d = t.mono.exp(x);
    if (r.size() <= d) r.resize(d + 1, 0);
    r[d] = t.coef;
  }
  return r;
}

BiPoly to_bipoly(const MPoly& a, unsigned x, unsigned y) {
  BiPoly r;
  for (const auto& t : a.terms) {
    const unsigned dy = t.mono.exp(y), dx = t.mono.exp(x);
    if (r.size() <= dy) r.resize(dy + 1);
    if (r[dy].size() <= dx) r[dy].resize(dx + 1, 0);
    r[dy][dx] = t.coef;
  }
  return r;
}

MPoly from_bipoly(const BiPoly& a, unsigned x, unsigned y) {
  MPoly r;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      if (!a[i][j]) continue;
      Monomial m;
      m.set_exp(x, static_cast<unsigned>(j));
      m.set_exp(y, static_cast<unsigned>(i));
      r.terms.push_back({m, a[i][j]});
    }
  std::sort(r.terms.begin(), r.terms.end(), term_greater);
  return r;
}

UPoly bi_content(const PrimeField& f, const BiPoly& a) {
  UPoly g;
  for (const auto& c : a) {
    if (c.empty()) continue;
    g = upoly::gcd(f, g, c);
    if (g.size() == 1) break;
  }
  return g;
}

void bi_divide(const PrimeField& f, BiPoly& a, const UPoly& c) {
  if (c.size() == 1 && c[0] == 1) return;
  for (auto& e : a)
    if (!e.empty()) e = upoly::divmod(f, e, c).first;
}

BiPoly bi_prem(const PrimeField& f, BiPoly r, const BiPoly& b) {
  const std::size_t db = b.size() - 1;
  const UPoly& lb = b.back();
  while (!r.empty() && r.size() - 1 >= db) {
    const UPoly lr = r.back();
    const std::size_t shift = r.size() - 1 - db;
    for (std::size_t i = 0; i < r.size(); ++i) {
      UPoly v = upoly::mul(f, lb, r[i]);
      if (i >= shift) v = upoly::sub(f, v, upoly::mul(f, lr, b[i - shift]));
      r[i] = std::move(v);
    }
    while (!r.empty() && r.back().empty()) r.pop_back();
  }
  return r;
}

BiPoly bi_gcd(const PrimeField& f, BiPoly a, BiPoly b) {
  const UPoly ca = bi_content(f, a), cb = bi_content(f, b);
  const UPoly c = upoly::gcd(f, ca, cb);
  bi_divide(f, a, ca);
  bi_divide(f, b, cb);
  if (a.size() < b.size()) std::swap(a, b);
  BiPoly g;
  while (true) {
    if (b.size() == 1) {
      g = {UPoly{1}};
      break;
    }
    BiPoly r = bi_prem(f, a, b);
    if (r.empty()) {
      g = std::move(b);
      break;
    }
    bi_divide(f, r, bi_content(f, r));
    a = std::move(b);
    b = std::move(r);
  }
  for (auto& e : g) e = upoly::mul(f, e, c);
  return g;
}

}  // namespace

MPoly MPolyRing::gcd(const MPoly& a, const MPoly& b) const {
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  if (a.is_constant() || b.is_constant()) return constant(1);
  if (a.terms.size() == 1 || b.terms.size() == 1) {
    const MPoly& m = a.terms.size() == 1 ? a : b;
    const MPoly& o = a.terms.size() == 1 ? b : a;
    Monomial g = m.terms[0].mono;
    for (const auto& t : o.terms)
      for (unsigned v = 0; v < nvars_; ++v)
        if (t.mono.exp(v) < g.exp(v)) g.set_exp(v, t.mono.exp(v));
    return MPoly{{Term{g, 1}}};
  }
  const unsigned mask = variable_mask(a) | variable_mask(b);
  if (std::popcount(mask) == 1) {
    const unsigned x = static_cast<unsigned>(std::countr_zero(mask));
    const UPoly g = upoly::gcd(field_, to_upoly(a, x), to_upoly(b, x));
    MPoly r;
    for (std::size_t d = g.size(); d-- > 0;) {
      if (!g[d]) continue;
      Monomial m;
      m.set_exp(x, static_cast<unsigned>(d));
      r.terms.push_back({m, g[d]});
    }
    return r;
  }
  if (std::popcount(mask) == 2) {
    const unsigned x = static_cast<unsigned>(std::countr_zero(mask));
    const unsigned y = 31 - static_cast<unsigned>(std::countl_zero(mask));
    return normalize(from_bipoly(bi_gcd(field_, to_bipoly(a, x, y), to_bipoly(b, x, y)), x, y));
  }
  const int v = std::max(highest_variable(a), highest_variable(b));
  const unsigned uv = static_cast<unsigned>(v);
  if (degree_in(a, uv) == 0) return gcd(a, content(b, uv));
  if (degree_in(b, uv) == 0) return gcd(b, content(a, uv));
  const MPoly ca = content(a, uv), cb = content(b, uv);
  const MPoly c = gcd(ca, cb);
  MPoly A = divexact(a, ca), B = divexact(b, cb);
  if (degree_in(A, uv) < degree_in(B, uv)) std::swap(A, B);
  MPoly g;
  while (true) {
    MPoly r = pseudo_remainder(A, B, uv);
    if (r.is_zero()) {
      g = B;
      break;
    }
    if (degree_in(r, uv) == 0) {
      g = constant(1);
      break;
    }
    A = std::move(B);
    B = divexact(r, content(r, uv));
  }
  if (!g.is_constant()) g = divexact(g, content(g, uv));
  return normalize(mul(c, g));
}

std::string MPolyRing::format(const MPoly& a, std::span<const std::string> names) const {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& t : a.terms) {
    if (!out.empty()) out += '+';
    std::string mono;
    for (unsigned v = 0; v < nvars_; ++v) {
      if (!t.mono.exp(v)) continue;
      if (!mono.empty()) mono += '*';
      mono += names[v];
      if (t.mono.exp(v) > 1) mono += "^" + std::to_string(t.mono.exp(v));
    }
    if (mono.empty()) {
      out += std::to_string(t.coef);
    } else {
      if (t.coef != 1) out += std::to_string(t.coef) + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace kneserlab
