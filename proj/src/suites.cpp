#include "kneserlab/suites.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <memory>
#include <numeric>
#include <sstream>

#include "kneserlab/cells.hpp"
#include "kneserlab/error.hpp"
#include "kneserlab/gf2.hpp"
#include "kneserlab/group_oracle.hpp"
#include "kneserlab/lemmas.hpp"
#include "kneserlab/parallel.hpp"
#include "kneserlab/sampling.hpp"

namespace kneserlab {

using ojson = nlohmann::ordered_json;
using Named = std::vector<std::pair<std::string, std::vector<std::string>>>;

std::string_view to_string(SuiteKind kind) {
  switch (kind) {
    case SuiteKind::lemmas: return "lemmas";
    case SuiteKind::submodularity: return "submodularity";
    case SuiteKind::hou_bound: return "hou_bound";
    case SuiteKind::kernel_chain: return "kernel_chain";
    case SuiteKind::one_sided: return "one_sided";
    case SuiteKind::group: return "group";
  }
  return "?";
}

std::optional<SuiteKind> parse_suite(std::string_view name) {
  for (SuiteKind k : kAllSuites)
    if (to_string(k) == name) return k;
  return std::nullopt;
}

std::string engine_name(const Tower& tower) {
  const auto& f = tower.base();
  return f.kind() == FieldKind::prime && f.characteristic() == 2 && tower.dim() <= gf2::Algebra::kMaxDim ? "gf2"
                                                                                                        : "generic";
}

namespace {

// ---------------------------------------------------------------------------
// Engines: a uniform face over the generic and the bit-packed subspace types.

struct GenericEngine {
  using Space = Subspace;
  using Ctx = DualityContext;
  using Elem = Element;

  TowerPtr tower;

  const Tower& ambient() const { return *tower; }
  std::size_t dim() const { return tower->dim(); }
  bool finite() const { return tower->is_finite_base(); }
  std::optional<std::uint64_t> field_order() const { return tower->base().order(); }
  std::vector<Space> all(std::uint64_t cap) const { return enumerate_subspaces(*tower, cap); }
  Space draw(std::mt19937_64& rng, std::size_t d, unsigned deg) const { return random_subspace(*tower, rng, d, deg); }
  Space draw_with_one(std::mt19937_64& rng, std::size_t d, unsigned deg) const {
    return random_subspace_with_one(*tower, rng, d, deg);
  }
  Elem element(std::mt19937_64& rng, unsigned deg) const { return random_sparse_element(*tower, rng, deg); }
  // A combination of the basis of x with prime-field coefficients.
  Elem prime_combination(const Space& x, std::mt19937_64& rng) const {
    Elem out = tower->zero();
    const std::uint32_t p = tower->base().characteristic();
    for (const auto& b : x.basis()) out = out + Scalar::from_int(tower->base(), static_cast<std::int64_t>(rng() % p)) * b;
    return out;
  }
  Space span_of(const std::vector<Elem>& v) const { return span(*tower, v); }
  Space zero() const { return zero_space(*tower); }
  Elem one() const { return tower->one(); }
  Elem basis(std::size_t i) const { return tower->basis(i); }

  std::vector<Ctx> sigmas(const SuiteOptions& o) const {
    std::vector<Ctx> out;
    for (std::size_t i = 0; i < o.sigmas.size(); ++i) {
      const auto& text = o.sigmas[i];
      if (text.size() != dim())
        throw Error(ErrorCode::Parse, "sigma #" + std::to_string(i) + " needs " + std::to_string(dim()) + " coordinates");
      std::vector<Scalar> v;
      for (const auto& c : text) v.push_back(parse_scalar(tower->base(), c));
      if (is_zero_row(v)) throw Error(ErrorCode::Parse, "sigma #" + std::to_string(i) + " is the zero form");
      out.emplace_back(tower, std::move(v));
    }
    for (auto& c : sigma_family(*tower, o.sigma_count, o.seed))
      if (out.size() < std::max(o.sigma_count, o.sigmas.size())) out.push_back(std::move(c));
    return out;
  }
  std::vector<std::string> sigma_text(const Ctx& c) const {
    std::string line;
    for (std::size_t i = 0; i < c.sigma().size(); ++i) line += (i ? "," : "") + c.sigma()[i].to_string();
    return {line};
  }
};

struct Gf2Engine {
  using Space = gf2::Space;
  using Ctx = gf2::DualityContext;
  using Elem = gf2::Element;

  TowerPtr tower;
  std::shared_ptr<const gf2::Algebra> algebra;

  explicit Gf2Engine(TowerPtr t) : tower(std::move(t)), algebra(std::make_shared<gf2::Algebra>(*tower)) {}

  const gf2::Algebra& ambient() const { return *algebra; }
  std::size_t dim() const { return algebra->dim(); }
  bool finite() const { return true; }
  std::optional<std::uint64_t> field_order() const { return 2; }
  std::vector<Space> all(std::uint64_t cap) const { return gf2::enumerate_subspaces(*algebra, cap); }
  Space draw(std::mt19937_64& rng, std::size_t d, unsigned) const { return gf2::random_subspace(*algebra, rng, d); }
  Space draw_with_one(std::mt19937_64& rng, std::size_t d, unsigned) const {
    return gf2::random_subspace_with_one(*algebra, rng, d);
  }
  Elem element(std::mt19937_64& rng, unsigned) const { return gf2::random_element(*algebra, rng); }
  Elem prime_combination(const Space& x, std::mt19937_64& rng) const {
    gf2::Mask out = 0;
    for (gf2::Mask r : x.rows())
      if (rng() & 1) out ^= r;
    return {out};
  }
  Space span_of(const std::vector<Elem>& v) const { return gf2::span(*algebra, v); }
  Space zero() const { return gf2::zero_space(*algebra); }
  Elem one() const { return algebra->one(); }
  Elem basis(std::size_t i) const { return algebra->basis(i); }

  std::vector<Ctx> sigmas(const SuiteOptions& o) const {
    std::vector<Ctx> out;
    for (std::size_t i = 0; i < o.sigmas.size(); ++i) {
      const auto& text = o.sigmas[i];
      if (text.size() != dim())
        throw Error(ErrorCode::Parse, "sigma #" + std::to_string(i) + " needs " + std::to_string(dim()) + " coordinates");
      gf2::Mask m = 0;
      for (std::size_t k = 0; k < text.size(); ++k)
        if (!parse_scalar(tower->base(), text[k]).is_zero()) m |= gf2::Mask{1} << k;
      if (!m) throw Error(ErrorCode::Parse, "sigma #" + std::to_string(i) + " is the zero form");
      out.emplace_back(*algebra, m);
    }
    gf2::Mask first = 0;
    const auto def = tower->default_sigma();
    for (std::size_t k = 0; k < def.size(); ++k)
      if (!def[k].is_zero()) first |= gf2::Mask{1} << k;
    for (auto& c : gf2::sigma_family(*algebra, o.sigma_count, o.seed, first))
      if (out.size() < std::max(o.sigma_count, o.sigmas.size())) out.push_back(std::move(c));
    return out;
  }
  std::vector<std::string> sigma_text(const Ctx& c) const {
    std::string line;
    for (std::size_t i = 0; i < dim(); ++i) line += std::string(i ? "," : "") + ((c.sigma() >> i) & 1 ? "1" : "0");
    return {line};
  }
};

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) { return lo + rng() % (hi - lo + 1); }
bool coin(std::mt19937_64& rng, unsigned one_in) { return rng() % one_in == 0; }

// ---------------------------------------------------------------------------
// Instances and plans.

struct Instance {
  std::map<std::string, CheckTally> checks;
  std::vector<Violation> violations;  // capped
  std::uint64_t violation_total = 0;
  std::map<std::string, std::uint64_t> counters;
  ojson detail;  // null unless the suite keeps per-instance details
  Named inputs;
};

class Recorder {
 public:
  Recorder(Instance& in, std::size_t cap) : in_(in), cap_(cap) {}

  void vacuous(const std::string& check, std::uint64_t n = 1) { in_.checks[check].vacuous += n; }
  void checked(const std::string& check, std::uint64_t n = 1) { in_.checks[check].checked += n; }
  // Records one evaluation; witness() is only called on failure.
  template <class W>
  void outcome(const std::string& check, bool hypothesis, bool ok, W&& witness) {
    auto& t = in_.checks[check];
    if (!hypothesis) {
      ++t.vacuous;
      return;
    }
    ++t.checked;
    if (ok) return;
    ++t.violations;
    fail(witness());
  }
  void fail(Violation v) {
    ++in_.violation_total;
    if (in_.violations.size() < cap_) in_.violations.push_back(std::move(v));
  }
  // A violation found by a check that tallied itself.
  void add_violations(const std::string& check, std::uint64_t checks, std::vector<Violation> vs) {
    auto& t = in_.checks[check];
    t.checked += checks;
    t.violations += vs.size();
    for (auto& v : vs) fail(std::move(v));
  }

 private:
  Instance& in_;
  std::size_t cap_;
};

class Plan {
 public:
  virtual ~Plan() = default;
  virtual Instance run(std::uint64_t index, bool describe) const = 0;
  virtual void summarize(const std::vector<Instance>&, ojson&) const {}

  std::string mode = "random";
  std::string note;
  std::uint64_t count = 0;
};

// Wraps an instance so that errors become violations.
Instance guarded(const Plan& plan, std::uint64_t index, bool describe) {
  try {
    return plan.run(index, describe);
  } catch (const std::exception& e) {
    Instance in;
    in.checks["exception"].checked = 1;
    in.checks["exception"].violations = 1;
    in.violation_total = 1;
    in.violations.push_back({"exception", e.what(), {}});
    return in;
  }
}

template <class E>
bool exhaustive_allowed(const E& e, const SuiteOptions& o) {
  if (o.force_random || !e.finite()) return false;
  const auto q = e.field_order();
  if (!q) return false;
  const auto n = count_subspaces(*q, e.dim());
  return n && *n <= std::min(o.exhaustive_limit, enumeration_cap(o.max_enum));
}

template <class E>
bool enumerable(const E& e, const SuiteOptions& o) {
  if (!e.finite()) return false;
  const auto q = e.field_order();
  if (!q) return false;
  const auto n = count_subspaces(*q, e.dim());
  return n && *n <= enumeration_cap(o.max_enum);
}

template <class Sp>
std::vector<Sp> containing_one(const std::vector<Sp>& all) {
  std::vector<Sp> out;
  for (const auto& x : all)
    if (x.contains(x.ambient().one())) out.push_back(x);
  return out;
}

template <class Sp>
std::vector<Sp> nonzero(const std::vector<Sp>& all) {
  std::vector<Sp> out;
  for (const auto& x : all)
    if (!x.is_zero()) out.push_back(x);
  return out;
}

// Random-mode inputs: the form index and the named spaces, S first.
template <class Sp>
struct Inputs {
  std::size_t sigma = 0;
  std::vector<std::pair<std::string, Sp>> spaces;

  const Sp& at(std::string_view name) const {
    for (const auto& [n, s] : spaces)
      if (n == name) return s;
    throw Error(ErrorCode::Parse, "missing input " + std::string(name));
  }
};

// Plans whose random instances are a pure function of drawn inputs; these are
// the ones hunt can shrink.
template <class E>
class SampledPlan : public Plan {
 public:
  using Sp = typename E::Space;

  virtual Inputs<Sp> draw(std::uint64_t index) const = 0;
  // False when the inputs break the suite's preconditions.
  virtual bool admissible(const Inputs<Sp>& in) const = 0;
  virtual void evaluate(const Inputs<Sp>& in, Instance& out, Recorder& rec) const = 0;

  Named describe_inputs(const Inputs<Sp>& in) const {
    Named out;
    for (const auto& [n, s] : in.spaces) out.push_back(named(n, s));
    if (!sigmas_.empty()) out.emplace_back("sigma", engine_.sigma_text(sigmas_[in.sigma]));
    return out;
  }

  Instance run_inputs(const Inputs<Sp>& in, bool describe) const {
    Instance out;
    Recorder rec(out, cap_);
    evaluate(in, out, rec);
    if (describe) out.inputs = describe_inputs(in);
    return out;
  }

 protected:
  SampledPlan(E engine, const SuiteOptions& o) : engine_(std::move(engine)), o_(o), cap_(o.max_violations) {}

  Named witness(const Inputs<Sp>& in) const { return describe_inputs(in); }

  E engine_;
  SuiteOptions o_;
  std::size_t cap_;
  std::vector<typename E::Ctx> sigmas_;
};

// ---------------------------------------------------------------------------
// lemmas

template <class E>
class LemmaPlan : public SampledPlan<E> {
 public:
  using Sp = typename E::Space;
  using Base = SampledPlan<E>;
  using Base::engine_, Base::o_, Base::cap_, Base::sigmas_;

  LemmaPlan(E e, const SuiteOptions& o) : Base(std::move(e), o) {
    sigmas_ = engine_.sigmas(o);
    if (sigmas_.empty()) {
      this->count = 1;
      return;
    }
    if (exhaustive_allowed(engine_, o)) {
      this->mode = "exhaustive";
      all_ = engine_.all(enumeration_cap(o.max_enum));
      with_one_ = containing_one(all_);
      this->count = with_one_.size() * sigmas_.size();
    } else {
      this->count = o.samples.value_or(1000);
    }
  }

  Instance run(std::uint64_t index, bool describe) const override {
    if (sigmas_.empty()) {
      Instance out;
      Recorder(out, cap_).outcome("nondegenerate_form", true, false, [] {
        return Violation{"nondegenerate_form", "every candidate form sigma(xy) is degenerate, so L is not a field", {}};
      });
      return out;
    }
    if (this->mode == "random") return this->run_inputs(draw(index), describe);
    Instance out;
    Recorder rec(out, cap_);
    const std::size_t si = index / sigmas_.size(), ci = index % sigmas_.size();
    const Sp& s = with_one_[si];
    const auto& ctx = sigmas_[ci];
    std::vector<LemmaFacts<Sp>> facts;
    facts.reserve(all_.size());
    for (const auto& x : all_) facts.push_back(lemma_facts(ctx, s, x));
    auto base_witness = [&](std::size_t xi, std::optional<std::size_t> yi) {
      Named w{named("S", s), named("X", all_[xi])};
      if (yi) w.push_back(named("Y", all_[*yi]));
      w.emplace_back("sigma", engine_.sigma_text(ctx));
      return w;
    };
    for (std::size_t xi = 0; xi < all_.size(); ++xi) {
      LemmaRow row{};
      single_lemmas(s, facts[xi], row);
      for (std::size_t l = 0; l < kFirstPairLemma; ++l)
        rec.outcome(std::string(kLemmaNames[l]), row[l].hypothesis, row[l].conclusion, [&] {
          return Violation{std::string(kLemmaNames[l]), std::string(kLemmaStatements[l]), base_witness(xi, {})};
        });
    }
    for (std::size_t xi = 0; xi < all_.size(); ++xi)
      for (std::size_t yi = 0; yi < all_.size(); ++yi) {
        LemmaRow row{};
        pair_lemmas(ctx, s, facts[xi], facts[yi], row);
        for (std::size_t l = kFirstPairLemma; l < kLemmaCount; ++l)
          rec.outcome(std::string(kLemmaNames[l]), row[l].hypothesis, row[l].conclusion, [&] {
            return Violation{std::string(kLemmaNames[l]), std::string(kLemmaStatements[l]), base_witness(xi, yi)};
          });
      }
    if (describe) out.inputs = {named("S", s), {"sigma", engine_.sigma_text(ctx)}};
    return out;
  }

  Inputs<Sp> draw(std::uint64_t index) const override {
    auto rng = instance_rng(o_.seed, index);
    const std::size_t m = engine_.dim();
    const unsigned deg = o_.coefficient_degree;
    Inputs<Sp> in;
    in.sigma = sigmas_.empty() ? 0 : rng() % sigmas_.size();
    const Sp s = engine_.draw_with_one(rng, pick(rng, 1, m), deg);
    Sp x = engine_.draw(rng, pick(rng, 0, m), deg);
    Sp y = engine_.draw(rng, pick(rng, 0, m), deg);
    if (coin(rng, 3)) {
      const auto v = engine_.element(rng, deg);
      x = sum(x, engine_.span_of({v}));
      y = sum(y, engine_.span_of({v}));
    }
    if (coin(rng, 3)) x = saturate(s, x);
    if (coin(rng, 3)) y = saturate(s, y);
    in.spaces = {{"S", s}, {"X", x}, {"Y", y}};
    return in;
  }

  bool admissible(const Inputs<Sp>& in) const override {
    const Sp& s = in.at("S");
    return s.contains(s.ambient().one());
  }

  void evaluate(const Inputs<Sp>& in, Instance&, Recorder& rec) const override {
    if (sigmas_.empty()) {
      rec.outcome("nondegenerate_form", true, false, [&] {
        return Violation{"nondegenerate_form", "every candidate form sigma(xy) is degenerate, so L is not a field",
                         this->witness(in)};
      });
      return;
    }
    const LemmaRow row = lemma_suite(sigmas_[in.sigma], in.at("S"), in.at("X"), in.at("Y"));
    for (std::size_t l = 0; l < kLemmaCount; ++l)
      rec.outcome(std::string(kLemmaNames[l]), row[l].hypothesis, row[l].conclusion, [&] {
        return Violation{std::string(kLemmaNames[l]), std::string(kLemmaStatements[l]), this->witness(in)};
      });
  }

 private:
  std::vector<Sp> all_, with_one_;
};

// ---------------------------------------------------------------------------
// submodularity

template <class E>
class SubmodularityPlan : public SampledPlan<E> {
 public:
  using Sp = typename E::Space;
  using Base = SampledPlan<E>;
  using Base::engine_, Base::o_, Base::cap_;

  SubmodularityPlan(E e, const SuiteOptions& o) : Base(std::move(e), o) {
    if (exhaustive_allowed(engine_, o)) {
      this->mode = "exhaustive";
      all_ = engine_.all(enumeration_cap(o.max_enum));
      with_one_ = containing_one(all_);
      this->count = with_one_.size();
    } else {
      this->count = o.samples.value_or(10'000);
    }
  }

  Instance run(std::uint64_t index, bool describe) const override {
    if (this->mode == "random") return this->run_inputs(draw(index), describe);
    Instance out;
    Recorder rec(out, cap_);
    const Sp& s = with_one_[index];
    std::vector<std::size_t> bd;
    for (const auto& x : all_) bd.push_back(boundary(s, x));
    for (std::size_t xi = 0; xi < all_.size(); ++xi)
      for (std::size_t yi = 0; yi < all_.size(); ++yi) {
        const auto& x = all_[xi];
        const auto& y = all_[yi];
        const bool ok = boundary(s, sum(x, y)) + boundary(s, intersect(x, y)) <= bd[xi] + bd[yi];
        rec.outcome("submodularity", true, ok, [&] {
          return Violation{"submodularity", "d(X+Y) + d(X n Y) > dX + dY",
                           {named("S", s), named("X", x), named("Y", y)}};
        });
      }
    if (describe) out.inputs = {named("S", s)};
    return out;
  }

  Inputs<Sp> draw(std::uint64_t index) const override {
    auto rng = instance_rng(o_.seed, index);
    const std::size_t m = engine_.dim();
    const unsigned deg = o_.coefficient_degree;
    Inputs<Sp> in;
    const Sp s = engine_.draw_with_one(rng, pick(rng, 1, m), deg);
    Sp x = engine_.draw(rng, pick(rng, 0, m), deg);
    Sp y = engine_.draw(rng, pick(rng, 0, m), deg);
    if (coin(rng, 2)) {
      const Sp shared = engine_.draw(rng, pick(rng, 1, m), deg);
      x = sum(x, shared);
      y = sum(y, shared);
    }
    in.spaces = {{"S", s}, {"X", x}, {"Y", y}};
    return in;
  }

  bool admissible(const Inputs<Sp>& in) const override {
    const Sp& s = in.at("S");
    return s.contains(s.ambient().one());
  }

  void evaluate(const Inputs<Sp>& in, Instance&, Recorder& rec) const override {
    rec.outcome("submodularity", true, submodularity_holds(in.at("S"), in.at("X"), in.at("Y")), [&] {
      return Violation{"submodularity", "d(X+Y) + d(X n Y) > dX + dY", this->witness(in)};
    });
  }

 private:
  std::vector<Sp> all_, with_one_;
};

// ---------------------------------------------------------------------------
// hou_bound

template <class E>
class HouPlan : public SampledPlan<E> {
 public:
  using Sp = typename E::Space;
  using Base = SampledPlan<E>;
  using Base::engine_, Base::o_, Base::cap_;

  HouPlan(E e, const SuiteOptions& o) : Base(std::move(e), o) {
    if (exhaustive_allowed(engine_, o)) {
      this->mode = "exhaustive";
      nonzero_ = nonzero(engine_.all(enumeration_cap(o.max_enum)));
      this->count = nonzero_.size();
    } else {
      this->count = o.samples.value_or(engine_.finite() ? 10'000 : 500);
    }
  }

  Instance run(std::uint64_t index, bool describe) const override {
    if (this->mode == "random") return this->run_inputs(draw(index), describe);
    Instance out;
    Recorder rec(out, cap_);
    const Sp& s = nonzero_[index];
    for (const auto& t : nonzero_) record(s, t, rec, out, [&] { return Named{named("S", s), named("T", t)}; });
    if (describe) out.inputs = {named("S", s)};
    return out;
  }

  Inputs<Sp> draw(std::uint64_t index) const override {
    auto rng = instance_rng(o_.seed, index);
    const std::size_t m = engine_.dim();
    const unsigned deg = o_.coefficient_degree;
    Inputs<Sp> in;
    const Sp s = engine_.draw(rng, pick(rng, 1, m), deg);
    const Sp t = engine_.draw(rng, pick(rng, 1, m), deg);
    in.spaces = {{"S", s}, {"T", t}};
    return in;
  }

  bool admissible(const Inputs<Sp>& in) const override { return !in.at("S").is_zero() && !in.at("T").is_zero(); }

  void evaluate(const Inputs<Sp>& in, Instance& out, Recorder& rec) const override {
    record(in.at("S"), in.at("T"), rec, out, [&] { return this->witness(in); });
  }

 private:
  template <class W>
  void record(const Sp& s, const Sp& t, Recorder& rec, Instance& out, W&& witness) const {
    const HouReport r = check_hou_bound(s, t);
    if (r.deficient) {
      ++out.counters["deficient"];
      ++out.counters["deficient_stabilizer_dim_" + std::to_string(r.dim_h)];
    }
    rec.outcome("bound", true, r.bound_holds, [&] {
      return Violation{"bound", "dim ST < dim S + dim T - dim H(ST)", witness()};
    });
    rec.outcome("dichotomy", r.deficient, r.dichotomy_holds, [&] {
      return Violation{"dichotomy", "deficient ST with trivial stabilizer", witness()};
    });
    rec.outcome("stabilizer_subfield", true, r.stabilizer_is_subfield, [&] {
      return Violation{"stabilizer_subfield", "H(ST) is not a subfield", witness()};
    });
  }

  std::vector<Sp> nonzero_;
};

// ---------------------------------------------------------------------------
// kernel_chain

template <class Sp>
std::string chain_signature(const std::vector<Sp>& chain) {
  std::string out;
  for (std::size_t i = 0; i < chain.size(); ++i) out += (i ? ">" : "") + std::to_string(chain[i].dim());
  return out;
}

template <class E>
class KernelChainPlan : public Plan {
 public:
  using Sp = typename E::Space;

  KernelChainPlan(E e, const SuiteOptions& o) : engine_(std::move(e)), o_(o) {
    if (!engine_.finite()) {
      mode = "skipped";
      note = "cells are enumerated over finite bases only";
      return;
    }
    if (!enumerable(engine_, o)) {
      mode = "skipped";
      note = "subspace count exceeds the enumeration cap";
      return;
    }
    mode = "exhaustive";
    sigmas_ = engine_.sigmas(o);
    all_ = engine_.all(enumeration_cap(o.max_enum));
    for (const auto& s : containing_one(all_))
      if (s.dim() >= 2 && (o.s_dims.empty() || std::count(o.s_dims.begin(), o.s_dims.end(), s.dim())))
        candidates_.push_back(s);
    count = candidates_.size();
  }

  Instance run(std::uint64_t index, bool describe) const override {
    Instance out;
    Recorder rec(out, o_.max_violations);
    const Sp& s = candidates_[index];
    if (describe) out.inputs = {named("S", s)};
    if (stabilizer(s).dim() > 1 || !generated_subfield(s).is_full()) {
      rec.vacuous("kernel_chain");
      ++out.counters["not_admissible"];
      return out;
    }
    ++out.counters["admissible"];
    auto r = kernel_chain(s, all_, sigmas_, 1);
    rec.add_violations("kernel_chain", r.checks, std::move(r.violations));
    rec.outcome("complete", true, r.complete(), [&] {
      return Violation{"complete", "no kernel chain F_1 ... F_n", {named("S", s)}};
    });
    ++out.counters["chain:" + chain_signature(r.chain)];
    ++out.counters["cells:" + std::to_string(std::accumulate(r.cells_per_index.begin(), r.cells_per_index.end(),
                                                             std::size_t{0}))];
    return out;
  }

 private:
  E engine_;
  SuiteOptions o_;
  std::vector<typename E::Ctx> sigmas_;
  std::vector<Sp> all_, candidates_;
};

// ---------------------------------------------------------------------------
// one_sided

template <class E>
class OneSidedPlan : public Plan {
 public:
  using Sp = typename E::Space;

  OneSidedPlan(E e, const SuiteOptions& o) : engine_(std::move(e)), o_(o) {
    const std::size_t m = engine_.dim();
    if (engine_.finite() && !enumerable(engine_, o)) {
      mode = "skipped";
      note = "subspace count exceeds the enumeration cap";
      return;
    }
    if (engine_.finite() && !o.force_random) {
      mode = "exhaustive";
      const auto all = engine_.all(enumeration_cap(o.max_enum));
      ts_ = nonzero(all);
      for (const auto& s : containing_one(all))
        if (s.dim() >= 2 && (o.s_dims.empty() || std::count(o.s_dims.begin(), o.s_dims.end(), s.dim())))
          candidates_.push_back(s);
      count = candidates_.size();
      return;
    }
    if (m < 2) {
      mode = "skipped";
      note = "L = F has no deficient pairs";
      return;
    }
    std::vector<typename E::Elem> gens;
    for (std::size_t i = 0; i < std::min<std::size_t>(3, m); ++i) gens.push_back(engine_.basis(i));
    candidates_.push_back(engine_.span_of(gens));
    gens.clear();
    for (std::size_t i = 0; i < m; ++i) gens.push_back(engine_.basis(i));
    whole_ = engine_.span_of(gens);
    count = m >= 3 ? 2 : 1;
  }

  Instance run(std::uint64_t index, bool describe) const override {
    Instance out;
    Recorder rec(out, o_.max_violations);
    const unsigned jobs = 1;
    const std::uint64_t cap = enumeration_cap(o_.max_enum);
    if (mode == "exhaustive") {
      const Sp& s = candidates_[index];
      if (describe) out.inputs = {named("S", s)};
      tally(check_one_sided(s, ts_, jobs, cap), rec, out);
      return out;
    }
    auto rng = instance_rng(o_.seed, index);
    const Sp s = index < candidates_.size() ? candidates_[index] : draw_s(rng);
    if (describe) out.inputs = {named("S", s)};
    const Sp field = generated_subfield(s);
    const std::uint64_t target = o_.samples.value_or(200);
    std::vector<Sp> ts;
    std::uint64_t drawn = 0;
    for (; ts.size() < target && drawn < 20 * target; ++drawn) {
      const Sp t = draw_t(rng, field);
      if (t.is_zero()) continue;
      if (product(s, t).dim() + 1 < s.dim() + t.dim()) ts.push_back(t);
    }
    out.counters["drawn"] += drawn;
    if (ts.empty()) {
      rec.vacuous("one_sided");
      ++out.counters["no_deficient_t"];
      return out;
    }
    const auto r = check_one_sided(s, ts, jobs, cap);
    tally(r, rec, out);
    out.detail["S"] = s.serialize();
    out.detail["generated_field_dim"] = field.dim();
    out.detail["drawn"] = drawn;
    out.detail["deficient"] = r.deficient;
    out.detail["decompositions"] = r.decompositions;
    out.detail["k_source"] = to_string(r.source);
    out.detail["K"] = r.k ? ojson(r.k->serialize()) : ojson(nullptr);
    out.detail["k_is_intersection_of_stabilizers"] = r.k_is_minimal();
    return out;
  }

 private:
  // Half fully random, half t1 Y1 + t2 Y2 with Y_i inside F(S) spanned by
  // prime-field combinations of its basis.
  Sp draw_t(std::mt19937_64& rng, const Sp& field) const {
    const std::size_t m = engine_.dim();
    const unsigned deg = o_.coefficient_degree;
    if (coin(rng, 2)) return engine_.draw(rng, pick(rng, 1, m), deg);
    Sp t = engine_.zero();
    const std::size_t pieces = pick(rng, 1, 2);
    for (std::size_t p = 0; p < pieces; ++p) {
      const auto lead = engine_.element(rng, deg);
      if (lead.is_zero()) continue;
      std::vector<typename E::Elem> gens;
      const std::size_t k = pick(rng, 1, field.dim());
      for (std::size_t g = 0; g < k; ++g) gens.push_back(engine_.prime_combination(field, rng));
      t = sum(t, scale(lead, engine_.span_of(gens)));
    }
    return t;
  }

  // 1 plus up to three prime-field combinations of the basis of L.
  Sp draw_s(std::mt19937_64& rng) const {
    const std::size_t m = engine_.dim();
    const std::size_t d = pick(rng, 2, std::min<std::size_t>(4, m - 1));
    std::vector<typename E::Elem> gens = {engine_.one()};
    Sp s = engine_.span_of(gens);
    for (int tries = 0; s.dim() < d && tries < 64; ++tries) {
      gens.push_back(engine_.prime_combination(*whole_, rng));
      s = engine_.span_of(gens);
    }
    return s;
  }

  void tally(const OneSidedReport<Sp>& r, Recorder& rec, Instance& out) const {
    rec.add_violations("one_sided", r.checks, r.violations);
    ++out.counters[std::string("k_source:") + to_string(r.source)];
    if (r.k) ++out.counters["k_dim:" + std::to_string(r.k->dim())];
    if (r.k && r.k_minimal && !r.k_is_minimal()) ++out.counters["k_smaller_than_stabilizer_intersection"];
    if (r.proper_generated_field) ++out.counters["proper_generated_field"];
    out.counters["deficient_t"] += r.deficient;
    out.counters["decompositions"] += r.decompositions;
  }

  E engine_;
  SuiteOptions o_;
  std::vector<Sp> candidates_, ts_;
  std::optional<Sp> whole_;
};

// ---------------------------------------------------------------------------
// group

const std::vector<std::vector<std::uint32_t>>& group_list() {
  static const std::vector<std::vector<std::uint32_t>> list = [] {
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint32_t n = 1; n <= 12; ++n) out.push_back({n});
    out.push_back({2, 4});
    out.push_back({2, 2, 2});
    return out;
  }();
  return list;
}

std::vector<std::string> subset_text(const AbelianGroup& g, GroupMask m) {
  std::vector<std::string> out;
  for (GroupMask rest = m; rest; rest &= rest - 1) out.push_back(g.format(static_cast<std::size_t>(std::countr_zero(rest))));
  return out;
}

ojson side_json(const CorrespondenceSide& side) {
  ojson j;
  j["t_count"] = side.t_count;
  j["deficient"] = side.deficient;
  ojson sizes = ojson::object();
  for (const auto& [k, v] : side.stabilizer_sizes) sizes[std::to_string(k)] = v;
  j["stabilizer_sizes"] = sizes;
  return j;
}

template <class E>
class GroupPlan : public Plan {
 public:
  GroupPlan(E e, const SuiteOptions& o) : engine_(std::move(e)), o_(o) {
    mode = "exhaustive";
    count = group_list().size();
  }

  Instance run(std::uint64_t index, bool describe) const override {
    Instance out;
    Recorder rec(out, o_.max_violations);
    const AbelianGroup g(group_list()[index]);
    if (describe) out.inputs = {{"group", {g.name()}}};
    std::vector<GroupSubset> ts;
    for (GroupMask t = 1; t <= g.full_mask(); t += 2) ts.push_back(GroupSubset::from_mask(g, t));
    std::uint64_t pairs = 0, deficient = 0, deficient_sets = 0;
    for (const auto& s : ts) {
      for (const auto& t : ts) {
        ++pairs;
        const auto r = check_kneser_group(s, t);
        deficient += r.deficient;
        auto witness = [&] { return Named{{"group", {g.name()}}, {"S", subset_text(g, s.mask())}, {"T", subset_text(g, t.mask())}}; };
        rec.outcome("kneser_bound", true, r.bound_holds,
                    [&] { return Violation{"kneser_bound", "|S+T| < |S| + |T| - |H(S+T)|", witness()}; });
        rec.outcome("kneser_dichotomy", r.deficient, r.dichotomy_holds,
                    [&] { return Violation{"kneser_dichotomy", "deficient S+T with trivial stabilizer", witness()}; });
        rec.outcome("stabilizer_subgroup", true, r.stabilizer_is_subgroup,
                    [&] { return Violation{"stabilizer_subgroup", "H(S+T) is not a subgroup", witness()}; });
      }
      const auto b = check_balandraud(s, ts);
      if (b.deficient) ++deficient_sets;
      rec.outcome("balandraud", b.deficient > 0, b.holds, [&] {
        return Violation{"balandraud", "no nontrivial subgroup stabilizes every deficient S+T",
                         {{"group", {g.name()}}, {"S", subset_text(g, s.mask())}}};
      });
      if (b.h_min) ++out.counters["balandraud_h_min_size_" + std::to_string(b.h_min->size())];
    }
    out.detail["group"] = g.name();
    out.detail["subgroups"] = g.subgroups().size();
    out.detail["pairs"] = pairs;
    out.detail["deficient_pairs"] = deficient;
    out.detail["sets_with_deficient_t"] = deficient_sets;
    return out;
  }

  void summarize(const std::vector<Instance>&, ojson& details) const override {
    if (!enumerable(engine_, o_) || engine_.dim() < 2 || engine_.dim() > AbelianGroup::kTableOrder) return;
    const auto all = engine_.all(enumeration_cap(o_.max_enum));
    const auto s = engine_.span_of({engine_.one(), engine_.basis(1)});
    const auto r = check_group_correspondence(s, all);
    ojson j;
    j["S"] = s.serialize();
    j["group"] = r.group;
    j["group_S_size"] = r.group_s_size;
    j["field_side"] = side_json(r.field_side);
    j["group_side"] = side_json(r.group_side);
    details["correspondence"] = j;
  }

 private:
  E engine_;
  SuiteOptions o_;
};

// ---------------------------------------------------------------------------

template <class E>
std::unique_ptr<Plan> make_plan_for(SuiteKind kind, E engine, const SuiteOptions& o) {
  switch (kind) {
    case SuiteKind::lemmas: return std::make_unique<LemmaPlan<E>>(std::move(engine), o);
    case SuiteKind::submodularity: return std::make_unique<SubmodularityPlan<E>>(std::move(engine), o);
    case SuiteKind::hou_bound: return std::make_unique<HouPlan<E>>(std::move(engine), o);
    case SuiteKind::kernel_chain: return std::make_unique<KernelChainPlan<E>>(std::move(engine), o);
    case SuiteKind::one_sided: return std::make_unique<OneSidedPlan<E>>(std::move(engine), o);
    case SuiteKind::group: return std::make_unique<GroupPlan<E>>(std::move(engine), o);
  }
  throw Error(ErrorCode::Parse, "unknown suite");
}

std::unique_ptr<Plan> make_plan(SuiteKind kind, const TowerPtr& tower, const SuiteOptions& o) {
  if (engine_name(*tower) == "gf2") return make_plan_for(kind, Gf2Engine(tower), o);
  return make_plan_for(kind, GenericEngine{tower}, o);
}

void merge(SuiteResult& r, Instance& in, std::uint64_t index, std::size_t cap) {
  for (const auto& [name, t] : in.checks) {
    auto& dst = r.checks[name];
    dst.checked += t.checked;
    dst.vacuous += t.vacuous;
    dst.violations += t.violations;
  }
  r.violation_count += in.violation_total;
  for (auto& v : in.violations)
    if (r.violations.size() < cap) r.violations.push_back({index, std::move(v)});
}

ojson named_json(const Named& spaces) {
  ojson j = ojson::object();
  for (const auto& [n, rows] : spaces) j[n] = rows;
  return j;
}

ojson violation_json(const Violation& v) {
  ojson j;
  j["check"] = v.check;
  j["detail"] = v.detail;
  j["witness"] = named_json(v.spaces);
  return j;
}

ojson tower_header(const Tower& tower, const std::string& source) {
  ojson j;
  j["source"] = source;
  j["name"] = tower.spec().name;
  j["hash"] = tower.hash();
  j["base"] = tower.base().name();
  j["dim"] = tower.dim();
  j["labels"] = tower.spec().labels;
  return j;
}

std::string replay_command(const ReportContext& c, const SuiteOptions& o, SuiteKind kind, std::uint64_t index,
                           bool force_random) {
  std::string cmd = "kneserlab replay --tower " + c.tower_source + " --suite " + std::string(to_string(kind)) +
                    " --seed " + std::to_string(o.seed) + " --index " + std::to_string(index);
  if (o.samples) cmd += " --samples " + std::to_string(*o.samples);
  if (o.sigma_count != 3) cmd += " --sigma-count " + std::to_string(o.sigma_count);
  for (const auto& sigma : o.sigmas) {
    cmd += " --sigma ";
    for (std::size_t i = 0; i < sigma.size(); ++i) cmd += (i ? "," : "") + sigma[i];
  }
  if (o.coefficient_degree != 1) cmd += " --coefficient-degree " + std::to_string(o.coefficient_degree);
  if (!o.s_dims.empty()) {
    cmd += " --s-dims ";
    for (std::size_t i = 0; i < o.s_dims.size(); ++i) cmd += (i ? "," : "") + std::to_string(o.s_dims[i]);
  }
  if (o.max_enum != kDefaultEnumerationCap) cmd += " --max-enum " + std::to_string(o.max_enum);
  if (force_random) cmd += " --force-random";
  if (c.fault) cmd += " --inject-fault";
  return cmd;
}

ojson options_json(const SuiteOptions& o) {
  ojson j;
  j["samples"] = o.samples ? ojson(*o.samples) : ojson(nullptr);
  j["sigma_count"] = o.sigma_count;
  j["sigmas"] = o.sigmas;
  j["max_enum"] = enumeration_cap(o.max_enum);
  j["exhaustive_limit"] = o.exhaustive_limit;
  j["force_random"] = o.force_random;
  j["coefficient_degree"] = o.coefficient_degree;
  j["s_dims"] = o.s_dims;
  return j;
}

}  // namespace

SuiteResult run_suite(SuiteKind kind, const TowerPtr& tower, const SuiteOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SuiteResult r;
  r.kind = kind;
  const auto plan = make_plan(kind, tower, options);
  r.mode = plan->mode;
  r.note = plan->note;
  r.instances = plan->count;
  auto results = parallel_map<Instance>(plan->count, options.jobs,
                                        [&](std::size_t i) { return guarded(*plan, i, false); });
  std::map<std::string, std::uint64_t> counters;
  ojson per_instance = ojson::array();
  for (std::size_t i = 0; i < results.size(); ++i) {
    merge(r, results[i], i, options.max_violations);
    for (const auto& [k, v] : results[i].counters) counters[k] += v;
    if (!results[i].detail.is_null()) per_instance.push_back(results[i].detail);
  }
  for (const auto& [k, v] : counters) r.details[k] = v;
  if (!per_instance.empty()) r.details["instances"] = per_instance;
  try {
    plan->summarize(results, r.details);
  } catch (const std::exception& e) {
    ++r.checks["exception"].checked;
    ++r.checks["exception"].violations;
    ++r.violation_count;
    if (r.violations.size() < options.max_violations) r.violations.push_back({0, {"exception", e.what(), {}}});
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

InstanceReplay replay_instance(SuiteKind kind, const TowerPtr& tower, const SuiteOptions& options,
                               std::uint64_t index) {
  const auto plan = make_plan(kind, tower, options);
  if (index >= plan->count)
    throw Error(ErrorCode::Parse, "instance index " + std::to_string(index) + " is out of range (suite has " +
                                      std::to_string(plan->count) + ")");
  InstanceReplay out;
  out.kind = kind;
  out.mode = plan->mode;
  out.index = index;
  Instance in = guarded(*plan, index, true);
  out.inputs = std::move(in.inputs);
  out.checks = std::move(in.checks);
  out.violations = std::move(in.violations);
  return out;
}

namespace {

// Greedy shrink: drop one basis vector of one input at a time while the
// preconditions hold and a violation of the same check remains.
template <class E>
Violation minimize(const SampledPlan<E>& plan, Inputs<typename E::Space> in, const std::string& check) {
  using Sp = typename E::Space;
  auto fails = [&](const Inputs<Sp>& cand) -> std::optional<Violation> {
    if (!plan.admissible(cand)) return std::nullopt;
    try {
      Instance out = plan.run_inputs(cand, false);
      for (auto& v : out.violations)
        if (v.check == check) return v;
    } catch (const std::exception&) {
    }
    return std::nullopt;
  };
  std::optional<Violation> best = fails(in);
  if (!best) return {check, "violation did not reproduce", plan.describe_inputs(in)};
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 0; k < in.spaces.size(); ++k) {
      const auto basis = in.spaces[k].second.basis();
      for (std::size_t drop = 0; drop < basis.size(); ++drop) {
        auto rest = basis;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(drop));
        Inputs<Sp> cand = in;
        cand.spaces[k].second = span(in.spaces[k].second.ambient(), rest);
        if (auto v = fails(cand)) {
          in = std::move(cand);
          best = std::move(v);
          changed = true;
          break;
        }
      }
    }
  }
  return *best;
}

template <class E>
HuntResult hunt_with(E engine, const SuiteOptions& o, const HuntOptions& h) {
  SuiteOptions ro = o;
  ro.force_random = true;
  std::vector<std::unique_ptr<SampledPlan<E>>> plans;
  for (SuiteKind k : h.suites) {
    switch (k) {
      case SuiteKind::lemmas: plans.push_back(std::make_unique<LemmaPlan<E>>(engine, ro)); break;
      case SuiteKind::submodularity: plans.push_back(std::make_unique<SubmodularityPlan<E>>(engine, ro)); break;
      case SuiteKind::hou_bound: plans.push_back(std::make_unique<HouPlan<E>>(engine, ro)); break;
      default: throw Error(ErrorCode::Parse, "hunt runs only the randomized suites lemmas, submodularity, hou_bound");
    }
  }
  if (plans.empty()) throw Error(ErrorCode::Parse, "hunt needs at least one suite");
  HuntResult result;
  const std::uint64_t chunk = 256;
  for (std::uint64_t begin = 0; begin < h.budget; begin += chunk) {
    const std::uint64_t n = std::min(chunk, h.budget - begin);
    auto outcomes = parallel_map<std::optional<Violation>>(n, o.jobs, [&](std::size_t i) -> std::optional<Violation> {
      const std::uint64_t g = begin + i;
      const auto& plan = *plans[g % plans.size()];
      const Instance in = guarded(plan, g / plans.size(), false);
      if (in.violations.empty()) return std::nullopt;
      return in.violations.front();
    });
    for (std::size_t i = 0; i < n; ++i) {
      ++result.instances;
      if (!outcomes[i]) continue;
      const std::uint64_t g = begin + i;
      const auto& plan = *plans[g % plans.size()];
      HuntFinding f;
      f.kind = h.suites[g % plans.size()];
      f.index = g / plans.size();
      f.original = *outcomes[i];
      f.original.spaces = plan.describe_inputs(plan.draw(f.index));
      try {
        f.minimized = minimize(plan, plan.draw(f.index), f.original.check);
      } catch (const std::exception& e) {
        f.minimized = {f.original.check, std::string("could not shrink: ") + e.what(), f.original.spaces};
      }
      result.finding = std::move(f);
      return result;
    }
  }
  return result;
}

}  // namespace

HuntResult hunt(const TowerPtr& tower, const SuiteOptions& options, const HuntOptions& hunt_options) {
  if (engine_name(*tower) == "gf2") return hunt_with(Gf2Engine(tower), options, hunt_options);
  return hunt_with(GenericEngine{tower}, options, hunt_options);
}

nlohmann::ordered_json report_json(const Tower& tower, const SuiteOptions& options, const ReportContext& context,
                                   const std::vector<SuiteResult>& results) {
  ojson j;
  j["tool"] = "kneserlab";
  j["version"] = KNESERLAB_VERSION;
  j["command"] = "run";
  j["tower"] = tower_header(tower, context.tower_source);
  j["engine"] = engine_name(tower);
  j["seed"] = options.seed;
  j["fault_injected"] = context.fault;
  ojson names = ojson::array();
  for (auto k : context.suites) names.push_back(std::string(to_string(k)));
  j["suite"] = names;
  j["options"] = options_json(options);
  std::uint64_t instances = 0, checked = 0, vacuous = 0, violations = 0;
  ojson suites = ojson::array();
  for (const auto& r : results) {
    ojson s;
    s["suite"] = std::string(to_string(r.kind));
    s["theory"] = r.kind == SuiteKind::group ? "group" : "field";
    s["mode"] = r.mode;
    if (!r.note.empty()) s["note"] = r.note;
    s["instances"] = r.instances;
    ojson checks = ojson::object();
    for (const auto& [name, t] : r.checks) {
      checks[name] = {{"checked", t.checked}, {"vacuous", t.vacuous}, {"violations", t.violations}};
      checked += t.checked;
      vacuous += t.vacuous;
    }
    s["checks"] = checks;
    s["details"] = r.details;
    s["violation_count"] = r.violation_count;
    ojson vs = ojson::array();
    for (const auto& v : r.violations) {
      ojson w = violation_json(v.violation);
      w["index"] = v.index;
      w["replay"] = replay_command(context, options, r.kind, v.index, options.force_random);
      vs.push_back(std::move(w));
    }
    s["violations"] = vs;
    instances += r.instances;
    violations += r.violation_count;
    suites.push_back(std::move(s));
  }
  j["suites"] = suites;
  j["summary"] = {{"instances", instances},
                  {"checked", checked},
                  {"vacuous", vacuous},
                  {"violations", violations},
                  {"status", violations ? "violation" : "ok"}};
  return j;
}

std::string report_csv(const nlohmann::ordered_json& report) {
  std::ostringstream out;
  out << "suite,mode,check,checked,vacuous,violations\n";
  for (const auto& s : report.at("suites"))
    for (const auto& [name, t] : s.at("checks").items())
      out << s.at("suite").get<std::string>() << ',' << s.at("mode").get<std::string>() << ',' << name << ','
          << t.at("checked").get<std::uint64_t>() << ',' << t.at("vacuous").get<std::uint64_t>() << ','
          << t.at("violations").get<std::uint64_t>() << '\n';
  return out.str();
}

nlohmann::ordered_json hunt_json(const Tower& tower, const SuiteOptions& options, const ReportContext& context,
                                 const HuntResult& result) {
  ojson j;
  j["tool"] = "kneserlab";
  j["version"] = KNESERLAB_VERSION;
  j["command"] = "hunt";
  j["tower"] = tower_header(tower, context.tower_source);
  j["engine"] = engine_name(tower);
  j["seed"] = options.seed;
  j["fault_injected"] = context.fault;
  ojson names = ojson::array();
  for (auto k : context.suites) names.push_back(std::string(to_string(k)));
  j["suite"] = names;
  j["instances"] = result.instances;
  if (result.finding) {
    const auto& f = *result.finding;
    ojson w;
    w["suite"] = std::string(to_string(f.kind));
    w["index"] = f.index;
    w["replay"] = replay_command(context, options, f.kind, f.index, true);
    w["original"] = violation_json(f.original);
    w["minimized"] = violation_json(f.minimized);
    j["violation"] = w;
  } else {
    j["violation"] = nullptr;
  }
  j["summary"] = {{"instances", result.instances}, {"violations", result.finding ? 1 : 0},
                  {"status", result.finding ? "violation" : "ok"}};
  return j;
}

nlohmann::ordered_json replay_json(const Tower& tower, const SuiteOptions& options, const InstanceReplay& replay) {
  ojson j;
  j["tool"] = "kneserlab";
  j["version"] = KNESERLAB_VERSION;
  j["command"] = "replay";
  j["tower"] = tower_header(tower, tower.spec().name);
  j["seed"] = options.seed;
  j["suite"] = std::string(to_string(replay.kind));
  j["mode"] = replay.mode;
  j["index"] = replay.index;
  j["inputs"] = named_json(replay.inputs);
  std::uint64_t violations = 0;
  ojson checks = ojson::object();
  for (const auto& [name, t] : replay.checks) {
    checks[name] = {{"checked", t.checked}, {"vacuous", t.vacuous}, {"violations", t.violations}};
    violations += t.violations;
  }
  j["checks"] = checks;
  ojson vs = ojson::array();
  for (const auto& v : replay.violations) vs.push_back(violation_json(v));
  j["violations"] = vs;
  j["summary"] = {{"violations", violations}, {"status", violations ? "violation" : "ok"}};
  return j;
}

TowerPtr corrupt_tensor_entry(const Tower& tower, std::size_t i, std::size_t j, std::size_t k) {
  const std::size_t m = tower.dim();
  if (i >= m || j >= m || k >= m) throw Error(ErrorCode::Parse, "fault entry outside the tensor");
  TowerSpec spec = tower.spec();
  const Scalar one = Scalar::one(tower.base());
  spec.c(i, j, k) += one;
  if (i != j) spec.c(j, i, k) += one;
  spec.name += " (corrupted c[" + std::to_string(i) + "][" + std::to_string(j) + "][" + std::to_string(k) + "])";
  TowerOptions options;
  options.validate = false;
  return Tower::create(std::move(spec), options);
}

}  // namespace kneserlab
