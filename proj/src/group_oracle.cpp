#include "kneserlab/group_oracle.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "kneserlab/error.hpp"

namespace kneserlab {

AbelianGroup::AbelianGroup(std::vector<std::uint32_t> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) throw Error(ErrorCode::Parse, "a group needs at least one cyclic factor");
  for (auto n : orders_) {
    if (n == 0) throw Error(ErrorCode::Parse, "cyclic orders must be positive");
    size_ *= n;
    if (size_ > kMaxOrder) throw Error(ErrorCode::Unsupported, "group order above 64");
  }
  add_.resize(size_ * size_);
  neg_.resize(size_);
  for (std::size_t a = 0; a < size_; ++a) {
    const auto ta = element(a);
    for (std::size_t b = 0; b < size_; ++b) {
      auto tb = element(b);
      for (std::size_t k = 0; k < tb.size(); ++k) tb[k] = (tb[k] + ta[k]) % orders_[k];
      add_[a * size_ + b] = static_cast<std::uint8_t>(index(tb));
      if (add_[a * size_ + b] == 0) neg_[a] = static_cast<std::uint8_t>(b);
    }
  }
  if (size_ <= kTableOrder) {
    const std::size_t masks = std::size_t{1} << size_;
    translates_.resize(size_ * masks);
    for (std::size_t a = 0; a < size_; ++a)
      for (std::size_t m = 0; m < masks; ++m) {
        std::uint16_t out = 0;
        for (std::size_t x = 0; x < size_; ++x)
          if ((m >> x) & 1) out |= static_cast<std::uint16_t>(1u << add(a, x));
        translates_[(a << size_) | m] = out;
      }
  }

  std::set<GroupMask> found;
  for (std::size_t a = 0; a < size_; ++a) {
    GroupMask h = 1, x = 0;
    do {
      x = add(x, a);
      h |= GroupMask{1} << x;
    } while (x != 0);
    found.insert(h);
  }
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<GroupMask> current(found.begin(), found.end());
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j)
        grew |= found.insert(sumset_mask(*this, current[i], current[j])).second;
  }
  subgroups_.assign(found.begin(), found.end());
  std::stable_sort(subgroups_.begin(), subgroups_.end(),
                   [](GroupMask a, GroupMask b) { return std::popcount(a) > std::popcount(b); });
}

std::vector<std::uint32_t> AbelianGroup::element(std::size_t index) const {
  std::vector<std::uint32_t> t(orders_.size());
  for (std::size_t k = orders_.size(); k-- > 0;) {
    t[k] = static_cast<std::uint32_t>(index % orders_[k]);
    index /= orders_[k];
  }
  return t;
}

std::size_t AbelianGroup::index(const std::vector<std::uint32_t>& tuple) const {
  if (tuple.size() != orders_.size()) throw Error(ErrorCode::GroupMismatch, "tuple length differs from group rank");
  std::size_t i = 0;
  for (std::size_t k = 0; k < orders_.size(); ++k) i = i * orders_[k] + tuple[k] % orders_[k];
  return i;
}

GroupMask AbelianGroup::translate(std::size_t a, GroupMask m) const {
  if (!translates_.empty()) return translates_[(a << size_) | m];
  GroupMask out = 0;
  for (GroupMask rest = m; rest; rest &= rest - 1) out |= GroupMask{1} << add(a, std::countr_zero(rest));
  return out;
}

std::string AbelianGroup::name() const {
  std::string out;
  for (std::size_t k = 0; k < orders_.size(); ++k) out += (k ? "xZ" : "Z") + std::to_string(orders_[k]);
  return out;
}

std::string AbelianGroup::format(std::size_t a) const {
  if (orders_.size() == 1) return std::to_string(a);
  std::string out = "(";
  const auto t = element(a);
  for (std::size_t k = 0; k < t.size(); ++k) out += (k ? "," : "") + std::to_string(t[k]);
  return out + ")";
}

GroupSubset GroupSubset::from_mask(const AbelianGroup& group, GroupMask mask) {
  if (mask & ~group.full_mask()) throw Error(ErrorCode::GroupMismatch, "subset mask outside the group");
  return GroupSubset(group, mask, true);
}

GroupSubset::GroupSubset(const AbelianGroup& group, const std::vector<std::size_t>& elements)
    : group_(&group), mask_(0) {
  for (auto a : elements) {
    if (a >= group.size()) throw Error(ErrorCode::GroupMismatch, "element index outside the group");
    mask_ |= GroupMask{1} << a;
  }
}

std::size_t GroupSubset::size() const { return static_cast<std::size_t>(std::popcount(mask_)); }

std::vector<std::size_t> GroupSubset::elements() const {
  std::vector<std::size_t> out;
  for (GroupMask rest = mask_; rest; rest &= rest - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
  return out;
}

std::string GroupSubset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (auto a : elements()) {
    out += (first ? "" : ",") + group_->format(a);
    first = false;
  }
  return out + "}";
}

GroupMask sumset_mask(const AbelianGroup& g, GroupMask s, GroupMask t) {
  GroupMask out = 0;
  for (GroupMask rest = s; rest; rest &= rest - 1) out |= g.translate(std::countr_zero(rest), t);
  return out;
}

GroupMask stabilizer_mask(const AbelianGroup& g, GroupMask a) {
  GroupMask out = 0;
  for (std::size_t x = 0; x < g.size(); ++x)
    if (g.translate(x, a) == a) out |= GroupMask{1} << x;
  return out;
}

GroupSubset sumset(const GroupSubset& s, const GroupSubset& t) {
  if (!(s.group() == t.group())) throw Error(ErrorCode::GroupMismatch, "sumset of subsets of different groups");
  if (s.empty() || t.empty()) throw Error(ErrorCode::EmptyInput, "sumset of an empty subset");
  return GroupSubset::from_mask(s.group(), sumset_mask(s.group(), s.mask(), t.mask()));
}

GroupSubset group_stabilizer(const GroupSubset& a) {
  if (a.empty()) throw Error(ErrorCode::EmptyInput, "stabilizer of the empty subset");
  return GroupSubset::from_mask(a.group(), stabilizer_mask(a.group(), a.mask()));
}

KneserGroupReport check_kneser_group(const GroupSubset& s, const GroupSubset& t) {
  const AbelianGroup& g = s.group();
  const GroupSubset st = sumset(s, t);
  const GroupMask h = stabilizer_mask(g, st.mask());
  KneserGroupReport r;
  r.size_s = s.size();
  r.size_t = t.size();
  r.size_st = st.size();
  r.size_h = static_cast<std::size_t>(std::popcount(h));
  r.deficient = r.size_st + 1 < r.size_s + r.size_t;
  r.bound_holds = r.size_st + r.size_h >= r.size_s + r.size_t;
  r.dichotomy_holds = !r.deficient || r.size_h > 1;
  const auto& subs = g.subgroups();
  r.stabilizer_is_subgroup = std::find(subs.begin(), subs.end(), h) != subs.end();
  return r;
}

BalandraudReport check_balandraud(const GroupSubset& s, const std::vector<GroupSubset>& ts) {
  const AbelianGroup& g = s.group();
  BalandraudReport r;
  r.t_count = ts.size();
  GroupMask common = g.full_mask();
  for (const auto& t : ts) {
    const GroupSubset st = sumset(s, t);
    if (st.size() + 1 >= s.size() + t.size()) continue;
    ++r.deficient;
    common &= stabilizer_mask(g, st.mask());
  }
  if (r.deficient == 0) return r;
  for (GroupMask h : g.subgroups()) {
    if (h == 1 || (h & ~common)) continue;
    if (!r.h_max) r.h_max = GroupSubset::from_mask(g, h);
    r.h_min = GroupSubset::from_mask(g, h);
  }
  r.holds = r.h_max.has_value();
  return r;
}

}  // namespace kneserlab
