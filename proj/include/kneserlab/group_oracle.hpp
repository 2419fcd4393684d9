#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kneserlab/witness.hpp"

namespace kneserlab {

using GroupMask = std::uint64_t;

// Z_{n_1} x ... x Z_{n_k}. Elements are indexed in mixed radix with the first
// factor most significant, so index order is lexicographic tuple order.
class AbelianGroup {
 public:
  static constexpr std::size_t kMaxOrder = 64;
  static constexpr std::size_t kTableOrder = 14;  // translate table up to this size

  explicit AbelianGroup(std::vector<std::uint32_t> orders);

  const std::vector<std::uint32_t>& orders() const { return orders_; }
  std::size_t size() const { return size_; }
  GroupMask full_mask() const { return size_ == 64 ? ~GroupMask{0} : (GroupMask{1} << size_) - 1; }

  std::size_t add(std::size_t a, std::size_t b) const { return add_[a * size_ + b]; }
  std::size_t neg(std::size_t a) const { return neg_[a]; }
  std::vector<std::uint32_t> element(std::size_t index) const;
  std::size_t index(const std::vector<std::uint32_t>& tuple) const;

  // a + A for a subset mask A.
  GroupMask translate(std::size_t a, GroupMask m) const;

  // Every subgroup, by decreasing size then increasing mask.
  const std::vector<GroupMask>& subgroups() const { return subgroups_; }

  std::string name() const;               // "Z2xZ4"
  std::string format(std::size_t a) const;  // "3" or "(1,3)"

  bool operator==(const AbelianGroup& other) const { return orders_ == other.orders_; }

 private:
  std::vector<std::uint32_t> orders_;
  std::size_t size_ = 1;
  std::vector<std::uint8_t> add_;
  std::vector<std::uint8_t> neg_;
  std::vector<std::uint16_t> translates_;  // [a << size | mask] when size <= kTableOrder
  std::vector<GroupMask> subgroups_;
};

// Subset of a group; the group must outlive it.
class GroupSubset {
 public:
  GroupSubset(const AbelianGroup& group, const std::vector<std::size_t>& elements);
  static GroupSubset from_mask(const AbelianGroup& group, GroupMask mask);

  const AbelianGroup& group() const { return *group_; }
  GroupMask mask() const { return mask_; }
  std::size_t size() const;
  bool empty() const { return mask_ == 0; }
  bool contains(std::size_t a) const { return (mask_ >> a) & 1; }
  std::vector<std::size_t> elements() const;  // sorted
  std::string to_string() const;

  bool operator==(const GroupSubset& other) const { return *group_ == *other.group_ && mask_ == other.mask_; }

 private:
  GroupSubset(const AbelianGroup& group, GroupMask mask, bool) : group_(&group), mask_(mask) {}

  const AbelianGroup* group_;
  GroupMask mask_;
};

// Errors: GroupMismatch, EmptyInput.
GroupSubset sumset(const GroupSubset& s, const GroupSubset& t);
// {x : x + A = A}. Errors: EmptyInput.
GroupSubset group_stabilizer(const GroupSubset& a);

// Mask-level versions of the two operations above (no checks).
GroupMask sumset_mask(const AbelianGroup& g, GroupMask s, GroupMask t);
GroupMask stabilizer_mask(const AbelianGroup& g, GroupMask a);

struct KneserGroupReport {
  std::size_t size_s = 0, size_t = 0, size_st = 0, size_h = 0;
  bool deficient = false;        // |S+T| < |S| + |T| - 1
  bool bound_holds = true;       // |S+T| >= |S| + |T| - |H(S+T)|
  bool dichotomy_holds = true;   // not deficient, or H(S+T) != {0}
  bool stabilizer_is_subgroup = true;
  bool holds() const { return bound_holds && dichotomy_holds && stabilizer_is_subgroup; }
};

KneserGroupReport check_kneser_group(const GroupSubset& s, const GroupSubset& t);

struct BalandraudReport {
  std::size_t t_count = 0;
  std::size_t deficient = 0;
  std::optional<GroupSubset> h_max;  // first subgroup, by decreasing size, stabilizing every deficient S+T
  std::optional<GroupSubset> h_min;  // smallest nontrivial such subgroup
  bool holds = true;                 // no deficient T, or h_max exists
};

BalandraudReport check_balandraud(const GroupSubset& s, const std::vector<GroupSubset>& ts);

}  // namespace kneserlab
