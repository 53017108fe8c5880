#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fo {

// Every reference algorithm enumerates subsets, so ground sets stay small.
inline constexpr int kMaxUsers = 20;

// A subset of a ground set, stored as a bitmask over ground positions
// (position k is the k-th user of the GroundSet, not the user id).
class Subset {
 public:
  using Mask = std::uint32_t;

  constexpr Subset() = default;
  constexpr explicit Subset(Mask mask) : mask_(mask) {}

  static constexpr Subset singleton(int position) { return Subset(Mask{1} << position); }
  static constexpr Subset full(int size) {
    return Subset(size >= 32 ? ~Mask{0} : (Mask{1} << size) - 1);
  }

  constexpr Mask mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool contains(int position) const { return (mask_ >> position) & 1U; }
  constexpr bool is_subset_of(Subset other) const { return (mask_ & ~other.mask_) == 0; }
  constexpr Subset with(int position) const { return Subset(mask_ | (Mask{1} << position)); }
  constexpr Subset without(int position) const { return Subset(mask_ & ~(Mask{1} << position)); }
  // Lowest position in the subset; undefined for the empty subset.
  constexpr int first() const { return std::countr_zero(mask_); }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.mask_ | b.mask_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.mask_ & b.mask_); }
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.mask_ & ~b.mask_); }
  friend constexpr bool operator==(Subset, Subset) = default;
  friend constexpr auto operator<=>(Subset, Subset) = default;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (Mask m = mask_; m != 0; m &= m - 1) fn(std::countr_zero(m));
  }

  std::vector<int> positions() const;

 private:
  Mask mask_ = 0;
};

// Calls fn(sub) for every subset of `of`, including the empty set and `of` itself.
template <typename Fn>
void for_each_subset(Subset of, Fn&& fn) {
  const Subset::Mask full = of.mask();
  Subset::Mask sub = 0;
  while (true) {
    fn(Subset(sub));
    if (sub == full) break;
    sub = (sub - full) & full;
  }
}

// Ordered list of distinct positive user identifiers, 1 <= |V| <= kMaxUsers.
class GroundSet {
 public:
  explicit GroundSet(std::vector<int> users);
  // Users 1..n.
  static GroundSet range(int n);

  int size() const { return static_cast<int>(users_.size()); }
  const std::vector<int>& users() const { return users_; }
  int user(int position) const { return users_.at(position); }
  // Position of a user id; throws DomainError for unknown ids.
  int position(int user) const;
  bool has_user(int user) const;

  Subset full() const { return Subset::full(size()); }
  bool contains(Subset x) const { return x.is_subset_of(full()); }
  // Throws DomainError unless x is a subset of this ground set.
  void check(Subset x) const;

  Subset subset_of(std::span<const int> user_ids) const;
  std::vector<int> user_ids(Subset x) const;
  // Sub-ground-set made of the users in x, in ground order.
  GroundSet restrict(Subset x) const;
  std::string format(Subset x) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<int> users_;
};

// Maps a subset of a restricted ground set back into its parent's positions.
// `parent_positions[k]` is the parent position of local position k.
Subset lift(Subset local, std::span<const int> parent_positions);
// Inverse of lift on subsets of the embedded domain.
Subset project(Subset parent, std::span<const int> parent_positions);

}  // namespace fo
