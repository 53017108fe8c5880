#include "fo/subset.hpp"

#include <algorithm>
#include <set>

#include "fo/errors.hpp"

namespace fo {

std::vector<int> Subset::positions() const {
  std::vector<int> out;
  out.reserve(size());
  for_each([&](int p) { out.push_back(p); });
  return out;
}

GroundSet::GroundSet(std::vector<int> users) : users_(std::move(users)) {
  if (users_.empty()) {
    throw DomainError("ground set must contain at least one user");
  }
  if (size() > kMaxUsers) {
    throw CapacityError("ground set has " + std::to_string(size()) + " users; at most " +
                        std::to_string(kMaxUsers) + " are supported");
  }
  std::set<int> seen;
  for (int u : users_) {
    if (u <= 0) throw DomainError("user identifiers must be positive, got " + std::to_string(u));
    if (!seen.insert(u).second) throw DomainError("duplicate user identifier " + std::to_string(u));
  }
}

GroundSet GroundSet::range(int n) {
  std::vector<int> users(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) users[static_cast<std::size_t>(i)] = i + 1;
  return GroundSet(std::move(users));
}

int GroundSet::position(int user) const {
  auto it = std::find(users_.begin(), users_.end(), user);
  if (it == users_.end()) throw DomainError("unknown user " + std::to_string(user));
  return static_cast<int>(it - users_.begin());
}

bool GroundSet::has_user(int user) const {
  return std::find(users_.begin(), users_.end(), user) != users_.end();
}

void GroundSet::check(Subset x) const {
  if (!contains(x)) {
    throw DomainError("subset is not contained in the ground set of " + std::to_string(size()) +
                      " users");
  }
}

Subset GroundSet::subset_of(std::span<const int> user_ids) const {
  Subset out;
  for (int u : user_ids) out = out.with(position(u));
  return out;
}

std::vector<int> GroundSet::user_ids(Subset x) const {
  check(x);
  std::vector<int> out;
  x.for_each([&](int p) { out.push_back(users_[static_cast<std::size_t>(p)]); });
  return out;
}

GroundSet GroundSet::restrict(Subset x) const { return GroundSet(user_ids(x)); }

std::string GroundSet::format(Subset x) const {
  std::string out = "{";
  bool first = true;
  for (int u : user_ids(x)) {
    if (!first) out += ",";
    out += std::to_string(u);
    first = false;
  }
  return out + "}";
}

Subset lift(Subset local, std::span<const int> parent_positions) {
  Subset out;
  local.for_each([&](int p) { out = out.with(parent_positions[static_cast<std::size_t>(p)]); });
  return out;
}

Subset project(Subset parent, std::span<const int> parent_positions) {
  Subset out;
  for (std::size_t k = 0; k < parent_positions.size(); ++k) {
    if (parent.contains(parent_positions[k])) out = out.with(static_cast<int>(k));
  }
  return out;
}

}  // namespace fo
