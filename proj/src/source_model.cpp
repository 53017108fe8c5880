#include "fo/source_model.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "fo/errors.hpp"

namespace fo {

Rational EntropyOracle::entropy(Subset x) const {
  ground().check(x);
  return evaluate(x);
}

Rational EntropyOracle::conditional_entropy(Subset x, Subset y) const {
  ground().check(x);
  ground().check(y);
  return evaluate(x | y) - evaluate(y);
}

BitPoolSource::BitPoolSource(GroundSet ground,
                             const std::vector<std::vector<std::string>>& observations)
    : ground_(std::move(ground)) {
  if (static_cast<int>(observations.size()) != ground_.size()) {
    throw DomainError("bit pool needs one observation list per user");
  }
  std::map<std::string, std::size_t> index;
  for (const auto& seen : observations) {
    for (const auto& label : seen) index.emplace(label, 0);
  }
  labels_.reserve(index.size());
  for (auto& [label, slot] : index) {
    slot = labels_.size();
    labels_.push_back(label);
  }
  const std::size_t words = (labels_.size() + 63) / 64;
  bits_.assign(observations.size(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t u = 0; u < observations.size(); ++u) {
    for (const auto& label : observations[u]) {
      const std::size_t b = index.at(label);
      bits_[u][b / 64] |= std::uint64_t{1} << (b % 64);
    }
  }
}

std::vector<std::string> BitPoolSource::observed(int position) const {
  std::vector<std::string> out;
  const auto& words = bits_.at(static_cast<std::size_t>(position));
  for (std::size_t b = 0; b < labels_.size(); ++b) {
    if ((words[b / 64] >> (b % 64)) & 1U) out.push_back(labels_[b]);
  }
  return out;
}

Rational BitPoolSource::evaluate(Subset x) const {
  const std::size_t words = (labels_.size() + 63) / 64;
  long count = 0;
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t acc = 0;
    x.for_each([&](int p) { acc |= bits_[static_cast<std::size_t>(p)][w]; });
    count += std::popcount(acc);
  }
  return Rational(count);
}

ExplicitEntropyTable::ExplicitEntropyTable(GroundSet ground, std::vector<Rational> values)
    : ground_(std::move(ground)), values_(std::move(values)) {
  const std::size_t expected = std::size_t{1} << ground_.size();
  if (values_.size() != expected) {
    throw DomainError("entropy table needs " + std::to_string(expected) + " values, got " +
                      std::to_string(values_.size()));
  }
}

Rational ExplicitEntropyTable::evaluate(Subset x) const { return values_[x.mask()]; }

RestrictedOracle::RestrictedOracle(std::shared_ptr<const EntropyOracle> parent, Subset block)
    : parent_(std::move(parent)),
      ground_(parent_->ground().restrict(block)),
      parent_positions_(block.positions()) {}

Rational RestrictedOracle::evaluate(Subset x) const {
  return parent_->entropy(lift(x, parent_positions_));
}

bool ValidationReport::has(PolymatroidViolation::Kind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const PolymatroidViolation& v) { return v.kind == kind; });
}

const char* to_string(PolymatroidViolation::Kind kind) {
  switch (kind) {
    case PolymatroidViolation::Kind::kNormalization:
      return "normalization";
    case PolymatroidViolation::Kind::kMonotonicity:
      return "monotonicity";
    case PolymatroidViolation::Kind::kSubmodularity:
      return "submodularity";
  }
  return "unknown";
}

ValidationReport validate_polymatroid(const EntropyOracle& oracle) {
  const GroundSet& ground = oracle.ground();
  const int n = ground.size();
  std::vector<Rational> h(std::size_t{1} << n);
  for_each_subset(ground.full(), [&](Subset x) { h[x.mask()] = oracle.entropy(x); });

  ValidationReport report;
  using Kind = PolymatroidViolation::Kind;
  if (h[0] != 0) {
    report.violations.push_back({Kind::kNormalization, Subset{}, Subset{},
                                 "H({}) = " + to_string(h[0]) + ", expected 0"});
  }
  for_each_subset(ground.full(), [&](Subset x) {
    for (int i = 0; i < n; ++i) {
      if (x.contains(i)) continue;
      const Subset xi = x.with(i);
      if (h[x.mask()] > h[xi.mask()]) {
        report.violations.push_back(
            {Kind::kMonotonicity, x, xi,
             "H(" + ground.format(x) + ") = " + to_string(h[x.mask()]) + " > H(" +
                 ground.format(xi) + ") = " + to_string(h[xi.mask()])});
      }
      for (int j = i + 1; j < n; ++j) {
        if (x.contains(j)) continue;
        const Subset xj = x.with(j);
        const Subset xij = xi.with(j);
        if (h[xi.mask()] + h[xj.mask()] < h[xij.mask()] + h[x.mask()]) {
          report.violations.push_back(
              {Kind::kSubmodularity, xi, xj,
               "H(" + ground.format(xi) + ") + H(" + ground.format(xj) + ") < H(" +
                   ground.format(xij) + ") + H(" + ground.format(x) + ")"});
        }
      }
    }
  });
  return report;
}

}  // namespace fo
