#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "fo/rational.hpp"
#include "fo/subset.hpp"

namespace fo {

// Entropy oracle X -> H(Z_X) in bits. Implementations are immutable after
// construction, so evaluation is safe from any number of threads.
class EntropyOracle {
 public:
  virtual ~EntropyOracle() = default;

  virtual const GroundSet& ground() const = 0;

  // H(Z_X); throws DomainError if X is not a subset of the ground set.
  Rational entropy(Subset x) const;
  // H(Z_X | Z_Y) = H(Z_{X u Y}) - H(Z_Y).
  Rational conditional_entropy(Subset x, Subset y) const;

 protected:
  virtual Rational evaluate(Subset x) const = 0;
};

// Each user observes a set of labelled independent uniform bits; the joint
// entropy of a group is the number of distinct bits it holds.
class BitPoolSource final : public EntropyOracle {
 public:
  // observations[k] lists the labels seen by the user at ground position k.
  BitPoolSource(GroundSet ground, const std::vector<std::vector<std::string>>& observations);

  const GroundSet& ground() const override { return ground_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::vector<std::string> observed(int position) const;

 protected:
  Rational evaluate(Subset x) const override;

 private:
  GroundSet ground_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::uint64_t>> bits_;  // per user, bitset over labels_
};

// A user-supplied table of joint entropies, one value per subset (indexed by
// mask). Not validated on construction; see validate_polymatroid.
class ExplicitEntropyTable final : public EntropyOracle {
 public:
  ExplicitEntropyTable(GroundSet ground, std::vector<Rational> values);

  const GroundSet& ground() const override { return ground_; }
  const std::vector<Rational>& values() const { return values_; }

 protected:
  Rational evaluate(Subset x) const override;

 private:
  GroundSet ground_;
  std::vector<Rational> values_;
};

// The sub-source seen by the users of `block` only.
class RestrictedOracle final : public EntropyOracle {
 public:
  RestrictedOracle(std::shared_ptr<const EntropyOracle> parent, Subset block);

  const GroundSet& ground() const override { return ground_; }

 protected:
  Rational evaluate(Subset x) const override;

 private:
  std::shared_ptr<const EntropyOracle> parent_;
  GroundSet ground_;
  std::vector<int> parent_positions_;
};

struct PolymatroidViolation {
  enum class Kind { kNormalization, kMonotonicity, kSubmodularity };
  Kind kind;
  // Normalization: x = y = {}. Monotonicity: H(x) > H(y) with x = y - {i}.
  // Submodularity: H(x) + H(y) < H(x | y) + H(x & y).
  Subset x;
  Subset y;
  std::string description;
};

struct ValidationReport {
  std::vector<PolymatroidViolation> violations;
  bool valid() const { return violations.empty(); }
  bool has(PolymatroidViolation::Kind kind) const;
};

const char* to_string(PolymatroidViolation::Kind kind);

// Checks H(empty) = 0, monotonicity and submodularity. Submodularity uses the
// equivalent local form H(X+i) + H(X+j) >= H(X+i+j) + H(X) over all X, i, j.
ValidationReport validate_polymatroid(const EntropyOracle& oracle);

}  // namespace fo
