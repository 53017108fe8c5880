#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "fo/rational.hpp"
#include "fo/source_model.hpp"
#include "fo/subset.hpp"

namespace fo {

// A parsed instance file.
//
// Bit-pool form:
//   {"users": [1,2,3], "model": "bit-pool",
//    "observations": {"1": ["a","b"], "2": ["b","c"], "3": []}}
// Entropy-table form ("users" optional; defaults to the sorted union of the
// entry subsets; the empty set defaults to 0, every other subset is required):
//   {"model": "entropy-table", "users": [1,2],
//    "entries": [{"subset": [1], "value": "5"}, {"subset": [2], "value": "3/2"}, ...]}
// Values are strings "p/q", integer strings, or JSON integers.
struct Instance {
  std::shared_ptr<const EntropyOracle> oracle;

  const GroundSet& ground() const { return oracle->ground(); }
};

// Throws ParseError with a field path (e.g. "entries[3].value") or the JSON
// parser's line/column position.
Instance parse_instance(std::string_view json_text);
Instance load_instance(const std::filesystem::path& path);

// Parses "1=4,2=2,3=1" into per-position values. Users not mentioned take
// `fallback`; unknown users and duplicates are ParseErrors.
std::vector<Rational> parse_user_values(std::string_view text, const GroundSet& ground,
                                        const Rational& fallback);

}  // namespace fo
