#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "accnote/data_model.hpp"

namespace accnote::agents {

class PartitionParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Index sets keyed by category name, in the prompt's declared key order.
struct KeyedPartition {
  std::vector<std::string> keys;
  std::vector<IndexSet> sets;

  /// Throws std::out_of_range for an unknown key.
  const IndexSet& at(std::string_view key) const;
};

/// Reads a "JSON style" category → option-numbers answer.
///
/// The first {...} object in `raw` is used; code fences, surrounding prose,
/// unquoted or smart-quoted keys and key case are tolerated. The result is
/// repaired into a disjoint cover of 1..m:
///   1. out-of-range indices are dropped;
///   2. an index claimed by several keys goes to the earliest key in `keys`;
///   3. unclaimed indices go to the last key.
/// Throws PartitionParseError when there is no object or it names none of the
/// keys.
KeyedPartition parse_index_partition(std::string_view raw, std::span<const std::string_view> keys, int m);

}  // namespace accnote::agents
