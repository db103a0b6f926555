#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "critforge/arith_structure.hpp"
#include "critforge/graph.hpp"

namespace critforge {

struct EnumerationConfig {
  /// Largest r-value tried.
  std::int64_t r_bound = 60;
  /// Largest tree accepted; at most 12.
  std::size_t vertex_cap = 12;
};

/// Every arithmetical structure on t with all r-values at most r_bound,
/// sorted by r in vertex order. Throws TreeTooLarge, InvalidArgument.
std::vector<ArithmeticalStructure> enumerate_structures(
    const Tree& t, const EnumerationConfig& cfg = {});

std::size_t count_structures(const Tree& t, const EnumerationConfig& cfg = {});

/// Whether doubling r_bound leaves the count unchanged.
bool saturated(const Tree& t, const EnumerationConfig& cfg = {});

}  // namespace critforge
