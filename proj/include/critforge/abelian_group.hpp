#pragma once

#include <span>
#include <string>
#include <vector>

#include "critforge/integer_matrix.hpp"

namespace critforge {

/// Finite abelian group in invariant-factor form Z/a1 + ... + Z/ak with
/// 2 <= a1 | a2 | ... | ak. The empty list is the trivial group.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  /// Throws InvalidGroup unless the list is a divisibility chain of
  /// integers >= 2.
  explicit AbelianGroup(std::vector<Integer> invariant_factors);
  AbelianGroup(std::initializer_list<long> invariant_factors);

  /// Invariant-factor form of the direct sum of Z/n over `orders`.
  /// Throws NonpositiveOrder.
  static AbelianGroup from_orders(std::span<const Integer> orders);

  const std::vector<Integer>& invariant_factors() const { return factors_; }
  std::size_t factor_count() const { return factors_.size(); }
  bool is_trivial() const { return factors_.empty(); }
  bool is_cyclic() const { return factors_.size() <= 1; }
  Integer order() const;
  Integer exponent() const;

  AbelianGroup direct_sum(const AbelianGroup& other) const;

  /// "Z/3 + Z/18", or "0" for the trivial group.
  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::vector<Integer> factors_;
};

/// The unique K with K + h = g. Factors of h are removed from the invariant
/// factor list of g when that works directly; otherwise the subtraction is
/// done on elementary divisors (prime-power parts). Throws NotADirectSummand.
AbelianGroup quotient_strip(const AbelianGroup& g, const AbelianGroup& h);

}  // namespace critforge
