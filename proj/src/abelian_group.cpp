#include "critforge/abelian_group.hpp"

#include <algorithm>
#include <map>

#include "critforge/errors.hpp"
#include "critforge/smith.hpp"

namespace critforge {

namespace {

void check_chain(const std::vector<Integer>& factors) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 2) {
      throw Error(ErrorKind::InvalidGroup,
                  "invariant factor " + factors[i].get_str() + " is below 2");
    }
    if (i > 0 &&
        !mpz_divisible_p(factors[i].get_mpz_t(), factors[i - 1].get_mpz_t())) {
      throw Error(ErrorKind::InvalidGroup,
                  factors[i - 1].get_str() + " does not divide " +
                      factors[i].get_str());
    }
  }
}

// Prime factorization by trial division; large cofactors must be prime.
std::map<Integer, unsigned> factorize(Integer n) {
  std::map<Integer, unsigned> out;
  for (unsigned long p = 2; n > 1; p = (p == 2 ? 3 : p + 2)) {
    const Integer prime = p;
    if (prime * prime > n) {
      ++out[n];
      break;
    }
    if (p > 10'000'000UL) {
      if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) {
        throw Error(ErrorKind::InternalInconsistency,
                    "cannot factor " + n.get_str() + " by trial division");
      }
      ++out[n];
      break;
    }
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= prime;
      ++out[prime];
    }
  }
  return out;
}

using ElementaryDivisors = std::map<Integer, std::vector<Integer>>;

ElementaryDivisors elementary_divisors(const AbelianGroup& g) {
  ElementaryDivisors out;
  for (const Integer& f : g.invariant_factors()) {
    for (const auto& [p, e] : factorize(f)) {
      Integer power;
      mpz_pow_ui(power.get_mpz_t(), p.get_mpz_t(), e);
      out[p].push_back(power);
    }
  }
  return out;
}

}  // namespace

AbelianGroup::AbelianGroup(std::vector<Integer> invariant_factors)
    : factors_(std::move(invariant_factors)) {
  check_chain(factors_);
}

AbelianGroup::AbelianGroup(std::initializer_list<long> invariant_factors) {
  for (long f : invariant_factors) factors_.emplace_back(f);
  check_chain(factors_);
}

AbelianGroup AbelianGroup::from_orders(std::span<const Integer> orders) {
  for (const Integer& n : orders) {
    if (n < 1) {
      throw Error(ErrorKind::NonpositiveOrder,
                  "cyclic order " + n.get_str() + " is not positive");
    }
  }
  std::vector<Integer> factors;
  for (const Integer& a :
       smith_diagonal(IntegerMatrix::diagonal(orders))) {
    if (a != 1) factors.push_back(a);
  }
  return AbelianGroup(std::move(factors));
}

Integer AbelianGroup::order() const {
  Integer product = 1;
  for (const Integer& f : factors_) product *= f;
  return product;
}

Integer AbelianGroup::exponent() const {
  return factors_.empty() ? Integer(1) : factors_.back();
}

AbelianGroup AbelianGroup::direct_sum(const AbelianGroup& other) const {
  std::vector<Integer> all = factors_;
  all.insert(all.end(), other.factors_.begin(), other.factors_.end());
  return from_orders(all);
}

std::string AbelianGroup::to_string() const {
  if (factors_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += " + ";
    out += "Z/" + factors_[i].get_str();
  }
  return out;
}

AbelianGroup quotient_strip(const AbelianGroup& g, const AbelianGroup& h) {
  std::vector<Integer> remaining = g.invariant_factors();
  bool deleted_all = true;
  for (const Integer& f : h.invariant_factors()) {
    auto it = std::find(remaining.begin(), remaining.end(), f);
    if (it == remaining.end()) {
      deleted_all = false;
      break;
    }
    remaining.erase(it);
  }
  if (deleted_all) return AbelianGroup(std::move(remaining));

  ElementaryDivisors parts = elementary_divisors(g);
  for (const auto& [p, powers] : elementary_divisors(h)) {
    auto& pool = parts[p];
    for (const Integer& q : powers) {
      auto it = std::find(pool.begin(), pool.end(), q);
      if (it == pool.end()) {
        throw Error(ErrorKind::NotADirectSummand,
                    h.to_string() + " is not a direct summand of " +
                        g.to_string());
      }
      pool.erase(it);
    }
  }
  std::vector<Integer> orders;
  for (const auto& [p, powers] : parts) {
    orders.insert(orders.end(), powers.begin(), powers.end());
  }
  return AbelianGroup::from_orders(orders);
}

}  // namespace critforge
