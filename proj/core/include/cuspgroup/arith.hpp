#ifndef CUSPGROUP_ARITH_HPP
#define CUSPGROUP_ARITH_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cuspgroup {

/// Arbitrary-precision integer.
using Int = mpz_class;
/// Arbitrary-precision rational. Values produced by this library are always
/// canonical (lowest terms, positive denominator).
using Rat = mpq_class;

/// Raised when two independent computations of the same quantity disagree,
/// or an internal invariant is broken. Never caused by bad user input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

Rat make_rat(const Int& num, const Int& den);
Rat make_rat(std::int64_t num, std::int64_t den = 1);

struct PrimePower {
  std::int64_t prime;
  int exponent;

  bool operator==(const PrimePower&) const = default;
};

/// A positive integer together with its prime factorization, primes ascending.
class Factored {
 public:
  std::int64_t value() const { return value_; }
  const std::vector<PrimePower>& factors() const { return factors_; }

  int valuation(std::int64_t p) const;
  std::vector<std::int64_t> primes() const;
  std::int64_t multiply_out() const;

  bool operator==(const Factored&) const = default;

 private:
  friend Factored factor(std::int64_t n);
  std::int64_t value_ = 1;
  std::vector<PrimePower> factors_;
};

/// Trial division. Throws std::invalid_argument for n < 1.
Factored factor(std::int64_t n);

/// (N^sf, N^sq, N^R): primes dividing exactly once, primes dividing at least
/// twice, and all primes.
struct Parts {
  std::int64_t squarefree;
  std::int64_t square;
  std::int64_t radical;

  bool operator==(const Parts&) const = default;
};

Parts parts(const Factored& n);
Parts parts(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);
int omega(std::int64_t n);
std::vector<std::int64_t> divisors_of(std::int64_t n);
std::vector<std::int64_t> prime_divisors(std::int64_t n);
int valuation(std::int64_t n, std::int64_t p);
bool is_prime(std::int64_t n);
bool is_power_of_two(std::int64_t n);
std::int64_t ipow(std::int64_t base, int exp);

/// |numerator| of r in lowest terms.
Int numerator_of(const Rat& r);

/// Inverse of a modulo m (m >= 1); returns 0 when m == 1.
/// Throws std::invalid_argument if gcd(a, m) != 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

/// Non-negative residue of a modulo m.
std::int64_t mod(std::int64_t a, std::int64_t m);

Int lcm(const Int& a, const Int& b);

/// Smallest m > 0 such that m * q lies in modulus * Z.
Int minimal_multiplier(const Rat& q, const Int& modulus);

std::string to_string(const Rat& r);

}  // namespace cuspgroup

#endif  // CUSPGROUP_ARITH_HPP
