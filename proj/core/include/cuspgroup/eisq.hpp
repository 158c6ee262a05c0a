#ifndef CUSPGROUP_EISQ_HPP
#define CUSPGROUP_EISQ_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cuspgroup/arith.hpp"
#include "cuspgroup/heckediv.hpp"

namespace cuspgroup {

/// Truncated q-expansion a_0 + a_1 q + ... + a_prec q^prec.
class QExpansion {
 public:
  QExpansion(std::int64_t level, std::vector<Rat> coeffs);

  std::int64_t level() const { return level_; }
  int precision() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  const Rat& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }

  /// f(mz): a_n -> a_{n/m}, zero when m does not divide n. The result is
  /// tagged with new_level.
  QExpansion substitute(std::int64_t m, std::int64_t new_level) const;

  QExpansion& operator+=(const QExpansion& o);
  QExpansion& operator-=(const QExpansion& o);
  QExpansion& operator*=(const Rat& k);

  /// First index where the two differ within the common precision.
  std::optional<int> first_difference(const QExpansion& o) const;

  bool operator==(const QExpansion&) const = default;

 private:
  std::int64_t level_;
  std::vector<Rat> coeffs_;
};

QExpansion operator+(QExpansion a, const QExpansion& b);
QExpansion operator-(QExpansion a, const QExpansion& b);
QExpansion operator*(const Rat& k, QExpansion a);

/// Combination sum_j c_j E(q^j z) used to raise the level by one prime.
struct Term {
  std::int64_t coef;
  int shift;
};

enum class PrimeRole {
  multiplicative,  // q || N, q | M
  unramified,      // q || N, q not dividing M
  l_part,          // q^2 | N, q | L
  d_in_m,          // q^2 | N, q | D, q | M
  d_not_m,         // q^2 | N, q | D, q not dividing M
};

struct AdjunctionStep {
  std::int64_t prime;
  int exponent;
  PrimeRole role;
  std::vector<Term> terms;
};

/// The base prime (smallest prime of M L) followed by the remaining primes
/// of N in ascending order. Shared by the series and residue builders.
struct AdjunctionPlan {
  std::int64_t base_prime;
  int base_exponent;
  bool base_twisted;  // base prime in L: E_{p,p}(z) - E_{p,p}(pz)
  std::vector<AdjunctionStep> steps;
};

AdjunctionPlan adjunction_plan(const EisensteinDatum& datum);

/// E_{p,p}: a_0 = (p-1)/24, a_n = sum of the divisors of n prime to p.
QExpansion base_epp(std::int64_t p, int prec);

QExpansion build_qexp(const EisensteinDatum& datum, int prec);

/// T_q for q not dividing the level, U_q otherwise. Precision drops to
/// floor(prec / q).
QExpansion hecke_on_qexp(const QExpansion& f, std::int64_t q);

struct EigenCheck {
  std::int64_t prime;
  bool on_level;
  Int eigenvalue;
  int precision;
  std::optional<int> first_violation;
};

struct EigenReport {
  std::vector<EigenCheck> checks;
  bool ok() const;
};

/// Requires prec >= 2 qmax.
EigenReport eigen_check(const EisensteinDatum& datum, int prec, std::int64_t qmax);

/// Residue of E^D_{M,N} at the cusps of each level d | N.
class ResidueTable {
 public:
  explicit ResidueTable(std::int64_t level_n) : level_n_(level_n) {}

  std::int64_t level_n() const { return level_n_; }
  const std::map<std::int64_t, Rat>& res() const { return res_; }
  Rat at(std::int64_t d) const;
  void set(std::int64_t d, const Rat& v) { res_[d] = v; }

  /// sum_d phi(gcd(d, N/d)) res_d.
  Rat weighted_sum() const;

  bool operator==(const ResidueTable&) const = default;

 private:
  std::int64_t level_n_;
  std::map<std::int64_t, Rat> res_;
};

/// Closed recursion per prime, seeded with A_1 = 1 at level 1.
ResidueTable residue_table(const EisensteinDatum& datum);

/// Independent route: residue of each E(q^j z) term via the ramification of
/// the degeneracy maps down to the previous level.
ResidueTable residue_table_by_pullback(const EisensteinDatum& datum);

struct ClosedResidues {
  Rat at_infinity;
  Rat at_level_ml;
};

ClosedResidues residue_closed(const EisensteinDatum& datum);

}  // namespace cuspgroup

#endif  // CUSPGROUP_EISQ_HPP
