#ifndef CUSPGROUP_CUSPS_HPP
#define CUSPGROUP_CUSPS_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "cuspgroup/arith.hpp"

namespace cuspgroup {

/// A cusp (x : d) of X_0(N). The representative x is canonical: the smallest
/// positive integer in its class modulo gcd(d, N/d) that is coprime to d.
struct Cusp {
  std::int64_t level_n;
  std::int64_t d;
  std::int64_t x;

  auto operator<=>(const Cusp&) const = default;
};

/// gcd(d, N/d), the modulus the representative is taken in.
std::int64_t cusp_width_modulus(std::int64_t d, std::int64_t n);

/// Formal integer combination of cusps of one X_0(N). Zero coefficients are
/// never stored.
class CuspDivisor {
 public:
  explicit CuspDivisor(std::int64_t level_n) : level_n_(level_n) {}

  std::int64_t level_n() const { return level_n_; }
  const std::map<Cusp, Int>& coeffs() const { return coeffs_; }
  Int coefficient(const Cusp& c) const;
  Int degree() const;
  bool empty() const { return coeffs_.empty(); }

  void add(const Cusp& c, const Int& k);
  CuspDivisor& operator+=(const CuspDivisor& other);
  CuspDivisor& operator-=(const CuspDivisor& other);
  CuspDivisor& operator*=(const Int& k);

  bool operator==(const CuspDivisor&) const = default;

 private:
  void check_level(const Cusp& c) const;
  std::int64_t level_n_;
  std::map<Cusp, Int> coeffs_;
};

/// Sum_d a_d (P_d), where (P_d) is the sum of all cusps of level d.
class RationalCuspDivisor {
 public:
  explicit RationalCuspDivisor(std::int64_t level_n);

  std::int64_t level_n() const { return level_n_; }
  const std::map<std::int64_t, Int>& coeffs() const { return coeffs_; }
  Int coefficient(std::int64_t d) const;
  void set(std::int64_t d, const Int& k);
  void add(std::int64_t d, const Int& k);

  /// Sum_d a_d * phi(gcd(d, N/d)).
  Int degree() const;
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficients aligned with divisors_of(N), zeros included.
  std::vector<Int> dense() const;
  static RationalCuspDivisor from_dense(std::int64_t level_n, const std::vector<Int>& a);

  CuspDivisor expand() const;

  /// Inverse of expand(). Throws ConsistencyError if two cusps of the same
  /// level carry different coefficients.
  static RationalCuspDivisor aggregate(const CuspDivisor& div);

  RationalCuspDivisor& operator+=(const RationalCuspDivisor& other);
  RationalCuspDivisor& operator-=(const RationalCuspDivisor& other);
  RationalCuspDivisor& operator*=(const Int& k);

  bool operator==(const RationalCuspDivisor&) const = default;

 private:
  void check_divisor(std::int64_t d) const;
  std::int64_t level_n_;
  std::map<std::int64_t, Int> coeffs_;
};

RationalCuspDivisor operator+(RationalCuspDivisor a, const RationalCuspDivisor& b);
RationalCuspDivisor operator-(RationalCuspDivisor a, const RationalCuspDivisor& b);
RationalCuspDivisor operator*(const Int& k, RationalCuspDivisor a);

/// Cusps of level d on X_0(N), ascending in x.
std::vector<Cusp> cusps_of_level(std::int64_t d, std::int64_t n);

/// All cusps of X_0(N), ordered by (d, x).
std::vector<Cusp> enumerate_cusps(std::int64_t n);

/// sum_{d | N} phi(gcd(d, N/d)).
std::int64_t cusp_count(std::int64_t n);

/// Canonical cusp Gamma_0(N)-equivalent to a/c. Requires c >= 1 and
/// gcd(a, c) = 1.
Cusp normalize_fraction(std::int64_t a, std::int64_t c, std::int64_t n);

/// Gamma_0(N)-equivalence of a1/c1 and a2/c2 (both reduced, c >= 1).
bool fractions_equivalent(std::int64_t a1, std::int64_t c1, std::int64_t a2, std::int64_t c2,
                          std::int64_t n);

RationalCuspDivisor p_divisor(std::int64_t d, std::int64_t n);

/// The two degeneracy coverings X_0(Np) -> X_0(N): alpha is z -> z, beta is
/// z -> pz.
enum class Degeneracy { alpha, beta };

/// Degree of either covering X_0(Np) -> X_0(N): p if p | N, else p + 1.
std::int64_t covering_degree(std::int64_t n, std::int64_t p);

/// c is a cusp of X_0(Np); the result lives on X_0(N).
Cusp alpha_image(const Cusp& c, std::int64_t p);
Cusp beta_image(const Cusp& c, std::int64_t p);
Cusp degeneracy_image(Degeneracy map, const Cusp& c, std::int64_t p);

/// Ramification index (p or 1) of the covering at c, a cusp of X_0(Np).
std::int64_t alpha_ram(const Cusp& c, std::int64_t p);
std::int64_t beta_ram(const Cusp& c, std::int64_t p);
std::int64_t degeneracy_ram(Degeneracy map, const Cusp& c, std::int64_t p);

/// Fiber of c (a cusp of X_0(N)) weighted by ramification; lives on X_0(Np).
CuspDivisor pullback(Degeneracy map, const Cusp& c, std::int64_t p);
CuspDivisor pullback(Degeneracy map, const CuspDivisor& div, std::int64_t p);

/// div lives on X_0(Np); the image lives on X_0(N).
CuspDivisor pushforward(Degeneracy map, const CuspDivisor& div, std::int64_t p);

}  // namespace cuspgroup

#endif  // CUSPGROUP_CUSPS_HPP
