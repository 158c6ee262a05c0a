#ifndef CUSPGROUP_CLASSLATTICE_HPP
#define CUSPGROUP_CLASSLATTICE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cuspgroup/arith.hpp"
#include "cuspgroup/cusps.hpp"
#include "cuspgroup/heckediv.hpp"

namespace cuspgroup {

/// Vector indexed by the divisors of N in ascending order.
class QVector {
 public:
  explicit QVector(std::int64_t level_n);
  QVector(std::int64_t level_n, std::vector<Rat> entries);

  static QVector from_divisor(const RationalCuspDivisor& div);

  std::int64_t level_n() const { return level_n_; }
  const std::vector<std::int64_t>& index() const { return index_; }
  const std::vector<Rat>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  Rat& operator[](std::size_t i) { return entries_[i]; }
  const Rat& operator[](std::size_t i) const { return entries_[i]; }
  /// Entry at divisor d; throws if d does not divide N.
  const Rat& at_divisor(std::int64_t d) const;

  Rat sum() const;
  bool is_zero() const;

  bool operator==(const QVector&) const = default;

 private:
  std::int64_t level_n_;
  std::vector<std::int64_t> index_;
  std::vector<Rat> entries_;
};

/// Square matrix indexed on both sides by the divisors of N.
class QMatrix {
 public:
  explicit QMatrix(std::int64_t level_n);

  static QMatrix identity(std::int64_t level_n);

  std::int64_t level_n() const { return level_n_; }
  const std::vector<std::int64_t>& index() const { return index_; }
  std::size_t size() const { return index_.size(); }

  Rat& operator()(std::size_t i, std::size_t j) { return entries_[i * index_.size() + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return entries_[i * index_.size() + j]; }

  QMatrix operator*(const QMatrix& o) const;
  QVector operator*(const QVector& v) const;

  bool operator==(const QMatrix&) const = default;

 private:
  std::int64_t level_n_;
  std::vector<std::int64_t> index_;
  std::vector<Rat> entries_;
};

QMatrix lambda_matrix(std::int64_t n);

/// Built by block recursion over the prime powers of N, then permuted to
/// ascending divisor order.
QMatrix lambda_inverse(std::int64_t n);

/// Exact Gaussian elimination for Lambda(N) x = a.
QVector solve_lambda(std::int64_t n, const QVector& a);

/// N^D_{M,N} = prod_{p|M}(p-1) prod_{p|N^R/M}(p^2-1) (N/N^R) prod_{p|L} p^-1 / 24.
Rat normalizer(const EisensteinDatum& datum);

/// R(M,N)^D from the per-prime x/y/z entry formula. Requires M | N^sf.
QVector r_vector_closed(const EisensteinDatum& datum);
/// R(M,N)^D by adjoining one prime at a time. Requires M | N^sf.
QVector r_vector_recursive(const EisensteinDatum& datum);
/// Both routes plus solve_lambda on C; throws ConsistencyError on any
/// disagreement.
QVector r_vector(const EisensteinDatum& datum);

/// Minimal admissible multiplier per condition; the order is their lcm.
struct OrderBreakdown {
  QVector r;
  Int integrality;      // (0)
  Int cusp_congruence;  // (1) sum r_d d = 0 mod 24
  Int dual_congruence;  // (2) sum r_d N/d = 0 mod 24
  std::vector<std::pair<std::int64_t, Int>> parity;  // (4) per prime
  Int order;
};

/// Throws std::invalid_argument if a has nonzero degree and ConsistencyError
/// if Lambda^-1 a has nonzero sum.
OrderBreakdown class_order_breakdown(const RationalCuspDivisor& a);
Int class_order(const RationalCuspDivisor& a);
bool is_principal(const RationalCuspDivisor& a);

/// Order of C^D_{M,N} by the closed formulas; nullopt where none applies.
std::optional<Int> closed_form_order(const EisensteinDatum& datum);

/// Compatible kinds: minus needs p | M, plus needs p | N^sf / M, plain needs
/// p^2 | N. Only D = 1 is supported.
void check_kernel_instance(DegMap kind, const EisensteinDatum& datum, std::int64_t p);

/// ord(C_{M,N}) / ord(image of C under the degeneracy combination).
Int kernel_intersection_order(DegMap kind, const EisensteinDatum& datum, std::int64_t p);
Int predicted_kernel_intersection(DegMap kind, const EisensteinDatum& datum, std::int64_t p);

/// Image of C_{M,N} minus its expected multiple of C at level Np:
/// minus -> (p+1) C_{M/p,Np}, plus -> C_{M,Np}, plain -> p C_{M,Np}.
/// The residual must be principal.
RationalCuspDivisor image_identity_residual(DegMap kind, const EisensteinDatum& datum, std::int64_t p);

}  // namespace cuspgroup

#endif  // CUSPGROUP_CLASSLATTICE_HPP
