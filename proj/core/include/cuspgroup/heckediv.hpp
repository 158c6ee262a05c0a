#ifndef CUSPGROUP_HECKEDIV_HPP
#define CUSPGROUP_HECKEDIV_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>

#include "cuspgroup/arith.hpp"
#include "cuspgroup/cusps.hpp"

namespace cuspgroup {

/// The triple (N, M, D) describing the eigenvalue pattern of T_p at the
/// primes p | N:
///   T_p = 1 for p | M,  T_p = p for p | N^sf D / M,  T_p = 0 for p | N^sq / D.
/// Valid when D | N^sq, M | N^sf D and M * (N^sq / D) != 1.
class EisensteinDatum {
 public:
  /// Throws std::invalid_argument when the triple is not valid.
  static EisensteinDatum make(std::int64_t n, std::int64_t m, std::int64_t d);
  static std::optional<std::string> validate(std::int64_t n, std::int64_t m, std::int64_t d);

  const Factored& n() const { return n_; }
  std::int64_t level() const { return n_.value(); }
  std::int64_t m() const { return m_; }
  std::int64_t d_part() const { return d_; }
  /// L = N^sq / D.
  std::int64_t l_part() const { return parts_.square / d_; }
  const Parts& parts() const { return parts_; }

  /// M divides N^sf; the regime where C is given by the direct formula.
  bool m_divides_squarefree() const { return parts_.squarefree % m_ == 0; }

  std::string to_string() const;

  bool operator==(const EisensteinDatum& o) const {
    return level() == o.level() && m_ == o.m_ && d_ == o.d_;
  }
  auto operator<=>(const EisensteinDatum& o) const {
    return std::tuple(level(), m_, d_) <=> std::tuple(o.level(), o.m_, o.d_);
  }

 private:
  EisensteinDatum(Factored n, std::int64_t m, std::int64_t d);
  Factored n_;
  std::int64_t m_;
  std::int64_t d_;
  Parts parts_;
};

/// The image of T_p for p | N: 1, p or 0.
std::int64_t epsilon(const EisensteinDatum& datum, std::int64_t p);

/// The degree-0 divisor C^D_{M,N}.
RationalCuspDivisor build_c_divisor(const EisensteinDatum& datum);

/// alpha_p(N)^* and beta_p(N)^* on Galois-stable divisors; results live at Np.
RationalCuspDivisor alpha_pullback(const RationalCuspDivisor& div, std::int64_t p);
RationalCuspDivisor beta_pullback(const RationalCuspDivisor& div, std::int64_t p);

/// Delta_p = beta_* o alpha^*, the Hecke correspondence T_p on divisors.
RationalCuspDivisor hecke_delta(const RationalCuspDivisor& div, std::int64_t p);

/// Delta_p((P_level)) from the closed case table. Covers levels with
/// val_p(level) <= 1 only; returns nullopt otherwise.
std::optional<RationalCuspDivisor> hecke_delta_closed(std::int64_t level, std::int64_t p,
                                                      std::int64_t n);

enum class DegMap { plus, minus, plain };

std::string to_string(DegMap kind);
DegMap parse_deg_map(const std::string& s);

/// [N]^+_p = alpha^* - beta^*, [N]^-_p = p alpha^* - beta^*, [N]_p = alpha^*.
RationalCuspDivisor deg_map(DegMap kind, const RationalCuspDivisor& div, std::int64_t p);

}  // namespace cuspgroup

#endif  // CUSPGROUP_HECKEDIV_HPP
