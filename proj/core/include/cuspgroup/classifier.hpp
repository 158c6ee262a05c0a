#ifndef CUSPGROUP_CLASSIFIER_HPP
#define CUSPGROUP_CLASSIFIER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cuspgroup/arith.hpp"
#include "cuspgroup/heckediv.hpp"

namespace cuspgroup {

struct EisensteinPrime {
  std::int64_t ell;
  EisensteinDatum datum;  // normalized for ell
  Int index_n;
  bool hypothesis_ok;
  bool new_candidate;

  bool operator==(const EisensteinPrime&) const = default;
};

/// Valid (M, D) for level N, excluding M * N^sq / D = 1. Ordered by (D, M).
std::vector<EisensteinDatum> enumerate_data(std::int64_t n);

/// Moves every prime q | N^sf D / M with q = 1 mod ell into M.
EisensteinDatum normalize_datum(const EisensteinDatum& datum, std::int64_t ell);

/// Order of the class of C^D_{M,N}. Throws ConsistencyError if a covered
/// closed form disagrees.
Int index_n(const EisensteinDatum& datum);

bool hypothesis_ok(std::int64_t ell, const EisensteinDatum& datum);
bool new_candidate(std::int64_t ell, const EisensteinDatum& datum);

/// Sorted by (ell, datum). With ell set, only that prime is reported.
std::vector<EisensteinPrime> rational_eisenstein_primes(std::int64_t n,
                                                        std::optional<std::int64_t> ell = std::nullopt);

}  // namespace cuspgroup

#endif  // CUSPGROUP_CLASSIFIER_HPP
