#include "cuspgroup/classifier.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cuspgroup/classlattice.hpp"

namespace cuspgroup {

std::vector<EisensteinDatum> enumerate_data(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("enumerate_data: N must be positive");
  const Parts pt = parts(n);
  std::vector<EisensteinDatum> out;
  for (auto d : divisors_of(pt.square))
    for (auto m : divisors_of(pt.squarefree * d))
      if (!EisensteinDatum::validate(n, m, d)) out.push_back(EisensteinDatum::make(n, m, d));
  return out;
}

EisensteinDatum normalize_datum(const EisensteinDatum& datum, std::int64_t ell) {
  if (!is_prime(ell)) throw std::invalid_argument("ell must be prime");
  std::int64_t m = datum.m();
  const std::int64_t rest = datum.parts().squarefree * datum.d_part() / m;
  for (auto q : prime_divisors(rest))
    if (q % ell == 1 % ell) m *= q;
  return EisensteinDatum::make(datum.level(), m, datum.d_part());
}

Int index_n(const EisensteinDatum& datum) {
  const Int order = class_order(build_c_divisor(datum));
  if (auto closed = closed_form_order(datum); closed && *closed != order)
    throw ConsistencyError("order of C at " + datum.to_string() + " is " + order.get_str() +
                           " but the closed form gives " + closed->get_str());
  return order;
}

bool hypothesis_ok(std::int64_t ell, const EisensteinDatum& datum) {
  const std::int64_t n = datum.level();
  if (ell != 2) return n % (ell * ell) != 0;
  const std::int64_t rest = datum.parts().squarefree * datum.d_part() / datum.m();
  return n % 4 != 0 && rest % 2 == 1 && rest > 1;
}

bool new_candidate(std::int64_t ell, const EisensteinDatum& datum) {
  if (datum.d_part() != 1) return false;
  for (auto p : prime_divisors(datum.parts().squarefree / std::gcd(datum.m(), datum.parts().squarefree)))
    if ((p + 1) % ell != 0) return false;
  return true;
}

std::vector<EisensteinPrime> rational_eisenstein_primes(std::int64_t n, std::optional<std::int64_t> ell) {
  if (ell && !is_prime(*ell)) throw std::invalid_argument("ell must be prime");
  std::map<EisensteinDatum, Int> index_cache;
  auto index_of = [&](const EisensteinDatum& d) {
    auto it = index_cache.find(d);
    if (it == index_cache.end()) it = index_cache.emplace(d, index_n(d)).first;
    return it->second;
  };
  std::vector<EisensteinPrime> out;
  for (const auto& datum : enumerate_data(n)) {
    const Int idx = index_of(datum);
    if (idx == 1) continue;
    std::vector<std::int64_t> ells;
    if (ell) {
      if (idx % *ell == 0) ells.push_back(*ell);
    } else {
      if (!idx.fits_slong_p()) throw std::overflow_error("index too large to factor: " + idx.get_str());
      for (auto l : prime_divisors(idx.get_si())) ells.push_back(l);
    }
    for (auto l : ells) {
      const auto norm = normalize_datum(datum, l);
      const Int nidx = index_of(norm);
      if (nidx % l != 0) continue;
      EisensteinPrime e{l, norm, nidx, hypothesis_ok(l, norm), new_candidate(l, norm)};
      if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
    }
  }
  std::sort(out.begin(), out.end(), [](const EisensteinPrime& a, const EisensteinPrime& b) {
    return a.ell != b.ell ? a.ell < b.ell : a.datum < b.datum;
  });
  return out;
}

}  // namespace cuspgroup
