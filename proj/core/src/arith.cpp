#include "cuspgroup/arith.hpp"

#include <algorithm>
#include <numeric>

namespace cuspgroup {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat make_rat(std::int64_t num, std::int64_t den) {
  return make_rat(Int(static_cast<long>(num)), Int(static_cast<long>(den)));
}

int Factored::valuation(std::int64_t p) const {
  for (const auto& f : factors_)
    if (f.prime == p) return f.exponent;
  return 0;
}

std::vector<std::int64_t> Factored::primes() const {
  std::vector<std::int64_t> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back(f.prime);
  return out;
}

std::int64_t Factored::multiply_out() const {
  std::int64_t v = 1;
  for (const auto& f : factors_) v *= ipow(f.prime, f.exponent);
  return v;
}

Factored factor(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("factor: n must be positive, got " + std::to_string(n));
  Factored out;
  out.value_ = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.factors_.push_back({p, e});
  }
  if (n > 1) out.factors_.push_back({n, 1});
  return out;
}

Parts parts(const Factored& n) {
  Parts p{1, 1, 1};
  for (const auto& f : n.factors()) {
    if (f.exponent == 1)
      p.squarefree *= f.prime;
    else
      p.square *= f.prime;
  }
  p.radical = p.squarefree * p.square;
  return p;
}

Parts parts(std::int64_t n) { return parts(factor(n)); }

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  const Factored fn = factor(n);
  for (const auto& f : fn.factors()) result = result / f.prime * (f.prime - 1);
  return result;
}

int omega(std::int64_t n) { return static_cast<int>(factor(n).factors().size()); }

std::vector<std::int64_t> divisors_of(std::int64_t n) {
  std::vector<std::int64_t> divs{1};
  const Factored fn = factor(n);
  for (const auto& f : fn.factors()) {
    const std::size_t base = divs.size();
    std::int64_t pk = 1;
    for (int k = 1; k <= f.exponent; ++k) {
      pk *= f.prime;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) { return factor(n).primes(); }

int valuation(std::int64_t n, std::int64_t p) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  if (p < 2) throw std::invalid_argument("valuation: p must be prime");
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_power_of_two(std::int64_t n) { return n >= 1 && (n & (n - 1)) == 0; }

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

Int numerator_of(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  return abs(c.get_num());
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("mod_inverse: modulus must be positive");
  if (m == 1) return 0;
  std::int64_t old_r = mod(a, m), r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) throw std::invalid_argument("mod_inverse: arguments not coprime");
  return mod(old_s, m);
}

Int lcm(const Int& a, const Int& b) {
  Int out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Int minimal_multiplier(const Rat& q, const Int& modulus) {
  if (q == 0) return 1;
  // m * u / v in modulus*Z  <=>  modulus*v | m*u
  const Int v = q.get_den();
  const Int u = abs(q.get_num());
  const Int mv = modulus * v;
  Int g;
  mpz_gcd(g.get_mpz_t(), mv.get_mpz_t(), u.get_mpz_t());
  return mv / g;
}

std::string to_string(const Rat& r) { return r.get_str(); }

}  // namespace cuspgroup
