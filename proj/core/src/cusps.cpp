#include "cuspgroup/cusps.hpp"

#include <numeric>
#include <string>

namespace cuspgroup {

namespace {

void require_divides(std::int64_t d, std::int64_t n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": level must be positive");
  if (d < 1 || n % d != 0)
    throw std::invalid_argument(std::string(what) + ": " + std::to_string(d) + " does not divide " +
                                std::to_string(n));
}

std::int64_t lower_level(const Cusp& c, std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("degeneracy map: p must be prime");
  if (c.level_n % p != 0)
    throw std::invalid_argument("degeneracy map: p must divide the level of the cusp");
  return c.level_n / p;
}

}  // namespace

std::int64_t cusp_width_modulus(std::int64_t d, std::int64_t n) { return std::gcd(d, n / d); }

// ---------------------------------------------------------------------------
// CuspDivisor

void CuspDivisor::check_level(const Cusp& c) const {
  if (c.level_n != level_n_) throw std::invalid_argument("cusp from a different level");
}

Int CuspDivisor::coefficient(const Cusp& c) const {
  auto it = coeffs_.find(c);
  return it == coeffs_.end() ? Int(0) : it->second;
}

Int CuspDivisor::degree() const {
  Int s = 0;
  for (const auto& [c, k] : coeffs_) s += k;
  return s;
}

void CuspDivisor::add(const Cusp& c, const Int& k) {
  check_level(c);
  if (k == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(c, k);
  if (!inserted) {
    it->second += k;
    if (it->second == 0) coeffs_.erase(it);
  }
}

CuspDivisor& CuspDivisor::operator+=(const CuspDivisor& other) {
  for (const auto& [c, k] : other.coeffs_) add(c, k);
  return *this;
}

CuspDivisor& CuspDivisor::operator-=(const CuspDivisor& other) {
  for (const auto& [c, k] : other.coeffs_) add(c, -k);
  return *this;
}

CuspDivisor& CuspDivisor::operator*=(const Int& k) {
  if (k == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [c, v] : coeffs_) v *= k;
  return *this;
}

// ---------------------------------------------------------------------------
// RationalCuspDivisor

RationalCuspDivisor::RationalCuspDivisor(std::int64_t level_n) : level_n_(level_n) {
  if (level_n < 1) throw std::invalid_argument("level must be positive");
}

void RationalCuspDivisor::check_divisor(std::int64_t d) const {
  require_divides(d, level_n_, "rational cusp divisor");
}

Int RationalCuspDivisor::coefficient(std::int64_t d) const {
  auto it = coeffs_.find(d);
  return it == coeffs_.end() ? Int(0) : it->second;
}

void RationalCuspDivisor::set(std::int64_t d, const Int& k) {
  check_divisor(d);
  if (k == 0)
    coeffs_.erase(d);
  else
    coeffs_[d] = k;
}

void RationalCuspDivisor::add(std::int64_t d, const Int& k) { set(d, coefficient(d) + k); }

Int RationalCuspDivisor::degree() const {
  Int s = 0;
  for (const auto& [d, k] : coeffs_)
    s += k * Int(static_cast<long>(euler_phi(cusp_width_modulus(d, level_n_))));
  return s;
}

std::vector<Int> RationalCuspDivisor::dense() const {
  std::vector<Int> out;
  for (auto d : divisors_of(level_n_)) out.push_back(coefficient(d));
  return out;
}

RationalCuspDivisor RationalCuspDivisor::from_dense(std::int64_t level_n, const std::vector<Int>& a) {
  const auto divs = divisors_of(level_n);
  if (a.size() != divs.size()) throw std::invalid_argument("coefficient vector has wrong length");
  RationalCuspDivisor out(level_n);
  for (std::size_t i = 0; i < divs.size(); ++i) out.set(divs[i], a[i]);
  return out;
}

CuspDivisor RationalCuspDivisor::expand() const {
  CuspDivisor out(level_n_);
  for (const auto& [d, k] : coeffs_)
    for (const auto& c : cusps_of_level(d, level_n_)) out.add(c, k);
  return out;
}

RationalCuspDivisor RationalCuspDivisor::aggregate(const CuspDivisor& div) {
  const std::int64_t n = div.level_n();
  RationalCuspDivisor out(n);
  for (auto d : divisors_of(n)) {
    const auto level = cusps_of_level(d, n);
    const Int k = div.coefficient(level.front());
    for (const auto& c : level) {
      if (div.coefficient(c) != k)
        throw ConsistencyError("divisor on X_0(" + std::to_string(n) +
                               ") is not constant on the cusps of level " + std::to_string(d));
    }
    out.set(d, k);
  }
  return out;
}

RationalCuspDivisor& RationalCuspDivisor::operator+=(const RationalCuspDivisor& other) {
  if (other.level_n_ != level_n_) throw std::invalid_argument("level mismatch");
  for (const auto& [d, k] : other.coeffs_) add(d, k);
  return *this;
}

RationalCuspDivisor& RationalCuspDivisor::operator-=(const RationalCuspDivisor& other) {
  if (other.level_n_ != level_n_) throw std::invalid_argument("level mismatch");
  for (const auto& [d, k] : other.coeffs_) add(d, -k);
  return *this;
}

RationalCuspDivisor& RationalCuspDivisor::operator*=(const Int& k) {
  if (k == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [d, v] : coeffs_) v *= k;
  return *this;
}

RationalCuspDivisor operator+(RationalCuspDivisor a, const RationalCuspDivisor& b) { return a += b; }
RationalCuspDivisor operator-(RationalCuspDivisor a, const RationalCuspDivisor& b) { return a -= b; }
RationalCuspDivisor operator*(const Int& k, RationalCuspDivisor a) { return a *= k; }

// ---------------------------------------------------------------------------
// Cusps

std::vector<Cusp> cusps_of_level(std::int64_t d, std::int64_t n) {
  require_divides(d, n, "cusps_of_level");
  const std::int64_t y = cusp_width_modulus(d, n);
  std::vector<Cusp> out;
  for (std::int64_t t = 1; t <= y; ++t) {
    if (std::gcd(t, y) != 1) continue;
    std::int64_t x = t;
    while (std::gcd(x, d) != 1) x += y;
    out.push_back({n, d, x});
  }
  return out;
}

std::vector<Cusp> enumerate_cusps(std::int64_t n) {
  std::vector<Cusp> out;
  for (auto d : divisors_of(n)) {
    auto level = cusps_of_level(d, n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::int64_t cusp_count(std::int64_t n) {
  std::int64_t s = 0;
  for (auto d : divisors_of(n)) s += euler_phi(cusp_width_modulus(d, n));
  return s;
}

bool fractions_equivalent(std::int64_t a1, std::int64_t c1, std::int64_t a2, std::int64_t c2,
                          std::int64_t n) {
  const std::int64_t s1 = mod_inverse(a1, c1);
  const std::int64_t s2 = mod_inverse(a2, c2);
  const std::int64_t m = std::gcd(c1 * c2, n);
  return mod(s1 * c2 - s2 * c1, m) == 0;
}

Cusp normalize_fraction(std::int64_t a, std::int64_t c, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("normalize_fraction: level must be positive");
  if (c < 1) throw std::invalid_argument("normalize_fraction: denominator must be positive");
  if (std::gcd(a, c) != 1)
    throw std::invalid_argument("normalize_fraction: " + std::to_string(a) + "/" + std::to_string(c) +
                                " is not reduced");
  const std::int64_t d = std::gcd(c, n);
  for (const auto& cand : cusps_of_level(d, n))
    if (fractions_equivalent(a, c, cand.x, cand.d, n)) return cand;
  throw ConsistencyError("no cusp of X_0(" + std::to_string(n) + ") matches " + std::to_string(a) + "/" +
                         std::to_string(c));
}

RationalCuspDivisor p_divisor(std::int64_t d, std::int64_t n) {
  require_divides(d, n, "p_divisor");
  RationalCuspDivisor out(n);
  out.set(d, 1);
  return out;
}

// ---------------------------------------------------------------------------
// Degeneracy maps

std::int64_t covering_degree(std::int64_t n, std::int64_t p) { return n % p == 0 ? p : p + 1; }

Cusp alpha_image(const Cusp& c, std::int64_t p) {
  const std::int64_t n = lower_level(c, p);
  return normalize_fraction(c.x, c.d, n);
}

Cusp beta_image(const Cusp& c, std::int64_t p) {
  const std::int64_t n = lower_level(c, p);
  // x/(p^i d) -> px/(p^i d), then reduce
  const std::int64_t a = p * c.x;
  const std::int64_t g = std::gcd(a, c.d);
  return normalize_fraction(a / g, c.d / g, n);
}

Cusp degeneracy_image(Degeneracy map, const Cusp& c, std::int64_t p) {
  return map == Degeneracy::alpha ? alpha_image(c, p) : beta_image(c, p);
}

std::int64_t alpha_ram(const Cusp& c, std::int64_t p) {
  const std::int64_t n = lower_level(c, p);
  const int r = valuation(n, p);
  const int i = valuation(c.d, p);
  return 2 * i <= r ? p : 1;
}

std::int64_t beta_ram(const Cusp& c, std::int64_t p) {
  const std::int64_t n = lower_level(c, p);
  const int r = valuation(n, p);
  const int i = valuation(c.d, p);
  return (2 * i >= r + 2 && i <= r + 1) ? p : 1;
}

std::int64_t degeneracy_ram(Degeneracy map, const Cusp& c, std::int64_t p) {
  return map == Degeneracy::alpha ? alpha_ram(c, p) : beta_ram(c, p);
}

CuspDivisor pullback(Degeneracy map, const CuspDivisor& div, std::int64_t p) {
  CuspDivisor out(div.level_n() * p);
  if (div.empty()) return out;
  for (const auto& c : enumerate_cusps(div.level_n() * p)) {
    const Int k = div.coefficient(degeneracy_image(map, c, p));
    if (k != 0) out.add(c, k * Int(static_cast<long>(degeneracy_ram(map, c, p))));
  }
  return out;
}

CuspDivisor pullback(Degeneracy map, const Cusp& c, std::int64_t p) {
  CuspDivisor single(c.level_n);
  single.add(c, 1);
  return pullback(map, single, p);
}

CuspDivisor pushforward(Degeneracy map, const CuspDivisor& div, std::int64_t p) {
  if (p < 2 || div.level_n() % p != 0)
    throw std::invalid_argument("pushforward: p must divide the level");
  CuspDivisor out(div.level_n() / p);
  for (const auto& [c, k] : div.coeffs()) out.add(degeneracy_image(map, c, p), k);
  return out;
}

}  // namespace cuspgroup
