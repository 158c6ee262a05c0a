#include "cuspgroup/heckediv.hpp"

#include <numeric>

namespace cuspgroup {

namespace {

Int to_int(std::int64_t v) { return Int(static_cast<long>(v)); }

void require_prime(std::int64_t p, const char* what) {
  if (!is_prime(p)) throw std::invalid_argument(std::string(what) + ": " + std::to_string(p) + " is not prime");
}

}  // namespace

// ---------------------------------------------------------------------------
// EisensteinDatum

EisensteinDatum::EisensteinDatum(Factored n, std::int64_t m, std::int64_t d)
    : n_(std::move(n)), m_(m), d_(d), parts_(cuspgroup::parts(n_)) {}

std::optional<std::string> EisensteinDatum::validate(std::int64_t n, std::int64_t m, std::int64_t d) {
  if (n < 1) return "N must be positive";
  if (m < 1) return "M must be positive";
  if (d < 1) return "D must be positive";
  const Parts p = cuspgroup::parts(n);
  if (p.square % d != 0) return "D must divide N^sq = " + std::to_string(p.square);
  if ((p.squarefree * d) % m != 0) return "M must divide N^sf * D = " + std::to_string(p.squarefree * d);
  if (m * (p.square / d) == 1) return "M * (N^sq / D) must not be 1";
  return std::nullopt;
}

EisensteinDatum EisensteinDatum::make(std::int64_t n, std::int64_t m, std::int64_t d) {
  if (auto err = validate(n, m, d))
    throw std::invalid_argument("invalid datum (N=" + std::to_string(n) + ", M=" + std::to_string(m) +
                                ", D=" + std::to_string(d) + "): " + *err);
  return EisensteinDatum(factor(n), m, d);
}

std::string EisensteinDatum::to_string() const {
  return "(N=" + std::to_string(level()) + ", M=" + std::to_string(m_) + ", D=" + std::to_string(d_) + ")";
}

std::int64_t epsilon(const EisensteinDatum& datum, std::int64_t p) {
  require_prime(p, "epsilon");
  if (datum.level() % p != 0) throw std::invalid_argument("epsilon: p does not divide N");
  if (datum.m() % p == 0) return 1;
  if ((datum.parts().squarefree * datum.d_part() / datum.m()) % p == 0) return p;
  return 0;
}

// ---------------------------------------------------------------------------
// C^D_{M,N}

RationalCuspDivisor build_c_divisor(const EisensteinDatum& datum) {
  const std::int64_t n = datum.level();
  const std::int64_t a = std::gcd(datum.m(), datum.parts().square);
  if (a == 1) {
    const std::int64_t l = datum.l_part();
    const std::int64_t ml = datum.m() * l;
    RationalCuspDivisor out(n);
    for (auto e : divisors_of(ml)) {
      const std::int64_t sign = omega(e) % 2 == 0 ? 1 : -1;
      out.set(e, to_int(sign * euler_phi(l / std::gcd(e, l))));
    }
    return out;
  }
  // Pull back along alpha from the level where p exactly divides.
  const std::int64_t p = prime_divisors(a).front();
  const int r = datum.n().valuation(p);
  const std::int64_t lower = n / ipow(p, r - 1);
  auto c = build_c_divisor(EisensteinDatum::make(lower, datum.m(), datum.d_part() / p));
  for (int k = 0; k < r - 1; ++k) c = alpha_pullback(c, p);
  return c;
}

// ---------------------------------------------------------------------------
// Degeneracy pullbacks and Delta_p

RationalCuspDivisor alpha_pullback(const RationalCuspDivisor& div, std::int64_t p) {
  require_prime(p, "alpha_pullback");
  return RationalCuspDivisor::aggregate(pullback(Degeneracy::alpha, div.expand(), p));
}

RationalCuspDivisor beta_pullback(const RationalCuspDivisor& div, std::int64_t p) {
  require_prime(p, "beta_pullback");
  return RationalCuspDivisor::aggregate(pullback(Degeneracy::beta, div.expand(), p));
}

RationalCuspDivisor hecke_delta(const RationalCuspDivisor& div, std::int64_t p) {
  require_prime(p, "hecke_delta");
  const std::int64_t n = div.level_n();
  const CuspDivisor cusps = div.expand();
  CuspDivisor out(n);
  for (const auto& c : enumerate_cusps(n * p)) {
    const Int k = cusps.coefficient(alpha_image(c, p));
    if (k == 0) continue;
    out.add(beta_image(c, p), k * to_int(alpha_ram(c, p)));
  }
  return RationalCuspDivisor::aggregate(out);
}

std::optional<RationalCuspDivisor> hecke_delta_closed(std::int64_t level, std::int64_t p, std::int64_t n) {
  require_prime(p, "hecke_delta_closed");
  if (level < 1 || n % level != 0) throw std::invalid_argument("hecke_delta_closed: level must divide N");
  const int r = valuation(n, p);
  const int i = valuation(level, p);
  RationalCuspDivisor out(n);
  if (i == 0) {
    out.set(level, to_int(r == 0 ? p + 1 : p));
    return out;
  }
  if (i == 1) {
    if (r == 1) {
      out.set(level / p, to_int(p - 1));
      out.set(level, 1);
    } else {
      out.set(level / p, to_int(p * (p - 1)));
    }
    return out;
  }
  return std::nullopt;
}

std::string to_string(DegMap kind) {
  switch (kind) {
    case DegMap::plus:
      return "plus";
    case DegMap::minus:
      return "minus";
    case DegMap::plain:
      return "plain";
  }
  return "?";
}

DegMap parse_deg_map(const std::string& s) {
  if (s == "plus") return DegMap::plus;
  if (s == "minus") return DegMap::minus;
  if (s == "plain") return DegMap::plain;
  throw std::invalid_argument("unknown map kind '" + s + "' (expected plus, minus or plain)");
}

RationalCuspDivisor deg_map(DegMap kind, const RationalCuspDivisor& div, std::int64_t p) {
  auto a = alpha_pullback(div, p);
  switch (kind) {
    case DegMap::plain:
      return a;
    case DegMap::plus:
      return a - beta_pullback(div, p);
    case DegMap::minus:
      return to_int(p) * a - beta_pullback(div, p);
  }
  return a;
}

}  // namespace cuspgroup
