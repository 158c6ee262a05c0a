#include "cuspgroup/eisq.hpp"

#include <algorithm>
#include <numeric>

#include "cuspgroup/cusps.hpp"

namespace cuspgroup {

namespace {

Rat rat(std::int64_t v) { return make_rat(v); }

void truncate_to(std::vector<Rat>& v, std::size_t n) {
  if (v.size() > n) v.resize(n);
}

}  // namespace

// ---------------------------------------------------------------------------
// QExpansion

QExpansion::QExpansion(std::int64_t level, std::vector<Rat> coeffs) : level_(level), coeffs_(std::move(coeffs)) {
  if (level < 1) throw std::invalid_argument("q-expansion level must be positive");
  if (coeffs_.empty()) throw std::invalid_argument("q-expansion needs at least a_0");
}

QExpansion QExpansion::substitute(std::int64_t m, std::int64_t new_level) const {
  if (m < 1) throw std::invalid_argument("substitute: m must be positive");
  std::vector<Rat> out(coeffs_.size(), Rat(0));
  for (std::size_t n = 0; n < out.size(); n += static_cast<std::size_t>(m))
    out[n] = coeffs_[n / static_cast<std::size_t>(m)];
  return QExpansion(new_level, std::move(out));
}

QExpansion& QExpansion::operator+=(const QExpansion& o) {
  truncate_to(coeffs_, o.coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  level_ = std::lcm(level_, o.level_);
  return *this;
}

QExpansion& QExpansion::operator-=(const QExpansion& o) {
  truncate_to(coeffs_, o.coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  level_ = std::lcm(level_, o.level_);
  return *this;
}

QExpansion& QExpansion::operator*=(const Rat& k) {
  for (auto& c : coeffs_) c *= k;
  return *this;
}

std::optional<int> QExpansion::first_difference(const QExpansion& o) const {
  const std::size_t n = std::min(coeffs_.size(), o.coeffs_.size());
  for (std::size_t i = 0; i < n; ++i)
    if (coeffs_[i] != o.coeffs_[i]) return static_cast<int>(i);
  return std::nullopt;
}

QExpansion operator+(QExpansion a, const QExpansion& b) { return a += b; }
QExpansion operator-(QExpansion a, const QExpansion& b) { return a -= b; }
QExpansion operator*(const Rat& k, QExpansion a) { return a *= k; }

// ---------------------------------------------------------------------------
// Adjunction plan

AdjunctionPlan adjunction_plan(const EisensteinDatum& datum) {
  const std::int64_t m = datum.m();
  const std::int64_t l = datum.l_part();
  const std::int64_t p0 = prime_divisors(m * l).front();
  AdjunctionPlan plan{p0, datum.n().valuation(p0), l % p0 == 0, {}};
  for (const auto& [q, r] : datum.n().factors()) {
    if (q == p0) continue;
    AdjunctionStep step{q, r, PrimeRole::unramified, {}};
    if (r == 1) {
      step.role = m % q == 0 ? PrimeRole::multiplicative : PrimeRole::unramified;
      step.terms = {{1, 0}, {m % q == 0 ? -q : -1, 1}};
    } else if (l % q == 0) {
      step.role = PrimeRole::l_part;
      step.terms = {{1, 0}, {-(q + 1), 1}, {q, 2}};
    } else if (m % q == 0) {
      step.role = PrimeRole::d_in_m;
      step.terms = {{1, 0}, {-q, 1}};
    } else {
      step.role = PrimeRole::d_not_m;
      step.terms = {{1, 0}, {-1, 1}};
    }
    plan.steps.push_back(step);
  }
  return plan;
}

// ---------------------------------------------------------------------------
// Series

QExpansion base_epp(std::int64_t p, int prec) {
  if (!is_prime(p)) throw std::invalid_argument("base_epp: p must be prime");
  if (prec < 0) throw std::invalid_argument("precision must be non-negative");
  std::vector<std::int64_t> sigma(static_cast<std::size_t>(prec) + 1, 0);
  for (std::int64_t d = 1; d <= prec; ++d) {
    if (d % p == 0) continue;
    for (std::int64_t n = d; n <= prec; n += d) sigma[static_cast<std::size_t>(n)] += d;
  }
  std::vector<Rat> a(sigma.size());
  a[0] = make_rat(p - 1, 24);
  for (std::size_t n = 1; n < a.size(); ++n) a[n] = rat(sigma[n]);
  return QExpansion(p, std::move(a));
}

namespace {

QExpansion apply_terms(const QExpansion& e, std::int64_t q, int r, const std::vector<Term>& terms) {
  const std::int64_t target = e.level() * ipow(q, r);
  QExpansion out(target, std::vector<Rat>(e.coeffs().size(), Rat(0)));
  for (const auto& t : terms) out += rat(t.coef) * e.substitute(ipow(q, t.shift), target);
  return out;
}

}  // namespace

QExpansion build_qexp(const EisensteinDatum& datum, int prec) {
  const auto plan = adjunction_plan(datum);
  const std::int64_t p0 = plan.base_prime;
  QExpansion e = base_epp(p0, prec);
  const std::int64_t base_level = ipow(p0, plan.base_exponent);
  if (plan.base_twisted)
    e = e.substitute(1, base_level) - e.substitute(p0, base_level);
  else
    e = e.substitute(1, base_level);
  for (const auto& step : plan.steps) e = apply_terms(e, step.prime, step.exponent, step.terms);
  return e;
}

QExpansion hecke_on_qexp(const QExpansion& f, std::int64_t q) {
  if (!is_prime(q)) throw std::invalid_argument("hecke_on_qexp: q must be prime");
  const int out_prec = f.precision() / static_cast<int>(q);
  const bool on_level = f.level() % q == 0;
  std::vector<Rat> b(static_cast<std::size_t>(out_prec) + 1);
  for (int n = 0; n <= out_prec; ++n) {
    b[static_cast<std::size_t>(n)] = f[static_cast<int>(q) * n];
    if (!on_level && n % q == 0) b[static_cast<std::size_t>(n)] += rat(q) * f[n / static_cast<int>(q)];
  }
  return QExpansion(f.level(), std::move(b));
}

bool EigenReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const EigenCheck& c) { return !c.first_violation; });
}

EigenReport eigen_check(const EisensteinDatum& datum, int prec, std::int64_t qmax) {
  if (prec < 2 * qmax) throw std::invalid_argument("eigen_check: need prec >= 2 qmax");
  const QExpansion e = build_qexp(datum, prec);
  EigenReport report;
  for (std::int64_t q = 2; q <= qmax; ++q) {
    if (!is_prime(q)) continue;
    const bool on_level = datum.level() % q == 0;
    const std::int64_t lambda = on_level ? epsilon(datum, q) : q + 1;
    const QExpansion t = hecke_on_qexp(e, q);
    const QExpansion expected = rat(lambda) * e;
    report.checks.push_back({q, on_level, Int(static_cast<long>(lambda)), t.precision(), t.first_difference(expected)});
  }
  return report;
}

// ---------------------------------------------------------------------------
// Residues

Rat ResidueTable::at(std::int64_t d) const {
  auto it = res_.find(d);
  if (it == res_.end()) throw std::invalid_argument("no residue recorded at level " + std::to_string(d));
  return it->second;
}

Rat ResidueTable::weighted_sum() const {
  Rat s = 0;
  for (const auto& [d, v] : res_) s += rat(euler_phi(cusp_width_modulus(d, level_n_))) * v;
  return s;
}

namespace {

PrimeRole base_role(const AdjunctionPlan& plan) {
  if (plan.base_twisted) return PrimeRole::l_part;
  return plan.base_exponent == 1 ? PrimeRole::multiplicative : PrimeRole::d_in_m;
}

ResidueTable corollary_step(const ResidueTable& a, std::int64_t q, int r, PrimeRole role) {
  const std::int64_t n = a.level_n() * ipow(q, r);
  ResidueTable out(n);
  const Rat qq = rat(q);
  const Rat lift = r >= 2 ? rat(ipow(q, r - 2)) : Rat(1);
  for (const auto& [d, ad] : a.res()) {
    for (int k = 0; k <= r; ++k) out.set(d * ipow(q, k), Rat(0));
    switch (role) {
      case PrimeRole::multiplicative:
        out.set(d, (qq - 1) * ad);
        out.set(d * q, -(qq - 1) * ad);
        break;
      case PrimeRole::unramified:
        out.set(d, (qq * qq - 1) / qq * ad);
        break;
      case PrimeRole::d_in_m:
        out.set(d, lift * qq * (qq - 1) * ad);
        for (int k = 1; k <= r; ++k) out.set(d * ipow(q, k), rat(ipow(q, std::max(r - 2 * k, 0))) * (1 - qq) * ad);
        break;
      case PrimeRole::d_not_m:
        out.set(d, lift * (qq * qq - 1) * ad);
        break;
      case PrimeRole::l_part:
        out.set(d, lift * (qq * qq - 1) * (qq - 1) / qq * ad);
        out.set(d * q, lift * (1 - qq * qq) / qq * ad);
        break;
    }
  }
  return out;
}

// Residue at each level of X_0(to) of sum_j c_j E(q^j z), where E lives at
// level `from` with residues a and to = from * q^r.
ResidueTable pull_terms(const ResidueTable& a, std::int64_t q, int r, const std::vector<Term>& terms) {
  const std::int64_t from = a.level_n();
  const std::int64_t to = from * ipow(q, r);
  ResidueTable out(to);
  for (auto d : divisors_of(to)) {
    const Cusp rep = cusps_of_level(d, to).front();
    Rat total = 0;
    for (const auto& t : terms) {
      Cusp c = rep;
      std::int64_t ram = 1;
      const std::int64_t stop = from * ipow(q, t.shift);
      while (c.level_n > stop) {
        ram *= alpha_ram(c, q);
        c = alpha_image(c, q);
      }
      for (int j = 0; j < t.shift; ++j) {
        ram *= beta_ram(c, q);
        c = beta_image(c, q);
      }
      total += rat(t.coef) * rat(ram) / rat(ipow(q, t.shift)) * a.at(c.d);
    }
    out.set(d, total);
  }
  return out;
}

}  // namespace

ResidueTable residue_table(const EisensteinDatum& datum) {
  const auto plan = adjunction_plan(datum);
  ResidueTable t(1);
  t.set(1, Rat(1));
  t = corollary_step(t, plan.base_prime, plan.base_exponent, base_role(plan));
  for (const auto& step : plan.steps) t = corollary_step(t, step.prime, step.exponent, step.role);
  return t;
}

ResidueTable residue_table_by_pullback(const EisensteinDatum& datum) {
  const auto plan = adjunction_plan(datum);
  const std::int64_t p0 = plan.base_prime;
  ResidueTable t(p0);
  t.set(1, rat(p0 - 1));
  t.set(p0, rat(1 - p0));
  const int k = plan.base_exponent;
  if (plan.base_twisted)
    t = pull_terms(t, p0, k - 1, {{1, 0}, {-1, 1}});
  else if (k > 1)
    t = pull_terms(t, p0, k - 1, {{1, 0}});
  for (const auto& step : plan.steps) t = pull_terms(t, step.prime, step.exponent, step.terms);
  return t;
}

ClosedResidues residue_closed(const EisensteinDatum& datum) {
  const auto& pt = datum.parts();
  const std::int64_t m = datum.m();
  const std::int64_t l = datum.l_part();
  ClosedResidues out{Rat(0), Rat(0)};
  if (m == pt.radical) {
    out.at_infinity = 1;
    for (auto p : prime_divisors(pt.radical)) out.at_infinity *= rat(1 - p);
  }
  Rat v = omega(m * l) % 2 == 0 ? Rat(1) : Rat(-1);
  for (auto p : prime_divisors(m)) v *= rat(p - 1);
  for (auto p : prime_divisors(pt.radical / m)) v *= rat(p * p - 1);
  for (auto p : prime_divisors(pt.square)) {
    const int e = datum.n().valuation(p);
    v *= e >= 2 ? rat(ipow(p, e - 2)) : Rat(1);
  }
  const std::int64_t sf_part = pt.squarefree / std::gcd(m, pt.squarefree);
  for (auto p : prime_divisors(sf_part * l)) v /= rat(p);
  out.at_level_ml = v;
  return out;
}

}  // namespace cuspgroup
