#include "cuspgroup/classlattice.hpp"

#include <algorithm>
#include <numeric>

namespace cuspgroup {

namespace {

Rat rat(std::int64_t v) { return make_rat(v); }

std::size_t position(const std::vector<std::int64_t>& index, std::int64_t d) {
  auto it = std::lower_bound(index.begin(), index.end(), d);
  if (it == index.end() || *it != d)
    throw std::invalid_argument(std::to_string(d) + " is not a divisor of the level");
  return static_cast<std::size_t>(it - index.begin());
}

bool is_prime_1_mod_8(std::int64_t m) { return is_prime(m) && m % 8 == 1; }

// Lemma coefficient b_ij, 1-based.
Rat block_coefficient(std::int64_t q, int r, int i, int j) {
  Rat kappa = 0;
  if (i == j)
    kappa = (i == 1 || i == r + 1) ? rat(q * q) : rat(q * q + 1);
  else if (std::abs(i - j) == 1)
    kappa = rat(-q);
  if (kappa == 0) return kappa;
  const std::int64_t g = std::gcd(ipow(q, j - 1), ipow(q, r + 1 - j));
  return kappa * rat(g) / rat(ipow(q, r) * (q * q - 1));
}

}  // namespace

// ---------------------------------------------------------------------------
// QVector / QMatrix

QVector::QVector(std::int64_t level_n) : level_n_(level_n), index_(divisors_of(level_n)) {
  entries_.assign(index_.size(), Rat(0));
}

QVector::QVector(std::int64_t level_n, std::vector<Rat> entries)
    : level_n_(level_n), index_(divisors_of(level_n)), entries_(std::move(entries)) {
  if (entries_.size() != index_.size()) throw std::invalid_argument("QVector: wrong length");
}

QVector QVector::from_divisor(const RationalCuspDivisor& div) {
  QVector out(div.level_n());
  for (const auto& [d, k] : div.coeffs()) out.entries_[position(out.index_, d)] = Rat(k);
  return out;
}

const Rat& QVector::at_divisor(std::int64_t d) const { return entries_[position(index_, d)]; }

Rat QVector::sum() const {
  Rat s = 0;
  for (const auto& x : entries_) s += x;
  return s;
}

bool QVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rat& x) { return x == 0; });
}

QMatrix::QMatrix(std::int64_t level_n) : level_n_(level_n), index_(divisors_of(level_n)) {
  entries_.assign(index_.size() * index_.size(), Rat(0));
}

QMatrix QMatrix::identity(std::int64_t level_n) {
  QMatrix m(level_n);
  for (std::size_t i = 0; i < m.size(); ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (o.level_n_ != level_n_) throw std::invalid_argument("QMatrix: level mismatch");
  const std::size_t n = size();
  QMatrix out(level_n_);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Rat& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += a * o(k, j);
    }
  return out;
}

QVector QMatrix::operator*(const QVector& v) const {
  if (v.level_n() != level_n_) throw std::invalid_argument("QMatrix: level mismatch");
  QVector out(level_n_);
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

// ---------------------------------------------------------------------------
// Lambda(N)

QMatrix lambda_matrix(std::int64_t n) {
  QMatrix m(n);
  const auto& ds = m.index();
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const std::int64_t di = ds[i];
    for (std::size_t j = 0; j < ds.size(); ++j) {
      const std::int64_t dj = ds[j];
      const std::int64_t g = std::gcd(di, dj);
      m(i, j) = rat(n / std::gcd(di, n / di)) * rat(g * g) / (rat(24) * rat(di) * rat(dj));
    }
  }
  return m;
}

QMatrix lambda_inverse(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("lambda_inverse: N must be positive");
  std::vector<std::int64_t> order{1};
  std::vector<Rat> inv{Rat(24)};
  const Factored fn = factor(n);
  for (const auto& [q, r] : fn.factors()) {
    const std::size_t old = order.size();
    const std::size_t blocks = static_cast<std::size_t>(r) + 1;
    const std::size_t size = old * blocks;
    std::vector<std::int64_t> next_order;
    next_order.reserve(size);
    for (std::size_t j = 0; j < blocks; ++j)
      for (auto d : order) next_order.push_back(d * ipow(q, static_cast<int>(j)));
    std::vector<Rat> next(size * size, Rat(0));
    for (std::size_t bi = 0; bi < blocks; ++bi)
      for (std::size_t bj = 0; bj < blocks; ++bj) {
        const Rat b = block_coefficient(q, r, static_cast<int>(bi) + 1, static_cast<int>(bj) + 1);
        if (b == 0) continue;
        for (std::size_t a = 0; a < old; ++a)
          for (std::size_t c = 0; c < old; ++c)
            next[(bi * old + a) * size + bj * old + c] = b * inv[a * old + c];
      }
    order = std::move(next_order);
    inv = std::move(next);
  }
  QMatrix out(n);
  const std::size_t sz = order.size();
  std::vector<std::size_t> pos(sz);
  for (std::size_t i = 0; i < sz; ++i) pos[i] = position(out.index(), order[i]);
  for (std::size_t i = 0; i < sz; ++i)
    for (std::size_t j = 0; j < sz; ++j) out(pos[i], pos[j]) = inv[i * sz + j];
  return out;
}

QVector solve_lambda(std::int64_t n, const QVector& a) {
  if (a.level_n() != n) throw std::invalid_argument("solve_lambda: vector has wrong level");
  const QMatrix lam = lambda_matrix(n);
  const std::size_t sz = lam.size();
  std::vector<std::vector<Rat>> m(sz, std::vector<Rat>(sz + 1));
  for (std::size_t i = 0; i < sz; ++i) {
    for (std::size_t j = 0; j < sz; ++j) m[i][j] = lam(i, j);
    m[i][sz] = a[i];
  }
  for (std::size_t c = 0; c < sz; ++c) {
    std::size_t piv = c;
    while (piv < sz && m[piv][c] == 0) ++piv;
    if (piv == sz) throw ConsistencyError("Lambda(" + std::to_string(n) + ") is singular");
    std::swap(m[c], m[piv]);
    for (std::size_t r = 0; r < sz; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rat f = m[r][c] / m[c][c];
      for (std::size_t k = c; k <= sz; ++k) m[r][k] -= f * m[c][k];
    }
  }
  QVector x(n);
  for (std::size_t i = 0; i < sz; ++i) x[i] = m[i][sz] / m[i][i];
  return x;
}

// ---------------------------------------------------------------------------
// R(M,N)^D

Rat normalizer(const EisensteinDatum& datum) {
  const auto& pt = datum.parts();
  Rat v = rat(datum.level() / pt.radical);
  for (auto p : prime_divisors(datum.m())) v *= rat(p - 1);
  for (auto p : prime_divisors(pt.radical)) {
    if (datum.m() % p != 0) v *= rat(p * p - 1);
    if (datum.l_part() % p == 0) v /= rat(p);
  }
  return v / 24;
}

namespace {

void require_m_squarefree(const EisensteinDatum& datum) {
  if (!datum.m_divides_squarefree())
    throw std::invalid_argument("R vector needs M | N^sf, got " + datum.to_string());
}

}  // namespace

QVector r_vector_closed(const EisensteinDatum& datum) {
  require_m_squarefree(datum);
  const std::int64_t n = datum.level();
  const std::int64_t m = datum.m();
  const std::int64_t l = datum.l_part();
  QVector out(n);
  const Rat scale = 1 / normalizer(datum);
  for (std::size_t k = 0; k < out.size(); ++k) {
    const std::int64_t delta = out.index()[k];
    std::int64_t prod = 1;
    for (const auto& [p, r] : datum.n().factors()) {
      const int i = valuation(delta, p);
      std::int64_t e = 0;
      if (m % p == 0) {
        e = i == 0 ? 1 : -1;  // x
      } else if (l % p == 0) {
        e = i == 0 ? p : i == 1 ? -(p + 1) : i == 2 ? 1 : 0;  // z
      } else {
        e = i == 0 ? p : i == 1 ? -1 : 0;  // y
      }
      prod *= e;
      if (prod == 0) break;
    }
    out[k] = rat(prod) * scale;
  }
  return out;
}

QVector r_vector_recursive(const EisensteinDatum& datum) {
  require_m_squarefree(datum);
  const std::int64_t m = datum.m();
  const std::int64_t l = datum.l_part();
  std::int64_t cur = 1;
  std::vector<std::int64_t> order{1};
  std::vector<Rat> vec{Rat(24)};
  for (const auto& [q, r] : datum.n().factors()) {
    // coefficient per q-block, then overall denominator
    std::vector<std::int64_t> coef(static_cast<std::size_t>(r) + 1, 0);
    Rat den;
    if (m % q == 0) {
      coef[0] = 1, coef[1] = -1;
      den = rat(q - 1);
    } else if (r == 1) {
      coef[0] = q, coef[1] = -1;
      den = rat(q * q - 1);
    } else if (l % q == 0) {
      coef[0] = q, coef[1] = -(q + 1), coef[2] = 1;
      den = rat(ipow(q, r - 2) * (q * q - 1));
    } else {
      coef[0] = q, coef[1] = -1;
      den = rat(ipow(q, r - 1) * (q * q - 1));
    }
    std::vector<std::int64_t> next_order;
    std::vector<Rat> next;
    for (int j = 0; j <= r; ++j)
      for (std::size_t a = 0; a < order.size(); ++a) {
        next_order.push_back(order[a] * ipow(q, j));
        next.push_back(rat(coef[static_cast<std::size_t>(j)]) * vec[a] / den);
      }
    order = std::move(next_order);
    vec = std::move(next);
    cur *= ipow(q, r);
  }
  QVector out(cur);
  for (std::size_t i = 0; i < order.size(); ++i) out[position(out.index(), order[i])] = vec[i];
  return out;
}

QVector r_vector(const EisensteinDatum& datum) {
  const QVector closed = r_vector_closed(datum);
  const QVector rec = r_vector_recursive(datum);
  if (!(closed == rec))
    throw ConsistencyError("R vector: closed entries and recursion disagree at " + datum.to_string());
  const QVector solved = solve_lambda(datum.level(), QVector::from_divisor(build_c_divisor(datum)));
  if (!(closed == solved))
    throw ConsistencyError("R vector: Lambda R != C at " + datum.to_string());
  return closed;
}

// ---------------------------------------------------------------------------
// Orders

OrderBreakdown class_order_breakdown(const RationalCuspDivisor& a) {
  if (a.degree() != 0) throw std::invalid_argument("class_order: divisor has nonzero degree");
  const std::int64_t n = a.level_n();
  OrderBreakdown out{lambda_inverse(n) * QVector::from_divisor(a), 1, 1, 1, {}, 1};
  const QVector& r = out.r;
  if (r.sum() != 0) throw ConsistencyError("class_order: Lambda^-1 a has nonzero sum");

  for (std::size_t i = 0; i < r.size(); ++i) out.integrality = lcm(out.integrality, r[i].get_den());
  Rat s1 = 0, s2 = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    s1 += r[i] * rat(r.index()[i]);
    s2 += r[i] * rat(n / r.index()[i]);
  }
  out.cusp_congruence = minimal_multiplier(s1, 24);
  out.dual_congruence = minimal_multiplier(s2, 24);
  out.order = lcm(lcm(out.integrality, out.cusp_congruence), out.dual_congruence);
  for (auto p : prime_divisors(n)) {
    Rat b = 0;
    for (std::size_t i = 0; i < r.size(); ++i) b += r[i] * valuation(r.index()[i], p);
    const Int need = minimal_multiplier(b, 2);
    out.parity.emplace_back(p, need);
    out.order = lcm(out.order, need);
  }
  return out;
}

Int class_order(const RationalCuspDivisor& a) { return class_order_breakdown(a).order; }

bool is_principal(const RationalCuspDivisor& a) { return class_order(a) == 1; }

std::optional<Int> closed_form_order(const EisensteinDatum& datum) {
  const std::int64_t n = datum.level();
  const std::int64_t m = datum.m();
  const auto& pt = datum.parts();
  const std::int64_t a = std::gcd(m, pt.square);
  if (a != 1) {
    std::int64_t b = 1;
    for (auto p : prime_divisors(a)) b *= ipow(p, datum.n().valuation(p) - 1);
    return closed_form_order(EisensteinDatum::make(n / b, m, datum.d_part() / a));
  }
  if (is_power_of_two(n) && n >= 4) {
    const int k = datum.n().valuation(2);
    return numerator_of(k >= 4 ? Rat(ipow(2, k - 4)) : make_rat(1, ipow(2, 4 - k)));
  }
  if (datum.l_part() != 1) return numerator_of(normalizer(datum));
  if (pt.square == 1) {
    const bool h2 = is_prime_1_mod_8(m) && (n == m || n == 2 * m);
    return numerator_of(normalizer(datum) * (h2 ? 2 : 1));
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Degeneracy images of C_{M,N}

void check_kernel_instance(DegMap kind, const EisensteinDatum& datum, std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (datum.d_part() != 1) throw std::invalid_argument("kernel intersection needs D = 1");
  const std::int64_t n = datum.level();
  bool ok = false;
  switch (kind) {
    case DegMap::minus:
      ok = datum.m() % p == 0;
      break;
    case DegMap::plus:
      ok = (datum.parts().squarefree / datum.m()) % p == 0;
      break;
    case DegMap::plain:
      ok = n % (p * p) == 0;
      break;
  }
  if (!ok)
    throw std::invalid_argument("p = " + std::to_string(p) + " is not compatible with " + to_string(kind) +
                                " at " + datum.to_string());
}

RationalCuspDivisor image_identity_residual(DegMap kind, const EisensteinDatum& datum, std::int64_t p) {
  check_kernel_instance(kind, datum, p);
  const std::int64_t np = datum.level() * p;
  const auto image = deg_map(kind, build_c_divisor(datum), p);
  switch (kind) {
    case DegMap::minus:
      return image - Int(static_cast<long>(p + 1)) * build_c_divisor(EisensteinDatum::make(np, datum.m() / p, 1));
    case DegMap::plus:
      return image - build_c_divisor(EisensteinDatum::make(np, datum.m(), 1));
    case DegMap::plain:
      return image - Int(static_cast<long>(p)) * build_c_divisor(EisensteinDatum::make(np, datum.m(), 1));
  }
  return image;
}

Int kernel_intersection_order(DegMap kind, const EisensteinDatum& datum, std::int64_t p) {
  check_kernel_instance(kind, datum, p);
  const auto c = build_c_divisor(datum);
  const Int whole = class_order(c);
  const Int image = class_order(deg_map(kind, c, p));
  if (whole % image != 0) throw ConsistencyError("image order does not divide the order of C");
  return whole / image;
}

Int predicted_kernel_intersection(DegMap kind, const EisensteinDatum& datum, std::int64_t p) {
  check_kernel_instance(kind, datum, p);
  const std::int64_t n = datum.level();
  const std::int64_t m = datum.m();
  if (!is_prime_1_mod_8(m)) return 1;
  switch (kind) {
    case DegMap::minus:
      return (n == m || n == 2 * m) ? 2 : 1;
    case DegMap::plus:
      return n == 2 * m ? 2 : 1;
    case DegMap::plain:
      return 1;
  }
  return 1;
}

}  // namespace cuspgroup
