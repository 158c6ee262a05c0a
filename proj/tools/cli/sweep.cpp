#include "cli/sweep.hpp"

#include <algorithm>
#include <random>

#include "cli/commands.hpp"
#include "cuspgroup/classifier.hpp"
#include "cuspgroup/classlattice.hpp"
#include "cuspgroup/eisq.hpp"

namespace cuspgroup::cli {

namespace {

constexpr std::size_t kSamples = 5;

class Recorder {
 public:
  explicit Recorder(SweepSummary& s) : s_(s) {}

  template <class F>
  void check(const std::string& name, const std::string& where, F&& f) {
    auto& c = s_.checks[name];
    ++c.checked;
    std::string why;
    bool pass = false;
    try {
      pass = f();
    } catch (const std::exception& e) {
      why = std::string(": ") + e.what();
    }
    if (pass) return;
    ++c.failed;
    if (c.samples.size() < kSamples) c.samples.push_back(where + why);
  }

 private:
  SweepSummary& s_;
};

std::string at(const EisensteinDatum& d) { return d.to_string(); }

std::string at(const EisensteinDatum& d, std::int64_t p) { return d.to_string() + " p=" + std::to_string(p); }

void sweep_level(std::int64_t n, std::int64_t image_bound, Recorder& rec, SweepSummary& s) {
  const std::string lvl = "N=" + std::to_string(n);
  rec.check("lambda_identity", lvl, [&] { return lambda_matrix(n) * lambda_inverse(n) == QMatrix::identity(n); });
  rec.check("solve_matches_inverse", lvl, [&] {
    std::mt19937 gen(static_cast<std::uint32_t>(n));
    std::uniform_int_distribution<int> coef(-20, 20);
    QVector a(n);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = coef(gen);
    return solve_lambda(n, a) == lambda_inverse(n) * a;
  });
  for (auto d : divisors_of(n))
    for (auto p : prime_divisors(n)) {
      if (valuation(d, p) > 1) continue;
      rec.check("hecke_case_table", "N=" + std::to_string(n) + " d=" + std::to_string(d) + " p=" + std::to_string(p),
                [&] { return hecke_delta(p_divisor(d, n), p) == *hecke_delta_closed(d, p, n); });
    }

  const auto data = enumerate_data(n);
  s.data += static_cast<long>(data.size());
  for (const auto& datum : data) {
    const auto c = build_c_divisor(datum);
    rec.check("c_degree_zero", at(datum), [&] { return c.degree() == 0; });
    const Int order = class_order(c);
    if (datum.m_divides_squarefree())
      rec.check("r_vector_triple", at(datum), [&] {
        const QVector r = r_vector(datum);
        return lambda_matrix(n) * r == QVector::from_divisor(c);
      });
    if (auto closed = closed_form_order(datum))
      rec.check("order_closed_form", at(datum), [&] { return *closed == order; });
    rec.check("order_scaling", at(datum), [&] {
      for (long k = 2; k <= 6; ++k) {
        Int g;
        const Int kk(k);
        mpz_gcd(g.get_mpz_t(), kk.get_mpz_t(), order.get_mpz_t());
        if (class_order(kk * c) != order / g) return false;
      }
      return true;
    });
    for (auto p : prime_divisors(n)) {
      const auto delta = hecke_delta(c, p);
      const Int eps(static_cast<long>(epsilon(datum, p)));
      if (datum.m_divides_squarefree())
        rec.check("hecke_divisor_identity", at(datum, p), [&] { return delta == eps * c; });
      rec.check("hecke_class_identity", at(datum, p), [&] { return is_principal(delta - eps * c); });
    }

    const auto table = residue_table(datum);
    rec.check("residue_routes_agree", at(datum), [&] { return table == residue_table_by_pullback(datum); });
    rec.check("residue_weighted_sum", at(datum), [&] { return table.weighted_sum() == 0; });
    rec.check("residue_closed", at(datum), [&] {
      const auto closed = residue_closed(datum);
      return table.at(n) == closed.at_infinity && table.at(datum.m() * datum.l_part()) == closed.at_level_ml;
    });
    rec.check("residue_constant_term", at(datum), [&] { return table.at(n) == -24 * build_qexp(datum, 0)[0]; });
    if (n <= 60) rec.check("eigenform", at(datum), [&] { return eigen_check(datum, 60, 13).ok(); });

    if (datum.d_part() == 1) {
      for (auto p : prime_divisors(n)) {
        if (n * p > image_bound) continue;
        for (auto kind : {DegMap::minus, DegMap::plus, DegMap::plain}) {
          try {
            check_kernel_instance(kind, datum, p);
          } catch (const std::invalid_argument&) {
            continue;
          }
          const std::string where = to_string(kind) + " " + at(datum, p);
          rec.check("image_identity", where, [&] { return is_principal(image_identity_residual(kind, datum, p)); });
          rec.check("kernel_prediction", where, [&] {
            return kernel_intersection_order(kind, datum, p) == predicted_kernel_intersection(kind, datum, p);
          });
        }
      }
    }
  }

  rec.check("classifier", lvl, [&] {
    for (const auto& e : rational_eisenstein_primes(n)) {
      if (e.index_n % e.ell != 0) return false;
      if (!(normalize_datum(e.datum, e.ell) == e.datum)) return false;
      for (auto p : prime_divisors(e.datum.parts().squarefree))
        if (epsilon(e.datum, p) == 0) return false;
    }
    return true;
  });
}

}  // namespace

bool SweepSummary::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& kv) { return kv.second.failed == 0; });
}

SweepSummary run_sweep(std::int64_t max_n) {
  if (max_n < 1) throw std::invalid_argument("max-N must be positive");
  SweepSummary s;
  s.max_n = max_n;
  Recorder rec(s);
  const std::int64_t image_bound = std::max<std::int64_t>(200, max_n);
  for (std::int64_t n = 1; n <= max_n; ++n) sweep_level(n, image_bound, rec, s);
  return s;
}

Report cmd_sweep(std::int64_t max_n) {
  return guarded("sweep", Json{{"max_N", max_n}}, [&](Json& out, bool& consistent) {
    const auto s = run_sweep(max_n);
    Json checks = Json::object();
    for (const auto& [name, c] : s.checks)
      checks[name] = Json{{"checked", c.checked}, {"failed", c.failed}, {"samples", c.samples}};
    out["checks"] = checks;
    out["data"] = s.data;
    out["all_passed"] = s.ok();
    consistent = s.ok();
  });
}

}  // namespace cuspgroup::cli
