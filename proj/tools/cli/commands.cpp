#include "cli/commands.hpp"

#include <sstream>

#include "cuspgroup/classifier.hpp"
#include "cuspgroup/classlattice.hpp"
#include "cuspgroup/eisq.hpp"

namespace cuspgroup::cli {

namespace {

void require_level(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("N must be a positive integer");
}

Json vector_json(const QVector& v) {
  Json out = Json::array();
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(Json{{"d", v.index()[i]}, {"c", rat_json(v[i])}});
  return out;
}

Json matrix_json(const QMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(rat_json(m(i, j)));
    rows.push_back(row);
  }
  return Json{{"index", m.index()}, {"rows", rows}};
}

Json residues_json(const ResidueTable& t) {
  Json out = Json::array();
  for (const auto& [d, v] : t.res()) out.push_back(Json{{"d", d}, {"c", rat_json(v)}});
  return out;
}

Json datum_inputs(std::int64_t n, std::int64_t m, std::int64_t d) { return Json{{"N", n}, {"M", m}, {"D", d}}; }

}  // namespace

Report guarded(const std::string& command, Json inputs,
               const std::function<void(Json& outputs, bool& consistent)>& body) {
  Report r;
  r.doc = Json{{"command", command}, {"inputs", std::move(inputs)}};
  Json outputs = Json::object();
  bool consistent = true;
  try {
    body(outputs, consistent);
    r.doc["outputs"] = std::move(outputs);
    r.doc["consistent"] = consistent;
    r.exit_code = consistent ? ExitCode::ok : ExitCode::consistency_failure;
  } catch (const ConsistencyError& e) {
    r.doc["error"] = e.what();
    r.doc["consistent"] = false;
    r.exit_code = ExitCode::consistency_failure;
  } catch (const std::invalid_argument& e) {
    r.doc["error"] = e.what();
    r.exit_code = ExitCode::invalid_input;
  } catch (const std::out_of_range& e) {
    r.doc["error"] = e.what();
    r.exit_code = ExitCode::invalid_input;
  } catch (const std::overflow_error& e) {
    r.doc["error"] = e.what();
    r.exit_code = ExitCode::invalid_input;
  }
  return r;
}

OrderMethod parse_order_method(const std::string& s) {
  if (s == "closed") return OrderMethod::closed;
  if (s == "lattice") return OrderMethod::lattice;
  if (s == "both") return OrderMethod::both;
  throw std::invalid_argument("unknown method '" + s + "' (expected closed, lattice or both)");
}

RationalCuspDivisor parse_divisor(std::int64_t n, const std::string& text) {
  require_level(n);
  RationalCuspDivisor out(n);
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("divisor entry '" + item + "' is not d:c");
    std::size_t used = 0;
    std::int64_t d = 0;
    Int c;
    try {
      d = std::stoll(item.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("bad level in divisor entry '" + item + "'");
    }
    if (c.set_str(item.substr(colon + 1), 10) != 0)
      throw std::invalid_argument("bad coefficient in divisor entry '" + item + "'");
    out.add(d, c);
  }
  return out;
}

Report cmd_cusps(std::int64_t n) {
  return guarded("cusps", Json{{"N", n}}, [&](Json& out, bool&) {
    require_level(n);
    Json list = Json::array();
    for (const auto& c : enumerate_cusps(n)) list.push_back(Json{{"d", c.d}, {"x", c.x}});
    Json levels = Json::array();
    for (auto d : divisors_of(n))
      levels.push_back(Json{{"d", d}, {"width_modulus", cusp_width_modulus(d, n)},
                            {"count", euler_phi(cusp_width_modulus(d, n))}});
    out["count"] = cusp_count(n);
    out["cusps"] = list;
    out["levels"] = levels;
  });
}

Report cmd_lambda(std::int64_t n, bool inverse) {
  return guarded("lambda", Json{{"N", n}, {"inverse", inverse}}, [&](Json& out, bool& consistent) {
    require_level(n);
    const QMatrix lam = lambda_matrix(n);
    if (!inverse) {
      out["matrix"] = matrix_json(lam);
      return;
    }
    const QMatrix inv = lambda_inverse(n);
    out["matrix"] = matrix_json(inv);
    out["identity_check"] = lam * inv == QMatrix::identity(n);
    consistent = out["identity_check"].get<bool>();
  });
}

Report cmd_cdivisor(std::int64_t n, std::int64_t m, std::int64_t d) {
  return guarded("cdivisor", datum_inputs(n, m, d), [&](Json& out, bool&) {
    const auto datum = EisensteinDatum::make(n, m, d);
    const auto c = build_c_divisor(datum);
    out["divisor"] = divisor_json(c);
    out["degree"] = int_json(c.degree());
    if (datum.m_divides_squarefree()) {
      out["r_vector"] = vector_json(r_vector(datum));
      out["normalizer"] = rat_json(normalizer(datum));
    } else {
      out["r_vector"] = nullptr;
      out["normalizer"] = nullptr;
    }
  });
}

Report cmd_order(std::int64_t n, std::int64_t m, std::int64_t d, OrderMethod method) {
  static const char* names[] = {"closed", "lattice", "both"};
  Json inputs = datum_inputs(n, m, d);
  inputs["method"] = names[static_cast<int>(method)];
  return guarded("order", inputs, [&](Json& out, bool& consistent) {
    const auto datum = EisensteinDatum::make(n, m, d);
    std::optional<Int> closed;
    std::optional<Int> engine;
    if (method != OrderMethod::lattice) {
      closed = closed_form_order(datum);
      out["closed"] = closed ? int_json(*closed) : Json(nullptr);
      out["covered"] = closed.has_value();
    }
    if (method != OrderMethod::closed) {
      const auto b = class_order_breakdown(build_c_divisor(datum));
      engine = b.order;
      out["lattice"] = int_json(b.order);
      Json parity = Json::array();
      for (const auto& [p, k] : b.parity) parity.push_back(Json{{"p", p}, {"multiplier", int_json(k)}});
      out["conditions"] = Json{{"integrality", int_json(b.integrality)},
                               {"cusp_congruence", int_json(b.cusp_congruence)},
                               {"dual_congruence", int_json(b.dual_congruence)},
                               {"parity", parity}};
    }
    if (method == OrderMethod::both && closed && engine && *closed != *engine) consistent = false;
  });
}

Report cmd_residues(std::int64_t n, std::int64_t m, std::int64_t d) {
  return guarded("residues", datum_inputs(n, m, d), [&](Json& out, bool& consistent) {
    const auto datum = EisensteinDatum::make(n, m, d);
    const auto table = residue_table(datum);
    const auto pulled = residue_table_by_pullback(datum);
    const auto closed = residue_closed(datum);
    const Rat a0 = build_qexp(datum, 0)[0];
    out["residues"] = residues_json(table);
    out["weighted_sum"] = rat_json(table.weighted_sum());
    out["at_infinity"] = rat_json(closed.at_infinity);
    out["at_level_ml"] = rat_json(closed.at_level_ml);
    out["level_ml"] = datum.m() * datum.l_part();
    out["constant_term"] = rat_json(a0);
    const Json checks = Json{{"routes_agree", table == pulled},
                             {"weighted_sum_zero", table.weighted_sum() == 0},
                             {"closed_at_infinity", table.at(n) == closed.at_infinity},
                             {"closed_at_level_ml", table.at(datum.m() * datum.l_part()) == closed.at_level_ml},
                             {"constant_term_link", table.at(n) == -24 * a0}};
    out["checks"] = checks;
    for (const auto& [k, v] : checks.items())
      if (!v.get<bool>()) consistent = false;
  });
}

Report cmd_qexp(std::int64_t n, std::int64_t m, std::int64_t d, int prec) {
  Json inputs = datum_inputs(n, m, d);
  inputs["prec"] = prec;
  return guarded("qexp", inputs, [&](Json& out, bool&) {
    if (prec < 0) throw std::invalid_argument("precision must be non-negative");
    const auto datum = EisensteinDatum::make(n, m, d);
    const auto e = build_qexp(datum, prec);
    Json coeffs = Json::array();
    for (const auto& a : e.coeffs()) coeffs.push_back(rat_json(a));
    out["level"] = e.level();
    out["precision"] = e.precision();
    out["coefficients"] = coeffs;
  });
}

Report cmd_hecke(std::int64_t n, std::int64_t p, const std::string& divisor) {
  return guarded("hecke", Json{{"N", n}, {"p", p}, {"divisor", divisor}}, [&](Json& out, bool& consistent) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    const auto div = parse_divisor(n, divisor);
    const auto image = hecke_delta(div, p);
    out["input"] = divisor_json(div);
    out["image"] = divisor_json(image);
    RationalCuspDivisor table(n);
    bool covered = true;
    for (const auto& [d, k] : div.coeffs()) {
      auto part = hecke_delta_closed(d, p, n);
      if (!part) {
        covered = false;
        break;
      }
      table += k * *part;
    }
    out["case_table"] = covered ? divisor_json(table) : Json(nullptr);
    if (covered && !(table == image)) consistent = false;
  });
}

Report cmd_classify(std::int64_t n, std::optional<std::int64_t> ell) {
  Json inputs{{"N", n}, {"ell", ell ? Json(*ell) : Json(nullptr)}};
  return guarded("classify", inputs, [&](Json& out, bool&) {
    require_level(n);
    Json list = Json::array();
    for (const auto& e : rational_eisenstein_primes(n, ell))
      list.push_back(Json{{"ell", e.ell},
                          {"datum", datum_json(e.datum)},
                          {"index_n", int_json(e.index_n)},
                          {"hypothesis_ok", e.hypothesis_ok},
                          {"new_candidate", e.new_candidate}});
    out["primes"] = list;
    out["data_count"] = enumerate_data(n).size();
  });
}

}  // namespace cuspgroup::cli
