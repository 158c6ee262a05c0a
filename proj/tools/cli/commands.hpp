#ifndef CUSPGROUP_CLI_COMMANDS_HPP
#define CUSPGROUP_CLI_COMMANDS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "cli/report.hpp"

namespace cuspgroup::cli {

enum class OrderMethod { closed, lattice, both };
OrderMethod parse_order_method(const std::string& s);

/// "d:c,d:c,..." with integer coefficients.
RationalCuspDivisor parse_divisor(std::int64_t n, const std::string& text);

Report cmd_cusps(std::int64_t n);
Report cmd_lambda(std::int64_t n, bool inverse);
Report cmd_cdivisor(std::int64_t n, std::int64_t m, std::int64_t d);
Report cmd_order(std::int64_t n, std::int64_t m, std::int64_t d, OrderMethod method);
Report cmd_residues(std::int64_t n, std::int64_t m, std::int64_t d);
Report cmd_qexp(std::int64_t n, std::int64_t m, std::int64_t d, int prec);
Report cmd_hecke(std::int64_t n, std::int64_t p, const std::string& divisor);
Report cmd_classify(std::int64_t n, std::optional<std::int64_t> ell);
Report cmd_sweep(std::int64_t max_n);

/// Runs body, mapping invalid_argument to exit 1 and ConsistencyError to
/// exit 2. body fills "outputs" and may clear "consistent".
Report guarded(const std::string& command, Json inputs, const std::function<void(Json& outputs, bool& consistent)>& body);

}  // namespace cuspgroup::cli

#endif  // CUSPGROUP_CLI_COMMANDS_HPP
