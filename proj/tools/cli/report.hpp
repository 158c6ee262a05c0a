#ifndef CUSPGROUP_CLI_REPORT_HPP
#define CUSPGROUP_CLI_REPORT_HPP

#include <string>

#include <json.hpp>

#include "cuspgroup/arith.hpp"
#include "cuspgroup/cusps.hpp"
#include "cuspgroup/heckediv.hpp"

namespace cuspgroup::cli {

using Json = nlohmann::json;

enum class Format { text, json };

enum ExitCode : int { ok = 0, invalid_input = 1, consistency_failure = 2 };

/// What every command hands back: the JSON document plus an exit code.
struct Report {
  int exit_code = ExitCode::ok;
  Json doc;
};

Json rat_json(const Rat& r);
Json int_json(const Int& v);
Json divisor_json(const RationalCuspDivisor& div);
Json datum_json(const EisensteinDatum& datum);

/// Keys sorted, two-space indent, trailing newline.
std::string render_json(const Json& doc);
std::string render_text(const Json& doc);
std::string render(const Report& r, Format f);

}  // namespace cuspgroup::cli

#endif  // CUSPGROUP_CLI_REPORT_HPP
