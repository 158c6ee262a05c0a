#include "cli/report.hpp"

#include <algorithm>
#include <sstream>

namespace cuspgroup::cli {

Json rat_json(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  return Json{{"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}};
}

Json int_json(const Int& v) { return v.get_str(); }

Json divisor_json(const RationalCuspDivisor& div) {
  Json out = Json::array();
  for (auto d : divisors_of(div.level_n())) {
    const Int k = div.coefficient(d);
    out.push_back(Json{{"d", d}, {"c", rat_json(Rat(k))}});
  }
  return out;
}

Json datum_json(const EisensteinDatum& datum) {
  return Json{{"N", datum.level()}, {"M", datum.m()}, {"D", datum.d_part()}};
}

std::string render_json(const Json& doc) { return doc.dump(2) + "\n"; }

namespace {

bool is_rat(const Json& j) { return j.is_object() && j.size() == 2 && j.contains("num") && j.contains("den"); }

bool is_entry(const Json& j) { return j.is_object() && j.size() == 2 && j.contains("d") && j.contains("c"); }

std::string scalar(const Json& j) {
  if (is_rat(j)) {
    const auto num = j["num"].get<std::string>();
    const auto den = j["den"].get<std::string>();
    return den == "1" ? num : num + "/" + den;
  }
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

bool is_scalar(const Json& j) { return !j.is_structured() || is_rat(j); }

void emit(std::ostringstream& os, const std::string& key, const Json& j, int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  const std::string label = key.empty() ? "" : key + ":";
  if (is_scalar(j)) {
    os << pad << label << (label.empty() ? "" : " ") << scalar(j) << "\n";
    return;
  }
  if (j.is_array() && !j.empty() && std::all_of(j.begin(), j.end(), is_entry)) {
    os << pad << label << "\n";
    for (const auto& e : j) os << pad << "  [" << e["d"].dump() << "] " << scalar(e["c"]) << "\n";
    return;
  }
  if (j.is_array() && std::all_of(j.begin(), j.end(), is_scalar)) {
    os << pad << label << (label.empty() ? "" : " ");
    for (std::size_t i = 0; i < j.size(); ++i) os << (i ? " " : "") << scalar(j[i]);
    os << "\n";
    return;
  }
  if (!label.empty()) os << pad << label << "\n";
  const int inner = key.empty() ? depth : depth + 1;
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) emit(os, "- " + std::to_string(i), j[i], inner);
  } else {
    for (const auto& [k, v] : j.items()) emit(os, k, v, inner);
  }
}

}  // namespace

std::string render_text(const Json& doc) {
  std::ostringstream os;
  emit(os, "", doc, 0);
  return os.str();
}

std::string render(const Report& r, Format f) { return f == Format::json ? render_json(r.doc) : render_text(r.doc); }

}  // namespace cuspgroup::cli
