#include "output.hpp"

#include <array>
#include <charconv>

#include "bltk/errors.hpp"

namespace bltk::cli {

namespace {

std::string approximate_token(const std::string& token) {
  const auto eq = token.find('=');
  const std::string prefix = eq == std::string::npos ? "" : token.substr(0, eq + 1);
  const std::string body = eq == std::string::npos ? token : token.substr(eq + 1);
  if (body.find('/') == std::string::npos) return token;
  try {
    return prefix + decimal(parse_rational(body).get_d());
  } catch (const Error&) {
    return token;
  }
}

}  // namespace

std::string decimal(double x) {
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return ec == std::errc{} ? std::string(buf.data(), end) : std::to_string(x);
}

std::string render(const UnitValue& v, const OutputOptions& o) {
  return o.approx ? decimal(v.approx()) : v.str();
}

Report approximate(Report report) {
  for (auto& r : report)
    for (auto& w : r.witnesses) {
      w.lhs = approximate_token(w.lhs);
      w.rhs = approximate_token(w.rhs);
      for (auto& t : w.tuple) t = approximate_token(t);
    }
  return report;
}

Json to_json(const LawResult& r) {
  Json j;
  j["law"] = r.law;
  j["status"] = to_string(r.status);
  j["checked"] = r.checked;
  j["violations"] = r.violation_count;
  if (!r.note.empty()) j["note"] = r.note;
  Json ws = Json::array();
  for (const auto& w : r.witnesses) {
    Json jw;
    if (!w.clause.empty()) jw["clause"] = w.clause;
    jw["at"] = w.tuple;
    if (!w.relation.empty()) {
      jw["lhs"] = w.lhs;
      jw["relation"] = w.relation;
      jw["rhs"] = w.rhs;
    }
    ws.push_back(std::move(jw));
  }
  j["witnesses"] = std::move(ws);
  return j;
}

Json to_json(const Report& r) {
  Json arr = Json::array();
  for (const auto& l : r) arr.push_back(to_json(l));
  return arr;
}

}  // namespace bltk::cli
