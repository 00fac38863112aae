#include "bltk/report.hpp"

#include <algorithm>
#include <sstream>

namespace bltk {

bool all_passed(const Report& report) {
  return std::all_of(report.begin(), report.end(), [](const LawResult& r) { return r.passed(); });
}

const LawResult* find_law(const Report& report, const std::string& law) {
  auto it = std::find_if(report.begin(), report.end(), [&](const LawResult& r) { return r.law == law; });
  return it == report.end() ? nullptr : &*it;
}

void append(Report& into, const Report& from) { into.insert(into.end(), from.begin(), from.end()); }

std::string to_string(LawStatus status) {
  switch (status) {
    case LawStatus::Pass: return "PASS";
    case LawStatus::Fail: return "FAIL";
    case LawStatus::Skipped: return "SKIP";
  }
  return "?";
}

std::string to_text(const Violation& v) {
  std::ostringstream os;
  os << v.law;
  if (!v.clause.empty()) os << " [" << v.clause << "]";
  os << " at (";
  for (std::size_t i = 0; i < v.tuple.size(); ++i) os << (i ? ", " : "") << v.tuple[i];
  os << ")";
  if (!v.relation.empty()) os << ": " << v.lhs << " " << v.relation << " " << v.rhs << " fails";
  return os.str();
}

std::string to_text(const Report& report) {
  std::ostringstream os;
  for (const auto& r : report) {
    os << to_string(r.status) << ' ' << r.law << " checked=" << r.checked;
    if (r.violation_count) os << " violations=" << r.violation_count;
    if (!r.note.empty()) os << " (" << r.note << ')';
    os << '\n';
    for (const auto& w : r.witnesses) os << "  witness " << to_text(w) << '\n';
  }
  return os.str();
}

}  // namespace bltk
