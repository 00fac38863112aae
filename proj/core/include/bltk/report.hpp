#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace bltk {

/// One concrete counterexample to a law: the tuple it was evaluated at and
/// the two sides that failed to stand in the expected relation.
struct Violation {
  std::string law;
  std::string clause;  // sub-statement of a multi-part law, empty when the law has one
  std::vector<std::string> tuple;
  std::string lhs;
  std::string relation;
  std::string rhs;
};

enum class LawStatus { Pass, Fail, Skipped };

struct LawResult {
  std::string law;
  LawStatus status = LawStatus::Pass;
  std::size_t checked = 0;
  std::size_t violation_count = 0;
  std::vector<Violation> witnesses;  // earliest violations in sweep order, capped
  std::string note;

  bool passed() const { return status != LawStatus::Fail; }
};

using Report = std::vector<LawResult>;

inline constexpr std::size_t kMaxWitnesses = 8;

bool all_passed(const Report& report);
const LawResult* find_law(const Report& report, const std::string& law);
void append(Report& into, const Report& from);

std::string to_string(LawStatus status);

/// Line-oriented rendering: one status line per law followed by its witnesses.
std::string to_text(const Report& report);
std::string to_text(const Violation& v);

}  // namespace bltk
