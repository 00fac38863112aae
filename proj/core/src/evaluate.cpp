#include "bltk/evaluate.hpp"

#include <cctype>
#include <string>

namespace bltk {

TAlgebraBackend::TAlgebraBackend(NormKind kind) : family_(t_norm(kind)) {
  if (!family_.residuated())
    throw Error(ErrorCode::DrasticNotResiduated, "the drastic t-norm has no residuum");
}

FiniteBackend::FiniteBackend(const FiniteAlgebra& alg) : alg_(&alg) {
  if (alg.signature() != Signature::BL)
    throw Error(ErrorCode::SignatureMismatch, "formulas are evaluated over BL-algebras only");
}

FiniteBackend::element_type FiniteBackend::parse_value(std::string_view text) const {
  if (auto i = alg_->index_of(text)) return *i;
  throw Error(ErrorCode::ParseError, "'" + std::string(text) + "' is not a carrier label");
}

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool valid_atom(std::string_view s) {
  if (s.empty() || s[0] < 'a' || s[0] > 'z') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

void add_binding(std::map<std::string, std::string, std::less<>>& out, std::string_view item,
                 const std::string& where) {
  const auto eq = item.find('=');
  if (eq == std::string_view::npos)
    throw Error(ErrorCode::ParseError, where + "expected 'atom=value', got '" + std::string(item) + "'");
  const auto atom = trim(item.substr(0, eq));
  const auto value = trim(item.substr(eq + 1));
  if (!valid_atom(atom)) throw Error(ErrorCode::ParseError, where + "bad atom name '" + std::string(atom) + "'");
  if (value.empty()) throw Error(ErrorCode::ParseError, where + "missing value for '" + std::string(atom) + "'");
  if (!out.emplace(std::string(atom), std::string(value)).second)
    throw Error(ErrorCode::ParseError, where + "atom '" + std::string(atom) + "' assigned twice");
}

}  // namespace

std::map<std::string, std::string, std::less<>> parse_assignments(std::string_view text) {
  std::map<std::string, std::string, std::less<>> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    add_binding(out, text.substr(0, comma), "");
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::map<std::string, std::string, std::less<>> parse_valuation_file(std::string_view text) {
  std::map<std::string, std::string, std::less<>> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) add_binding(out, line, "line " + std::to_string(line_no) + ": ");
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return out;
}

}  // namespace bltk
