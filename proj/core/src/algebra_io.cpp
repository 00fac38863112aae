#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bltk/errors.hpp"
#include "bltk/finite_algebra.hpp"

namespace bltk {

namespace {

using json = nlohmann::json;
using Index = FiniteAlgebra::Index;

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) parse_error(std::string("missing field '") + name + "'");
  return *it;
}

std::string label_of(const json& v, const char* where) {
  if (!v.is_string()) parse_error(std::string(where) + ": labels must be strings");
  return v.get<std::string>();
}

Index lookup(const std::vector<std::string>& labels, const std::string& l, const char* where) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == l) return static_cast<Index>(i);
  throw Error(ErrorCode::TableOutOfRange, std::string(where) + ": unknown label '" + l + "'");
}

std::vector<Index> read_table(const json& t, const std::vector<std::string>& labels, const char* name) {
  const std::size_t n = labels.size();
  if (!t.is_array() || t.size() != n)
    parse_error(std::string("'") + name + "' must be an array of " + std::to_string(n) + " rows");
  std::vector<Index> out;
  out.reserve(n * n);
  for (const auto& row : t) {
    if (!row.is_array() || row.size() != n)
      parse_error(std::string("'") + name + "' must be square (" + std::to_string(n) + "x" +
                  std::to_string(n) + ")");
    for (const auto& cell : row) out.push_back(lookup(labels, label_of(cell, name), name));
  }
  return out;
}

}  // namespace

FiniteAlgebra load_algebra(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document.begin(), document.end());
  } catch (const json::parse_error& e) {
    parse_error(e.what());
  }
  if (!doc.is_object()) parse_error("algebra document must be a JSON object");

  const json& carrier = field(doc, "carrier");
  if (!carrier.is_array()) parse_error("'carrier' must be an array of strings");
  std::vector<std::string> labels;
  for (const auto& c : carrier) labels.push_back(label_of(c, "carrier"));

  const std::string sig = label_of(field(doc, "signature"), "signature");
  Signature signature;
  if (sig == "BL") signature = Signature::BL;
  else if (sig == "DBL") signature = Signature::DBL;
  else parse_error("'signature' must be \"BL\" or \"DBL\", got \"" + sig + "\"");

  const json& leq = field(doc, "leq");
  if (!leq.is_array()) parse_error("'leq' must be an array of [a, b] pairs");
  std::vector<std::pair<Index, Index>> pairs;
  for (const auto& p : leq) {
    if (!p.is_array() || p.size() != 2) parse_error("'leq' entries must be [a, b] pairs");
    pairs.emplace_back(lookup(labels, label_of(p[0], "leq"), "leq"),
                       lookup(labels, label_of(p[1], "leq"), "leq"));
  }

  auto star = read_table(field(doc, "star"), labels, "star");
  auto arrow = read_table(field(doc, "arrow"), labels, "arrow");
  const Index bottom = lookup(labels, label_of(field(doc, "bottom"), "bottom"), "bottom");
  const Index top = lookup(labels, label_of(field(doc, "top"), "top"), "top");
  return FiniteAlgebra(signature, std::move(labels), pairs, std::move(star), std::move(arrow), bottom, top);
}

FiniteAlgebra load_algebra_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_algebra(buf.str());
}

std::string save_algebra(const FiniteAlgebra& alg) {
  const auto n = static_cast<Index>(alg.size());
  // ordered_json keeps the field order stable for golden files
  nlohmann::ordered_json doc;
  doc["signature"] = std::string(to_string(alg.signature()));
  doc["carrier"] = std::vector<std::string>(alg.labels().begin(), alg.labels().end());
  doc["bottom"] = alg.label(alg.bottom());
  doc["top"] = alg.label(alg.top());
  auto leq = nlohmann::ordered_json::array();
  for (const auto& [a, b] : alg.covering_pairs()) leq.push_back({alg.label(a), alg.label(b)});
  doc["leq"] = leq;
  auto table = [&](auto op) {
    auto t = nlohmann::ordered_json::array();
    for (Index a = 0; a < n; ++a) {
      auto row = nlohmann::ordered_json::array();
      for (Index b = 0; b < n; ++b) row.push_back(alg.label(op(a, b)));
      t.push_back(row);
    }
    return t;
  };
  doc["star"] = table([&](Index a, Index b) { return alg.mul(a, b); });
  doc["arrow"] = table([&](Index a, Index b) { return alg.imp(a, b); });

  // One table row per line; the default pretty printer puts every cell on its own line.
  std::ostringstream os;
  os << "{\n";
  bool first = true;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (!first) os << ",\n";
    first = false;
    os << "  " << nlohmann::json(it.key()).dump() << ": ";
    if (it.key() == "star" || it.key() == "arrow" || it.key() == "leq") {
      os << "[";
      for (std::size_t i = 0; i < it->size(); ++i)
        os << (i ? ",\n    " : "\n    ") << (*it)[i].dump();
      os << "\n  ]";
    } else {
      os << it->dump();
    }
  }
  os << "\n}\n";
  return os.str();
}

}  // namespace bltk
