#pragma once

#include <string>

#include <json.hpp>

#include "bltk/report.hpp"
#include "bltk/unit_value.hpp"

namespace bltk::cli {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json };

struct OutputOptions {
  Format format = Format::Text;
  bool approx = false;
};

/// Shortest decimal that reads back as the same double.
std::string decimal(double x);

/// Exact "p/q", or its decimal under --approx.
std::string render(const UnitValue& v, const OutputOptions& o);

/// Rewrites exact rationals inside witnesses ("3/10", "p=3/10") as decimals.
Report approximate(Report report);

Json to_json(const LawResult& r);
Json to_json(const Report& r);

}  // namespace bltk::cli
