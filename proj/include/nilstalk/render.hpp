#pragma once

#include <string>

#include <json.hpp>

#include "nilstalk/decmatrix.hpp"
#include "nilstalk/gradedz.hpp"
#include "nilstalk/kostka.hpp"
#include "nilstalk/stalktable.hpp"

namespace nilstalk {

enum class OutputFormat { Table, Json, Csv };

OutputFormat parse_format(const std::string& text);  // "table" | "json" | "csv"

// JSON renderings. Degrees and exponents become decimal string keys,
// torsion ascending integer lists.
nlohmann::json to_json(const FGAbGroup& g);
nlohmann::json to_json(const GradedGroup& g);
nlohmann::json to_json(const StalkTable& t);
nlohmann::json to_json(const DecompositionMatrix& d);
nlohmann::json to_json(const QPolynomial& p);

// One-line text renderings, e.g. "Z@-2 + Z/2@0".
std::string render_line(const GradedGroup& g);
std::string render_table(const StalkTable& t);
std::string render_table(const DecompositionMatrix& d);

std::string render_csv(const GradedGroup& g);
std::string render_csv(const StalkTable& t);
std::string render_csv(const DecompositionMatrix& d);
std::string render_csv(const QPolynomial& p);

}  // namespace nilstalk
