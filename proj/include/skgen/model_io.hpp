#pragma once

// JSON model files, schema "edms-model/1": alphabets, per-state joint
// tables in row-major (x_a, x_b, x_e) order keyed by state label, and
// per-state costs. Probabilities are decimal floats.

#include <iosfwd>
#include <string>

#include "skgen/edms.hpp"

namespace skgen {

inline constexpr const char* kModelSchema = "edms-model/1";

FiniteEdms load_model(std::istream& in);             // throws std::runtime_error on bad input
FiniteEdms load_model_file(const std::string& path);
FiniteEdms parse_model(const std::string& text);

void save_model(const FiniteEdms& model, std::ostream& out);
void save_model_file(const FiniteEdms& model, const std::string& path);
std::string dump_model(const FiniteEdms& model);

}  // namespace skgen
