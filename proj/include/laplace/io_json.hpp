#pragma once

#include <json.hpp>

#include <string>

#include "laplace/coefficients.hpp"
#include "laplace/rational.hpp"

namespace laplace {

// nlohmann::json keeps object keys sorted, which (together with canonical
// rational strings) makes every emitted document byte-reproducible.
using Json = nlohmann::json;

// Canonical serialization: indent 2, sorted keys, trailing newline.
std::string dump_json(const Json& j);

Json rational_to_json(const Rational& r);
// Requires a string "p/q" or "p"; `field` names the location in error text.
Rational rational_from_json(const Json& j, const std::string& field);

// Schema: { "alpha": "p/q", "beta": "p/q", "a": ["p/q", ...],
//           "b": ["p/q", ...], "n_max": N, "pad": bool (optional) }.
// Violations throw ProblemError naming the offending field.
LaplaceProblem problem_from_json(const Json& j);
Json problem_to_json(const LaplaceProblem& p);

LaplaceProblem load_problem_file(const std::string& path);

// Output document: { "scaled_coefficients": [...], "exponents": [...],
//                    "route": label }.
Json coefficients_to_json(const ScaledCoefficients& sc, const std::string& route_label);

// Persistence for the process-wide Stirling triangles. Loading merges rows
// into the in-process tables (monotone growth); saving snapshots them.
// Returns false / throws ProblemError on unreadable data.
bool load_triangle_cache(const std::string& dir);
void save_triangle_cache(const std::string& dir);

}  // namespace laplace
