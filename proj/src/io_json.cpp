#include "laplace/io_json.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "laplace/number_kernels.hpp"

namespace laplace {

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json rational_to_json(const Rational& r) { return Json(r.str()); }

Rational rational_from_json(const Json& j, const std::string& field) {
  if (!j.is_string())
    throw ProblemError("input field \"" + field + "\": expected a rational string \"p/q\"");
  try {
    return Rational::from_string(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ProblemError("input field \"" + field + "\": " + e.what());
  }
}

namespace {

std::vector<Rational> rational_list(const Json& j, const std::string& field) {
  if (!j.is_array())
    throw ProblemError("input field \"" + field + "\": expected an array of rational strings");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(rational_from_json(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

const Json& require_field(const Json& j, const char* name) {
  const auto it = j.find(name);
  if (it == j.end()) throw ProblemError(std::string("input is missing field \"") + name + "\"");
  return *it;
}

}  // namespace

LaplaceProblem problem_from_json(const Json& j) {
  if (!j.is_object()) throw ProblemError("input must be a JSON object");
  LaplaceProblem p;
  p.alpha = rational_from_json(require_field(j, "alpha"), "alpha");
  p.beta = rational_from_json(require_field(j, "beta"), "beta");
  p.a = rational_list(require_field(j, "a"), "a");
  p.b = rational_list(require_field(j, "b"), "b");
  const Json& n = require_field(j, "n_max");
  if (!n.is_number_integer() || n.get<long long>() < 0)
    throw ProblemError("input field \"n_max\": expected a nonnegative integer");
  p.n_max = n.get<int>();
  if (const auto it = j.find("pad"); it != j.end()) {
    if (!it->is_boolean()) throw ProblemError("input field \"pad\": expected a boolean");
    p.pad = it->get<bool>();
  }
  return p;
}

Json problem_to_json(const LaplaceProblem& p) {
  Json j;
  j["alpha"] = rational_to_json(p.alpha);
  j["beta"] = rational_to_json(p.beta);
  Json a = Json::array(), b = Json::array();
  for (const Rational& r : p.a) a.push_back(rational_to_json(r));
  for (const Rational& r : p.b) b.push_back(rational_to_json(r));
  j["a"] = std::move(a);
  j["b"] = std::move(b);
  j["n_max"] = p.n_max;
  j["pad"] = p.pad;
  return j;
}

LaplaceProblem load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ProblemError("cannot open input file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw ProblemError("cannot parse " + path + ": " + e.what());
  }
  return problem_from_json(j);
}

Json coefficients_to_json(const ScaledCoefficients& sc, const std::string& route_label) {
  Json j;
  Json values = Json::array(), exponents = Json::array();
  for (const ExpansionTerm& t : expansion_terms(sc)) {
    values.push_back(rational_to_json(t.scaled));
    exponents.push_back(rational_to_json(t.exponent));
  }
  j["scaled_coefficients"] = std::move(values);
  j["exponents"] = std::move(exponents);
  j["route"] = route_label;
  return j;
}

namespace {

constexpr const char* kTriangleFile[2] = {"stirling_first.json", "stirling_second.json"};
constexpr const char* kKindName[2] = {"first_unsigned", "second"};

StirlingKind kind_of(int i) {
  return i == 0 ? StirlingKind::first_unsigned : StirlingKind::second;
}

}  // namespace

bool load_triangle_cache(const std::string& dir) {
  bool any = false;
  for (int i = 0; i < 2; ++i) {
    const std::filesystem::path path = std::filesystem::path(dir) / kTriangleFile[i];
    std::ifstream in(path);
    if (!in) continue;
    Json j;
    try {
      in >> j;
    } catch (const Json::exception& e) {
      throw ProblemError("cannot parse cache file " + path.string() + ": " + e.what());
    }
    if (!j.is_object() || j.value("kind", "") != kKindName[i] || !j.contains("rows") ||
        !j["rows"].is_array())
      throw ProblemError("cache file " + path.string() + " has unexpected layout");
    std::vector<std::vector<Integer>> rows;
    for (const Json& row : j["rows"]) {
      if (!row.is_array()) throw ProblemError("cache file " + path.string() + ": bad row");
      std::vector<Integer> r;
      for (const Json& v : row) {
        if (!v.is_string()) throw ProblemError("cache file " + path.string() + ": bad entry");
        try {
          r.emplace_back(v.get<std::string>());
        } catch (const std::invalid_argument&) {
          throw ProblemError("cache file " + path.string() + ": bad integer entry");
        }
      }
      rows.push_back(std::move(r));
    }
    try {
      stirling_seed(kind_of(i), rows);
    } catch (const std::invalid_argument& e) {
      throw ProblemError("cache file " + path.string() + ": " + e.what());
    }
    any = true;
  }
  return any;
}

void save_triangle_cache(const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (int i = 0; i < 2; ++i) {
    Json j;
    j["kind"] = kKindName[i];
    Json rows = Json::array();
    for (const auto& row : stirling_snapshot(kind_of(i))) {
      Json r = Json::array();
      for (const Integer& v : row) r.push_back(v.get_str());
      rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    const std::filesystem::path path = std::filesystem::path(dir) / kTriangleFile[i];
    std::ofstream out(path);
    if (!out) throw ProblemError("cannot write cache file " + path.string());
    out << dump_json(j);
  }
}

}  // namespace laplace
