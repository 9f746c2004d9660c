#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "nilsol/linalg.hpp"

namespace nilsol {

/// Insertion-ordered so reports print in a fixed order.
using Json = nlohmann::ordered_json;

Json to_json(const Scalar& s);
Json to_json(const Rational& q);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  std::string status = "ok";

  Json to_json() const;
  /// Two-space indented key: value lines; matrices as aligned rows. Scalars
  /// appear exactly as in the JSON form.
  std::string to_text() const;
};

std::string render_text(const Json& j);

}  // namespace nilsol
