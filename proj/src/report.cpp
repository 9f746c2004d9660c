#include "nilsol/report.hpp"

#include <algorithm>
#include <sstream>

namespace nilsol {

namespace {

std::string leaf(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool is_leaf(const Json& j) { return !j.is_object() && !j.is_array(); }

bool is_flat_array(const Json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), is_leaf);
}

bool is_matrix(const Json& j) {
  return j.is_array() && !j.empty() &&
         std::all_of(j.begin(), j.end(), [](const Json& r) { return is_flat_array(r) && !r.empty(); });
}

std::string flat(const Json& j) {
  std::string s = "[";
  bool first = true;
  for (const auto& x : j) {
    if (!first) s += ", ";
    s += leaf(x);
    first = false;
  }
  return s + "]";
}

void render(std::ostringstream& os, const Json& j, int indent);

void render_value(std::ostringstream& os, const std::string& head, const Json& v, int indent) {
  const std::string pad(indent, ' ');
  if (is_leaf(v)) {
    os << pad << head << leaf(v) << "\n";
  } else if (is_flat_array(v)) {
    os << pad << head << flat(v) << "\n";
  } else if (is_matrix(v)) {
    os << pad << head << "\n";
    std::size_t width = 0;
    for (const auto& r : v) {
      for (const auto& x : r) width = std::max(width, leaf(x).size());
    }
    for (const auto& r : v) {
      os << pad << "  ";
      bool first = true;
      for (const auto& x : r) {
        const std::string s = leaf(x);
        os << (first ? "" : "  ") << std::string(width - s.size(), ' ') << s;
        first = false;
      }
      os << "\n";
    }
  } else {
    os << pad << head << "\n";
    render(os, v, indent + 2);
  }
}

void render(std::ostringstream& os, const Json& j, int indent) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_value(os, k + ": ", v, indent);
  } else if (j.is_array()) {
    for (const auto& v : j) render_value(os, "- ", v, indent);
  } else {
    os << std::string(indent, ' ') << leaf(j) << "\n";
  }
}

}  // namespace

Json to_json(const Scalar& s) { return s.str(); }

Json to_json(const Rational& q) { return rational_str(q); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    out.push_back(std::move(row));
  }
  return out;
}

Json Report::to_json() const {
  Json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["results"] = results;
  j["status"] = status;
  return j;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << command;
  for (const auto& [k, v] : inputs.items()) os << ' ' << k << '=' << leaf(v);
  os << "\n";
  render(os, results, 2);
  os << "status: " << status << "\n";
  return os.str();
}

std::string render_text(const Json& j) {
  std::ostringstream os;
  render(os, j, 0);
  return os.str();
}

}  // namespace nilsol
