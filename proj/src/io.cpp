#include "nilsol/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nilsol {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::string trim(std::string_view s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(pos, end - pos);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::string t = trim(raw);
    if (!t.empty()) out.push_back({number, std::move(t)});
    pos = end + 1;
  }
  return out;
}

// Splits on whitespace outside parentheses.
std::vector<std::string> tokens(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && std::isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::pair<std::string, std::string> keyword(const std::string& line) {
  const auto sp = line.find_first_of(" \t");
  if (sp == std::string::npos) return {line, ""};
  return {line.substr(0, sp), trim(line.substr(sp + 1))};
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::size_t parse_count(const Line& l, const std::string& s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw FileError(l.number, "expected a nonnegative integer, got '" + s + "'");
  }
  return std::stoul(s);
}

Scalar parse_literal(const Line& l, const std::string& s) {
  try {
    return Scalar::parse(s);
  } catch (const ParseError& e) {
    throw FileError(l.number, e.what());
  } catch (const std::exception& e) {
    throw FileError(l.number, "bad scalar '" + s + "': " + e.what());
  }
}

std::string literal(const Scalar& c) {
  const std::string s = c.str();
  return c.terms().size() > 1 ? "(" + s + ")" : s;
}

std::vector<Scalar> parse_row(const Line& l, std::size_t n) {
  const auto t = tokens(l.text);
  if (t.size() != n) {
    throw FileError(l.number, "expected " + std::to_string(n) + " entries, got " +
                                  std::to_string(t.size()));
  }
  std::vector<Scalar> row;
  for (const auto& s : t) row.push_back(parse_literal(l, s));
  return row;
}

// "c1*lk + c2*lm - lr" -> (coefficient, label) pairs
std::vector<std::pair<Scalar, std::string>> parse_sum(const Line& l, const std::string& rhs) {
  std::vector<std::pair<Scalar, std::string>> out;
  std::vector<std::pair<bool, std::string>> parts;
  std::string cur;
  bool negative = false;
  int depth = 0;
  auto flush = [&]() {
    const std::string t = trim(cur);
    if (t.empty()) throw FileError(l.number, "empty term in '" + rhs + "'");
    parts.emplace_back(negative, t);
    cur.clear();
  };
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    const char ch = rhs[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth < 0) throw FileError(l.number, "unbalanced ')'");
    const bool sign = depth == 0 && (ch == '+' || ch == '-');
    if (sign && trim(cur).empty() && parts.empty()) {
      negative = ch == '-';
      continue;
    }
    if (sign) {
      flush();
      negative = ch == '-';
      continue;
    }
    cur += ch;
  }
  if (depth != 0) throw FileError(l.number, "unbalanced '('");
  flush();
  if (parts.size() == 1 && !parts[0].first && parts[0].second == "0") return out;
  for (const auto& [neg, term] : parts) {
    std::size_t star = std::string::npos;
    depth = 0;
    for (std::size_t i = 0; i < term.size(); ++i) {
      if (term[i] == '(') ++depth;
      if (term[i] == ')') --depth;
      if (term[i] == '*' && depth == 0) star = i;
    }
    Scalar c(1);
    std::string label = term;
    if (star != std::string::npos) {
      c = parse_literal(l, term.substr(0, star));
      label = trim(term.substr(star + 1));
    }
    if (!is_identifier(label)) throw FileError(l.number, "expected a basis label, got '" + label + "'");
    out.emplace_back(neg ? -c : c, label);
  }
  return out;
}

}  // namespace

std::optional<Matrix> AlgebraFile::gram_or_none() const {
  if (metric == MetricKind::None) return std::nullopt;
  if (metric == MetricKind::Orthonormal) return Matrix::identity(algebra.dim());
  return gram;
}

MetricLieAlgebra AlgebraFile::metric_algebra() const {
  if (metric == MetricKind::Gram) return MetricLieAlgebra::with_gram(algebra, gram);
  return MetricLieAlgebra::orthonormal(algebra);
}

AlgebraFile parse_algebra_file(std::string_view text) {
  const auto lines = content_lines(text);
  AlgebraFile f;
  std::optional<std::size_t> dim;
  std::vector<std::string> labels;
  std::map<std::string, std::size_t> index;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::vector<BracketEntry> entries;
  bool have_metric = false;

  auto ensure_labels = [&](const Line& l) {
    if (!dim) throw FileError(l.number, "'dim' must come first");
    if (labels.empty()) {
      labels = default_labels(*dim);
      for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = i;
    }
  };
  auto lookup = [&](const Line& l, const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) throw FileError(l.number, "unknown basis label '" + name + "'");
    return it->second;
  };

  for (std::size_t li = 0; li < lines.size(); ++li) {
    const Line& l = lines[li];
    const auto [kw, rest] = keyword(l.text);
    if (kw == "algebra") {
      if (!f.name.empty()) throw FileError(l.number, "repeated 'algebra'");
      if (rest.empty() || rest.find_first_of(" \t") != std::string::npos) {
        throw FileError(l.number, "expected 'algebra NAME'");
      }
      f.name = rest;
    } else if (kw == "dim") {
      if (dim) throw FileError(l.number, "repeated 'dim'");
      dim = parse_count(l, rest);
    } else if (kw == "basis") {
      if (!dim) throw FileError(l.number, "'dim' must come before 'basis'");
      if (!labels.empty()) throw FileError(l.number, "basis given twice or after brackets");
      labels = tokens(rest);
      if (labels.size() != *dim) {
        throw FileError(l.number, "basis has " + std::to_string(labels.size()) +
                                      " labels, dim is " + std::to_string(*dim));
      }
      for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!is_identifier(labels[i])) throw FileError(l.number, "bad label '" + labels[i] + "'");
        if (!index.emplace(labels[i], i).second) {
          throw FileError(l.number, "repeated label '" + labels[i] + "'");
        }
      }
    } else if (kw == "bracket") {
      ensure_labels(l);
      if (have_metric) throw FileError(l.number, "bracket after metric block");
      const auto open = rest.find('[');
      const auto close = rest.find(']');
      const auto comma = rest.find(',');
      if (open != 0 || close == std::string::npos || comma == std::string::npos || comma > close) {
        throw FileError(l.number, "expected 'bracket [a,b] = ...'");
      }
      const std::size_t i = lookup(l, trim(rest.substr(1, comma - 1)));
      const std::size_t j = lookup(l, trim(rest.substr(comma + 1, close - comma - 1)));
      if (i == j) throw FileError(l.number, "bracket of a label with itself");
      const std::string after = trim(rest.substr(close + 1));
      if (after.empty() || after[0] != '=') throw FileError(l.number, "expected '=' after ']'");
      if (!seen.insert({std::min(i, j), std::max(i, j)}).second) {
        throw FileError(l.number, "bracket of this pair given twice");
      }
      for (const auto& [c, label] : parse_sum(l, trim(after.substr(1)))) {
        entries.push_back({i, j, lookup(l, label), c});
      }
    } else if (kw == "metric") {
      ensure_labels(l);
      if (have_metric) throw FileError(l.number, "repeated 'metric'");
      have_metric = true;
      if (rest == "orthonormal") {
        f.metric = MetricKind::Orthonormal;
      } else if (rest == "gram") {
        f.metric = MetricKind::Gram;
        std::vector<Vector> rows;
        for (std::size_t r = 0; r < *dim; ++r) {
          if (++li >= lines.size()) throw FileError(l.number, "gram block is missing rows");
          rows.push_back(parse_row(lines[li], *dim));
        }
        f.gram = *dim ? Matrix::from_rows(rows) : Matrix(0, 0);
      } else {
        throw FileError(l.number, "expected 'metric orthonormal' or 'metric gram'");
      }
    } else {
      throw FileError(l.number, "unknown keyword '" + kw + "'");
    }
  }
  if (f.name.empty()) throw FileError(0, "missing 'algebra NAME'");
  if (!dim) throw FileError(0, "missing 'dim N'");
  if (labels.empty()) labels = default_labels(*dim);
  f.algebra = LieAlgebra::build(*dim, entries, labels, true);
  if (f.metric == MetricKind::Gram) MetricLieAlgebra::with_gram(f.algebra, f.gram);
  return f;
}

std::string emit_algebra_file(const AlgebraFile& f) {
  const LieAlgebra& l = f.algebra;
  const auto& labels = l.labels();
  std::ostringstream os;
  os << "algebra " << f.name << "\n";
  os << "dim " << l.dim() << "\n";
  if (l.dim() > 0) {
    os << "basis";
    for (const auto& s : labels) os << ' ' << s;
    os << "\n";
  }
  for (const auto& [key, v] : l.table()) {
    os << "bracket [" << labels[key.first] << "," << labels[key.second] << "] =";
    bool first = true;
    for (const auto& [k, c] : v) {
      Scalar coeff = c;
      const bool single = c.terms().size() == 1;
      const bool negative = single && c.sign() < 0;
      if (negative) coeff = -c;
      if (first) {
        os << (negative ? " -" : " ");
      } else {
        os << (negative ? " - " : " + ");
      }
      if (!coeff.is_one()) os << literal(coeff) << '*';
      os << labels[k];
      first = false;
    }
    os << "\n";
  }
  if (f.metric == MetricKind::Orthonormal) os << "metric orthonormal\n";
  if (f.metric == MetricKind::Gram) {
    os << "metric gram\n";
    for (std::size_t r = 0; r < f.gram.rows(); ++r) {
      for (std::size_t c = 0; c < f.gram.cols(); ++c) {
        os << (c ? " " : "") << literal(f.gram(r, c));
      }
      os << "\n";
    }
  }
  return os.str();
}

AlgebraFile make_algebra_file(std::string name, LieAlgebra l, std::optional<Matrix> gram) {
  AlgebraFile f;
  f.name = std::move(name);
  f.algebra = std::move(l);
  if (gram) {
    if (*gram == Matrix::identity(f.algebra.dim())) {
      f.metric = MetricKind::Orthonormal;
    } else {
      f.metric = MetricKind::Gram;
      f.gram = std::move(*gram);
    }
  }
  return f;
}

TwoStepFile parse_twostep_file(std::string_view text) {
  const auto lines = content_lines(text);
  TwoStepFile f;
  std::optional<std::size_t> q;
  std::vector<Matrix> js;
  std::size_t q_line = 0;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const Line& l = lines[li];
    const auto [kw, rest] = keyword(l.text);
    if (kw == "twostep") {
      if (rest.empty()) throw FileError(l.number, "expected 'twostep NAME'");
      f.name = rest;
    } else if (kw == "q") {
      if (q) throw FileError(l.number, "repeated 'q'");
      q = parse_count(l, rest);
      q_line = l.number;
    } else if (kw == "J") {
      if (!q) throw FileError(l.number, "'q' must come before 'J'");
      if (!rest.empty()) throw FileError(l.number, "rows of J go on the following lines");
      std::vector<Vector> rows;
      for (std::size_t r = 0; r < *q; ++r) {
        if (++li >= lines.size()) throw FileError(l.number, "J block is missing rows");
        rows.push_back(parse_row(lines[li], *q));
      }
      js.push_back(Matrix::from_rows(rows));
    } else {
      throw FileError(l.number, "unknown keyword '" + kw + "'");
    }
  }
  if (!q) throw FileError(0, "missing 'q N'");
  try {
    f.presentation = TwoStepPresentation(*q, std::move(js));
  } catch (const std::invalid_argument& e) {
    throw FileError(q_line, e.what());
  }
  return f;
}

std::string emit_twostep_file(const TwoStepFile& f) {
  std::ostringstream os;
  if (!f.name.empty()) os << "twostep " << f.name << "\n";
  const std::size_t q = f.presentation.q();
  os << "q " << q << "\n";
  for (const auto& j : f.presentation.matrices()) {
    os << "J\n";
    for (std::size_t r = 0; r < q; ++r) {
      for (std::size_t c = 0; c < q; ++c) os << (c ? " " : "") << literal(j(r, c));
      os << "\n";
    }
  }
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

}  // namespace nilsol
