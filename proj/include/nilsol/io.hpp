#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "nilsol/metric.hpp"
#include "nilsol/twostep.hpp"

namespace nilsol {

/// Parse error carrying a 1-based line number (0 when not line specific).
class FileError : public ParseError {
 public:
  FileError(std::size_t line, const std::string& what)
      : ParseError(line ? "line " + std::to_string(line) + ": " + what : what), line(line) {}
  std::size_t line;
};

enum class MetricKind { None, Orthonormal, Gram };

struct AlgebraFile {
  std::string name;
  LieAlgebra algebra;
  MetricKind metric = MetricKind::None;
  Matrix gram;  // set when metric == Gram

  /// Gram matrix if a metric block was given, otherwise nullopt.
  std::optional<Matrix> gram_or_none() const;
  /// The metric of the file, orthonormal when none was given.
  MetricLieAlgebra metric_algebra() const;
};

/// Grammar, one item per line, '#' starts a comment:
///   algebra NAME
///   dim N
///   basis l1 ... lN                      (optional, default e1..eN)
///   bracket [li,lj] = c1*lk + c2*lm ...  (repeatable)
///   metric orthonormal | metric gram     (gram is followed by N rows)
/// Coefficients are Scalar literals; sums need parentheses, as in
/// (1 + sqrt(2))*e3. Throws FileError on syntax, InvalidAlgebra on a Jacobi
/// violation and std::invalid_argument on a bad gram block.
AlgebraFile parse_algebra_file(std::string_view text);
/// Canonical text: basis always listed, brackets ordered by (i, j), terms by
/// output index.
std::string emit_algebra_file(const AlgebraFile& f);
AlgebraFile make_algebra_file(std::string name, LieAlgebra l,
                              std::optional<Matrix> gram = std::nullopt);

/// Two-step presentation file:
///   twostep NAME   (optional)
///   q N
///   J              (then q rows of q Scalars; repeat per Z)
struct TwoStepFile {
  std::string name;
  TwoStepPresentation presentation;
};
TwoStepFile parse_twostep_file(std::string_view text);
std::string emit_twostep_file(const TwoStepFile& f);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace nilsol
