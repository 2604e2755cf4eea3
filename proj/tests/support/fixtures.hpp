#pragma once

#include "segdesc/analysis/analyzer.hpp"
#include "segdesc/io/problem_document.hpp"

#include <array>
#include <cmath>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace segdesc::testing {

inline std::filesystem::path data_file(const std::string& name) {
  return std::filesystem::path(SEGDESC_DATA_DIR) / name;
}

inline io::ProblemDocument load(const std::string& name) { return io::load_problem(data_file(name)); }

inline analysis::Problem first_iteration() { return load("sales-manager-iter1.json").problem; }
inline analysis::Problem second_iteration() { return load("sales-manager-iter2.json").problem; }

inline bool near(double a, double b, double tol = 0.01) { return std::fabs(a - b) <= tol + 1e-12; }

/// Coefficients of w1, w2, w3 and a constant.
struct Affine {
  std::array<double, 3> w;
  double constant = 0;
};

/// Constraint rows as printed for the first iteration, written lhs >= rhs.
struct PrintedConstraint {
  Affine lhs;
  Affine rhs;
};

inline const std::vector<PrintedConstraint>& printed_constraints() {
  static const std::vector<PrintedConstraint> rows{
      {{{1, 0, 0}, 0}, {{0, 0, 0}, 0}},
      {{{0, 1, 0}, 0}, {{0, 0, 0}, 0}},
      {{{0, 0, 1}, 0}, {{0, 0, 0}, 0}},
      {{{1, 1, 1}, 0}, {{0, 0, 0}, 1}},
      {{{0, 0, 0}, 1}, {{1, 1, 1}, 0}},
      {{{0.56, 1, 0.25}, 0}, {{0.15, 1, 0.88}, 0}},
      {{{0.15, 1, 0.88}, 0}, {{0.56, 1, 0.25}, 0}},
      {{{0.15, 1, 0.88}, 0}, {{0.40, 0.47, 0.12}, 0.01}},
      {{{0.40, 0.47, 0.12}, 0}, {{1, 0.68, 0}, 0.01}},
      {{{1, 0.68, 0}, 0}, {{0.11, 0.88, 0.12}, 0.01}},
  };
  return rows;
}

/// Possible relation of the second iteration, row i possibly at least as
/// good as column k.
inline const std::vector<std::string>& possible_grid() {
  static const std::vector<std::string> rows{
      "TFFTTFTTFFFTFFT", "TTFTTFTTFTFTTFT", "TTTTTFTTFTTTTFT", "TFFTTFTTFFFTFFT", "FFFTTFTFFFFTFFF",
      "TTTTTTTTTTTTTFT", "TFFTTFTFFTFTTFF", "TFFTTFTTFTFTTFT", "TTTTTTTTTTTTTFT", "TFFTTFTTFTFTTFT",
      "TTTTTTTTTTTTTFT", "FFFFFFTFFFFTFFF", "TFFTTFTTFTFTTFT", "TTTTTTTTTTTTTTT", "TFFTTFTFFTFTTFT",
  };
  return rows;
}

/// Rows of the final second-iteration system: label, bounded variable,
/// lower or upper, coefficients of the lower-indexed weights and a constant.
struct PrintedBound {
  std::string label;
  std::string variable;
  bool lower;
  std::map<std::string, double> coefficients;
  double constant;
};

inline const std::vector<PrintedBound>& printed_final_system() {
  static const std::vector<PrintedBound> rows{
      {"{3,3,3}", "w3", true, {}, 0},
      {"{4,4,4}", "w3", true, {{"w2", -1}, {"w1", -1}}, 1},
      {"{7,7,7}", "w3", true, {{"w1", 0.67}}, 0},
      {"{8,8,8}", "w3", true, {{"w2", -0.70}, {"w1", 0.34}}, 0.01},
      {"{5,5,5}", "w3", false, {{"w2", -1}, {"w1", -1}}, 1},
      {"{6,6,6}", "w3", false, {{"w1", 0.67}}, 0},
      {"{2,2,2}", "w2", true, {}, 0},
      {"{11,4,6}", "w2", true, {{"w1", -1.67}}, 1.0},
      {"{14,8,6}", "w2", true, {{"w1", -0.46}}, 0.02},
      {"{9,9,9}", "w2", false, {{"w1", 0.70}}, -0.02},
      {"{10,3,5}", "w2", false, {{"w1", -1}}, 1},
      {"{12,7,5}", "w2", false, {{"w1", -1.67}}, 1},
      {"{13,8,5}", "w2", false, {{"w1", -4.49}}, 3.31},
      {"{1,1,1}", "w1", true, {}, 0},
      {"{16,11,9}", "w1", true, {}, 0.43},
      {"{15,2,12}", "w1", false, {}, 0.60},
  };
  return rows;
}

} // namespace segdesc::testing
