#pragma once

#include "transvect/sparse_poly.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace transvect {

// Symbolic letters stand for a ternary quartic written as a fourth power of a
// linear form; the components are al1..al3, be1..be3, ga1..ga3. Point
// variables are x1..x3, line variables u1..u3.

enum class Letter { Alpha, Beta, Gamma };

struct BracketFactor {
  enum class Kind {
    Linear, // alpha_x
    Full,   // (alpha beta gamma)
    Mixed,  // (alpha beta u)
  };
  Kind kind = Kind::Linear;
  std::vector<Letter> letters;
  int power = 1;
};

class SymbolicBracketExpr {
 public:
  SymbolicBracketExpr& linear(Letter a, int power = 1);
  SymbolicBracketExpr& full(Letter a, Letter b, Letter c, int power = 1);
  SymbolicBracketExpr& mixed(Letter a, Letter b, int power = 1);

  const std::vector<BracketFactor>& factors() const { return factors_; }
  std::array<int, 3> letter_degrees() const;
  int order() const;    // degree in x
  int class_num() const; // degree in u
  std::string to_string() const;

  /// The product as an ordinary polynomial over `table`, which must contain
  /// the letter components, x1..x3 and u1..u3.
  SparsePoly expand(const VarTablePtr& table) const;

 private:
  std::vector<BracketFactor> factors_;
};

/// Letter components, x1..x3, u1..u3.
const std::vector<std::string>& ternary_base_variables();

/// Applies F(d/d alpha) F(d/d beta) F(d/d gamma) to a polynomial in the letter
/// components. F is a quartic in x1..x3 whose other variables are coefficients.
SparsePoly insert_ground_form(const SparsePoly& expanded, const SparsePoly& f);

/// expand + insert_ground_form. Throws std::invalid_argument if some letter
/// does not occur to degree exactly 4 or F is not a ternary quartic.
SparsePoly eval_ternary_concomitant(const SymbolicBracketExpr& expr, const SparsePoly& f);

/// The five degree-3 concomitants cutting out pairs of double lines.
std::vector<SymbolicBracketExpr> ternary_concomitants();

struct TernaryRow {
  std::string expression;
  std::string specialization;
  bool is_zero = false;
};

struct TernaryReport {
  std::uint64_t seed = 0;
  int trials = 0;
  bool random_vanish = false;
  bool symbolic_vanish = false;
  bool generic_nonzero = false;
  std::vector<TernaryRow> rows;

  bool pass() const { return random_vanish && symbolic_vanish && generic_nonzero; }
};

/// `trials` seeded random rational line pairs plus one pair with
/// indeterminate coefficients p1..p3, q1..q3; then (alpha beta gamma)^4 on a
/// fixed generic quartic.
TernaryReport ternary_suite(int trials, std::uint64_t seed, int jobs = 1);

/// Fixed quartic with integer coefficients, used as the generic witness.
SparsePoly generic_ternary_quartic();

} // namespace transvect
