#pragma once

#include "transvect/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace transvect {

/// Ordered list of variable names. The index of a name never changes.
class VarTable {
public:
  VarTable() = default;
  explicit VarTable(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  /// Throws std::invalid_argument for unknown names.
  std::size_t index_of(std::string_view name) const;
  std::optional<std::size_t> find(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name).has_value(); }

  friend bool operator==(const VarTable& a, const VarTable& b) { return a.names_ == b.names_; }

private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

VarTablePtr make_table(std::vector<std::string> names);

/// Names of `base` in order, followed by every name of `extra` not already present.
VarTablePtr extend_table(const VarTable& base, const std::vector<std::string>& extra);
VarTablePtr merge_tables(const VarTable& a, const VarTable& b);

bool compatible(const VarTablePtr& a, const VarTablePtr& b);

using Exponents = std::vector<std::uint16_t>;

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : e) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Graded-lex "greater than": higher total degree first, then lexicographically
/// larger exponent on the earliest variable.
bool grlex_greater(const Exponents& a, const Exponents& b);

struct Term {
  Exponents exps;
  Rational coeff;
};

using TermMap = std::unordered_map<Exponents, Rational, ExponentsHash>;

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in canonical form: no zero coefficients, unique exponent
/// vectors, sorted in descending graded-lex order. Equality is therefore
/// structural, and `is_zero()` decides whether an expression vanishes
/// identically.
class SparsePoly {
public:
  explicit SparsePoly(VarTablePtr table);

  static SparsePoly constant(VarTablePtr table, const Rational& c);
  static SparsePoly variable(VarTablePtr table, std::string_view name);
  static SparsePoly monomial(VarTablePtr table, const Rational& c, Exponents exps);
  static SparsePoly from_terms(VarTablePtr table, std::vector<Term> terms);
  static SparsePoly from_map(VarTablePtr table, TermMap&& terms);

  const VarTablePtr& table() const { return table_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// The value when the polynomial has no variable-dependent terms.
  std::optional<Rational> as_constant() const;

  /// Highest total degree over the given variables (all variables when empty); -1 for zero.
  int degree(std::span<const std::size_t> vars = {}) const;

  SparsePoly& operator+=(const SparsePoly& other);
  SparsePoly& operator-=(const SparsePoly& other);
  SparsePoly& operator*=(const SparsePoly& other);
  SparsePoly& operator*=(const Rational& c);

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(SparsePoly a, const Rational& c) { return a *= c; }
  friend SparsePoly operator*(const Rational& c, SparsePoly a) { return a *= c; }
  friend SparsePoly operator-(SparsePoly a);

  friend bool operator==(const SparsePoly& a, const SparsePoly& b);

private:
  VarTablePtr table_;
  std::vector<Term> terms_;

  friend SparsePoly add_scaled(const SparsePoly& a, const SparsePoly& b, int sign);
};

SparsePoly pow(const SparsePoly& p, unsigned k);

/// `order`-fold partial derivative with respect to one variable.
SparsePoly derive(const SparsePoly& p, std::size_t var, unsigned order = 1);
SparsePoly derive(const SparsePoly& p, std::string_view var, unsigned order = 1);

/// Simultaneous substitution; every replacement must live over a compatible table.
using Substitution = std::map<std::string, SparsePoly>;
SparsePoly substitute(const SparsePoly& p, const Substitution& assignments);

/// Binds an operator variable to the target variable it differentiates.
struct DiffSlot {
  std::string op_var;
  std::string target_var;
};

/// Reads `op` as a differential operator: each monomial in the slot variables
/// becomes the corresponding iterated derivative on the target side, while
/// non-slot variables of `op` are plain multipliers. Both polynomials share a
/// table.
SparsePoly apply_diff_operator(const SparsePoly& op, std::span<const DiffSlot> slots,
                               const SparsePoly& target);

/// The polynomial multiplying the given monomial (over a subset of
/// variables) when `p` is viewed as a polynomial in that subset.
SparsePoly coefficient_of(const SparsePoly& p,
                          const std::vector<std::pair<std::string, unsigned>>& monomial);

bool is_homogeneous(const SparsePoly& p, std::span<const std::size_t> vars, int degree);

/// Returns c with p == c * q, if it exists. q must be nonzero.
std::optional<Rational> proportionality_factor(const SparsePoly& p, const SparsePoly& q);

/// Re-express `p` over `table`, which must contain every variable p uses.
SparsePoly rebase(const SparsePoly& p, VarTablePtr table);

/// Text form: terms in graded-lex order as "num/den * var^exp * ..." joined by " + ".
std::string to_text(const SparsePoly& p);

/// Machine form: one [numerator, denominator, exponents] entry per term, graded-lex order.
struct StructuredTerm {
  std::string numerator;
  std::string denominator;
  Exponents exps;
};
std::vector<StructuredTerm> to_structured(const SparsePoly& p);

/// Parses sums of products such as "x1^2*x2 - 3/2*x1 + (x1+x2)^2".
SparsePoly parse_poly(VarTablePtr table, std::string_view text);

std::vector<std::size_t> indices_of(const VarTable& table, const std::vector<std::string>& names);

} // namespace transvect
