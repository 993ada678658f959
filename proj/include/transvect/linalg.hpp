#pragma once

#include "transvect/rational.hpp"

#include <vector>

namespace transvect {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Basis of {v : m v = 0} read off the reduced row echelon form; one vector
/// per free column. Every row must have `cols` entries.
std::vector<std::vector<Rational>> nullspace(RationalMatrix m, std::size_t cols);

/// Clears denominators and the common factor; first nonzero entry positive.
std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& v);

} // namespace transvect
