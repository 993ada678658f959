#pragma once

#include "transvect/sparse_poly.hpp"

#include <span>

namespace transvect {

// Truncated power-series arithmetic. The grading is the total degree in a
// chosen subset of variables; every other variable is treated as part of the
// coefficient ring.

int graded_degree(const Exponents& exps, std::span<const std::size_t> graded);

/// Drops every term of graded degree > order.
SparsePoly truncate(const SparsePoly& p, std::span<const std::size_t> graded, int order);

SparsePoly truncated_mul(const SparsePoly& a, const SparsePoly& b,
                         std::span<const std::size_t> graded, int order);

/// 1/p up to `order`. The graded-degree-0 part of p must be a nonzero rational.
SparsePoly truncated_inverse(const SparsePoly& p, std::span<const std::size_t> graded, int order);

/// exp(p) up to `order`. p must have no graded-degree-0 part.
SparsePoly truncated_exp(const SparsePoly& p, std::span<const std::size_t> graded, int order);

} // namespace transvect
