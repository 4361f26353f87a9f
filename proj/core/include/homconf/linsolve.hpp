#pragma once

// Exact linear algebra over Q by Gaussian elimination.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

#include "homconf/poly.hpp"

namespace homconf {

using RationalRow = std::vector<mpq_class>;
using RationalMatrix = std::vector<RationalRow>;

struct Echelon {
  RationalMatrix rows;  // reduced row echelon form
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form of a matrix with `cols` columns.
Echelon row_reduce(RationalMatrix m, std::size_t cols);
std::size_t rank_of(const RationalMatrix& m, std::size_t cols);

/// A solution of A x = b with every free variable set to zero, or nothing if
/// the system is inconsistent.
std::optional<RationalRow> solve(const RationalMatrix& a, const RationalRow& b, std::size_t cols);
/// A basis of {x : A x = 0}.
RationalMatrix nullspace(const RationalMatrix& a, std::size_t cols);

/// Turns the polynomial identity sum_u x_u images[u] = rhs into one linear
/// equation per (position, monomial). All images and rhs have equal length.
struct PolyLinearSystem {
  RationalMatrix matrix;
  RationalRow rhs;
};
PolyLinearSystem coefficient_equations(const std::vector<std::vector<Poly>>& images,
                                       const std::vector<Poly>& rhs);

}  // namespace homconf
