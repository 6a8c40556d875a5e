#pragma once

#include "folia/rational.hpp"

#include <optional>
#include <vector>

namespace folia {

// Dense exact-rational matrices, row major. Enough for the small linear
// systems here (jet ranks, order-by-order solves, Hilbert interpolation).
using RatRow = std::vector<Rat>;
using RatMat = std::vector<RatRow>;

// In-place reduced row echelon form; returns pivot column indices.
// Deterministic: first nonzero entry scanning rows top-down per column.
std::vector<size_t> rref(RatMat& m);

size_t rank(RatMat m);

// Solve A x = b exactly. Returns a particular solution with all free
// variables set to zero, or nullopt when inconsistent.
std::optional<RatRow> solve(const RatMat& a, const RatRow& b);

// Determinant by fraction-free-ish Gaussian elimination (exact).
Rat det(RatMat m);

} // namespace folia
