// Copyright (c) the twistlab authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "twistlab/rational.hpp"

namespace twistlab {

// Row-major integer matrix. Sublattices of Z^n are stored as basis rows in
// Hermite normal form, which makes bases canonical: two sublattices are equal
// iff their HNF rows coincide, and "the first basis vector" is well defined.
using IntMatrix = std::vector<std::vector<Integer>>;

// Row Hermite normal form via unimodular row operations; zero rows dropped.
// Pivots are positive, entries above a pivot are reduced into [0, pivot).
IntMatrix row_hnf(IntMatrix a);

// Basis of { x in Z^n : x * a == 0 }, n = a.size(); a's rows all have length
// ncols (ncols matters when a has no rows). Result is in HNF.
IntMatrix left_kernel(const IntMatrix& a, std::size_t ncols);

// Basis of { x in Z^n : x * a == 0 (mod modulus) }, modulus > 0. Result is in
// HNF; it always contains modulus * Z^n, so the rank equals n.
IntMatrix left_kernel_mod(const IntMatrix& a, std::size_t ncols, const Integer& modulus);

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

// Membership of x in the row span of an HNF basis.
bool in_row_span(const IntMatrix& hnf_basis, std::vector<Integer> x);

}  // namespace twistlab
