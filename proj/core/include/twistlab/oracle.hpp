// Copyright (c) the twistlab authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "twistlab/cocycle.hpp"
#include "twistlab/group.hpp"

namespace twistlab {

// Finite-dimensional ground truth: the twisted left regular representation as
// explicit dense matrices. Everything downstream of `build_twisted_algebra`
// is measured on the matrices themselves, so the numeric answers are
// independent of the exact combinatorics they cross-check.
struct TwistedAlgebra {
  Group group;
  Cocycle cocycle;
  std::optional<double> theta_value;
  // lambda[i] delta_h = sigma(g_i, h) delta_{g_i h}, indexed like the group
  std::vector<Eigen::MatrixXcd> lambda;
  // largest deviation seen while verifying unitarity and multiplicativity
  double build_defect = 0.0;
};

// Linear functional on the algebra recorded by its values on the lambda
// basis, element-index aligned; values[identity] = 1 for a state.
struct TraceVector {
  std::vector<std::complex<double>> values;
};

// Dense regular representation of a finite twisted group algebra. Cocycles
// carrying the formal irrational need a numeric substitution; orders above
// the dense cap are refused.
TwistedAlgebra build_twisted_algebra(const Group& g, const Cocycle& c,
                                     std::optional<double> theta_value = std::nullopt);

// Dimension of the center, decided as the nullity of the stacked
// commutation system in lambda coordinates. Singular values are split at a
// 1e-9 relative threshold; anything falling inside the (1e-11, 1e-7) guard
// band raises IllConditioned instead of guessing an integer.
int center_dimension(const TwistedAlgebra& a);

// Matrix block sizes {n_b} of the Wedderburn decomposition, ascending.
// Sum of squares is the group order; the count equals center_dimension.
std::vector<int> block_structure(const TwistedAlgebra& a);

// tau(x) = Tr(x)/|G| measured on the matrices; 1 at the identity and 0
// elsewhere on the lambda basis.
TraceVector canonical_trace(const TwistedAlgebra& a);

// The extreme points of the trace simplex, one per block: the normalized
// block trace read off the minimal central projections. Sorted by block size
// and then by value for deterministic output.
std::vector<TraceVector> extreme_traces(const TwistedAlgebra& a);

// Dimension of the space of tracial functionals fixed by every conjugation
// gamma_g = lambda(g) . lambda(g)^*, from the stacked traciality and
// invariance rows. Equals the number of blocks.
int invariant_trace_space_dim(const TwistedAlgebra& a);

// Normalization, twist-adjusted class constancy, and positive
// semidefiniteness of the associated Gram matrix; InvalidTrace otherwise.
void validate_trace(const TwistedAlgebra& a, const TraceVector& psi);

// Residual of the averaged-unitary trace expansion on an untwisted algebra:
// with c = psi(h) and a_N = I - conj(c) sum_i u(g_i h g_i^-1), the matrix
// value of psi((a_N)* a_N) is compared against
//   1 - N |c|^2 + |c|^2 sum_{i != j} psi(g_j h^-1 g_j^-1 g_i h g_i^-1).
double carey_moran_residual(const TwistedAlgebra& a, const TraceVector& psi,
                            const GroupElement& h, const std::vector<GroupElement>& g_list);

// Operator-norm distance between lambda(g) lambda(h) lambda(g)^* and
// sigma_tilde(g, h) lambda(g h g^-1).
double conjugation_identity_defect(const TwistedAlgebra& a, const GroupElement& g,
                                   const GroupElement& h);

}  // namespace twistlab
