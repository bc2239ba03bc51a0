// Copyright (c) the twistlab authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "twistlab/circle.hpp"
#include "twistlab/group.hpp"
#include "twistlab/prng.hpp"
#include "twistlab/subgroup.hpp"

namespace twistlab {

class CocycleImpl;

// Normalized 2-cocycle on a group with values in the circle. All factories
// enforce sigma(e, g) = sigma(g, e) = 1; the cocycle identity itself is
// checked by validate_cocycle (exhaustively on small finite groups, sampled
// otherwise). Values are exact circle elements, so cohomological statements
// reduce to exact arithmetic.
class Cocycle {
 public:
  explicit Cocycle(std::shared_ptr<const CocycleImpl> impl) : impl_(std::move(impl)) {}

  const Group& group() const;
  // "trivial", "table", "bicharacter", "pullback", "product", "derived"
  const std::string& kind() const;
  std::string describe() const;
  CircleValue value(const GroupElement& a, const GroupElement& b) const;
  // true when any reachable value carries the formal irrational
  bool uses_theta() const;

  const CocycleImpl& impl() const { return *impl_; }

 private:
  std::shared_ptr<const CocycleImpl> impl_;
};

Cocycle trivial_cocycle(Group g);

// Full value table for a table-backed finite group; values[i][j] =
// sigma(g_i, g_j) in element-index order.
Cocycle table_cocycle(Group g, std::vector<std::vector<CircleValue>> values);

// sigma(a, b) = prod_{i,j} theta[i][j]^(x_i * y_j) over the canonical abelian
// coordinates. Requires a group carrying such coordinates (free abelian, or a
// table group built with them); InvalidCocycle when theta is not constant on
// cosets of the coordinate moduli.
Cocycle bicharacter_cocycle(Group g, std::vector<std::vector<CircleValue>> theta);

// Same formula over the free-abelianization coordinates; well defined for
// every group because Z^k carries no torsion.
Cocycle pullback_cocycle(Group g, std::vector<std::vector<CircleValue>> theta);

// Componentwise product cocycle. `product_group` is whatever
// make_direct_product returned for the factor list; factor cocycles must sit
// on the corresponding factor groups (trivial factors are skipped, dense
// products are materialized into a table cocycle).
Cocycle product_cocycle(const Group& product_group, std::vector<Cocycle> factors);

// Factor cocycles of a product-kind cocycle, aligned with direct_factors of
// its group. InvalidArgument for any other kind.
const std::vector<Cocycle>& product_factors(const Cocycle& c);

// Restriction along a subgroup identification: the value of the restricted
// cocycle at (a, b) is the parent value at (embed a, embed b).
Cocycle restrict_cocycle(const Cocycle& parent, const Subgroup::AsGroup& sub,
                         const std::string& where);

// lambda(g) lambda(h) lambda(g)^* = sigma_tilde(g, h) lambda(g h g^-1)
CircleValue sigma_tilde(const Cocycle& c, const GroupElement& g, const GroupElement& h);

// sigma(g, h) * conj(sigma(h, g)) for commuting g, h (NotCommuting
// otherwise). This is the obstruction pairing behind sigma-regularity.
CircleValue regularity_defect(const Cocycle& c, const GroupElement& g,
                              const GroupElement& h);

struct CocycleValidation {
  std::string mode;       // "exhaustive" or "sampled"
  std::uint64_t checked;  // cocycle-identity triples verified
};

// Verifies normalization and the cocycle identity; throws InvalidCocycle with
// a concrete counterexample on failure.
CocycleValidation validate_cocycle(const Cocycle& c, Prng& rng, int effort = 20);

// Order of the subgroup of the circle generated by all cocycle values on a
// finite group; InfiniteDSigma when a value involves theta.
Integer d_sigma(const Cocycle& c);

// Central extension Z_d x_sigma G on a finite group, with d = d_sigma.
// Elements are (g, z^j); the table validator independently re-proves the
// cocycle identity through associativity.
Group sigma_extension(const Cocycle& c);

}  // namespace twistlab
