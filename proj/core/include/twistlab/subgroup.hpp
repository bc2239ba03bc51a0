// Copyright (c) the twistlab authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "twistlab/group.hpp"
#include "twistlab/lattice.hpp"

namespace twistlab {

// A subgroup of an ambient group, limited to the shapes the structure
// analysis actually produces (FC-centres and their relatives). Construction
// canonicalizes: {e} becomes trivial_only, the full group becomes
// whole_group, lattice bases are put in HNF.
class Subgroup {
 public:
  enum class Kind {
    trivial_only,       // {e}
    whole_group,        // the ambient group itself
    finite_list,        // sorted element indices in a table-backed group
    dinf_translations,  // <t> inside infinite_dihedral
    heis_center,        // {(0,0,z)} inside heisenberg3
    bs_centre,          // <b^n> inside baumslag_solitar(n)
    lattice,            // sublattice of free_abelian(n)
    product,            // componentwise inside a lazy direct product
  };

  static Subgroup trivial(Group ambient);
  static Subgroup whole(Group ambient);
  // Validates closure under multiplication and presence of the identity.
  static Subgroup from_indices(Group ambient, std::vector<std::uint64_t> indices);
  static Subgroup dinf_translations_of(Group ambient);
  static Subgroup heis_center_of(Group ambient);
  static Subgroup bs_centre_of(Group ambient);
  static Subgroup from_lattice(Group ambient, IntMatrix basis);
  // parts must align with direct_factors(ambient).
  static Subgroup componentwise(Group ambient, std::vector<Subgroup> parts);

  const Group& ambient() const { return ambient_; }
  Kind kind() const { return kind_; }

  bool contains(const GroupElement& a) const;
  bool is_whole() const;
  bool is_trivial_subgroup() const;
  std::string describe() const;

  // The subgroup as a standalone group together with the embedding back into
  // the ambient group. UnsupportedSubgroup when no identification exists.
  struct AsGroup {
    Group group;
    std::function<GroupElement(const GroupElement&)> embed;
  };
  AsGroup as_group() const;

  // ambient / this for normal subgroups on the supported whitelist. NotNormal
  // when the subgroup fails the normality check, UnsupportedQuotient when the
  // shape has no implemented quotient.
  struct QuotientResult {
    Group group;
    std::function<GroupElement(const GroupElement&)> project;
  };
  QuotientResult quotient() const;

  bool equals(const Subgroup& other) const;
  bool contained_in(const Subgroup& other) const;

  const std::vector<std::uint64_t>& indices() const { return indices_; }
  const IntMatrix& basis() const { return basis_; }
  const std::vector<Subgroup>& parts() const { return parts_; }

 private:
  Subgroup(Group ambient, Kind kind) : ambient_(std::move(ambient)), kind_(kind) {}

  Group ambient_;
  Kind kind_;
  std::vector<std::uint64_t> indices_;  // finite_list
  IntMatrix basis_;                     // lattice, HNF
  std::vector<Subgroup> parts_;         // product
};

// Finite generating set of the subgroup, as ambient elements; empty for {e}.
std::vector<GroupElement> subgroup_generators(const Subgroup& s);

}  // namespace twistlab
