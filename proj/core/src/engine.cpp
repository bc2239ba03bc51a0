// Copyright (c) the twistlab authors.
// SPDX-License-Identifier: Apache-2.0

#include "twistlab/engine.hpp"

#include <utility>

#include "twistlab/errors.hpp"
#include "twistlab/fc.hpp"
#include "twistlab/subgroup.hpp"

namespace twistlab {

Truth is_amenable(const Group& g) {
  switch (g.family()) {
    case FamilyTag::finite:
    case FamilyTag::free_abelian:
    case FamilyTag::infinite_dihedral:
    case FamilyTag::heisenberg3:
    case FamilyTag::lamplighter:
      return Truth::yes;
    case FamilyTag::baumslag_solitar:
      // Quotient by the central <b^n> is Z * Z_n, which contains a free
      // subgroup of rank two; amenability passes to quotients.
      return Truth::no;
    case FamilyTag::free_product_z_zn:
      return Truth::no;
    case FamilyTag::direct_product: {
      for (const Group& f : direct_factors(g)) {
        Truth t = is_amenable(f);
        if (t != Truth::yes) return t;
      }
      return Truth::yes;
    }
  }
  return Truth::unknown;
}

Truth in_class_p(const Group& g) {
  if (g.is_trivial()) return Truth::no;
  if (g.family() == FamilyTag::free_product_z_zn) return Truth::yes;
  return Truth::unknown;
}

namespace {

// Fills whichever of the two target fields are still Unknown and records the
// firing when at least one was filled. A contradiction with an earlier rule
// cannot arise from consistent mathematics, so it is raised as a bug.
void apply_rule(ClassificationResult& r, const char* rule, const char* citation,
                std::vector<std::string> used, std::optional<Truth> simple_v,
                std::optional<Truth> unique_v) {
  bool filled = false;
  if (simple_v) {
    if (r.simple == Truth::unknown) {
      r.simple = *simple_v;
      filled = true;
    } else if (r.simple != *simple_v) {
      fail(ErrorKind::internal_inconsistency,
                          std::string("rule ") + rule +
                              " contradicts an earlier simplicity verdict");
    }
  }
  if (unique_v) {
    if (r.unique_trace == Truth::unknown) {
      r.unique_trace = *unique_v;
      filled = true;
    } else if (r.unique_trace != *unique_v) {
      fail(ErrorKind::internal_inconsistency,
                          std::string("rule ") + rule +
                              " contradicts an earlier trace verdict");
    }
  }
  if (filled) r.justification.push_back({rule, citation, std::move(used)});
}

}  // namespace

ClassificationResult classify(const Cocycle& c, int effort) {
  const Group& g = c.group();
  ClassificationResult r;
  r.kleppner = kleppner_condition(c, effort);
  r.inputs.group = g.name();
  r.inputs.cocycle = c.describe();
  r.inputs.amenable = is_amenable(g);

  FcHypercenter fch = fc_hypercenter(g);
  r.inputs.fc_hypercentral = fch.certified && fch.subgroup.is_whole();
  if (fch.certified) {
    try {
      Group q = icc_quotient(g);
      r.inputs.icc_quotient_name = q.name();
      r.inputs.icc_quotient_in_p = in_class_p(q);
    } catch (const Error&) {
      // No implemented quotient shape; the quotient rules stay silent.
    }
  }

  // R1: Kleppner's condition is necessary for both properties.
  if (r.kleppner.status == Truth::no) {
    std::vector<std::string> used = {"kleppner: fails"};
    if (r.kleppner.witness) {
      used.push_back("witness: sigma-regular element " +
                     print_element(g, r.kleppner.witness->element) +
                     " with a nontrivial finite conjugacy class");
    }
    apply_rule(r, "R1",
               "a nontrivial finite sigma-regular conjugacy class obstructs "
               "both simplicity and uniqueness of the tracial state",
               std::move(used), Truth::no, Truth::no);
  }

  // R5: a trivial cocycle on a nontrivial amenable group.
  if (r.inputs.amenable == Truth::yes && c.kind() == "trivial" &&
      !g.is_trivial()) {
    apply_rule(r, "R5",
               "for a trivial cocycle on a nontrivial amenable group the "
               "reduced algebra has a one-dimensional *-representation, so "
               "it is neither simple nor carries a unique trace",
               {"amenable: yes", "cocycle: trivial", "group: nontrivial",
                "witness: the character sending every group unitary to 1"},
               Truth::no, Truth::no);
  }

  // R2: FC-hypercentral groups.
  if (r.inputs.fc_hypercentral && r.kleppner.status == Truth::yes) {
    apply_rule(r, "R2",
               "for an FC-hypercentral group, Kleppner's condition is "
               "equivalent to simplicity and to uniqueness of the tracial "
               "state of the reduced twisted algebra",
               {"fc_hypercentral: certified", "kleppner: holds"}, Truth::yes,
               Truth::yes);
  }

  // R4: FC-hypercenter-by-P with the restricted cocycle passing Kleppner.
  if (fch.certified && r.inputs.icc_quotient_in_p == Truth::yes) {
    try {
      Subgroup::AsGroup sub = fch.subgroup.as_group();
      Cocycle restricted = restrict_cocycle(c, sub, "the FC-hypercenter");
      KleppnerVerdict on_fch = kleppner_condition(restricted, effort);
      if (on_fch.status == Truth::yes) {
        apply_rule(r, "R4",
                   "when the quotient by the FC-hypercenter lies in the "
                   "Powers-type class and the restricted cocycle satisfies "
                   "Kleppner's condition on the FC-hypercenter, the reduced "
                   "twisted algebra is simple with a unique tracial state",
                   {"icc_quotient: " + r.inputs.icc_quotient_name.value_or("?") +
                        ", in the Powers-type class",
                    "kleppner on the FC-hypercenter: holds"},
                   Truth::yes, Truth::yes);
      }
    } catch (const Error&) {
      // Restriction not representable for this subgroup shape; skip.
    }
  }

  // R3: FC-hypercenter-by-P, Kleppner on the whole group.
  if (r.inputs.icc_quotient_in_p == Truth::yes &&
      r.kleppner.status == Truth::yes) {
    apply_rule(r, "R3",
               "when the quotient by the FC-hypercenter lies in the "
               "Powers-type class, the reduced twisted algebra has a unique "
               "tracial state precisely when Kleppner's condition holds",
               {"icc_quotient: " + r.inputs.icc_quotient_name.value_or("?") +
                    ", in the Powers-type class",
                "kleppner: holds"},
               std::nullopt, Truth::yes);
  }

  // R6: for amenable groups a unique trace forces simplicity.
  if (r.inputs.amenable == Truth::yes && r.unique_trace == Truth::yes) {
    apply_rule(r, "R6",
               "for an amenable group, uniqueness of the tracial state "
               "implies simplicity of the reduced twisted algebra",
               {"amenable: yes", "unique_trace: yes"}, Truth::yes,
               std::nullopt);
  }

  return r;
}

}  // namespace twistlab
