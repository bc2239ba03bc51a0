// Copyright (c) the twistlab authors.
// SPDX-License-Identifier: Apache-2.0

#include "twistlab/fc.hpp"

#include <utility>
#include <optional>

#include "twistlab/errors.hpp"

namespace twistlab {

namespace {

// Every generator of a reported FC-center must have a finite (or at worst
// undecided) class; a demonstrably infinite class means the closed form and
// the class-size oracle disagree.
void cross_check_classes(const Group& g, const Subgroup& s, int effort) {
  for (const GroupElement& el : subgroup_generators(s)) {
    ClassSize cls = class_size(g, el, effort);
    if (cls.is_infinite())
      fail(ErrorKind::internal_inconsistency,
           "FC-center generator " + print_element(g, el) + " has an infinite class in " +
               g.name());
  }
}

}  // namespace

Subgroup fc_center(const Group& g, int effort) {
  Subgroup out = [&]() -> Subgroup {
    switch (g.family()) {
      case FamilyTag::finite:
      case FamilyTag::free_abelian:
        return Subgroup::whole(g);
      case FamilyTag::infinite_dihedral:
        return Subgroup::dinf_translations_of(g);
      case FamilyTag::heisenberg3:
        return Subgroup::heis_center_of(g);
      case FamilyTag::baumslag_solitar:
        return Subgroup::bs_centre_of(g);
      case FamilyTag::free_product_z_zn:
      case FamilyTag::lamplighter:
        return Subgroup::trivial(g);
      case FamilyTag::direct_product: {
        std::vector<Subgroup> parts;
        for (const Group& f : direct_factors(g)) parts.push_back(fc_center(f, effort));
        return Subgroup::componentwise(g, std::move(parts));
      }
    }
    fail(ErrorKind::unsupported_family, "no FC-center rule for " + g.name());
  }();
  cross_check_classes(g, out, effort);
  return out;
}

namespace {

// Preimage in G of the FC-center `c` of the quotient G / cur. Only the
// shapes that actually occur are handled; anything else signals a broken
// whitelist assumption rather than a user error.
Subgroup pull_back(const Group& g, const Subgroup& cur, const Subgroup& c) {
  if (c.is_whole()) return Subgroup::whole(g);
  if (c.is_trivial_subgroup()) return cur;  // preimage of {e} is the kernel
  if (c.kind() == Subgroup::Kind::product && cur.kind() == Subgroup::Kind::product) {
    // factors with a whole-group part were dropped from the quotient; the
    // remaining quotient factors line up with the non-whole parts in order
    const std::vector<Group>& fs = direct_factors(g);
    std::vector<Subgroup> parts;
    std::size_t next_kept = 0;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const Subgroup& s_i = cur.parts()[i];
      if (s_i.is_whole()) {
        parts.push_back(s_i);
        continue;
      }
      if (next_kept >= c.parts().size())
        fail(ErrorKind::internal_inconsistency, "quotient factor misalignment in " + g.name());
      parts.push_back(pull_back(fs[i], s_i, c.parts()[next_kept++]));
    }
    if (next_kept != c.parts().size())
      fail(ErrorKind::internal_inconsistency, "quotient factor misalignment in " + g.name());
    return Subgroup::componentwise(g, std::move(parts));
  }
  fail(ErrorKind::internal_inconsistency,
       "FC-center of a quotient took an unexpected shape: " + c.describe());
}

Subgroup next_fc_step(const Group& g, const Subgroup& cur, int effort) {
  if (cur.is_trivial_subgroup()) return fc_center(g, effort);
  Subgroup::QuotientResult q = cur.quotient();
  Subgroup c = fc_center(q.group, effort);
  return pull_back(g, cur, c);
}

}  // namespace

FcSeries upper_fc_series(const Group& g, int max_steps) {
  if (max_steps < 1) fail(ErrorKind::invalid_argument, "max_steps must be at least 1");
  FcSeries out;
  out.steps.push_back(Subgroup::trivial(g));
  for (;;) {
    Subgroup cur = out.steps.back();
    if (cur.is_whole()) {
      out.stabilized = true;
      out.stabilization_index = out.steps.size() - 1;
      return out;
    }
    if (out.steps.size() > static_cast<std::size_t>(max_steps)) {
      out.note = "reached the step limit before stabilizing";
      return out;
    }
    std::optional<Subgroup> next;
    try {
      next = next_fc_step(g, cur, 20);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::unsupported_quotient) throw;
      out.note = std::string("series truncated: ") + e.what();
      return out;
    }
    bool repeat = next->equals(cur);
    out.steps.push_back(std::move(*next));
    if (repeat) {
      out.stabilized = true;
      out.stabilization_index = out.steps.size() - 2;
      return out;
    }
  }
}

FcHypercenter fc_hypercenter(const Group& g, int max_steps) {
  FcSeries series = upper_fc_series(g, max_steps);
  FcHypercenter out{series.steps.back(), series.stabilized, series.note};
  if (!series.stabilized && out.note.empty())
    out.note = "series did not stabilize within the step limit";
  return out;
}

Group icc_quotient(const Group& g, int max_steps) {
  FcHypercenter fch = fc_hypercenter(g, max_steps);
  if (!fch.certified)
    fail(ErrorKind::unsupported_quotient,
         "FC-hypercenter of " + g.name() + " was not certified: " + fch.note);
  Group q = fch.subgroup.quotient().group;
  IccVerdict verdict = is_icc(q);
  if (verdict.status == Truth::no)
    fail(ErrorKind::internal_inconsistency,
         "quotient by the FC-hypercenter of " + g.name() +
             " still has a finite nontrivial class: " + verdict.note);
  return q;
}

bool check_icc_quotient_minimality(const Group& g, const Subgroup& n, int max_steps) {
  Subgroup::QuotientResult q = n.quotient();
  IccVerdict verdict = is_icc(q.group);
  if (verdict.status != Truth::yes)
    fail(ErrorKind::invalid_argument,
         "the quotient " + q.group.name() + " is not certified ICC, so the minimality " +
             "statement does not apply");
  FcHypercenter fch = fc_hypercenter(g, max_steps);
  if (!fch.certified)
    fail(ErrorKind::unsupported_quotient, "FC-hypercenter of " + g.name() + " not certified");
  return fch.subgroup.contained_in(n);
}

bool check_subgroup_closure(const Group& g, const Subgroup& h, int max_steps) {
  FcHypercenter ambient = fc_hypercenter(g, max_steps);
  if (!ambient.certified || !ambient.subgroup.is_whole()) return true;  // vacuous
  Subgroup::AsGroup sub = h.as_group();
  FcHypercenter inner = fc_hypercenter(sub.group, max_steps);
  return inner.certified && inner.subgroup.is_whole();
}

}  // namespace twistlab
