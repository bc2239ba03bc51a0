// Copyright (c) the twistlab authors.
// SPDX-License-Identifier: Apache-2.0

#include "twistlab/subgroup.hpp"

#include <algorithm>

#include "family_impl.hpp"
#include "twistlab/errors.hpp"

namespace twistlab {

namespace {

GroupElement identity_embed(const Group& g, const GroupElement& a) {
  g.impl().check(a);
  return a;
}

bool is_identity_basis(const IntMatrix& b, std::size_t n) {
  if (b.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (b[i][j] != Integer(i == j ? 1 : 0)) return false;
  return true;
}

std::int64_t to_i64(const Integer& v) { return v.convert_to<std::int64_t>(); }

// Direct product of the non-trivial groups among `factor_groups`, with
// conversions between a product element and the per-kept-factor pieces. The
// result may come back as a single factor, a dense table, or a lazy tuple
// depending on what make_direct_product decides; split/combine hide that.
struct AssembledProduct {
  Group group;
  std::vector<std::size_t> kept_pos;  // positions into factor_groups
  std::function<std::vector<GroupElement>(const GroupElement&)> split;
  std::function<GroupElement(std::vector<GroupElement>)> combine;
};

AssembledProduct assemble_product(const std::vector<Group>& factor_groups) {
  AssembledProduct out;
  std::vector<Group> kept;
  for (std::size_t i = 0; i < factor_groups.size(); ++i) {
    if (!factor_groups[i].is_trivial()) {
      kept.push_back(factor_groups[i]);
      out.kept_pos.push_back(i);
    }
  }
  out.group = make_direct_product(kept);
  Group group = out.group;
  if (out.kept_pos.empty()) {
    out.split = [](const GroupElement&) { return std::vector<GroupElement>{}; };
    out.combine = [group](std::vector<GroupElement>) { return group.identity(); };
    return out;
  }
  if (out.kept_pos.size() == 1) {
    out.split = [group](const GroupElement& a) {
      group.impl().check(a);
      return std::vector<GroupElement>{a};
    };
    out.combine = [](std::vector<GroupElement> parts) { return std::move(parts[0]); };
    return out;
  }
  if (group.family() == FamilyTag::direct_product) {
    out.split = [group](const GroupElement& a) {
      group.impl().check(a);
      return std::get<TupleNf>(a.nf).parts;
    };
    out.combine = [group](std::vector<GroupElement> parts) {
      GroupElement e;
      e.family = FamilyTag::direct_product;
      e.nf = TupleNf{std::move(parts)};
      group.impl().check(e);
      return e;
    };
    return out;
  }
  // dense table: mixed-radix index, first kept factor varies fastest
  out.split = [group, kept](const GroupElement& a) {
    std::uint64_t idx = index_of(group, a);
    std::vector<GroupElement> parts;
    for (const Group& f : kept) {
      parts.push_back(element_by_index(f, idx % f.order()));
      idx /= f.order();
    }
    return parts;
  };
  out.combine = [group, kept](std::vector<GroupElement> parts) {
    std::uint64_t idx = 0, mult = 1;
    for (std::size_t t = 0; t < kept.size(); ++t) {
      idx += index_of(kept[t], parts[t]) * mult;
      mult *= kept[t].order();
    }
    return element_by_index(group, idx);
  };
  return out;
}

}  // namespace

// ---- constructors ----------------------------------------------------------

Subgroup Subgroup::trivial(Group ambient) {
  return Subgroup(std::move(ambient), Kind::trivial_only);
}

Subgroup Subgroup::whole(Group ambient) {
  return Subgroup(std::move(ambient), Kind::whole_group);
}

Subgroup Subgroup::from_indices(Group ambient, std::vector<std::uint64_t> indices) {
  const FiniteImpl& fi = require_finite(ambient);
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  if (indices.empty() || indices[0] != 0)
    fail(ErrorKind::invalid_argument, "subgroup must contain the identity");
  for (std::uint64_t i : indices)
    if (i >= fi.order()) fail(ErrorKind::invalid_argument, "subgroup index out of range");
  for (std::uint64_t a : indices)
    for (std::uint64_t b : indices)
      if (!std::binary_search(indices.begin(), indices.end(), fi.mul_idx(a, b)))
        fail(ErrorKind::invalid_argument, "element set is not closed under multiplication");
  if (indices.size() == 1) return trivial(std::move(ambient));
  if (indices.size() == fi.order()) return whole(std::move(ambient));
  Subgroup s(std::move(ambient), Kind::finite_list);
  s.indices_ = std::move(indices);
  return s;
}

Subgroup Subgroup::dinf_translations_of(Group ambient) {
  if (ambient.family() != FamilyTag::infinite_dihedral)
    fail(ErrorKind::invalid_argument, "translation subgroup needs infinite_dihedral");
  return Subgroup(std::move(ambient), Kind::dinf_translations);
}

Subgroup Subgroup::heis_center_of(Group ambient) {
  if (ambient.family() != FamilyTag::heisenberg3)
    fail(ErrorKind::invalid_argument, "central subgroup needs heisenberg3");
  return Subgroup(std::move(ambient), Kind::heis_center);
}

Subgroup Subgroup::bs_centre_of(Group ambient) {
  if (ambient.family() != FamilyTag::baumslag_solitar)
    fail(ErrorKind::invalid_argument, "central subgroup needs baumslag_solitar");
  return Subgroup(std::move(ambient), Kind::bs_centre);
}

Subgroup Subgroup::from_lattice(Group ambient, IntMatrix basis) {
  std::size_t rank = static_cast<std::size_t>(free_abelian_rank(ambient));
  for (const auto& row : basis)
    if (row.size() != rank)
      fail(ErrorKind::invalid_argument, "lattice basis width mismatch");
  basis = row_hnf(std::move(basis));
  if (basis.empty()) return trivial(std::move(ambient));
  if (is_identity_basis(basis, rank)) return whole(std::move(ambient));
  Subgroup s(std::move(ambient), Kind::lattice);
  s.basis_ = std::move(basis);
  return s;
}

Subgroup Subgroup::componentwise(Group ambient, std::vector<Subgroup> parts) {
  const std::vector<Group>& factors = direct_factors(ambient);
  if (parts.size() != factors.size())
    fail(ErrorKind::invalid_argument, "one subgroup per product factor required");
  bool all_whole = true, all_trivial = true;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!parts[i].ambient().same_group(factors[i]))
      fail(ErrorKind::invalid_argument, "factor subgroup has the wrong ambient group");
    all_whole = all_whole && parts[i].is_whole();
    all_trivial = all_trivial && parts[i].is_trivial_subgroup();
  }
  if (all_whole) return whole(std::move(ambient));
  if (all_trivial) return trivial(std::move(ambient));
  Subgroup s(std::move(ambient), Kind::product);
  s.parts_ = std::move(parts);
  return s;
}

// ---- predicates ------------------------------------------------------------

bool Subgroup::contains(const GroupElement& a) const {
  ambient_.impl().check(a);
  switch (kind_) {
    case Kind::trivial_only:
      return a == ambient_.identity();
    case Kind::whole_group:
      return true;
    case Kind::finite_list:
      return std::binary_search(indices_.begin(), indices_.end(), index_of(ambient_, a));
    case Kind::dinf_translations:
      return !std::get<DihedralNf>(a.nf).flip;
    case Kind::heis_center: {
      const HeisNf& h = std::get<HeisNf>(a.nf);
      return h.x == 0 && h.y == 0;
    }
    case Kind::bs_centre:
      return std::get<BsNf>(a.nf).syllables.empty();
    case Kind::lattice: {
      std::vector<Integer> x;
      for (std::int64_t v : std::get<std::vector<std::int64_t>>(a.nf)) x.emplace_back(v);
      return in_row_span(basis_, std::move(x));
    }
    case Kind::product: {
      const TupleNf& t = std::get<TupleNf>(a.nf);
      for (std::size_t i = 0; i < parts_.size(); ++i)
        if (!parts_[i].contains(t.parts[i])) return false;
      return true;
    }
  }
  fail(ErrorKind::internal_inconsistency, "unhandled subgroup kind");
}

bool Subgroup::is_whole() const {
  if (kind_ == Kind::whole_group) return true;
  return kind_ == Kind::trivial_only && ambient_.is_trivial();
}

bool Subgroup::is_trivial_subgroup() const {
  if (kind_ == Kind::trivial_only) return true;
  return kind_ == Kind::whole_group && ambient_.is_trivial();
}

std::string Subgroup::describe() const {
  switch (kind_) {
    case Kind::trivial_only:
      return "{e}";
    case Kind::whole_group:
      return "whole group";
    case Kind::finite_list: {
      if (indices_.size() > 8)
        return "subgroup of order " + std::to_string(indices_.size());
      std::string s = "{";
      for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (i) s += ", ";
        s += element_names(ambient_)[indices_[i]];
      }
      return s + "}";
    }
    case Kind::dinf_translations:
      return "<t>";
    case Kind::heis_center:
      return "<z>";
    case Kind::bs_centre:
      return "<b^" + std::to_string(torsion_parameter(ambient_)) + ">";
    case Kind::lattice: {
      std::string s = "lattice <";
      for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (i) s += ", ";
        s += "(";
        for (std::size_t j = 0; j < basis_[i].size(); ++j) {
          if (j) s += ",";
          s += basis_[i][j].str();
        }
        s += ")";
      }
      return s + ">";
    }
    case Kind::product: {
      std::string s;
      for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += " x ";
        s += parts_[i].describe();
      }
      return s;
    }
  }
  return "?";
}

// ---- subgroup as a group ---------------------------------------------------

Subgroup::AsGroup Subgroup::as_group() const {
  switch (kind_) {
    case Kind::trivial_only: {
      Group amb = ambient_;
      return {make_trivial(), [amb](const GroupElement&) { return amb.identity(); }};
    }
    case Kind::whole_group: {
      Group amb = ambient_;
      return {amb, [amb](const GroupElement& a) { return identity_embed(amb, a); }};
    }
    case Kind::finite_list: {
      const FiniteImpl& fi = require_finite(ambient_);
      const std::size_t k = indices_.size();
      std::vector<std::int64_t> pos(fi.order(), -1);
      for (std::size_t i = 0; i < k; ++i) pos[indices_[i]] = static_cast<std::int64_t>(i);
      std::vector<std::string> names;
      for (std::uint64_t idx : indices_) names.push_back(fi.names()[idx]);
      std::vector<std::vector<std::int64_t>> table(k, std::vector<std::int64_t>(k));
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
          table[a][b] = pos[fi.mul_idx(indices_[a], indices_[b])];
      Group sub = make_finite_from_table(std::move(names), std::move(table));
      Group amb = ambient_;
      std::vector<std::uint64_t> idx = indices_;
      return {sub, [sub, amb, idx](const GroupElement& a) {
                return element_by_index(amb, idx[index_of(sub, a)]);
              }};
    }
    case Kind::dinf_translations: {
      return {make_free_abelian(1), [](const GroupElement& a) {
                GroupElement e;
                e.family = FamilyTag::infinite_dihedral;
                e.nf = DihedralNf{std::get<std::vector<std::int64_t>>(a.nf)[0], false};
                return e;
              }};
    }
    case Kind::heis_center: {
      return {make_free_abelian(1), [](const GroupElement& a) {
                GroupElement e;
                e.family = FamilyTag::heisenberg3;
                e.nf = HeisNf{0, 0, std::get<std::vector<std::int64_t>>(a.nf)[0]};
                return e;
              }};
    }
    case Kind::bs_centre: {
      return {make_free_abelian(1), [](const GroupElement& a) {
                GroupElement e;
                e.family = FamilyTag::baumslag_solitar;
                e.nf = BsNf{{}, std::get<std::vector<std::int64_t>>(a.nf)[0]};
                return e;
              }};
    }
    case Kind::lattice: {
      IntMatrix basis = basis_;
      return {make_free_abelian(static_cast<std::int64_t>(basis.size())),
              [basis](const GroupElement& a) {
                const auto& z = std::get<std::vector<std::int64_t>>(a.nf);
                std::vector<std::int64_t> x(basis[0].size(), 0);
                for (std::size_t i = 0; i < basis.size(); ++i)
                  for (std::size_t j = 0; j < x.size(); ++j)
                    x[j] += z[i] * to_i64(basis[i][j]);
                GroupElement e;
                e.family = FamilyTag::free_abelian;
                e.nf = std::move(x);
                return e;
              }};
    }
    case Kind::product: {
      const std::vector<Group>& factors = direct_factors(ambient_);
      std::vector<Group> factor_groups;
      std::vector<std::function<GroupElement(const GroupElement&)>> embeds;
      for (const Subgroup& p : parts_) {
        AsGroup ag = p.as_group();
        factor_groups.push_back(ag.group);
        embeds.push_back(ag.embed);
      }
      AssembledProduct ap = assemble_product(factor_groups);
      Group amb = ambient_;
      return {ap.group, [ap, embeds, factors, amb](const GroupElement& a) {
                std::vector<GroupElement> pieces = ap.split(a);
                TupleNf t;
                for (const Group& f : factors) t.parts.push_back(f.identity());
                for (std::size_t k = 0; k < ap.kept_pos.size(); ++k) {
                  std::size_t i = ap.kept_pos[k];
                  t.parts[i] = embeds[i](pieces[k]);
                }
                GroupElement e;
                e.family = FamilyTag::direct_product;
                e.nf = std::move(t);
                amb.impl().check(e);
                return e;
              }};
    }
  }
  fail(ErrorKind::internal_inconsistency, "unhandled subgroup kind");
}

// ---- quotients -------------------------------------------------------------

Subgroup::QuotientResult Subgroup::quotient() const {
  switch (kind_) {
    case Kind::whole_group: {
      Group q = make_trivial();
      Group amb = ambient_;
      return {q, [q, amb](const GroupElement& a) {
                amb.impl().check(a);
                return q.identity();
              }};
    }
    case Kind::trivial_only: {
      Group amb = ambient_;
      return {amb, [amb](const GroupElement& a) { return identity_embed(amb, a); }};
    }
    case Kind::finite_list: {
      const FiniteImpl& fi = require_finite(ambient_);
      const std::uint64_t n = fi.order();
      std::vector<bool> member(n, false);
      for (std::uint64_t i : indices_) member[i] = true;
      for (std::uint64_t g = 0; g < n; ++g)
        for (std::uint64_t h : indices_)
          if (!member[fi.conj_idx(h, g)])
            fail(ErrorKind::not_normal,
                 "subgroup " + describe() + " is not normal in " + ambient_.name());
      std::vector<std::uint64_t> coset_rep(n, n);
      std::vector<std::uint64_t> reps;
      for (std::uint64_t i = 0; i < n; ++i) {
        if (coset_rep[i] != n) continue;
        for (std::uint64_t h : indices_) coset_rep[fi.mul_idx(i, h)] = i;
        reps.push_back(i);
      }
      std::vector<std::uint64_t> coset_index(n, 0);
      for (std::size_t c = 0; c < reps.size(); ++c) coset_index[reps[c]] = c;
      std::vector<std::string> names;
      for (std::uint64_t r : reps) names.push_back("[" + fi.names()[r] + "]");
      std::vector<std::vector<std::int64_t>> table(reps.size(),
                                                   std::vector<std::int64_t>(reps.size()));
      for (std::size_t a = 0; a < reps.size(); ++a)
        for (std::size_t b = 0; b < reps.size(); ++b)
          table[a][b] =
              static_cast<std::int64_t>(coset_index[coset_rep[fi.mul_idx(reps[a], reps[b])]]);
      Group q = make_finite_from_table(std::move(names), std::move(table));
      Group amb = ambient_;
      return {q, [q, amb, coset_rep, coset_index](const GroupElement& a) {
                return element_by_index(q, coset_index[coset_rep[index_of(amb, a)]]);
              }};
    }
    case Kind::dinf_translations: {
      Group q = make_cyclic(2);
      Group amb = ambient_;
      return {q, [q, amb](const GroupElement& a) {
                amb.impl().check(a);
                return element_by_index(q, std::get<DihedralNf>(a.nf).flip ? 1 : 0);
              }};
    }
    case Kind::heis_center: {
      Group q = make_free_abelian(2);
      Group amb = ambient_;
      return {q, [q, amb](const GroupElement& a) {
                amb.impl().check(a);
                const HeisNf& h = std::get<HeisNf>(a.nf);
                GroupElement e;
                e.family = FamilyTag::free_abelian;
                e.nf = std::vector<std::int64_t>{h.x, h.y};
                return e;
              }};
    }
    case Kind::bs_centre: {
      Group q = make_free_product_z_zn(torsion_parameter(ambient_));
      Group amb = ambient_;
      return {q, [q, amb](const GroupElement& a) {
                amb.impl().check(a);
                GroupElement e;
                e.family = FamilyTag::free_product_z_zn;
                e.nf = WordNf{std::get<BsNf>(a.nf).syllables};
                return e;
              }};
    }
    case Kind::lattice:
      fail(ErrorKind::unsupported_quotient,
           "quotients of " + ambient_.name() + " by a proper sublattice are not implemented");
    case Kind::product: {
      std::vector<Group> quotient_groups;
      std::vector<std::function<GroupElement(const GroupElement&)>> projections;
      for (const Subgroup& p : parts_) {
        QuotientResult qr = p.quotient();
        quotient_groups.push_back(qr.group);
        projections.push_back(qr.project);
      }
      AssembledProduct ap = assemble_product(quotient_groups);
      Group amb = ambient_;
      return {ap.group, [ap, projections, amb](const GroupElement& a) {
                amb.impl().check(a);
                const TupleNf& t = std::get<TupleNf>(a.nf);
                std::vector<GroupElement> pieces;
                for (std::size_t k = 0; k < ap.kept_pos.size(); ++k) {
                  std::size_t i = ap.kept_pos[k];
                  pieces.push_back(projections[i](t.parts[i]));
                }
                return ap.combine(std::move(pieces));
              }};
    }
  }
  fail(ErrorKind::internal_inconsistency, "unhandled subgroup kind");
}

// ---- comparisons -----------------------------------------------------------

bool Subgroup::equals(const Subgroup& other) const {
  if (!ambient_.same_group(other.ambient_)) return false;
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::finite_list:
      return indices_ == other.indices_;
    case Kind::lattice:
      return basis_ == other.basis_;  // HNF is canonical
    case Kind::product: {
      for (std::size_t i = 0; i < parts_.size(); ++i)
        if (!parts_[i].equals(other.parts_[i])) return false;
      return true;
    }
    default:
      return true;
  }
}

bool Subgroup::contained_in(const Subgroup& other) const {
  if (!ambient_.same_group(other.ambient_)) return false;
  if (is_trivial_subgroup() || other.is_whole()) return true;
  if (kind_ != other.kind_) {
    if (is_whole()) return false;  // other is proper
    return false;                  // no cross-kind containments arise
  }
  switch (kind_) {
    case Kind::finite_list:
      return std::includes(other.indices_.begin(), other.indices_.end(), indices_.begin(),
                           indices_.end());
    case Kind::lattice: {
      for (const auto& row : basis_)
        if (!in_row_span(other.basis_, row)) return false;
      return true;
    }
    case Kind::product: {
      for (std::size_t i = 0; i < parts_.size(); ++i)
        if (!parts_[i].contained_in(other.parts_[i])) return false;
      return true;
    }
    default:
      return true;  // identical closed-form subgroups
  }
}

std::vector<GroupElement> subgroup_generators(const Subgroup& s) {
  if (s.is_trivial_subgroup()) return {};
  std::vector<GroupElement> out;
  if (s.is_whole()) {
    for (const auto& [nm, el] : named_generators(s.ambient())) out.push_back(el);
    return out;
  }
  Subgroup::AsGroup ag = s.as_group();
  for (const auto& [nm, el] : named_generators(ag.group)) out.push_back(ag.embed(el));
  return out;
}

}  // namespace twistlab
