// Copyright (c) the twistlab authors.
// SPDX-License-Identifier: Apache-2.0

#include "twistlab/element.hpp"

namespace twistlab {

const char* family_tag_name(FamilyTag t) {
  switch (t) {
    case FamilyTag::finite: return "finite";
    case FamilyTag::free_abelian: return "free_abelian";
    case FamilyTag::infinite_dihedral: return "infinite_dihedral";
    case FamilyTag::heisenberg3: return "heisenberg3";
    case FamilyTag::baumslag_solitar: return "baumslag_solitar";
    case FamilyTag::free_product_z_zn: return "free_product_z_zn";
    case FamilyTag::lamplighter: return "lamplighter";
    case FamilyTag::direct_product: return "direct_product";
  }
  return "?";
}

bool TupleNf::operator==(const TupleNf& other) const { return parts == other.parts; }

namespace {

template <typename T>
int cmp_scalar(const T& a, const T& b) {
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

template <typename Seq, typename Cmp>
int cmp_seq(const Seq& a, const Seq& b, Cmp cmp) {
  std::size_t n = a.size() < b.size() ? a.size() : b.size();
  for (std::size_t i = 0; i < n; ++i)
    if (int c = cmp(a[i], b[i]); c != 0) return c;
  return cmp_scalar(a.size(), b.size());
}

int cmp_syllable(const Syllable& a, const Syllable& b) {
  if (int c = cmp_scalar(a.is_b, b.is_b); c != 0) return c;
  return cmp_scalar(a.exp, b.exp);
}

}  // namespace

int compare_elements(const GroupElement& a, const GroupElement& b) {
  if (int c = cmp_scalar(static_cast<int>(a.family), static_cast<int>(b.family)); c != 0)
    return c;
  if (int c = cmp_scalar(a.nf.index(), b.nf.index()); c != 0) return c;
  struct Visitor {
    const GroupElement& other;
    int operator()(const std::int64_t& x) const {
      return cmp_scalar(x, std::get<std::int64_t>(other.nf));
    }
    int operator()(const std::vector<std::int64_t>& x) const {
      return cmp_seq(x, std::get<std::vector<std::int64_t>>(other.nf), cmp_scalar<std::int64_t>);
    }
    int operator()(const DihedralNf& x) const {
      const auto& y = std::get<DihedralNf>(other.nf);
      if (int c = cmp_scalar(x.shift, y.shift); c != 0) return c;
      return cmp_scalar(x.flip, y.flip);
    }
    int operator()(const HeisNf& x) const {
      const auto& y = std::get<HeisNf>(other.nf);
      if (int c = cmp_scalar(x.x, y.x); c != 0) return c;
      if (int c = cmp_scalar(x.y, y.y); c != 0) return c;
      return cmp_scalar(x.z, y.z);
    }
    int operator()(const WordNf& x) const {
      return cmp_seq(x.syllables, std::get<WordNf>(other.nf).syllables, cmp_syllable);
    }
    int operator()(const BsNf& x) const {
      const auto& y = std::get<BsNf>(other.nf);
      if (int c = cmp_seq(x.syllables, y.syllables, cmp_syllable); c != 0) return c;
      return cmp_scalar(x.centre, y.centre);
    }
    int operator()(const LampNf& x) const {
      const auto& y = std::get<LampNf>(other.nf);
      if (int c = cmp_seq(x.lamps, y.lamps, cmp_scalar<std::int64_t>); c != 0) return c;
      return cmp_scalar(x.shift, y.shift);
    }
    int operator()(const TupleNf& x) const {
      return cmp_seq(x.parts, std::get<TupleNf>(other.nf).parts,
                     [](const GroupElement& p, const GroupElement& q) {
                       return compare_elements(p, q);
                     });
    }
  };
  return std::visit(Visitor{b}, a.nf);
}

}  // namespace twistlab
