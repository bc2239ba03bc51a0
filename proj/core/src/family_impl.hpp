// Copyright (c) the twistlab authors.
// SPDX-License-Identifier: Apache-2.0
//
// Internal interface between the Group handle and the family implementations.
// Not installed.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "twistlab/errors.hpp"
#include "twistlab/group.hpp"

namespace twistlab {

class FamilyImpl {
 public:
  virtual ~FamilyImpl() = default;

  virtual FamilyTag tag() const = 0;
  virtual const std::string& name() const = 0;
  virtual bool finite() const = 0;
  virtual std::uint64_t order() const {
    fail(ErrorKind::infinite_group, name() + " is infinite");
  }
  virtual const GroupMetadata& metadata() const = 0;

  virtual GroupElement identity() const = 0;
  virtual GroupElement mul(const GroupElement& a, const GroupElement& b) const = 0;
  virtual GroupElement inv(const GroupElement& a) const = 0;
  // Validates that a is a canonical element of this group (FamilyMismatch).
  virtual void check(const GroupElement& a) const = 0;
  virtual bool same(const FamilyImpl& other) const = 0;
  virtual std::string print(const GroupElement& a) const = 0;
  virtual std::vector<std::pair<std::string, GroupElement>> gens() const = 0;

  virtual ClassSize cls(const GroupElement& a, int effort) const = 0;
  virtual CentralizerDescription centralizer(const GroupElement& a) const = 0;
  virtual IccVerdict icc(int effort) const = 0;
  virtual GroupElement sample(Prng& rng) const = 0;

  virtual int free_rank() const = 0;
  virtual std::vector<std::int64_t> free_coords(const GroupElement& a) const = 0;
};

// Table-backed finite group. Identity is always element 0.
class FiniteImpl final : public FamilyImpl {
 public:
  // table[i][j] = index of element i * element j. Validated: Latin square,
  // identity at index 0, associativity, inverses.
  FiniteImpl(std::string name, std::vector<std::string> names,
             std::vector<std::uint16_t> table, GroupMetadata meta,
             std::vector<std::pair<std::string, std::uint64_t>> generator_indices,
             std::optional<AbelianCoordinates> coords);

  FamilyTag tag() const override { return FamilyTag::finite; }
  const std::string& name() const override { return name_; }
  bool finite() const override { return true; }
  std::uint64_t order() const override { return n_; }
  const GroupMetadata& metadata() const override { return meta_; }

  GroupElement identity() const override { return element(0); }
  GroupElement mul(const GroupElement& a, const GroupElement& b) const override;
  GroupElement inv(const GroupElement& a) const override;
  void check(const GroupElement& a) const override;
  bool same(const FamilyImpl& other) const override;
  std::string print(const GroupElement& a) const override;
  std::vector<std::pair<std::string, GroupElement>> gens() const override;

  ClassSize cls(const GroupElement& a, int effort) const override;
  CentralizerDescription centralizer(const GroupElement& a) const override;
  IccVerdict icc(int effort) const override;
  GroupElement sample(Prng& rng) const override;

  int free_rank() const override { return 0; }
  std::vector<std::int64_t> free_coords(const GroupElement&) const override { return {}; }

  GroupElement element(std::uint64_t i) const;
  std::uint64_t index(const GroupElement& a) const;
  std::uint64_t mul_idx(std::uint64_t i, std::uint64_t j) const {
    return table_[i * n_ + j];
  }
  std::uint64_t inv_idx(std::uint64_t i) const { return inv_[i]; }
  std::uint64_t conj_idx(std::uint64_t a, std::uint64_t h) const {
    return mul_idx(mul_idx(h, a), inv_[h]);
  }
  const std::vector<std::string>& names() const { return names_; }
  const std::optional<AbelianCoordinates>& coordinates() const { return coords_; }
  const std::vector<std::vector<GroupElement>>& classes() const;
  std::vector<GroupElement> generating_set() const;

 private:
  std::string name_;
  std::uint64_t n_;
  std::vector<std::string> names_;
  std::vector<std::uint16_t> table_;
  std::vector<std::uint16_t> inv_;
  GroupMetadata meta_;
  std::vector<std::pair<std::string, std::uint64_t>> gen_idx_;
  std::optional<AbelianCoordinates> coords_;
  mutable std::vector<std::vector<GroupElement>> classes_cache_;
};

const FiniteImpl* as_finite(const Group& g);
const FiniteImpl& require_finite(const Group& g);

// Shared word machinery for Z * Z_n and the central extension over it.
// Normalizes a syllable sequence: merges equal letters, reduces b-exponents
// mod n (carries counted separately; they are central in the extension and
// vanish in the plain free product), drops empty syllables with cascade.
struct ReducedWord {
  std::vector<Syllable> syllables;
  std::int64_t carries = 0;  // number of b^n factors extracted
};
ReducedWord reduce_word(const std::vector<Syllable>& input, std::int64_t n);
std::vector<Syllable> invert_word(const std::vector<Syllable>& w);

// w = prefix * core * prefix^-1 with core cyclically reduced.
struct CyclicDecomposition {
  std::vector<Syllable> prefix;
  std::vector<Syllable> core;
};
CyclicDecomposition cyclically_reduce(const std::vector<Syllable>& w, std::int64_t n);

// Metadata builders shared by the constructors.
GroupMetadata finite_metadata(bool trivial);

// Tuple-named table group from finite factors (product of orders within the
// dense cap). make_direct_product falls back to a lazy componentwise
// implementation otherwise.
Group materialize_finite_product(const std::vector<Group>& factors);

}  // namespace twistlab
