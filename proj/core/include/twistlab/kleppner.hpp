// Copyright (c) the twistlab authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twistlab/circle.hpp"
#include "twistlab/cocycle.hpp"
#include "twistlab/group.hpp"

namespace twistlab {

// Whether the conjugation phase of sigma is blind to g on its centralizer:
// g is regular when sigma(g, h) = sigma(h, g) for every h commuting with g.
// The defect h -> sigma(g,h) conj(sigma(h,g)) is a character of the
// centralizer, so generating sets decide the infinite cases exactly.
struct RegularityVerdict {
  enum class Status { regular, irregular, unknown };

  GroupElement element;
  Status status = Status::unknown;
  std::optional<GroupElement> witness;  // irregular: commuting h with defect != 1
  std::optional<CircleValue> defect;    // the value at that witness
  std::uint64_t checked = 0;            // defect evaluations performed
  ClassSize cls;                        // conjugacy class of `element`
  std::string method;
};

RegularityVerdict is_sigma_regular(const Cocycle& c, const GroupElement& g, int effort = 20);

// All conjugacy classes whose elements are sigma-regular, each class listed
// in element-index order. Finite groups only. The class of the identity is
// always present.
std::vector<std::vector<GroupElement>> sigma_regular_classes(const Cocycle& c);

// Every nontrivial sigma-regular conjugacy class is infinite. `yes` and `no`
// are exact; `unknown` is returned only for cocycle shapes with no decision
// procedure here (never for the built-in catalog).
struct KleppnerVerdict {
  Truth status = Truth::unknown;
  std::optional<RegularityVerdict> witness;  // no: nontrivial, regular, finite class
  std::vector<std::string> evidence;
};

KleppnerVerdict kleppner_condition(const Cocycle& c, int effort = 20);

}  // namespace twistlab
