// Copyright (c) the twistlab authors.
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "twistlab/lattice.hpp"

using namespace twistlab;

namespace {

IntMatrix m(std::initializer_list<std::initializer_list<int>> rows) {
  IntMatrix out;
  for (const auto& r : rows) {
    std::vector<Integer> row;
    for (int v : r) row.emplace_back(v);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

// ============================================================
// hermite normal form
// ============================================================

TEST_CASE("row_hnf canonicalizes a basis") {
  // both generate the same sublattice of Z^2
  IntMatrix a = row_hnf(m({{2, 0}, {1, 3}}));
  IntMatrix b = row_hnf(m({{1, 3}, {3, 3}, {2, 0}}));
  CHECK_EQ(a, b);
  REQUIRE_EQ(a.size(), 2);
  CHECK_EQ(a[0][0], 1);  // det 6 lattice: HNF [[1,3],[0,6]]
  CHECK_EQ(a[0][1], 3);
  CHECK_EQ(a[1][0], 0);
  CHECK_EQ(a[1][1], 6);
}

TEST_CASE("row_hnf drops dependent rows") {
  IntMatrix a = row_hnf(m({{2, 4}, {1, 2}, {3, 6}}));
  REQUIRE_EQ(a.size(), 1);
  CHECK_EQ(a[0][0], 1);
  CHECK_EQ(a[0][1], 2);
}

// ============================================================
// kernels
// ============================================================

TEST_CASE("left_kernel finds the relation lattice") {
  // x * [[1],[2],[3]] = 0  <=>  x1 + 2 x2 + 3 x3 = 0
  IntMatrix k = left_kernel(m({{1}, {2}, {3}}), 1);
  REQUIRE_EQ(k.size(), 2);
  for (const auto& row : k) CHECK_EQ(row[0] + 2 * row[1] + 3 * row[2], 0);
}

TEST_CASE("left_kernel of an injective map is empty") {
  CHECK(left_kernel(m({{1, 0}, {0, 1}}), 2).empty());
  // no constraints: everything is in the kernel
  IntMatrix k = left_kernel(IntMatrix(2, std::vector<Integer>{}), 0);
  REQUIRE_EQ(k.size(), 2);
}

TEST_CASE("left_kernel_mod solves congruences") {
  // x1 + 2 x2 == 0 (mod 4): solutions are generated by (2,1) and (4,0)
  IntMatrix k = left_kernel_mod(m({{1}, {2}}), 1, Integer(4));
  REQUIRE_EQ(k.size(), 2);
  for (const auto& row : k) CHECK_EQ((row[0] + 2 * row[1]) % 4, 0);
  CHECK(in_row_span(k, {Integer(2), Integer(1)}));
  CHECK(in_row_span(k, {Integer(4), Integer(0)}));
  CHECK_FALSE(in_row_span(k, {Integer(1), Integer(0)}));
  CHECK_FALSE(in_row_span(k, {Integer(2), Integer(0)}));
}

TEST_CASE("in_row_span respects divisibility") {
  IntMatrix basis = row_hnf(m({{2, 0}, {0, 3}}));
  CHECK(in_row_span(basis, {Integer(4), Integer(-3)}));
  CHECK_FALSE(in_row_span(basis, {Integer(1), Integer(0)}));
  CHECK_FALSE(in_row_span(basis, {Integer(2), Integer(2)}));
  CHECK(in_row_span({}, {Integer(0), Integer(0)}));
  CHECK_FALSE(in_row_span({}, {Integer(1), Integer(0)}));
}

TEST_CASE("mat_mul composes bases") {
  IntMatrix p = mat_mul(m({{1, 2}}), m({{1, 0, 1}, {0, 1, 1}}));
  REQUIRE_EQ(p.size(), 1);
  CHECK_EQ(p[0][0], 1);
  CHECK_EQ(p[0][1], 2);
  CHECK_EQ(p[0][2], 3);
}
