// Copyright (c) the twistlab authors.
// SPDX-License-Identifier: Apache-2.0

#include "twistlab/lattice.hpp"

#include <utility>

#include "twistlab/errors.hpp"

namespace twistlab {

namespace {

void sub_multiple(std::vector<Integer>& target, const std::vector<Integer>& src,
                  const Integer& q) {
  for (std::size_t j = 0; j < target.size(); ++j) target[j] -= q * src[j];
}

Integer floor_quot(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

IntMatrix row_hnf(IntMatrix a) {
  if (a.empty()) return a;
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    // gcd-eliminate column c below row r
    while (true) {
      std::size_t best = a.size();
      for (std::size_t i = r; i < a.size(); ++i) {
        if (a[i][c] == 0) continue;
        if (best == a.size() || abs(a[i][c]) < abs(a[best][c])) best = i;
      }
      if (best == a.size()) break;  // column clear
      std::swap(a[r], a[best]);
      bool clear = true;
      for (std::size_t i = r + 1; i < a.size(); ++i) {
        if (a[i][c] == 0) continue;
        sub_multiple(a[i], a[r], floor_quot(a[i][c], a[r][c]));
        if (a[i][c] != 0) clear = false;
      }
      if (clear) break;
    }
    if (a[r][c] == 0) continue;
    if (a[r][c] < 0)
      for (auto& v : a[r]) v = -v;
    // reduce entries above the pivot into [0, pivot)
    for (std::size_t i = 0; i < r; ++i)
      if (a[i][c] != 0) sub_multiple(a[i], a[r], floor_quot(a[i][c], a[r][c]));
    ++r;
  }
  a.resize(r);
  return a;
}

IntMatrix left_kernel(const IntMatrix& a, std::size_t ncols) {
  const std::size_t n = a.size();
  // reduce [a | I]; rows whose a-part vanished carry kernel vectors in the
  // I-part
  IntMatrix work(n, std::vector<Integer>(ncols + n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != ncols)
      fail(ErrorKind::internal_inconsistency, "ragged matrix in left_kernel");
    for (std::size_t j = 0; j < ncols; ++j) work[i][j] = a[i][j];
    work[i][ncols + i] = 1;
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < n; ++c) {
    while (true) {
      std::size_t best = n;
      for (std::size_t i = r; i < n; ++i) {
        if (work[i][c] == 0) continue;
        if (best == n || abs(work[i][c]) < abs(work[best][c])) best = i;
      }
      if (best == n) break;
      std::swap(work[r], work[best]);
      bool clear = true;
      for (std::size_t i = r + 1; i < n; ++i) {
        if (work[i][c] == 0) continue;
        sub_multiple(work[i], work[r], floor_quot(work[i][c], work[r][c]));
        if (work[i][c] != 0) clear = false;
      }
      if (clear) break;
    }
    if (work[r][c] != 0) ++r;
  }
  IntMatrix kernel;
  for (std::size_t i = r; i < n; ++i)
    kernel.emplace_back(work[i].begin() + ncols, work[i].end());
  return row_hnf(std::move(kernel));
}

IntMatrix left_kernel_mod(const IntMatrix& a, std::size_t ncols, const Integer& modulus) {
  if (modulus <= 0)
    fail(ErrorKind::internal_inconsistency, "left_kernel_mod needs a positive modulus");
  const std::size_t n = a.size();
  // x * a == 0 (mod D)  <=>  (x, y) * [a; D*I] == 0 for some y
  IntMatrix stacked = a;
  for (std::size_t j = 0; j < ncols; ++j) {
    std::vector<Integer> row(ncols, 0);
    row[j] = modulus;
    stacked.push_back(std::move(row));
  }
  IntMatrix full = left_kernel(stacked, ncols);
  IntMatrix projected;
  for (const auto& row : full) projected.emplace_back(row.begin(), row.begin() + n);
  return row_hnf(std::move(projected));
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty()) return {};
  if (b.empty()) fail(ErrorKind::internal_inconsistency, "mat_mul with empty rhs");
  const std::size_t inner = b.size(), cols = b[0].size();
  IntMatrix out(a.size(), std::vector<Integer>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner)
      fail(ErrorKind::internal_inconsistency, "mat_mul dimension mismatch");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

bool in_row_span(const IntMatrix& hnf_basis, std::vector<Integer> x) {
  for (const auto& row : hnf_basis) {
    std::size_t pivot = 0;
    while (pivot < row.size() && row[pivot] == 0) ++pivot;
    if (pivot == row.size()) continue;
    if (x[pivot] % row[pivot] != 0) return false;
    sub_multiple(x, row, x[pivot] / row[pivot]);
  }
  for (const Integer& v : x)
    if (v != 0) return false;
  return true;
}

}  // namespace twistlab
