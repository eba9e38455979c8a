#pragma once

#include <cstdint>
#include <vector>

namespace polycell {

// Dense integer matrix, row-major.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<long long> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
  long long& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  long long at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

// Nonnegative diagonal of the Smith normal form with d[i] | d[i+1]; zeros
// trimmed. Exact integer arithmetic, minimum-absolute-value pivoting.
std::vector<long long> smith_normal_form(IntMatrix m);

}  // namespace polycell
