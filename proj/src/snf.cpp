#include "polycell/snf.hpp"

#include <algorithm>
#include <cstdlib>

namespace polycell {

std::vector<long long> smith_normal_form(IntMatrix m) {
  const int n = std::min(m.rows, m.cols);
  int t = 0;
  while (t < n) {
    // Nonzero entry of smallest absolute value in the trailing block.
    int pr = -1, pc = -1;
    long long best = 0;
    for (int r = t; r < m.rows; ++r)
      for (int c = t; c < m.cols; ++c) {
        long long v = std::llabs(m.at(r, c));
        if (v != 0 && (pr < 0 || v < best)) {
          best = v;
          pr = r;
          pc = c;
        }
      }
    if (pr < 0) break;  // trailing block is zero

    for (int c = t; c < m.cols; ++c) std::swap(m.at(t, c), m.at(pr, c));
    for (int r = t; r < m.rows; ++r) std::swap(m.at(r, t), m.at(r, pc));

    // Clear row and column t; swapping a nonzero remainder into the pivot
    // strictly shrinks it, so this terminates.
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int r = t + 1; r < m.rows; ++r) {
        long long q = m.at(r, t) / m.at(t, t);
        if (q != 0)
          for (int c = t; c < m.cols; ++c) m.at(r, c) -= q * m.at(t, c);
        if (m.at(r, t) != 0) {
          for (int c = t; c < m.cols; ++c) std::swap(m.at(t, c), m.at(r, c));
          clean = false;
        }
      }
      for (int c = t + 1; c < m.cols; ++c) {
        long long q = m.at(t, c) / m.at(t, t);
        if (q != 0)
          for (int r = t; r < m.rows; ++r) m.at(r, c) -= q * m.at(r, t);
        if (m.at(t, c) != 0) {
          for (int r = t; r < m.rows; ++r) std::swap(m.at(r, t), m.at(r, c));
          clean = false;
        }
      }
    }

    // d[t] must divide everything below; fold one offending row in and redo.
    bool redo = false;
    for (int r = t + 1; r < m.rows && !redo; ++r)
      for (int c = t + 1; c < m.cols && !redo; ++c)
        if (m.at(r, c) % m.at(t, t) != 0) {
          for (int cc = t; cc < m.cols; ++cc) m.at(t, cc) += m.at(r, cc);
          redo = true;
        }
    if (!redo) ++t;
  }

  std::vector<long long> diag;
  for (int k = 0; k < t; ++k) diag.push_back(std::llabs(m.at(k, k)));
  return diag;
}

}  // namespace polycell
