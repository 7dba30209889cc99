#pragma once

#include <vector>

#include "ptc/graph.hpp"

namespace ptc::detail {

/// All k-subsets of {0..n-1} as masks, in lexicographic order of their sorted members.
inline std::vector<Mask> k_subsets(int n, int k) {
  std::vector<Mask> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    Mask m = 0;
    for (int v : idx) m |= bit(v);
    out.push_back(m);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace ptc::detail
