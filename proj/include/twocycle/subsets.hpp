#pragma once

#include <vector>

namespace twocycle {

// All ascending k-subsets of {0,...,n-1} in lexicographic order. Sizes stay
// desk-scale (n <= ~14) throughout, so materializing is cheap and keeps the
// call sites simple.
inline std::vector<std::vector<int>> ascending_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    for (;;) {
        out.push_back(cur);
        if (k == 0) break;
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

}  // namespace twocycle
