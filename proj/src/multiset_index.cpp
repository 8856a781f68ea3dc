#include "pursuit/multiset_index.hpp"

#include <algorithm>
#include <limits>

namespace pursuit {

uint64_t multiset_count_clamped(uint64_t n, int k) {
    // C(n+k-1, k) with overflow clamp.
    unsigned __int128 acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc = acc * (n + k - i) / i;
        if (acc > std::numeric_limits<uint64_t>::max()) return std::numeric_limits<uint64_t>::max();
    }
    return static_cast<uint64_t>(acc);
}

MultisetIndex::MultisetIndex(int n, int k) : n_(n), k_(k) {
    if (n < 1 || k < 0) throw std::invalid_argument("bad multiset index parameters");
    count_ = multiset_count_clamped(n, k);
    if (count_ == std::numeric_limits<uint64_t>::max())
        throw std::overflow_error("multiset space does not fit in 64 bits");
    tab_.assign(k, std::vector<uint64_t>(n, 0));
    for (int i = 0; i < k; ++i)
        for (int c = 0; c < n; ++c)
            tab_[i][c] = multiset_count_clamped(c, i + 1);  // C(c+i, i+1)
}

void MultisetIndex::unrank(uint64_t rank, std::span<int> out) const {
    for (int i = k_ - 1; i >= 0; --i) {
        const auto& row = tab_[i];
        // Largest c with row[c] <= rank.
        int c = static_cast<int>(std::upper_bound(row.begin(), row.end(), rank) - row.begin()) - 1;
        out[i] = c;
        rank -= row[c];
    }
}

}  // namespace pursuit
