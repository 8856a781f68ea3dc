#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace pursuit {

// Number of size-k multisets over {0..n-1} = C(n+k-1, k), clamped to
// UINT64_MAX on overflow.
uint64_t multiset_count_clamped(uint64_t n, int k);

// Colex ranking of size-k multisets over {0..n-1}, via the bijection
// (c_0 <= ... <= c_{k-1})  <->  strictly increasing (c_i + i). Rank 0 is the
// all-zero multiset; ranks cover [0, C(n+k-1, k)).
class MultisetIndex {
  public:
    MultisetIndex(int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }
    uint64_t count() const { return count_; }

    uint64_t rank(std::span<const int> sorted) const {
        uint64_t r = 0;
        for (int i = 0; i < k_; ++i) r += tab_[i][sorted[i]];
        return r;
    }

    void unrank(uint64_t rank, std::span<int> out) const;

    // Advances `cops` to the next multiset in rank order; false after the
    // last one. Start from all zeros (rank 0).
    bool next(std::span<int> cops) const {
        for (int i = 0; i < k_; ++i) {
            int cap = (i + 1 < k_) ? cops[i + 1] : n_ - 1;
            if (cops[i] < cap) {
                ++cops[i];
                for (int j = 0; j < i; ++j) cops[j] = 0;
                return true;
            }
        }
        return false;
    }

  private:
    int n_, k_;
    uint64_t count_;
    // tab_[i][c] = C(c+i, i+1), the rank contribution of value c at slot i.
    std::vector<std::vector<uint64_t>> tab_;
};

}  // namespace pursuit
