#include "segrank/rng.hpp"

#include <algorithm>
#include <stdexcept>

namespace segrank {

std::vector<int> Xoshiro256ss::sample_without_replacement(int lo, int hi, int k) {
    const int len = hi - lo;
    if (k < 0 || len < k) throw std::logic_error("sample_without_replacement: k exceeds interval");
    std::vector<int> pool(len);
    for (int i = 0; i < len; ++i) pool[i] = lo + i;
    for (int i = 0; i < k; ++i) {
        const int j = i + static_cast<int>(bounded(static_cast<uint64_t>(len - i)));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

}  // namespace segrank
