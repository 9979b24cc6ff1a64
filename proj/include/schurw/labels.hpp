#pragma once

#include <vector>

namespace schurw {

// Integer-vector label for character functions; entries may be
// negative, zero or unordered. Partitions and strict partitions are the
// canonical sublasses, checked rather than encoded in the type.
using IntVector = std::vector<int>;

inline long weight(const IntVector& v) {
    long w = 0;
    for (int x : v) w += x;
    return w;
}

inline bool is_partition(const IntVector& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 1) return false;
        if (i + 1 < v.size() && v[i] < v[i + 1]) return false;
    }
    return true;
}

inline bool is_strict_partition(const IntVector& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 1) return false;
        if (i + 1 < v.size() && v[i] <= v[i + 1]) return false;
    }
    return true;
}

// All partitions of n, parts weakly decreasing.
std::vector<IntVector> partitions_of(int n);
// All strict partitions of n, parts strictly decreasing.
std::vector<IntVector> strict_partitions_of(int n);
// Unions over 0 <= n <= max_weight, ordered by weight.
std::vector<IntVector> partitions_up_to(int max_weight);
std::vector<IntVector> strict_partitions_up_to(int max_weight);

// Deletes the (0-based) components in idx from v.
IntVector erase_components(const IntVector& v, std::initializer_list<int> idx);

}  // namespace schurw
