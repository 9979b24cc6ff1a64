#include "schurw/labels.hpp"

#include <algorithm>

namespace schurw {

namespace {

void gen_parts(int remaining, int max_part, bool strict, IntVector& acc,
               std::vector<IntVector>& out) {
    if (remaining == 0) {
        out.push_back(acc);
        return;
    }
    int hi = std::min(remaining, max_part);
    for (int p = hi; p >= 1; --p) {
        acc.push_back(p);
        gen_parts(remaining - p, strict ? p - 1 : p, strict, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<IntVector> partitions_of(int n) {
    std::vector<IntVector> out;
    if (n < 0) return out;
    IntVector acc;
    gen_parts(n, n, false, acc, out);
    return out;
}

std::vector<IntVector> strict_partitions_of(int n) {
    std::vector<IntVector> out;
    if (n < 0) return out;
    IntVector acc;
    gen_parts(n, n, true, acc, out);
    return out;
}

std::vector<IntVector> partitions_up_to(int max_weight) {
    std::vector<IntVector> out;
    for (int n = 0; n <= max_weight; ++n) {
        auto ps = partitions_of(n);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

std::vector<IntVector> strict_partitions_up_to(int max_weight) {
    std::vector<IntVector> out;
    for (int n = 0; n <= max_weight; ++n) {
        auto ps = strict_partitions_of(n);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

IntVector erase_components(const IntVector& v, std::initializer_list<int> idx) {
    IntVector r;
    r.reserve(v.size());
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (std::find(idx.begin(), idx.end(), i) == idx.end())
            r.push_back(v[i]);
    return r;
}

}  // namespace schurw
