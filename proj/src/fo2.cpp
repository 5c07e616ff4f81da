#include "wfomc/fo2.hpp"

namespace wfomc {

namespace {

void compositions(std::uint32_t remaining, std::size_t at, CardinalityVector& k,
                  const std::function<void(const CardinalityVector&)>& visit) {
    if (at + 1 == k.size()) {
        k[at] = remaining;
        visit(k);
        return;
    }
    for (std::uint32_t v = 0; v <= remaining; ++v) {
        k[at] = v;
        compositions(remaining - v, at + 1, k, visit);
    }
}

}  // namespace

void for_each_composition(std::uint32_t n, std::size_t parts,
                          const std::function<void(const CardinalityVector&)>& visit) {
    if (parts == 0) {
        if (n == 0) visit({});
        return;
    }
    CardinalityVector k(parts, 0);
    compositions(n, 0, k, visit);
}

void for_each_in_box(const CardinalityVector& bound, const std::function<void(const CardinalityVector&)>& visit) {
    CardinalityVector p(bound.size(), 0);
    while (true) {
        visit(p);
        std::size_t i = p.size();
        // odometer with the last coordinate fastest
        while (i > 0) {
            --i;
            if (p[i] < bound[i]) {
                ++p[i];
                break;
            }
            p[i] = 0;
            if (i == 0) return;
        }
        if (p.empty()) return;
    }
}

CardinalityVector expand(const CardinalityVector& compact, std::span<const std::size_t> types, std::size_t u) {
    CardinalityVector k(u, 0);
    for (std::size_t t = 0; t < types.size(); ++t) k[types[t]] = compact[t];
    return k;
}

}  // namespace wfomc
