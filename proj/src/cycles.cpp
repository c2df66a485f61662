#include "coqla/cycles.hpp"

#include <algorithm>
#include <string>

#include "coqla/errors.hpp"

namespace coqla {

namespace {

// Orbit of `start` as c, s(c), s^2(c), ...
std::vector<std::size_t> orbit(std::span<const std::size_t> mapping, std::size_t start,
                               std::vector<bool>& seen) {
    std::vector<std::size_t> out;
    for (std::size_t c = start; !seen[c - 1]; c = mapping[c - 1]) {
        seen[c - 1] = true;
        out.push_back(c);
    }
    return out;
}

}  // namespace

CycleForm cycleDecompose(std::span<const std::size_t> mapping, std::size_t anchor,
                         CycleOrder order) {
    const std::size_t n = mapping.size();
    if (n == 0) throw NotBijective("empty permutation");
    std::vector<bool> hit(n, false);
    for (std::size_t v : mapping) {
        if (v < 1 || v > n || hit[v - 1])
            throw NotBijective("mapping is not a bijection on 1.." + std::to_string(n));
        hit[v - 1] = true;
    }
    if (anchor < 1 || anchor > n) throw IndexError("cycle anchor", anchor, n);

    CycleForm form;
    form.n = n;
    form.anchor = anchor;
    form.order = order;
    form.mapping.assign(mapping.begin(), mapping.end());

    // Each cycle is first collected as an orbit led by its anchor or minimum.
    std::vector<bool> seen(n, false);
    std::vector<std::vector<std::size_t>> orbits;
    orbits.push_back(orbit(mapping, anchor, seen));
    for (std::size_t m = 1; m <= n; ++m)
        if (!seen[m - 1]) orbits.push_back(orbit(mapping, m, seen));  // m is the orbit minimum

    form.cycleCount = orbits.size();
    form.sign = ((n - form.cycleCount) % 2 == 0) ? 1 : -1;

    if (order == CycleOrder::left) {
        form.cycles = std::move(orbits);
    } else {
        // Rotate each orbit so its leader is written last, then reverse the
        // cycle sequence so the anchor cycle ends the notation.
        for (auto& o : orbits) std::rotate(o.begin(), o.begin() + 1, o.end());
        form.cycles.assign(orbits.rbegin(), orbits.rend());
    }
    return form;
}

std::vector<std::pair<std::size_t, std::size_t>> CycleForm::factorChain() const {
    std::vector<std::pair<std::size_t, std::size_t>> chain;
    chain.reserve(n);
    for (const auto& cyc : cycles) {
        const std::size_t lead = (order == CycleOrder::left) ? cyc.front() : cyc.back();
        std::size_t c = lead;
        do {
            chain.emplace_back(c, mapping[c - 1]);
            c = mapping[c - 1];
        } while (c != lead);
    }
    return chain;
}

}  // namespace coqla
