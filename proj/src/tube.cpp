#include "wpc/tube.hpp"

#include <map>
#include <numeric>
#include <vector>

namespace wpc {

TubeDecomposition tube_quotient(const TubeAction& a) {
    a.validate();
    TubeDecomposition d;
    d.parts.emplace_back(a.image_k, a.group_order * a.image_k / a.rank);
    return d;
}

TubeDecomposition tube_quotient_oracle(const TubeAction& a) {
    a.validate();
    const long long p = a.rank, n = a.group_order, k = a.image_k;

    // Orbits of rotation-by-k on the rank-p cycle: residues mod k (k | p).
    // Each orbit has p/k vertices, so its stabilizer in the acting group has
    // order s = n/(p/k) = nk/p, contributing s simple characters.
    const long long s = n * k / p;
    const long long nv = k * s;
    auto vid = [&](long long orbit, long long chr) { return orbit * s + chr; };

    // Arrows i -> i-1 descend to (orbit r, chr u) -> (orbit r-1 mod k, chr u).
    std::vector<long long> succ(static_cast<std::size_t>(nv));
    for (long long r = 0; r < k; r++)
        for (long long u = 0; u < s; u++)
            succ[static_cast<std::size_t>(vid(r, u))] = vid((r - 1 + k) % k, u);

    // The quiver has in/out degree one everywhere, so each component is a
    // cycle; measure them by following successors.
    std::vector<char> seen(static_cast<std::size_t>(nv), 0);
    std::map<long long, long long> count_by_rank;
    for (long long v = 0; v < nv; v++) {
        if (seen[static_cast<std::size_t>(v)])
            continue;
        long long len = 0, w = v;
        do {
            seen[static_cast<std::size_t>(w)] = 1;
            w = succ[static_cast<std::size_t>(w)];
            len++;
        } while (w != v);
        count_by_rank[len]++;
    }

    TubeDecomposition d;
    long long vertices = 0;
    for (auto [rank, count] : count_by_rank) {
        d.parts.emplace_back(rank, count);
        vertices += rank * count;
    }
    if (vertices != nv)
        throw internal_check("component vertex count mismatch in tube quiver");
    return d;
}

} // namespace wpc
