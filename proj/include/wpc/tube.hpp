#ifndef WPC_TUBE_HPP
#define WPC_TUBE_HPP

#include <utility>
#include <vector>

#include "wpc/errors.hpp"

namespace wpc {

// A finite abelian group of order n acting on a stable tube of rank p, with
// image of the rotation character generated by the k-th rotation power
// (k minimal). Consistency demands k | p (the image is a subgroup of the
// rank-p rotation cycle) and p | n k (the image order p/k divides n).
struct TubeAction {
    long long rank = 1;        // p
    long long group_order = 1; // n
    long long image_k = 1;     // k

    void validate() const {
        if (rank < 1 || group_order < 1 || image_k < 1)
            throw invalid_action("tube action needs rank, order, k >= 1");
        if (rank % image_k != 0)
            throw invalid_action("k must divide the tube rank");
        if ((group_order * image_k) % rank != 0)
            throw invalid_action("rank must divide n*k (image order must divide n)");
    }
};

// Multiset of tubes: (rank, count) pairs, ranks distinct and ascending.
struct TubeDecomposition {
    std::vector<std::pair<long long, long long>> parts;

    bool operator==(const TubeDecomposition&) const = default;
};

// Closed form: the fixed-point category of the action is nk/p tubes of
// rank k.
TubeDecomposition tube_quotient(const TubeAction& a);

// Independent route: build the orbit quiver explicitly. Vertices are pairs
// (orbit of the rank-p cycle under rotation by k, simple character of the
// stabilizer); arrows descend from i -> i-1. The components of that quiver
// are counted and measured structurally (each must come out a cycle), never
// via the closed form above.
TubeDecomposition tube_quotient_oracle(const TubeAction& a);

} // namespace wpc

#endif
