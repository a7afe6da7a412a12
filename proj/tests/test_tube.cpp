#include "doctest.h"
#include "wpc/tube.hpp"

using namespace wpc;

TEST_CASE("action consistency constraints") {
    CHECK_NOTHROW((TubeAction{4, 2, 2}.validate()));
    CHECK_NOTHROW((TubeAction{1, 5, 1}.validate()));
    CHECK_NOTHROW((TubeAction{6, 4, 3}.validate()));
    CHECK_THROWS_AS((TubeAction{4, 2, 3}.validate()), Error);    // k does not divide p
    CHECK_THROWS_AS((TubeAction{4, 2, 1}.validate()), Error);    // p does not divide n*k
    CHECK_THROWS_AS((TubeAction{0, 1, 1}.validate()), Error);
    CHECK_THROWS_AS((TubeAction{1, 0, 1}.validate()), Error);
    CHECK_THROWS_AS((TubeAction{1, 1, 0}.validate()), Error);
    try {
        TubeAction{4, 2, 3}.validate();
    } catch (const Error& e) {
        CHECK(e.code() == "invalid_action");
    }
}

TEST_CASE("fixed tubes in closed form") {
    auto parts = [](const TubeAction& a) { return tube_quotient(a).parts; };
    using P = std::vector<std::pair<long long, long long>>;

    // rotation by the half turn on a rank-4 tube, group of order 2:
    // one tube of rank 2
    CHECK(parts({4, 2, 2}) == P{{2, 1}});
    // trivial action: n copies of the same tube collapse rank-preservingly
    CHECK(parts({3, 1, 3}) == P{{3, 1}});
    // free rotation of a homogeneous tube: n tubes of rank 1
    CHECK(parts({1, 5, 1}) == P{{1, 5}});
    // order-6 group acting through rotation by 3 on rank 6: 3 tubes of rank 3
    CHECK(parts({6, 6, 3}) == P{{3, 3}});
    CHECK(parts({12, 4, 3}) == P{{3, 1}});
    CHECK(parts({2, 8, 2}) == P{{2, 8}});
}

TEST_CASE("orbit-quiver measurement agrees with the closed form") {
    for (long long p = 1; p <= 12; p++)
        for (long long n = 1; n <= 24; n++)
            for (long long k = 1; k <= p; k++) {
                if (p % k != 0 || (n * k) % p != 0)
                    continue;
                TubeAction a{p, n, k};
                INFO("p=", p, " n=", n, " k=", k);
                CHECK(tube_quotient(a) == tube_quotient_oracle(a));
            }
}
