#include "doctest.h"
#include "kneser/constructions.hpp"

using namespace kneser;

namespace {

SubsetCode head(int n, int s) {
    SubsetCode c(n);
    for (int e = 1; e <= s; ++e) c.insert(e);
    return c;
}

}  // namespace

TEST_CASE("union_of_stars pinned examples") {
    Family f = union_of_stars(5, 2, head(5, 1));
    CHECK(f.size() == 4);
    CHECK(degree_profile(f).max_degree == 0);

    Family g = union_of_stars(9, 2, head(9, 2));
    CHECK(g.size() == 15);
    CHECK(degree_profile(g).max_degree == 6);

    Family h = union_of_stars(6, 2, head(6, 6));
    CHECK(h.size() == full_family(6, 2).size());
}

TEST_CASE("union_of_stars closed forms") {
    for (int s = 1; s <= 3; ++s)
        for (int k = 1; k <= 3; ++k)
            for (int n = 2 * k + s; n <= 14; ++n) {
                Family f = union_of_stars(n, k, head(n, s));
                CHECK(Int(static_cast<long>(f.size())) == binom(n, k) - binom(n - s, k));
                CHECK(Int(degree_profile(f).max_degree) ==
                      binom(n - k, k) - binom(n - k - s + 1, k));
            }
}

TEST_CASE("explicit construction pinned trace") {
    ConstructionSpec spec{24, 2, 1, Rat(3, 2), {}};
    auto [fam, t] = explicit_family(spec);
    CHECK(t == 19);
    CHECK(fam.size() == 34);
    CHECK(degree_profile(fam).max_degree == 16);
}

TEST_CASE("explicit construction boundary lambdas") {
    // lambda = s: union-of-s-stars size
    ConstructionSpec lo{26, 2, 1, Rat(1), {}};
    CHECK(Int(static_cast<long>(explicit_family(lo).family.size())) ==
          binom(26, 2) - binom(25, 2));

    // lambda = s+1: every set meeting [s+1], threshold at t = n
    ConstructionSpec hi{26, 2, 1, Rat(2), {}};
    auto [fam, t] = explicit_family(hi);
    CHECK(t == 26);
    Family expect = union_of_stars(26, 2, head(26, 2));
    CHECK(fam.members() == expect.members());

    CHECK_THROWS_AS(explicit_family(ConstructionSpec{20, 2, 1, Rat(3, 2), {}}),
                    std::invalid_argument);  // n < 12ks
    CHECK_THROWS_AS(explicit_family(ConstructionSpec{26, 2, 1, Rat(10, 7), {}}),
                    std::invalid_argument);  // non-integral target size
}

TEST_CASE("random construction determinism and limits") {
    // lambda = s+1 means probability 1: exactly the union of the s+1 head stars
    ConstructionSpec sure{24, 2, 1, Rat(2), 5};
    Family f = random_family(sure);
    Family expect = union_of_stars(24, 2, head(24, 2));
    CHECK(f.members() == expect.members());

    // size is always exact
    ConstructionSpec spec{24, 2, 1, Rat(1), 17};
    CHECK(Int(static_cast<long>(random_family(spec).size())) == binom(24, 2) - binom(23, 2));

    ConstructionSpec half{24, 2, 1, Rat(3, 2), 99};
    Family a = random_family(half);
    Family b = random_family(half);
    CHECK(a.members() == b.members());
    CHECK(a.size() == 34);

    ConstructionSpec other = half;
    other.seed = 100;
    Family c = random_family(other);
    CHECK(c.size() == 34);

    ConstructionSpec no_seed{24, 2, 1, Rat(3, 2), {}};
    CHECK_THROWS_AS(random_family(no_seed), std::invalid_argument);
}

TEST_CASE("order segments") {
    Family lex5 = order_segment(Order::lex, 5, 2, 5);
    Family expect(5, 2, {SubsetCode(5, {1, 2}), SubsetCode(5, {1, 3}), SubsetCode(5, {1, 4}),
                         SubsetCode(5, {1, 5}), SubsetCode(5, {2, 3})});
    CHECK(lex5.members() == expect.members());
    CHECK(degree_profile(lex5).edge_count == 2);

    // colex segment of size C(t,k) is exactly C([t],k)
    for (int t = 2; t <= 5; ++t) {
        Family seg = order_segment(Order::colex, 7, 2, binom(t, 2));
        for (const auto& a : seg.members())
            for (int e : a.elements()) CHECK(e <= t);
        CHECK(Int(static_cast<long>(seg.size())) == binom(t, 2));
    }

    CHECK(order_segment(Order::lex, 5, 2, 0).empty());
    CHECK_THROWS_AS(order_segment(Order::lex, 5, 2, 11), std::out_of_range);

    // lex lists all sets meeting [s] first
    for (int s = 1; s <= 3; ++s)
        for (auto [n, k] : {std::pair{6, 2}, {8, 3}}) {
            Int m = binom(n, k) - binom(n - s, k);
            Family seg = order_segment(Order::lex, n, k, m);
            Family stars = union_of_stars(n, k, head(n, s));
            CHECK(seg.members() == stars.members());
        }
}
