#include "doctest.h"
#include "kneser/spectral.hpp"

#include <random>

using namespace kneser;

namespace {

Family star1(int n, int k) { return sets_meeting(n, k, SubsetCode(n, {1})); }

Family random_subfamily(const Family& all, std::mt19937_64& rng, bool nonempty = false) {
    std::vector<SubsetCode> m;
    for (const auto& a : all.members())
        if (rng() & 1) m.push_back(a);
    if (nonempty && m.empty()) m.push_back(all[rng() % all.size()]);
    return Family(all.n(), all.k(), std::move(m));
}

}  // namespace

TEST_CASE("spectrum closed forms") {
    auto s = spectrum(5, 2);
    CHECK(s.eigenvalues == std::vector<Int>{3, -2, 1});
    CHECK(s.multiplicities == std::vector<Int>{1, 4, 5});
    s = spectrum(7, 3);
    CHECK(s.eigenvalues == std::vector<Int>{4, -3, 2, -1});
    CHECK(s.multiplicities == std::vector<Int>{1, 6, 14, 14});
    s = spectrum(9, 0);
    CHECK(s.eigenvalues == std::vector<Int>{1});
    CHECK(s.multiplicities == std::vector<Int>{1});
    CHECK_THROWS_AS(spectrum(4, 2), std::invalid_argument);

    for (long n = 1; n <= 15; ++n)
        for (long k = 0; 2 * k + 1 <= n; ++k) {
            auto t = spectrum(n, k);
            Int total = 0;
            for (std::size_t i = 0; i < t.eigenvalues.size(); ++i) {
                total += t.multiplicities[i];
                if (i > 0) CHECK(abs(t.eigenvalues[i]) < abs(t.eigenvalues[i - 1]));
            }
            CHECK(total == binom(n, k));
        }
}

TEST_CASE("adjacency_apply pinned values") {
    std::vector<Rat> ones(10, 1);
    for (const Rat& v : adjacency_apply(5, 2, ones)) CHECK(v == 3);

    // indicator of {1,2}: image is 1 exactly on the three disjoint pairs
    Family all = full_family(5, 2);
    std::vector<Rat> g(10, 0);
    SubsetCode e12(5, {1, 2});
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] == e12) g[i] = 1;
    auto img = adjacency_apply(5, 2, g);
    for (std::size_t i = 0; i < all.size(); ++i)
        CHECK(img[i] == (all[i].disjoint(e12) ? 1 : 0));

    // star indicator has image 2 at {2,3}
    std::vector<Rat> h(10, 0);
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i].contains(1)) h[i] = 1;
    auto img2 = adjacency_apply(5, 2, h);
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] == SubsetCode(5, {2, 3})) CHECK(img2[i] == 2);

    CHECK_THROWS_AS(adjacency_apply(5, 2, std::vector<Rat>(9, 0)), std::invalid_argument);
}

TEST_CASE("eigencomponent norms pinned examples") {
    CHECK(eigencomponent_norms(full_family(5, 2)) == std::vector<Rat>{10, 0, 0});
    CHECK(eigencomponent_norms(star1(5, 2)) == std::vector<Rat>{Rat(8, 5), Rat(12, 5), 0});
    CHECK(eigencomponent_norms(Family(5, 2)) == std::vector<Rat>{0, 0, 0});
}

TEST_CASE("moment identity on random families") {
    std::mt19937_64 rng(19);
    for (auto [n, k] : {std::pair{5, 2}, {7, 3}}) {
        const Family all = full_family(n, k);
        auto spec = spectrum(n, k);
        for (int t = 0; t < 40; ++t) {
            Family f = random_subfamily(all, rng);
            auto norms = eigencomponent_norms(f);
            Rat total = 0;
            Rat m1 = 0;
            for (std::size_t i = 0; i < norms.size(); ++i) {
                CHECK(norms[i] >= 0);
                total += norms[i];
                m1 += Rat(spec.eigenvalues[i]) * norms[i];
            }
            CHECK(total == Rat(static_cast<long>(f.size())));
            CHECK(m1 == Rat(2) * Rat(degree_profile(f).edge_count));
        }
    }
}

TEST_CASE("linear profile pinned examples") {
    auto p = linear_profile(star1(5, 2));
    CHECK(p.alpha == Rat(2, 5));
    CHECK(p.a == std::vector<Rat>{Rat(4, 5), Rat(-1, 5), Rat(-1, 5), Rat(-1, 5), Rat(-1, 5)});
    CHECK(p.eta == Rat(3, 5));
    CHECK(p.gamma_max == 1);
    CHECK(p.eigennorm_sq == std::vector<Rat>{Rat(8, 5), Rat(12, 5), 0});

    CHECK(linear_profile(full_family(7, 3)).eta == 0);

    std::vector<SubsetCode> m;
    for (int j = 2; j <= 5; ++j) m.emplace_back(5, std::vector<int>{1, j});
    m.emplace_back(5, std::vector<int>{2, 3});
    auto q = linear_profile(Family(5, 2, std::move(m)));
    CHECK(q.alpha == Rat(1, 2));
    CHECK(q.gamma == std::vector<Rat>{1, Rat(1, 2), Rat(1, 2), Rat(1, 4), Rat(1, 4)});

    CHECK_THROWS_AS(linear_profile(Family(5, 2)), std::invalid_argument);
}

TEST_CASE("linear profile properties on random families") {
    std::mt19937_64 rng(23);
    const Family all = full_family(7, 3);
    for (int t = 0; t < 60; ++t) {
        Family f = random_subfamily(all, rng, true);
        auto p = linear_profile(f);
        Rat asum = 0;
        for (std::size_t i = 0; i < p.a.size(); ++i) {
            asum += p.a[i];
            Rat expect = Rat(6) / Rat(4) * (p.gamma[i] - p.alpha);
            expect.canonicalize();
            CHECK(p.a[i] == expect);
        }
        CHECK(asum == 0);
        CHECK(p.eta >= 0);
        CHECK(p.eta <= 1);
        Rat eta_direct = p.eigennorm_sq[1] / Rat(static_cast<long>(f.size()));
        eta_direct.canonicalize();
        CHECK(p.eta == eta_direct);

        auto gm = check_gammamax(p);
        CHECK(gm.holds);
        Rat avg = Rat(2) * Rat(degree_profile(f).edge_count) / Rat(static_cast<long>(f.size()));
        CHECK(avg >= thirdorder_bound(p));
    }
}

TEST_CASE("thirdorder bound pinned values") {
    CHECK(thirdorder_bound(linear_profile(full_family(5, 2))) == Rat(19, 9));
    Rat star_bound = thirdorder_bound(linear_profile(star1(5, 2)));
    CHECK(star_bound < 0);  // vacuous for the (intersecting) star
}

TEST_CASE("mixing bounds degenerate and pinned cases") {
    auto [first, second] = mixing_bounds(Rat(1), Rat(1), 7, 3);
    CHECK_FALSE(second.vacuous);
    CHECK(second.value.cmp(Rat(binom(3, 2))) == 0);

    auto [f0, s0] = mixing_bounds(Rat(1, 2), Rat(0), 7, 3);
    CHECK(s0.vacuous);
    CHECK(f0.value <= Rat(0));
    auto [f1, s1] = mixing_bounds(Rat(0), Rat(1, 2), 7, 3);
    CHECK(f1.vacuous);

    // gamma = 1 kills the (1 - gamma) error term
    auto [fx, sx] = mixing_bounds(Rat(1), Rat(1, 6), 5, 2);
    CHECK(sx.value.cmp(Rat(2)) == 0);
}

TEST_CASE("singular ratio bound values") {
    CHECK(singular_ratio_bound(5, 2, 2) == Rat(2, 3));
    CHECK(singular_ratio_bound(7, 3, 3) == Rat(3, 4));
    CHECK(singular_ratio_bound(9, 0, 4) == 0);
    CHECK_THROWS_AS(singular_ratio_bound(7, 4, 3), std::invalid_argument);
}

TEST_CASE("bipartite singular values") {
    // closed form sigma_i^2 = C(n-k-i, l-i) C(n-l-i, k-i), decreasing in i
    for (auto [n, k, l] : {std::tuple{5, 2, 2}, {6, 2, 2}, {7, 3, 3}, {6, 2, 3},
                           {8, 3, 4}, {9, 2, 4}, {7, 1, 3}}) {
        auto sq = bipartite_singular_sq(n, k, l);
        REQUIRE(sq.size() == static_cast<std::size_t>(k + 1));
        for (int i = 0; i <= k; ++i) {
            CHECK(sq[i] == Rat(binom(n - k - i, l - i) * binom(n - l - i, k - i)));
            if (i > 0) CHECK(sq[i] < sq[i - 1]);
        }
        if (k >= 1) {
            // exact ratio identity: sigma_2^2 (n-k)(n-l) = sigma_1^2 k l
            CHECK(sq[1] * Rat((n - k) * (n - l)) == sq[0] * Rat(k * l));
            // consequence: sigma_2/sigma_1 <= l/(n-k), with k/(n-l) exact when k = l
            CHECK(sq[1] * Rat((n - k) * (n - k)) <= sq[0] * Rat(l * l));
            if (k == l) {
                Rat c = singular_ratio_bound(n, k, l);
                CHECK(sq[1] == c * c * sq[0]);
            }
        }
    }
    // k = l specializes to the squared adjacency eigenvalues
    for (auto [n, k] : {std::pair{5, 2}, {7, 3}}) {
        auto sq = bipartite_singular_sq(n, k, k);
        auto s = spectrum(n, k);
        for (int i = 0; i <= k; ++i) CHECK(sq[i] == Rat(s.eigenvalues[i] * s.eigenvalues[i]));
    }
    CHECK_THROWS_AS(bipartite_singular_sq(5, 3, 2), std::invalid_argument);
}
