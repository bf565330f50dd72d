#include "doctest.h"
#include "kneser/combinat.hpp"

#include <random>

using namespace kneser;

TEST_CASE("binom small and boundary values") {
    CHECK(binom(5, 2) == 10);
    CHECK(binom(4, 0) == 1);
    CHECK(binom(24, 2) == 276);
    CHECK(binom(3, 5) == 0);
    CHECK(binom(7, -1) == 0);
    CHECK(binom(0, 0) == 1);
    CHECK(binom(1000000, 2) == Int("499999500000"));
}

TEST_CASE("Pascal identity up to n = 200") {
    for (long n = 1; n <= 200; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k));
}

TEST_CASE("Vandermonde split of C(n-k-1, k-1)") {
    for (long k = 1; k <= 12; ++k)
        for (long s = 1; s <= k; ++s)
            for (long n = 2 * k + s; n <= 100; ++n) {
                Int sum = 0;
                for (long i = 0; i < s; ++i) sum += binom(s - 1, i) * binom(n - k - s, k - i - 1);
                CHECK(sum == binom(n - k - 1, k - 1));
            }
}

TEST_CASE("falling_ratio values and bounds") {
    CHECK(falling_ratio(5, 2, 2) == Rat(1, 10));
    CHECK(falling_ratio(9, 4, 0) == 1);
    CHECK(falling_ratio(9, 4, 1) == Rat(4, 9));
    CHECK_THROWS_AS(falling_ratio(9, 4, 5), std::invalid_argument);
    // p^{falling i} <= p^i
    for (long n : {7, 11, 20})
        for (long k = 1; k <= n / 2; ++k)
            for (long i = 0; i <= k; ++i) {
                Rat p(k, n);
                Rat pow = 1;
                for (long j = 0; j < i; ++j) pow *= p;
                CHECK(falling_ratio(n, k, i) <= pow);
            }
}

TEST_CASE("SubsetCode basics") {
    SubsetCode a(5, {1, 3});
    CHECK(a.popcount() == 2);
    CHECK(a.contains(1));
    CHECK(a.contains(3));
    CHECK_FALSE(a.contains(2));
    CHECK(a.elements() == std::vector<int>{1, 3});
    SubsetCode b(5, {2, 4});
    CHECK(a.disjoint(b));
    a.insert(4);
    CHECK(a.intersects(b));
    a.erase(4);
    CHECK(a.disjoint(b));
    CHECK_THROWS_AS(SubsetCode(300), std::invalid_argument);
    CHECK_THROWS_AS(SubsetCode(5, {6}), std::invalid_argument);
}

TEST_CASE("lex and colex rank examples") {
    CHECK(unrank_subset(Order::lex, 5, 2, 0).elements() == std::vector<int>{1, 2});
    CHECK(unrank_subset(Order::lex, 5, 2, 4).elements() == std::vector<int>{2, 3});
    CHECK(unrank_subset(Order::colex, 5, 2, 0).elements() == std::vector<int>{1, 2});
    CHECK(unrank_subset(Order::colex, 5, 2, 2).elements() == std::vector<int>{2, 3});
}

TEST_CASE("rank and unrank are inverse bijections") {
    for (auto [n, k] : {std::pair{5, 2}, {7, 3}, {10, 5}, {12, 4}, {14, 7}}) {
        Int total = binom(n, k);
        SubsetCode prev;
        for (Int r = 0; r < total; ++r) {
            for (Order o : {Order::lex, Order::colex}) {
                SubsetCode a = unrank_subset(o, n, k, r);
                CHECK(a.popcount() == k);
                CHECK(rank_subset(o, a) == r);
            }
            // colex unrank at rank r is the r-th smallest mask
            SubsetCode c = unrank_subset(Order::colex, n, k, r);
            if (r > 0) CHECK(prev < c);
            prev = c;
        }
    }
    // sampled ranks at a larger size
    std::mt19937_64 rng(42);
    Int total = binom(20, 10);
    for (int t = 0; t < 500; ++t) {
        Int r = Int(static_cast<unsigned long>(rng() % 184756));
        for (Order o : {Order::lex, Order::colex})
            CHECK(rank_subset(o, unrank_subset(o, 20, 10, r)) == r);
    }
}

TEST_CASE("size_parameter pinned examples") {
    auto sp = size_parameter(5, 2, 4);
    CHECK(sp.s == 1);
    CHECK(sp.lambda == 1);
    sp = size_parameter(5, 2, 5);
    CHECK(sp.s == 1);
    CHECK(sp.lambda == Rat(4, 3));
    sp = size_parameter(5, 2, 0);
    CHECK(sp.s == 0);
    CHECK(sp.lambda == 0);
}

TEST_CASE("size_parameter round-trip and size sandwich") {
    for (auto [n, k] : {std::pair{5, 2}, {10, 5}, {12, 4}, {16, 3}, {20, 4}}) {
        Int total = binom(n, k);
        for (Int m = 0; m <= total; ++m) {
            auto sp = size_parameter(n, k, m);
            CHECK(sp.m == m);
            CHECK(sp.lambda >= sp.s);
            if (m < total) CHECK(sp.lambda < sp.s + 1);
            CHECK(count_from_lambda(n, k, sp.s, sp.lambda) == m);
            // lambda C(n-1,k-1) - C(s+1,2) C(n-2,k-2) <= m <= lambda C(n-1,k-1)
            Rat upper = sp.lambda * Rat(binom(n - 1, k - 1));
            Rat lower = upper - Rat(binom(sp.s + 1, 2) * binom(n - 2, k - 2));
            CHECK(Rat(m) <= upper);
            CHECK(Rat(m) >= lower);
        }
    }
}

TEST_CASE("count_from_lambda rejects non-integral sizes") {
    CHECK(count_from_lambda(5, 2, 1, Rat(4, 3)) == 5);
    CHECK_THROWS_AS(count_from_lambda(5, 2, 1, Rat(5, 4)), std::invalid_argument);
}
