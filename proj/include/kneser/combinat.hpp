#pragma once

// Exact combinatorial arithmetic: binomials, falling-factorial ratios,
// lex/colex ranking of k-subsets, and the size-parameter algebra.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace kneser {

using Int = mpz_class;
using Rat = mpq_class;

// k-subset of [n], elements 1-based in I/O, stored as a 256-bit mask
// (bit i-1 <-> element i).
struct SubsetCode {
    static constexpr int max_ground = 256;

    std::array<std::uint64_t, 4> w{};
    int n = 0;

    SubsetCode() = default;
    explicit SubsetCode(int ground) : n(ground) {
        if (ground < 0 || ground > max_ground)
            throw std::invalid_argument("SubsetCode: ground set size out of range");
    }
    SubsetCode(int ground, const std::vector<int>& elems) : SubsetCode(ground) {
        for (int e : elems) insert(e);
    }

    void insert(int e) {
        if (e < 1 || e > n) throw std::invalid_argument("SubsetCode: element out of [n]");
        w[static_cast<std::size_t>(e - 1) >> 6] |= std::uint64_t{1} << ((e - 1) & 63);
    }
    void erase(int e) {
        w[static_cast<std::size_t>(e - 1) >> 6] &= ~(std::uint64_t{1} << ((e - 1) & 63));
    }
    bool contains(int e) const {
        if (e < 1 || e > n) return false;
        return (w[static_cast<std::size_t>(e - 1) >> 6] >> ((e - 1) & 63)) & 1;
    }
    int popcount() const {
        int c = 0;
        for (auto x : w) c += __builtin_popcountll(x);
        return c;
    }
    bool disjoint(const SubsetCode& o) const {
        return ((w[0] & o.w[0]) | (w[1] & o.w[1]) | (w[2] & o.w[2]) | (w[3] & o.w[3])) == 0;
    }
    bool intersects(const SubsetCode& o) const { return !disjoint(o); }

    // colex order on k-subsets coincides with numeric order of the masks
    bool operator<(const SubsetCode& o) const {
        for (int i = 3; i >= 0; --i)
            if (w[i] != o.w[i]) return w[i] < o.w[i];
        return false;
    }
    bool operator==(const SubsetCode& o) const { return w == o.w && n == o.n; }

    std::vector<int> elements() const {
        std::vector<int> out;
        for (int i = 0; i < 4; ++i) {
            std::uint64_t x = w[i];
            while (x) {
                int b = __builtin_ctzll(x);
                out.push_back(64 * i + b + 1);
                x &= x - 1;
            }
        }
        return out;
    }
    std::string str() const;
};

enum class Order { lex, colex };

// C(n, k); 0 when k > n or k < 0. Exact for n up to at least 1e6.
Int binom(long n, long k);

// p^{falling i} = k^{falling i} / n^{falling i}, the probability that i fixed
// distinct elements all lie in a uniform random k-subset of [n].
Rat falling_ratio(long n, long k, long i);

// rank/unrank bijections onto {0, ..., C(n,k)-1}.
// lex comparator: min(A delta B) in A  =>  A first.
Int rank_subset(Order order, const SubsetCode& a);
SubsetCode unrank_subset(Order order, int n, int k, const Int& rank);

// (m, s, lambda) with |F| = C(n,k) - C(n-s,k) + (lambda-s) C(n-s-1,k-1),
// lambda exact rational.
struct SizeParameter {
    Int m;
    long s = 0;
    Rat lambda;
};

// Unique decomposition with s maximal such that m >= C(n,k) - C(n-s,k);
// lambda in [s, s+1) except at the full family.
SizeParameter size_parameter(long n, long k, const Int& m);

// Inverse of size_parameter: the family cardinality of Eq.-style (s, lambda).
Int count_from_lambda(long n, long k, long s, const Rat& lambda);

}  // namespace kneser
