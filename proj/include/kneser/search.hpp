#pragma once

// Exact minimizer search over families of a fixed size (branch-and-bound with
// canonical-augmentation symmetry reduction, plus an exhaustive oracle), a
// swap-based local search, the greedy matching procedure, and conjecture
// report harnesses.

#include <cstdint>
#include <string>

#include "kneser/family.hpp"

namespace kneser {

enum class Objective { max_degree, edge_count };
enum class SearchMode { branch_and_bound, exhaustive };

struct SearchResult {
    Objective objective = Objective::max_degree;
    Int optimum;
    Family witness{0, 0};
    std::uint64_t nodes_explored = 0;
    bool proven_optimal = false;
};

// Minimum objective over all F subset C([n],k) with |F| = m; witness is the
// colex-least optimal family. branch_and_bound requires C(n,k) <= 36;
// exhaustive requires C(C(n,k), m) <= 1e7.
SearchResult exact_minimize(int n, int k, long m, Objective obj,
                            SearchMode mode = SearchMode::branch_and_bound);

// Single-swap descent from the explicit construction (when available) or the
// lex segment; deterministic given seed; never proven optimal.
SearchResult local_search(int n, int k, long m, std::uint64_t seed, long iterations,
                          Objective obj = Objective::max_degree);

struct MatchingResult {
    std::vector<SubsetCode> members;  // pairwise disjoint, in pick order
};

// Repeatedly pick a maximum-degree member (ties to lowest colex rank) and
// restrict to its neighbourhood.
MatchingResult greedy_matching(const Family& f);

// Exact maximum matching by exhaustive branching; oracle for tiny instances.
long max_matching_bruteforce(const Family& f);

struct ConjectureReport {
    int n = 0, k = 0;
    Int m;
    long s = 0;
    Rat lambda;
    Objective objective = Objective::max_degree;
    Int optimum;
    std::uint64_t minimizer_classes = 0;  // optimal families up to relabeling

    // sparse-minimizer shape: some minimizer contained in s+1 stars, containing
    // all pairwise star intersections, with near-equal slice sizes
    bool sparse_i = false, sparse_ii = false, sparse_iii = false;
    std::string sparse_verdict;

    bool dense_regime = false;  // m >= C(n,k)/2
    int dense_t = 0;            // least t with C(t,k) >= m
    bool dense_contained = false;
    std::string dense_verdict;

    std::string caveat;
};

ConjectureReport conjecture_reports(int n, int k, long m, Objective obj = Objective::max_degree);

}  // namespace kneser
