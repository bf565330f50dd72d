#pragma once

// Builders for the named families: unions of stars, the explicit
// threshold construction, the seeded random construction, and order segments.

#include <cstdint>
#include <optional>

#include "kneser/family.hpp"

namespace kneser {

struct ConstructionSpec {
    int n = 0, k = 0, s = 0;
    Rat lambda;  // in [s, s+1], target size from the size-parameter identity must be integral
    std::optional<std::uint64_t> seed;  // random construction only
};

// {A : A cap S nonempty}; size C(n,k) - C(n-s,k),
// max degree C(n-k,k) - C(n-k-s+1,k).
Family union_of_stars(int n, int k, const SubsetCode& s);

// Core part {X : |X cap [s+1]| >= 2} plus {X : |X cap [s+1]| = 1, X subset [t]}
// with t the least integer satisfying C(t-s-1,k-1) >= (lambda/(s+1)) C(n-s-1,k-1),
// trimmed to the exact target size. Requires n >= 12ks.
struct ExplicitFamily {
    Family family;
    int t = 0;
};
ExplicitFamily explicit_family(const ConstructionSpec& spec);

// Core part plus each singleton-intersection set independently with
// probability lambda/(s+1), seeded; undersized draws retry with seed+1,
// oversized draws are trimmed. Deterministic given (spec, seed).
Family random_family(const ConstructionSpec& spec);

// First m sets of C([n],k) in the chosen order.
Family order_segment(Order order, int n, int k, const Int& m);

}  // namespace kneser
