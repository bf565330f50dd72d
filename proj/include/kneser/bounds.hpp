#pragma once

// Evaluators for the named degree bounds and auxiliary inequalities, each
// gated by the hypothesis of the theorem it comes from.

#include <optional>
#include <string>

#include "kneser/exactval.hpp"
#include "kneser/family.hpp"

namespace kneser {

struct Comparison {
    std::string quantity;
    Rat measured;
    bool holds = false;
};

struct BoundReport {
    std::string name;
    RootVal value;
    std::string hypothesis;
    bool hypothesis_ok = false;
    bool forced = false;  // evaluated outside the hypothesis range on request
    std::optional<Comparison> comparison;
};

// C(n-k-1,k-1) (s lambda/(s+1) - 11 (sqrt(s^3 p) + s^3 p)), p = k/n.
// Hypothesis: n >= 10000 s^2 k.
BoundReport main_lower_bound(long n, long k, long s, const Rat& lambda, bool force = false);

// (s lambda/(s+1) + 4 s p) C(n-k-1,k-1), exact. Hypothesis: n >= 12 k s
// (an error unless force is set).
BoundReport construction_upper_bound(long n, long k, long s, const Rat& lambda, bool force = false);

// (s lambda/(s+1)) C(n-k-s,k-1) + sum_{i=2}^{s} C(s,i) C(n-k-s,k-i).
Rat random_expected_degree(long n, long k, long s, const Rat& lambda);

// C(n-k,k) - C(n-k-s+1,k), the max degree of a union of s stars.
Int stars_max_degree(long n, long k, long s);

enum class ThresholdKind { extlem3, manylem3 };

// extlem3:  lambda/(s+1) - sqrt(2(s+1)p/c0) - (s^2+4s)p   [n >= 12 s k]
// manylem3: lambda/(s+1) - sqrt(40(s+1)p)   - (s^2+4s)p   [n >= 100 s^2 k]
BoundReport threshold_evaluator(ThresholdKind kind, long n, long k, long s, const Rat& lambda,
                                const Rat& c0 = Rat(1));

// C(m,k)/C(n,k) >= 1 - k(n-m)/(n-k+1), exact verdict.
BoundReport binomratio_report(long n, long m, long k);

// Sandwich gamma~ + sp > gamma >= gamma~ (1 - 2sp) where gamma is the star
// density of element 1 and gamma~ = |F^{1}_{[s+1]}| / C(n-s-1,k-1).
BoundReport convert_report(const Family& f, long s);

// Delta(F) <= l
bool almost_intersecting(const Family& f, long l);

}  // namespace kneser
