#pragma once

// Closed-form Kneser spectra, eigencomponent norms of family indicators,
// the linear profile (a_i, eta), and the mixing / density inequality checkers.

#include <vector>

#include "kneser/exactval.hpp"
#include "kneser/family.hpp"

namespace kneser {

// Eigenvalues (-1)^i C(n-k-i, k-i) with multiplicities C(n,i) - C(n,i-1),
// i = 0..k; strictly decreasing in absolute value for n >= 2k+1.
struct SpectrumTable {
    std::vector<Int> eigenvalues;
    std::vector<Int> multiplicities;
};
SpectrumTable spectrum(long n, long k);

// (Ag)(A) = sum over B disjoint from A of g(B); vectors indexed by colex rank
// over C([n], k). Requires n <= 24 (2^n scratch).
std::vector<Rat> adjacency_apply(int n, int k, const std::vector<Rat>& g);

// ||f_i||^2 for i = 0..k via adjacency moments and an exact Vandermonde solve.
std::vector<Rat> eigencomponent_norms(const Family& f);

struct SpectralProfile {
    int n = 0, k = 0;
    Int size;
    Rat alpha;
    std::vector<Rat> gamma;  // star densities, index i-1 <-> element i
    Rat gamma_max;
    std::vector<Rat> a;  // linear coefficients a_i = ((n-1)/(n-k)) (gamma_i - alpha)
    Rat eta;             // ||f_1||^2 / ||f||^2
    std::vector<Rat> eigennorm_sq;  // k+1 entries when n <= 24, else empty
};

// Requires n >= 2k+1, k >= 1, F nonempty.
SpectralProfile linear_profile(const Family& f, bool with_eigennorms = true);

// eta^3 <= ((n-1)/(n-k))^3 gamma_max^2 + 3 ((n-1)/(n-k))^2 eta alpha
struct GammamaxVerdict {
    Rat lhs, rhs;
    bool holds = false;
};
GammamaxVerdict check_gammamax(const SpectralProfile& p);

// (alpha - (k/(n-k)) (eta + (k/(n-k))^2)) C(n-k,k); a lower bound on 2e/|F|.
Rat thirdorder_bound(const SpectralProfile& p);

// Star/complement mixing bounds: given gamma = |C|/C(n-1,k-1) for
// C = F_{x}^{x} and beta = |B|/C(n-1,k) for B = F_{x}^{empty},
//   e(C,B)/|C| >= C(n-k,k)   (beta  - (k/(n-k)) sqrt(beta/gamma))     [gamma>0]
//   e(C,B)/|B| >= C(n-k-1,k-1)(gamma - (k/(n-k)) sqrt(gamma(1-gamma)/beta)) [beta>0]
struct MixingBound {
    bool vacuous = false;
    RootVal value;
};
std::pair<MixingBound, MixingBound> mixing_bounds(const Rat& gamma, const Rat& beta, long n, long k);

// k/(n-l), the singular-ratio bound for the bipartite Kneser graph between
// C([n],k) and C([n],l).
Rat singular_ratio_bound(long n, long k, long l);

// Exact squared singular values of the bipartite Kneser graph (desk-scale
// oracle; requires k <= l, k + l <= n, and small C(n,l)). Entry i corresponds
// to the eigenspace of level i, i = 0..k, in decreasing order.
std::vector<Rat> bipartite_singular_sq(int n, int k, int l);

}  // namespace kneser
