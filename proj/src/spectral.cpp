#include "kneser/spectral.hpp"

#include <algorithm>
#include <stdexcept>

namespace kneser {

SpectrumTable spectrum(long n, long k) {
    if (k < 0 || n < 2 * k + 1) throw std::invalid_argument("spectrum: requires n >= 2k+1, k >= 0");
    SpectrumTable t;
    for (long i = 0; i <= k; ++i) {
        Int ev = binom(n - k - i, k - i);
        if (i % 2) ev = -ev;
        t.eigenvalues.push_back(ev);
        t.multiplicities.push_back(binom(n, i) - binom(n, i - 1));
    }
    return t;
}

std::vector<Rat> adjacency_apply(int n, int k, const std::vector<Rat>& g) {
    if (n > 24) throw std::invalid_argument("adjacency_apply: n <= 24 required");
    const Family verts = full_family(n, k);
    if (g.size() != verts.size()) throw std::invalid_argument("adjacency_apply: bad vector length");
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    std::vector<Rat> z(std::size_t{1} << n);
    for (std::size_t i = 0; i < g.size(); ++i) z[verts[i].w[0]] = g[i];
    for (int b = 0; b < n; ++b) {
        const std::uint64_t bit = std::uint64_t{1} << b;
        for (std::uint64_t mask = bit; mask <= full; ++mask)
            if (mask & bit) z[mask] += z[mask ^ bit];
    }
    std::vector<Rat> out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) out[i] = z[full & ~verts[i].w[0]];
    return out;
}

namespace {

// solve sum_i lambda_i^j w[i] = m[j], j = 0..k, exact Gaussian elimination
std::vector<Rat> vandermonde_solve(const std::vector<Int>& lambda, const std::vector<Rat>& m) {
    const std::size_t d = lambda.size();
    std::vector<std::vector<Rat>> mat(d, std::vector<Rat>(d + 1));
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i) {
            Rat pw = 1;
            for (std::size_t t = 0; t < j; ++t) pw *= Rat(lambda[i]);
            mat[j][i] = pw;
        }
        mat[j][d] = m[j];
    }
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t piv = col;
        while (piv < d && mat[piv][col] == 0) ++piv;
        if (piv == d) throw std::logic_error("vandermonde_solve: singular system");
        std::swap(mat[piv], mat[col]);
        for (std::size_t r = 0; r < d; ++r) {
            if (r == col || mat[r][col] == 0) continue;
            Rat factor = mat[r][col] / mat[col][col];
            for (std::size_t c = col; c <= d; ++c) mat[r][c] -= factor * mat[col][c];
        }
    }
    std::vector<Rat> w(d);
    for (std::size_t i = 0; i < d; ++i) {
        w[i] = mat[i][d] / mat[i][i];
        w[i].canonicalize();
    }
    return w;
}

}  // namespace

std::vector<Rat> eigencomponent_norms(const Family& f) {
    const int n = f.n(), k = f.k();
    if (n < 2 * k + 1) throw std::invalid_argument("eigencomponent_norms: n >= 2k+1 required");
    if (n > 24) throw std::invalid_argument("eigencomponent_norms: n <= 24 required");
    const Family verts = full_family(n, k);
    std::vector<Rat> ind(verts.size(), Rat(0));
    for (std::size_t i = 0; i < verts.size(); ++i)
        if (f.contains(verts[i])) ind[i] = 1;

    std::vector<Rat> moments;
    std::vector<Rat> g = ind;
    for (int j = 0; j <= k; ++j) {
        Rat m = 0;
        for (std::size_t i = 0; i < verts.size(); ++i) m += ind[i] * g[i];
        m.canonicalize();
        moments.push_back(m);
        if (j < k) g = adjacency_apply(n, k, g);
    }
    auto w = vandermonde_solve(spectrum(n, k).eigenvalues, moments);
    for (const auto& x : w)
        if (x < 0) throw std::logic_error("eigencomponent_norms: negative squared norm");
    return w;
}

SpectralProfile linear_profile(const Family& f, bool with_eigennorms) {
    const int n = f.n(), k = f.k();
    if (f.empty()) throw std::invalid_argument("linear_profile: empty family");
    if (k < 1 || n < 2 * k + 1) throw std::invalid_argument("linear_profile: requires k >= 1, n >= 2k+1");

    SpectralProfile p;
    p.n = n;
    p.k = k;
    p.size = static_cast<long>(f.size());
    p.alpha = Rat(p.size) / Rat(binom(n, k));
    p.alpha.canonicalize();
    p.gamma = star_densities(f);
    p.gamma_max = *std::max_element(p.gamma.begin(), p.gamma.end());

    const Rat scale = Rat(n - 1, n - k);
    Rat sum_a_sq = 0;
    for (const auto& g : p.gamma) {
        Rat ai = scale * (g - p.alpha);
        ai.canonicalize();
        sum_a_sq += ai * ai;
        p.a.push_back(ai);
    }
    // eta * alpha = E(f_1^2) = (sum a_i^2) (p - p^{falling 2});
    // for k = 1 two distinct elements never lie in the same set, p^{falling 2} = 0
    const Rat pr = Rat(k, n);
    const Rat p2 = (k >= 2) ? falling_ratio(n, k, 2) : Rat(0);
    p.eta = sum_a_sq * (pr - p2) / p.alpha;
    p.eta.canonicalize();

    if (with_eigennorms && n <= 24) {
        p.eigennorm_sq = eigencomponent_norms(f);
        Rat eta2 = p.eigennorm_sq[1] / Rat(p.size);
        eta2.canonicalize();
        if (eta2 != p.eta) throw std::logic_error("linear_profile: eta mismatch with eigencomponent norms");
    }
    return p;
}

GammamaxVerdict check_gammamax(const SpectralProfile& p) {
    const Rat scale = Rat(p.n - 1, p.n - p.k);
    GammamaxVerdict v;
    v.lhs = p.eta * p.eta * p.eta;
    v.rhs = scale * scale * scale * p.gamma_max * p.gamma_max + 3 * scale * scale * p.eta * p.alpha;
    v.lhs.canonicalize();
    v.rhs.canonicalize();
    v.holds = v.lhs <= v.rhs;
    return v;
}

Rat thirdorder_bound(const SpectralProfile& p) {
    const Rat r = Rat(p.k, p.n - p.k);
    Rat b = (p.alpha - r * (p.eta + r * r)) * Rat(binom(p.n - p.k, p.k));
    b.canonicalize();
    return b;
}

std::pair<MixingBound, MixingBound> mixing_bounds(const Rat& gamma, const Rat& beta, long n, long k) {
    if (n < 2 * k + 1) throw std::invalid_argument("mixing_bounds: n >= 2k+1 required");
    if (gamma < 0 || gamma > 1 || beta < 0 || beta > 1)
        throw std::invalid_argument("mixing_bounds: densities must lie in [0,1]");
    const Rat r = Rat(k, n - k);
    MixingBound first, second;
    if (gamma == 0) {
        first.vacuous = true;
    } else {
        const Rat deg(binom(n - k, k));
        first.value = RootVal(deg * beta, -deg * r, beta / gamma);
    }
    if (beta == 0) {
        second.vacuous = true;
    } else {
        const Rat deg(binom(n - k - 1, k - 1));
        second.value = RootVal(deg * gamma, -deg * r, gamma * (1 - gamma) / beta);
    }
    return {first, second};
}

Rat singular_ratio_bound(long n, long k, long l) {
    if (!(0 <= k && k <= l && 2 * l <= n))
        throw std::invalid_argument("singular_ratio_bound: requires 0 <= k <= l <= n/2");
    if (k == 0) return Rat(0);
    Rat r(k, n - l);
    r.canonicalize();
    return r;
}

std::vector<Rat> bipartite_singular_sq(int n, int k, int l) {
    if (!(0 <= k && k <= l && k + l <= n))
        throw std::invalid_argument("bipartite_singular_sq: requires 0 <= k <= l, k+l <= n");
    const Family us = full_family(n, k);
    const Family vs = full_family(n, l);

    std::vector<Rat> out;
    for (int i = 0; i <= k; ++i) {
        // test vector in the level-i eigenspace: push the alternating tensor on
        // {1..2i} up to l-sets by averaging over contained i-sets
        std::vector<Rat> v(vs.size(), Rat(0));
        const Family isets = full_family(n, i);
        std::vector<std::pair<SubsetCode, int>> support;  // (i-set, sign)
        for (const auto& I : isets.members()) {
            int sign = 1;
            bool ok = true;
            for (int j = 1; j <= i; ++j) {
                const bool lo = I.contains(2 * j - 1), hi = I.contains(2 * j);
                if (lo == hi) { ok = false; break; }
                if (hi) sign = -sign;
            }
            if (ok) {
                for (int e : I.elements())
                    if (e > 2 * i) { ok = false; break; }
            }
            if (ok) support.emplace_back(I, sign);
        }
        for (std::size_t vi = 0; vi < vs.size(); ++vi) {
            Rat sum = 0;
            for (const auto& [I, sign] : support) {
                bool contained = true;
                for (int e : I.elements())
                    if (!vs[vi].contains(e)) { contained = false; break; }
                if (contained) sum += sign;
            }
            v[vi] = sum;
        }

        // w = B^T B v must equal sigma_i^2 v
        std::vector<Rat> u(us.size(), Rat(0));
        for (std::size_t ui = 0; ui < us.size(); ++ui)
            for (std::size_t vi = 0; vi < vs.size(); ++vi)
                if (us[ui].disjoint(vs[vi])) u[ui] += v[vi];
        std::vector<Rat> w(vs.size(), Rat(0));
        for (std::size_t vi = 0; vi < vs.size(); ++vi)
            for (std::size_t ui = 0; ui < us.size(); ++ui)
                if (us[ui].disjoint(vs[vi])) w[vi] += u[ui];

        Rat sigma_sq = 0;
        bool found = false;
        for (std::size_t vi = 0; vi < vs.size(); ++vi) {
            if (v[vi] != 0) {
                Rat ratio = w[vi] / v[vi];
                ratio.canonicalize();
                if (!found) {
                    sigma_sq = ratio;
                    found = true;
                } else if (ratio != sigma_sq) {
                    throw std::logic_error("bipartite_singular_sq: test vector is not an eigenvector");
                }
            } else if (w[vi] != 0) {
                throw std::logic_error("bipartite_singular_sq: test vector is not an eigenvector");
            }
        }
        if (!found) throw std::logic_error("bipartite_singular_sq: zero test vector");
        out.push_back(sigma_sq);
    }
    return out;
}

}  // namespace kneser
