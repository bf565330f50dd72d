#include "kneser/bounds.hpp"

#include <stdexcept>

namespace kneser {

BoundReport main_lower_bound(long n, long k, long s, const Rat& lambda, bool force) {
    if (lambda < s || lambda > s + 1)
        throw std::invalid_argument("main_lower_bound: lambda outside [s, s+1]");
    if (n < 2 * k + 1) throw std::invalid_argument("main_lower_bound: n >= 2k+1 required");
    BoundReport r;
    r.name = "main_lower_bound";
    r.hypothesis = "n >= 10000 s^2 k";
    r.hypothesis_ok = n >= 10000 * s * s * k;
    r.forced = force && !r.hypothesis_ok;
    const Rat p(k, n);
    const Rat coef(binom(n - k - 1, k - 1));
    const Rat s3p = s * s * s * p;
    r.value = RootVal(coef * (Rat(s * lambda) / Rat(s + 1) - 11 * s3p), -11 * coef, s3p);
    return r;
}

BoundReport construction_upper_bound(long n, long k, long s, const Rat& lambda, bool force) {
    if (lambda < s || lambda > s + 1)
        throw std::invalid_argument("construction_upper_bound: lambda outside [s, s+1]");
    BoundReport r;
    r.name = "construction_upper_bound";
    r.hypothesis = "n >= 12 k s";
    r.hypothesis_ok = n >= 12 * k * s;
    if (!r.hypothesis_ok && !force)
        throw std::invalid_argument("construction_upper_bound: hypothesis n >= 12ks violated");
    r.forced = !r.hypothesis_ok;
    const Rat p(k, n);
    r.value = RootVal((Rat(s * lambda) / Rat(s + 1) + 4 * s * p) * Rat(binom(n - k - 1, k - 1)));
    return r;
}

Rat random_expected_degree(long n, long k, long s, const Rat& lambda) {
    Rat v = Rat(s) * lambda / Rat(s + 1) * Rat(binom(n - k - s, k - 1));
    for (long i = 2; i <= s; ++i) v += Rat(binom(s, i) * binom(n - k - s, k - i));
    v.canonicalize();
    return v;
}

Int stars_max_degree(long n, long k, long s) {
    if (n < 2 * k || s < 1) throw std::invalid_argument("stars_max_degree: n >= 2k, s >= 1 required");
    return binom(n - k, k) - binom(n - k - s + 1, k);
}

BoundReport threshold_evaluator(ThresholdKind kind, long n, long k, long s, const Rat& lambda,
                                const Rat& c0) {
    const Rat p(k, n);
    const Rat base = lambda / Rat(s + 1) - Rat(s * s + 4 * s) * p;
    BoundReport r;
    if (kind == ThresholdKind::extlem3) {
        if (c0 <= 0) throw std::invalid_argument("threshold_evaluator: c0 must be positive");
        r.name = "extlem3_threshold";
        r.hypothesis = "n >= 12 s k";
        r.hypothesis_ok = n >= 12 * s * k;
        r.value = RootVal(base, Rat(-1), 2 * (s + 1) * p / c0);
    } else {
        r.name = "manylem3_threshold";
        r.hypothesis = "n >= 100 s^2 k";
        r.hypothesis_ok = n >= 100 * s * s * k;
        r.value = RootVal(base, Rat(-1), 40 * (s + 1) * p);
    }
    return r;
}

BoundReport binomratio_report(long n, long m, long k) {
    if (!(k <= m && m <= n)) throw std::invalid_argument("binomratio_report: requires k <= m <= n");
    BoundReport r;
    r.name = "binomratio";
    r.hypothesis = "k <= m <= n";
    r.hypothesis_ok = true;
    Rat lhs = Rat(binom(m, k)) / Rat(binom(n, k));
    lhs.canonicalize();
    Rat rhs = 1 - Rat(k * (n - m), n - k + 1);
    rhs.canonicalize();
    r.value = RootVal(lhs);
    r.comparison = Comparison{"1 - k(n-m)/(n-k+1)", rhs, lhs >= rhs};
    return r;
}

BoundReport convert_report(const Family& f, long s) {
    const long n = f.n(), k = f.k();
    if (!(s <= k && 2 * k <= n)) throw std::invalid_argument("convert_report: requires s <= k <= n/2");
    BoundReport r;
    r.name = "convert";
    r.hypothesis = "s <= k <= n/2";
    r.hypothesis_ok = true;

    SubsetCode one(f.n());
    one.insert(1);
    SubsetCode head(f.n());
    for (int e = 1; e <= s + 1; ++e) head.insert(e);

    Rat gamma = Rat(static_cast<long>(slice(f, one, one).family.size())) / Rat(binom(n - 1, k - 1));
    Rat gamma_t = Rat(static_cast<long>(slice(f, head, one).family.size())) / Rat(binom(n - s - 1, k - 1));
    gamma.canonicalize();
    gamma_t.canonicalize();

    const Rat sp = Rat(s * k, n);
    const bool holds = gamma_t + sp > gamma && gamma >= gamma_t * (1 - 2 * sp);
    r.value = RootVal(gamma_t);
    r.comparison = Comparison{"gamma~ + sp > gamma >= gamma~(1 - 2sp)", gamma, holds};
    return r;
}

bool almost_intersecting(const Family& f, long l) {
    return degree_profile(f).max_degree <= l;
}

}  // namespace kneser
