#include "kneser/combinat.hpp"

#include <sstream>

namespace kneser {

std::string SubsetCode::str() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int e : elements()) {
        if (!first) os << ',';
        os << e;
        first = false;
    }
    os << '}';
    return os.str();
}

Int binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int z;
    mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return z;
}

Rat falling_ratio(long n, long k, long i) {
    if (n <= 0 || k > n) throw std::invalid_argument("falling_ratio: need 0 < n, k <= n");
    if (i < 0 || i > k) throw std::invalid_argument("falling_ratio: need 0 <= i <= k");
    Rat r = 1;
    for (long j = 0; j < i; ++j) r *= Rat(k - j, n - j);
    r.canonicalize();
    return r;
}

Int rank_subset(Order order, const SubsetCode& a) {
    const std::vector<int> el = a.elements();
    const int k = static_cast<int>(el.size());
    Int r = 0;
    if (order == Order::colex) {
        for (int i = 0; i < k; ++i) r += binom(el[static_cast<std::size_t>(i)] - 1, i + 1);
    } else {
        // count lex-smaller sets: first differing position
        int prev = 0;
        for (int i = 0; i < k; ++i) {
            for (int c = prev + 1; c < el[static_cast<std::size_t>(i)]; ++c)
                r += binom(a.n - c, k - i - 1);
            prev = el[static_cast<std::size_t>(i)];
        }
    }
    return r;
}

SubsetCode unrank_subset(Order order, int n, int k, const Int& rank) {
    if (rank < 0 || rank >= binom(n, k))
        throw std::out_of_range("unrank_subset: rank out of range");
    SubsetCode a(n);
    Int r = rank;
    if (order == Order::colex) {
        for (int i = k; i >= 1; --i) {
            // largest c with C(c-1, i) <= r
            int c = i;  // C(i-1, i) = 0 <= r always
            while (c < n && binom(c, i) <= r) ++c;
            r -= binom(c - 1, i);
            a.insert(c);
        }
    } else {
        int prev = 0;
        for (int i = 0; i < k; ++i) {
            int c = prev + 1;
            while (true) {
                Int block = binom(n - c, k - i - 1);
                if (r < block) break;
                r -= block;
                ++c;
            }
            a.insert(c);
            prev = c;
        }
    }
    return a;
}

Int count_from_lambda(long n, long k, long s, const Rat& lambda) {
    Rat m = Rat(binom(n, k)) - Rat(binom(n - s, k)) + (lambda - s) * Rat(binom(n - s - 1, k - 1));
    m.canonicalize();
    if (m.get_den() != 1)
        throw std::invalid_argument("count_from_lambda: non-integral family size");
    return m.get_num();
}

SizeParameter size_parameter(long n, long k, const Int& m) {
    if (m < 0 || m > binom(n, k)) throw std::out_of_range("size_parameter: m out of range");
    const Int full = binom(n, k);
    long s = 0;
    while (m >= full - binom(n - s - 1, k) && binom(n - s - 1, k) != binom(n - s, k)) ++s;
    SizeParameter sp;
    sp.m = m;
    sp.s = s;
    Int excess = m - (full - binom(n - s, k));
    Int den = binom(n - s - 1, k - 1);
    if (den == 0) {
        if (excess != 0) throw std::logic_error("size_parameter: internal decomposition error");
        sp.lambda = s;
    } else {
        sp.lambda = Rat(s) + Rat(excess) / Rat(den);
        sp.lambda.canonicalize();
    }
    return sp;
}

}  // namespace kneser
