#include "kneser/family.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <istream>
#include <stdexcept>
#include <ostream>
#include <sstream>
#include <thread>

namespace kneser {

namespace {

int thread_limit() {
    if (const char* env = std::getenv("KNESER_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

void for_each_combination(const std::vector<int>& pool, int k,
                          const std::function<void(const std::vector<int>&)>& fn) {
    const int p = static_cast<int>(pool.size());
    if (k < 0 || k > p) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    std::vector<int> pick(static_cast<std::size_t>(k));
    while (true) {
        for (int i = 0; i < k; ++i)
            pick[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        fn(pick);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == p - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace

Family::Family(int n, int k, std::vector<SubsetCode> members) : n_(n), k_(k), members_(std::move(members)) {
    for (const auto& a : members_) {
        if (a.n != n_) throw std::invalid_argument("Family: member over wrong ground set");
        if (a.popcount() != k_) throw std::invalid_argument("Family: member of wrong size");
    }
    std::sort(members_.begin(), members_.end());
    for (std::size_t i = 1; i < members_.size(); ++i)
        if (members_[i] == members_[i - 1])
            throw std::invalid_argument("Family: duplicate member " + members_[i].str());
}

bool Family::contains(const SubsetCode& a) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), a);
    return it != members_.end() && *it == a;
}

Family Family::with_member(const SubsetCode& a) const {
    auto m = members_;
    m.push_back(a);
    return Family(n_, k_, std::move(m));
}

long degree_against(const Family& f, const SubsetCode& a) {
    long d = 0;
    for (const auto& b : f.members())
        if (a.disjoint(b)) ++d;
    return d;
}

static DegreeProfile degree_naive(const Family& f) {
    const auto& m = f.members();
    const std::size_t sz = m.size();
    DegreeProfile p;
    p.degrees.assign(sz, 0);

    const int nthreads = std::min<int>(thread_limit(), std::max<std::size_t>(sz / 64, 1));
    auto work = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            long d = 0;
            for (std::size_t j = 0; j < sz; ++j)
                if (m[i].disjoint(m[j])) ++d;
            p.degrees[i] = d;
        }
    };
    if (nthreads <= 1) {
        work(0, sz);
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (sz + static_cast<std::size_t>(nthreads) - 1) / static_cast<std::size_t>(nthreads);
        for (int t = 0; t < nthreads; ++t) {
            std::size_t lo = static_cast<std::size_t>(t) * chunk;
            std::size_t hi = std::min(sz, lo + chunk);
            if (lo < hi) pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    return p;
}

static DegreeProfile degree_zeta(const Family& f) {
    const int n = f.n();
    if (n > 28) throw std::invalid_argument("degree_profile: zeta strategy requires n <= 28");
    const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    std::vector<std::uint32_t> cnt(std::size_t{1} << n, 0);
    for (const auto& a : f.members()) ++cnt[a.w[0]];
    // sum over subsets: cnt[mask] = #members contained in mask
    for (int b = 0; b < n; ++b) {
        const std::uint64_t bit = std::uint64_t{1} << b;
        for (std::uint64_t mask = 0; mask <= full; ++mask)
            if (mask & bit) cnt[mask] += cnt[mask ^ bit];
    }
    DegreeProfile p;
    p.degrees.reserve(f.size());
    for (const auto& a : f.members())
        p.degrees.push_back(static_cast<long>(cnt[full & ~a.w[0]]));
    return p;
}

DegreeProfile degree_profile(const Family& f, DegreeStrategy strategy) {
    if (strategy == DegreeStrategy::automatic) {
        const int n = f.n();
        bool zeta_ok = n <= 24 && Int(static_cast<long>(f.size())) * n > (Int(1) << n);
        strategy = zeta_ok ? DegreeStrategy::zeta : DegreeStrategy::naive;
    }
    DegreeProfile p = (strategy == DegreeStrategy::zeta) ? degree_zeta(f) : degree_naive(f);
    Int sum = 0;
    long mx = 0;
    for (long d : p.degrees) {
        sum += d;
        mx = std::max(mx, d);
    }
    p.max_degree = mx;
    p.edge_count = sum / 2;
    return p;
}

SliceResult slice(const Family& f, const SubsetCode& j, const SubsetCode& i) {
    for (int e : i.elements())
        if (!j.contains(e)) throw std::invalid_argument("slice: I must be a subset of J");
    const int nj = j.popcount();
    const int n2 = f.n() - nj;
    const int k2 = f.k() - i.popcount();
    if (k2 < 0) throw std::invalid_argument("slice: |I| exceeds k");

    std::vector<int> labels;  // labels[new-1] = old element
    std::vector<int> remap(static_cast<std::size_t>(f.n()) + 1, 0);
    for (int e = 1; e <= f.n(); ++e)
        if (!j.contains(e)) {
            labels.push_back(e);
            remap[static_cast<std::size_t>(e)] = static_cast<int>(labels.size());
        }

    std::vector<SubsetCode> out;
    for (const auto& a : f.members()) {
        bool match = true;
        for (int e : j.elements())
            if (a.contains(e) != i.contains(e)) { match = false; break; }
        if (!match) continue;
        SubsetCode b(n2);
        for (int e : a.elements())
            if (!j.contains(e)) b.insert(remap[static_cast<std::size_t>(e)]);
        out.push_back(b);
    }
    return SliceResult{Family(n2, k2, std::move(out)), std::move(labels)};
}

Int bipartite_edge_count(const Family& f1, const Family& f2) {
    if (f1.n() != f2.n()) throw std::invalid_argument("bipartite_edge_count: mismatched ground sets");
    Int e = 0;
    for (const auto& a : f1.members())
        for (const auto& b : f2.members())
            if (a.disjoint(b)) ++e;
    return e;
}

std::vector<Rat> star_densities(const Family& f) {
    if (f.k() < 1) throw std::invalid_argument("star_densities: k >= 1 required");
    const Rat den(binom(f.n() - 1, f.k() - 1));
    std::vector<long> cnt(static_cast<std::size_t>(f.n()) + 1, 0);
    for (const auto& a : f.members())
        for (int e : a.elements()) ++cnt[static_cast<std::size_t>(e)];
    std::vector<Rat> g;
    g.reserve(static_cast<std::size_t>(f.n()));
    for (int e = 1; e <= f.n(); ++e) {
        Rat r = Rat(cnt[static_cast<std::size_t>(e)]) / den;
        r.canonicalize();
        g.push_back(r);
    }
    return g;
}

void write_family(std::ostream& os, const Family& f) {
    os << f.n() << ' ' << f.k() << ' ' << f.size() << '\n';
    for (const auto& a : f.members()) {
        bool first = true;
        for (int e : a.elements()) {
            if (!first) os << ' ';
            os << e;
            first = false;
        }
        os << '\n';
    }
}

Family read_family(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("family parse error: empty input");
    std::istringstream head(line);
    int n, k;
    std::size_t count;
    if (!(head >> n >> k >> count)) throw std::runtime_error("family parse error at line 1: bad header");
    std::vector<SubsetCode> members;
    members.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (!std::getline(is, line))
            throw std::runtime_error("family parse error at line " + std::to_string(i + 2) + ": missing member");
        std::istringstream ls(line);
        SubsetCode a(n);
        int prev = 0, e;
        for (int j = 0; j < k; ++j) {
            if (!(ls >> e) || e <= prev || e > n)
                throw std::runtime_error("family parse error at line " + std::to_string(i + 2) +
                                         ": expected " + std::to_string(k) + " increasing elements in [n]");
            a.insert(e);
            prev = e;
        }
        members.push_back(a);
    }
    return Family(n, k, std::move(members));
}

Family sets_meeting(int n, int k, const SubsetCode& s) {
    std::vector<int> inside = s.elements();
    std::vector<int> outside;
    for (int e = 1; e <= n; ++e)
        if (!s.contains(e)) outside.push_back(e);

    std::vector<SubsetCode> out;
    const int smax = std::min<int>(k, static_cast<int>(inside.size()));
    for (int t = 1; t <= smax; ++t) {
        for_each_combination(inside, t, [&](const std::vector<int>& in_part) {
            for_each_combination(outside, k - t, [&](const std::vector<int>& out_part) {
                SubsetCode a(n);
                for (int e : in_part) a.insert(e);
                for (int e : out_part) a.insert(e);
                out.push_back(a);
            });
        });
    }
    return Family(n, k, std::move(out));
}

Family full_family(int n, int k) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int e = 1; e <= n; ++e) pool[static_cast<std::size_t>(e - 1)] = e;
    std::vector<SubsetCode> out;
    for_each_combination(pool, k, [&](const std::vector<int>& pick) {
        out.push_back(SubsetCode(n, pick));
    });
    return Family(n, k, std::move(out));
}

}  // namespace kneser
