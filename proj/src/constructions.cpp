#include "kneser/constructions.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace kneser {

Family union_of_stars(int n, int k, const SubsetCode& s) {
    if (k < 1) throw std::invalid_argument("union_of_stars: k >= 1 required");
    return sets_meeting(n, k, s);
}

namespace {

// all X with |X cap [s+1]| >= 2
std::vector<SubsetCode> core_part(int n, int k, int s) {
    SubsetCode head(n);
    for (int e = 1; e <= s + 1; ++e) head.insert(e);
    std::vector<SubsetCode> out;
    const Family meeting = sets_meeting(n, k, head);
    for (const auto& a : meeting.members()) {
        int hits = 0;
        for (int e = 1; e <= s + 1; ++e)
            if (a.contains(e)) ++hits;
        if (hits >= 2) out.push_back(a);
    }
    return out;
}

// singleton-intersection candidates X = {i} cup Y, Y subset [limit] \ [s+1],
// |Y| = k-1, listed per star, each star's list in colex order
std::vector<std::vector<SubsetCode>> singleton_candidates(int n, int k, int s, int limit) {
    std::vector<std::vector<SubsetCode>> stars(static_cast<std::size_t>(s) + 1);
    std::vector<int> pool;
    for (int e = s + 2; e <= limit; ++e) pool.push_back(e);
    for (int i = 1; i <= s + 1; ++i) {
        SubsetCode one(n);
        one.insert(i);
        // enumerate (k-1)-subsets of the pool, then sort colex
        std::vector<SubsetCode> list;
        std::vector<int> idx(static_cast<std::size_t>(k - 1));
        const int p = static_cast<int>(pool.size());
        if (k - 1 <= p) {
            for (int j = 0; j < k - 1; ++j) idx[static_cast<std::size_t>(j)] = j;
            while (true) {
                SubsetCode a = one;
                for (int v : idx) a.insert(pool[static_cast<std::size_t>(v)]);
                list.push_back(a);
                int j = k - 2;
                while (j >= 0 && idx[static_cast<std::size_t>(j)] == p - (k - 1) + j) --j;
                if (j < 0) break;
                ++idx[static_cast<std::size_t>(j)];
                for (int t = j + 1; t < k - 1; ++t)
                    idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
            }
        }
        std::sort(list.begin(), list.end());
        stars[static_cast<std::size_t>(i - 1)] = std::move(list);
    }
    return stars;
}

// remove largest-colex singleton members, round-robin across the s+1 stars so
// per-star counts stay within 1 of each other
void trim_round_robin(std::vector<std::vector<SubsetCode>>& stars, Int excess) {
    while (excess > 0) {
        std::size_t pick = 0;
        bool have = false;
        for (std::size_t i = 0; i < stars.size(); ++i) {
            if (stars[i].empty()) continue;
            if (!have || stars[i].size() > stars[pick].size() ||
                (stars[i].size() == stars[pick].size() && stars[pick].back() < stars[i].back())) {
                pick = i;
                have = true;
            }
        }
        if (!have) throw std::logic_error("trim: nothing left to remove");
        stars[pick].pop_back();
        --excess;
    }
}

Family assemble(int n, int k, const std::vector<SubsetCode>& core,
                const std::vector<std::vector<SubsetCode>>& stars) {
    std::vector<SubsetCode> members = core;
    for (const auto& st : stars) members.insert(members.end(), st.begin(), st.end());
    return Family(n, k, std::move(members));
}

}  // namespace

ExplicitFamily explicit_family(const ConstructionSpec& spec) {
    const int n = spec.n, k = spec.k, s = spec.s;
    if (n < 12 * k * s) throw std::invalid_argument("explicit_family: hypothesis n >= 12ks violated");
    if (spec.lambda < s || spec.lambda > s + 1)
        throw std::invalid_argument("explicit_family: lambda outside [s, s+1]");
    const Int m = count_from_lambda(n, k, s, spec.lambda);

    const Rat target = spec.lambda / Rat(s + 1) * Rat(binom(n - s - 1, k - 1));
    int t = s + 1;
    while (t < n && Rat(binom(t - s - 1, k - 1)) < target) ++t;

    auto core = core_part(n, k, s);
    auto stars = singleton_candidates(n, k, s, t);
    Int total = static_cast<long>(core.size());
    for (const auto& st : stars) total += static_cast<long>(st.size());
    if (total < m)
        throw std::logic_error("explicit_family: pre-trim size below target");
    trim_round_robin(stars, total - m);
    return ExplicitFamily{assemble(n, k, core, stars), t};
}

Family random_family(const ConstructionSpec& spec) {
    const int n = spec.n, k = spec.k, s = spec.s;
    if (!spec.seed) throw std::invalid_argument("random_family: seed required");
    if (spec.lambda < s || spec.lambda > s + 1)
        throw std::invalid_argument("random_family: lambda outside [s, s+1]");
    const Int m = count_from_lambda(n, k, s, spec.lambda);

    Rat prob = spec.lambda / Rat(s + 1);
    prob.canonicalize();
    const Int num = prob.get_num(), den = prob.get_den();

    const auto core = core_part(n, k, s);
    const auto candidates = singleton_candidates(n, k, s, n);

    for (std::uint64_t attempt = 0; attempt < 1000; ++attempt) {
        std::mt19937_64 rng(*spec.seed + attempt);
        std::vector<std::vector<SubsetCode>> stars(candidates.size());
        Int total = static_cast<long>(core.size());
        // candidates visited star-major, colex within each star; include each
        // with probability num/den by exact comparison against a 64-bit draw
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            for (const auto& a : candidates[i]) {
                Int draw(static_cast<unsigned long>(rng()));
                if (draw * den < (num << 64)) {
                    stars[i].push_back(a);
                    ++total;
                }
            }
        }
        if (total < m) continue;
        trim_round_robin(stars, total - m);
        return assemble(n, k, core, stars);
    }
    throw std::runtime_error("random_family: retry cap exceeded");
}

Family order_segment(Order order, int n, int k, const Int& m) {
    if (m < 0 || m > binom(n, k)) throw std::out_of_range("order_segment: m out of range");
    std::vector<SubsetCode> members;
    for (Int r = 0; r < m; ++r) members.push_back(unrank_subset(order, n, k, r));
    return Family(n, k, std::move(members));
}

}  // namespace kneser
