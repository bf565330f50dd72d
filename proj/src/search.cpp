#include "kneser/search.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "kneser/constructions.hpp"

namespace kneser {

namespace {

Int objective_of(const Family& f, Objective obj) {
    const DegreeProfile p = degree_profile(f);
    return obj == Objective::max_degree ? Int(p.max_degree) : p.edge_count;
}

// DFS state over the colex-ordered vertex list of C([n],k)
struct Searcher {
    const std::vector<SubsetCode>& verts;
    int n;
    long m;
    Objective obj;
    std::uint64_t nodes = 0;

    std::vector<std::size_t> chosen;
    std::vector<long> degs;  // degree of chosen[i] within the partial family
    long edges = 0;
    std::uint64_t used_mask = 0;
    int used_count = 0;

    Searcher(const std::vector<SubsetCode>& v, int n_, long m_, Objective o)
        : verts(v), n(n_), m(m_), obj(o) {}

    long partial_objective() const {
        if (obj == Objective::edge_count) return edges;
        long mx = 0;
        for (long d : degs) mx = std::max(mx, d);
        return mx;
    }

    void push(std::size_t v) {
        long d = 0;
        for (std::size_t i = 0; i < chosen.size(); ++i)
            if (verts[v].disjoint(verts[chosen[i]])) {
                ++degs[i];
                ++d;
            }
        chosen.push_back(v);
        degs.push_back(d);
        edges += d;
        ++nodes;
    }
    void pop() {
        std::size_t v = chosen.back();
        chosen.pop_back();
        edges -= degs.back();
        degs.pop_back();
        for (std::size_t i = 0; i < chosen.size(); ++i)
            if (verts[v].disjoint(verts[chosen[i]])) --degs[i];
    }

    // canonical augmentation: fresh elements must be exactly the smallest
    // unused labels, so used labels always form {1..used_count}
    bool canonical_ok(std::size_t v) const {
        const std::uint64_t mask = verts[v].w[0];
        const std::uint64_t fresh = mask & ~used_mask;
        const int f = __builtin_popcountll(fresh);
        const int u = used_count;
        if (u + f > 64) return false;
        const std::uint64_t want = (u + f == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (u + f)) - 1);
        return (mask | used_mask) == want;
    }

    // phase 1: optimum value over canonical representatives
    void search_value(std::size_t start, long& incumbent) {
        if (static_cast<long>(chosen.size()) == m) {
            incumbent = partial_objective();  // pruning guarantees strict improvement
            return;
        }
        const long need = m - static_cast<long>(chosen.size());
        for (std::size_t v = start; v + static_cast<std::size_t>(need) <= verts.size(); ++v) {
            if (!canonical_ok(v)) continue;
            const std::uint64_t saved_mask = used_mask;
            const int saved_count = used_count;
            push(v);
            used_mask |= verts[v].w[0];
            used_count = __builtin_popcountll(used_mask);
            if (partial_objective() < incumbent) search_value(v + 1, incumbent);
            pop();
            used_mask = saved_mask;
            used_count = saved_count;
        }
    }

    // phase 2: colex-least family attaining a known optimum, no symmetry pruning
    bool search_witness(std::size_t start, long optimum, std::vector<std::size_t>& out) {
        if (static_cast<long>(chosen.size()) == m) {
            if (partial_objective() == optimum) {
                out = chosen;
                return true;
            }
            return false;
        }
        const long need = m - static_cast<long>(chosen.size());
        for (std::size_t v = start; v + static_cast<std::size_t>(need) <= verts.size(); ++v) {
            push(v);
            if (partial_objective() <= optimum && search_witness(v + 1, optimum, out)) return true;
            pop();
            if (!out.empty()) return true;
        }
        return false;
    }

    // enumerate all canonical-branch optimal families
    void search_all_optimal(std::size_t start, long optimum, std::vector<std::vector<std::size_t>>& out) {
        if (static_cast<long>(chosen.size()) == m) {
            if (partial_objective() == optimum) out.push_back(chosen);
            return;
        }
        const long need = m - static_cast<long>(chosen.size());
        for (std::size_t v = start; v + static_cast<std::size_t>(need) <= verts.size(); ++v) {
            if (!canonical_ok(v)) continue;
            const std::uint64_t saved_mask = used_mask;
            const int saved_count = used_count;
            push(v);
            used_mask |= verts[v].w[0];
            used_count = __builtin_popcountll(used_mask);
            if (partial_objective() <= optimum) search_all_optimal(v + 1, optimum, out);
            pop();
            used_mask = saved_mask;
            used_count = saved_count;
        }
    }
};

Family family_from_indices(const std::vector<SubsetCode>& verts, const std::vector<std::size_t>& idx,
                           int n, int k) {
    std::vector<SubsetCode> members;
    members.reserve(idx.size());
    for (std::size_t i : idx) members.push_back(verts[i]);
    return Family(n, k, std::move(members));
}

// best available constructed family of size m: lex segment, union of stars
// when the size matches, explicit construction when its hypothesis holds
std::pair<Family, long> initial_incumbent(int n, int k, long m, Objective obj) {
    Family best = order_segment(Order::lex, n, k, m);
    long best_obj = objective_of(best, obj).get_si();

    for (int s = 1; s <= n; ++s) {
        if (binom(n, k) - binom(n - s, k) == m) {
            SubsetCode head(n);
            for (int e = 1; e <= s; ++e) head.insert(e);
            Family cand = union_of_stars(n, k, head);
            long o = objective_of(cand, obj).get_si();
            if (o < best_obj) {
                best = cand;
                best_obj = o;
            }
            break;
        }
    }
    try {
        const SizeParameter sp = size_parameter(n, k, m);
        ConstructionSpec cs;
        cs.n = n;
        cs.k = k;
        cs.s = static_cast<int>(sp.s);
        cs.lambda = sp.lambda;
        Family cand = explicit_family(cs).family;
        long o = objective_of(cand, obj).get_si();
        if (o < best_obj) {
            best = cand;
            best_obj = o;
        }
    } catch (const std::exception&) {
        // explicit construction unavailable at these parameters
    }
    return {best, best_obj};
}

}  // namespace

SearchResult exact_minimize(int n, int k, long m, Objective obj, SearchMode mode) {
    const Int total = binom(n, k);
    if (m < 1 || m > total) throw std::invalid_argument("exact_minimize: m out of range");
    const Family verts_f = full_family(n, k);
    const auto& verts = verts_f.members();

    SearchResult res;
    res.objective = obj;

    if (mode == SearchMode::exhaustive) {
        if (binom(total.get_si(), m) > 10000000)
            throw std::invalid_argument("exact_minimize: instance too large for exhaustive mode");
        const std::size_t N = verts.size();
        std::vector<std::size_t> idx(static_cast<std::size_t>(m));
        for (long i = 0; i < m; ++i) idx[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
        bool first = true;
        Int best;
        std::vector<std::size_t> best_idx;
        std::uint64_t nodes = 0;
        while (true) {
            ++nodes;
            Family f = family_from_indices(verts, idx, n, k);
            Int o = objective_of(f, obj);
            if (first || o < best) {
                best = o;
                best_idx = idx;
                first = false;
            }
            long i = m - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == N - static_cast<std::size_t>(m) + static_cast<std::size_t>(i)) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (long j = i + 1; j < m; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
        res.optimum = best;
        res.witness = family_from_indices(verts, best_idx, n, k);
        res.nodes_explored = nodes;
        res.proven_optimal = true;
        return res;
    }

    if (total > 36) throw std::invalid_argument("exact_minimize: C(n,k) <= 36 required for branch-and-bound");

    auto [inc_family, inc_obj] = initial_incumbent(n, k, m, obj);
    long incumbent = inc_obj + 1;  // search strictly below the constructed value
    Searcher s(verts, n, m, obj);
    s.search_value(0, incumbent);
    const long optimum = (incumbent == inc_obj + 1) ? inc_obj : incumbent;

    Searcher s2(verts, n, m, obj);
    std::vector<std::size_t> wit;
    s2.search_witness(0, optimum, wit);
    if (wit.empty()) throw std::logic_error("exact_minimize: witness reconstruction failed");

    res.optimum = optimum;
    res.witness = family_from_indices(verts, wit, n, k);
    res.nodes_explored = s.nodes + s2.nodes;
    res.proven_optimal = true;
    if (objective_of(res.witness, obj) != res.optimum)
        throw std::logic_error("exact_minimize: witness does not achieve the optimum");
    return res;
}

SearchResult local_search(int n, int k, long m, std::uint64_t seed, long iterations, Objective obj) {
    if (binom(n, k) > 1000000) throw std::invalid_argument("local_search: C(n,k) <= 1e6 required");
    auto [current, cur_obj_l] = initial_incumbent(n, k, m, obj);

    auto deg_sum = [](const Family& f) {
        const DegreeProfile p = degree_profile(f);
        long s = 0;
        for (long d : p.degrees) s += d;
        return s;
    };

    Int cur_obj(cur_obj_l);
    long cur_sum = deg_sum(current);

    const Family verts_f = full_family(n, k);
    std::vector<SubsetCode> outside;
    for (const auto& v : verts_f.members())
        if (!current.contains(v)) outside.push_back(v);

    std::mt19937_64 rng(seed);
    std::uint64_t nodes = 0;
    for (long it = 0; it < iterations && !outside.empty(); ++it) {
        std::size_t oi = static_cast<std::size_t>(rng() % current.size());
        std::size_t ii = static_cast<std::size_t>(rng() % outside.size());
        std::vector<SubsetCode> members = current.members();
        SubsetCode removed = members[oi];
        members[oi] = outside[ii];
        Family cand(n, k, std::move(members));
        ++nodes;
        Int o = objective_of(cand, obj);
        if (o < cur_obj || (o == cur_obj && deg_sum(cand) <= cur_sum)) {
            outside[ii] = removed;
            current = std::move(cand);
            cur_obj = o;
            cur_sum = deg_sum(current);
        }
    }

    SearchResult res;
    res.objective = obj;
    res.optimum = objective_of(current, obj);
    res.witness = current;
    res.nodes_explored = nodes;
    res.proven_optimal = false;
    return res;
}

MatchingResult greedy_matching(const Family& f) {
    if (f.empty()) throw std::invalid_argument("greedy_matching: empty family");
    MatchingResult out;
    Family cur = f;
    while (!cur.empty()) {
        const DegreeProfile p = degree_profile(cur);
        std::size_t best = 0;
        for (std::size_t i = 0; i < cur.size(); ++i)
            if (p.degrees[i] > p.degrees[best]) best = i;  // members colex-sorted, first max wins
        const SubsetCode v = cur[best];
        out.members.push_back(v);
        std::vector<SubsetCode> next;
        for (const auto& b : cur.members())
            if (v.disjoint(b)) next.push_back(b);
        cur = Family(f.n(), f.k(), std::move(next));
    }
    return out;
}

namespace {

long max_matching_rec(const std::vector<SubsetCode>& mem, std::size_t start, const SubsetCode& blocked) {
    long best = 0;
    for (std::size_t i = start; i < mem.size(); ++i) {
        if (!mem[i].disjoint(blocked)) continue;
        SubsetCode nb = blocked;
        for (int e : mem[i].elements()) nb.insert(e);
        best = std::max(best, 1 + max_matching_rec(mem, i + 1, nb));
    }
    return best;
}

}  // namespace

long max_matching_bruteforce(const Family& f) {
    if (f.size() > 64) throw std::invalid_argument("max_matching_bruteforce: family too large");
    return max_matching_rec(f.members(), 0, SubsetCode(f.n()));
}

namespace {

std::vector<long> canonical_rank_sequence(const Family& f) {
    std::vector<int> perm(static_cast<std::size_t>(f.n()));
    for (int i = 0; i < f.n(); ++i) perm[static_cast<std::size_t>(i)] = i + 1;
    std::vector<long> best;
    do {
        std::vector<long> ranks;
        ranks.reserve(f.size());
        for (const auto& a : f.members()) {
            SubsetCode b(f.n());
            for (int e : a.elements()) b.insert(perm[static_cast<std::size_t>(e - 1)]);
            ranks.push_back(rank_subset(Order::colex, b).get_si());
        }
        std::sort(ranks.begin(), ranks.end());
        if (best.empty() || ranks < best) best = ranks;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

ConjectureReport conjecture_reports(int n, int k, long m, Objective obj) {
    const SearchResult opt = exact_minimize(n, k, m, obj);

    ConjectureReport rep;
    rep.n = n;
    rep.k = k;
    rep.m = m;
    rep.objective = obj;
    rep.optimum = opt.optimum;
    const SizeParameter sp = size_parameter(n, k, m);
    rep.s = sp.s;
    rep.lambda = sp.lambda;
    rep.caveat =
        "conjecture hypotheses assume n sufficiently large compared to k and s; "
        "desk-scale verdicts are data points, not proofs";

    // enumerate optimal families up to ground-set relabeling
    const Family verts_f = full_family(n, k);
    Searcher s(verts_f.members(), n, m, obj);
    std::vector<std::vector<std::size_t>> raw;
    s.search_all_optimal(0, opt.optimum.get_si(), raw);
    std::map<std::vector<long>, Family> classes;
    for (const auto& idx : raw) {
        Family f = family_from_indices(verts_f.members(), idx, n, k);
        classes.emplace(canonical_rank_sequence(f), f);
    }
    rep.minimizer_classes = classes.size();

    // sparse-minimizer shape over every choice of s+1 stars; at the boundary
    // lambda = s the size is exactly that of s stars and the shape conditions
    // are read against s stars (the closed interval [s-1, s] viewpoint)
    const long t_stars = (rep.lambda == Rat(rep.s) && rep.s >= 1) ? rep.s : rep.s + 1;
    for (const auto& [key, f] : classes) {
        if (t_stars > n) break;
        std::vector<int> sel(static_cast<std::size_t>(t_stars));
        std::function<bool(std::size_t, int)> try_sets = [&](std::size_t pos, int lo) -> bool {
            if (pos == sel.size()) {
                SubsetCode tset(n);
                for (int e : sel) tset.insert(e);
                // (i) contained in the union of the chosen stars
                bool contained = true;
                for (const auto& a : f.members())
                    if (a.disjoint(tset)) { contained = false; break; }
                // (ii) contains every pairwise star intersection
                bool pairwise = true;
                for (std::size_t x = 0; x < sel.size() && pairwise; ++x)
                    for (std::size_t y = x + 1; y < sel.size() && pairwise; ++y) {
                        SubsetCode pair_set(n);
                        pair_set.insert(sel[x]);
                        pair_set.insert(sel[y]);
                        const Family pair_sets = sets_meeting(n, k, pair_set);
                        for (const auto& a : pair_sets.members()) {
                            if (a.contains(sel[x]) && a.contains(sel[y]) && !f.contains(a)) {
                                pairwise = false;
                                break;
                            }
                        }
                    }
                // (iii) slice sizes within 1 of each other
                bool balanced = true;
                std::vector<std::vector<SubsetCode>> slices;
                for (int e : sel) {
                    SubsetCode one(n);
                    one.insert(e);
                    slices.push_back(slice(f, tset, one).family.members());
                }
                for (std::size_t x = 0; x < slices.size() && balanced; ++x)
                    for (std::size_t y = x + 1; y < slices.size() && balanced; ++y) {
                        std::vector<SubsetCode> diff;
                        std::set_symmetric_difference(slices[x].begin(), slices[x].end(),
                                                      slices[y].begin(), slices[y].end(),
                                                      std::back_inserter(diff));
                        if (diff.size() > 1) balanced = false;
                    }
                if (contained) rep.sparse_i = true;
                if (contained && pairwise) rep.sparse_ii = true;
                if (contained && pairwise && balanced) rep.sparse_iii = true;
                return rep.sparse_iii;
            }
            for (int e = lo; e <= n; ++e) {
                sel[pos] = e;
                if (try_sets(pos + 1, e + 1)) return true;
            }
            return false;
        };
        if (try_sets(0, 1)) break;
    }
    rep.sparse_verdict = rep.sparse_iii ? "consistent" : "counterexample found";

    // dense regime: some minimizer inside C([t],k), t least with C(t,k) >= m
    rep.dense_regime = 2 * Int(m) >= binom(n, k);
    if (rep.dense_regime) {
        int t = k;
        while (binom(t, k) < m) ++t;
        rep.dense_t = t;
        for (const auto& [key, f] : classes) {
            bool inside = true;
            for (const auto& a : f.members())
                if (a.elements().back() > t) { inside = false; break; }
            if (inside) { rep.dense_contained = true; break; }
        }
        rep.dense_verdict = rep.dense_contained ? "consistent" : "counterexample found";
    } else {
        rep.dense_verdict = "instance outside conjecture hypotheses";
    }
    return rep;
}

}  // namespace kneser
