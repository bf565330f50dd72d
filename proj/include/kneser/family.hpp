#pragma once

// Set-family representation, induced Kneser degree/edge computation,
// slicing F_J^I, star densities and bipartite disjointness counts.

#include <iosfwd>
#include <vector>

#include "kneser/combinat.hpp"

namespace kneser {

enum class DegreeStrategy { automatic, naive, zeta };

struct DegreeProfile {
    std::vector<long> degrees;  // aligned with Family members
    long max_degree = 0;
    Int edge_count;
};

// Immutable family of k-subsets of [n], canonically sorted by colex rank.
class Family {
public:
    Family(int n, int k) : n_(n), k_(k) {}
    Family(int n, int k, std::vector<SubsetCode> members);

    int n() const { return n_; }
    int k() const { return k_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const std::vector<SubsetCode>& members() const { return members_; }
    const SubsetCode& operator[](std::size_t i) const { return members_[i]; }
    bool contains(const SubsetCode& a) const;

    Family with_member(const SubsetCode& a) const;

    SizeParameter size_param() const { return size_parameter(n_, k_, Int(static_cast<long>(size()))); }

private:
    int n_, k_;
    std::vector<SubsetCode> members_;
};

DegreeProfile degree_profile(const Family& f, DegreeStrategy strategy = DegreeStrategy::automatic);

// Member count disjoint from a fixed set (not necessarily a member).
long degree_against(const Family& f, const SubsetCode& a);

// F_J^I = {A \ J : A in F, A cap J = I}, re-indexed onto a contiguous
// ground set [n - |J|]; labels[new-1] = original element.
struct SliceResult {
    Family family;
    std::vector<int> labels;
};
SliceResult slice(const Family& f, const SubsetCode& j, const SubsetCode& i);

// |{(A,B) in F1 x F2 : A cap B = empty}| for families over the same ground set.
Int bipartite_edge_count(const Family& f1, const Family& f2);

// gamma_i = |F cap D_i| / C(n-1, k-1) for each i in [n].
std::vector<Rat> star_densities(const Family& f);

// Shared text format: "n k count" then count lines of k increasing 1-based
// elements. LF line endings.
void write_family(std::ostream& os, const Family& f);
Family read_family(std::istream& is);

// All k-subsets of [n] that meet s, in colex order.
Family sets_meeting(int n, int k, const SubsetCode& s);

// Full C([n], k).
Family full_family(int n, int k);

}  // namespace kneser
