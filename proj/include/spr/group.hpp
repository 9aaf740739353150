#pragma once

#include "spr/cyclotomic.hpp"
#include "spr/partition.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace spr {

// Element of G(m,p,n): colors z in (Z/m)^n and a permutation sigma of
// {0..n-1}, acting on vectors by (g.x)_i = zeta^{z_i} x_{sigma^{-1}(i)}.
// Composition is (z;s)(z';s') = (z + s.z'; ss') with (ss')(i) = s(s'(i)).
struct MonoElem {
    std::vector<int> z;
    std::vector<int> sigma;

    bool operator==(const MonoElem&) const = default;
    std::string to_string() const;
};

struct ConjClass {
    int rep = 0;              // index of a representative
    std::vector<int> members; // sorted element indices
};

class Group {
  public:
    // Throws on p not dividing m or when the order exceeds the budget.
    static Group build(int m, int p, int n, long element_budget = 200000);

    int m() const { return m_; }
    int p() const { return p_; }
    int n() const { return n_; }
    long order() const { return static_cast<long>(elements_.size()); }
    const std::vector<MonoElem>& elements() const { return elements_; }
    const MonoElem& element(int i) const { return elements_[i]; }
    const std::vector<int>& generators() const { return generators_; }
    const CycloField& field() const { return field_; }

    int index_of(const MonoElem& e) const; // -1 if absent
    bool contains(const MonoElem& e) const { return index_of(e) >= 0; }

    MonoElem compose(const MonoElem& a, const MonoElem& b) const;
    MonoElem inverse(const MonoElem& a) const;
    MonoElem identity() const;
    int compose_idx(int a, int b) const;
    int inverse_idx(int a) const;

    // exact action on vectors over Q(zeta_m)
    CycloVec act(const MonoElem& g, const CycloVec& x) const;

    const std::vector<ConjClass>& conjugacy_classes() const;
    int class_of(int element_index) const;

    // cycles of sigma with the accumulated color of each cycle
    static std::vector<std::pair<std::vector<int>, int>> colored_cycles(const MonoElem& g, int m);
    // conjugacy invariant for p = 1: multiset of (length, color)
    std::vector<std::pair<int, int>> colored_partition(const MonoElem& g) const;

    int fixed_space_dim(const MonoElem& g) const; // trivial-color cycle count
    int fixed_space_dim_linalg(const MonoElem& g) const; // independent route
    CycloVec fixed_vector_for_cycle(const MonoElem& g, const std::vector<int>& cycle) const;
    std::vector<CycloVec> fixed_space(const MonoElem& g) const;

    std::vector<int> centralizer(int g) const;
    std::vector<int> pointwise_stabilizer(const std::vector<CycloVec>& basis) const;
    std::vector<int> subgroup_closure(const std::vector<int>& generators) const;
    std::vector<int> small_generating_set(const std::vector<int>& subgroup) const;
    std::vector<int> normalizer(const std::vector<int>& subgroup) const;

    std::string descriptor() const; // e.g. "G(4,2,5)", "B3", "A2"

  private:
    int m_ = 1, p_ = 1, n_ = 1;
    std::vector<MonoElem> elements_;
    std::unordered_map<std::uint64_t, int> index_;
    std::vector<int> generators_;
    CycloField field_;
    mutable std::vector<ConjClass> classes_;
    mutable std::vector<int> class_of_;

    std::uint64_t key(const MonoElem& e) const;
};

struct StarResult {
    bool holds = false;
    long normalizer_order = 0;
    long product_order = 0; // |C(g) H_g|
};

// (*) for g: N_G(H_g) == C(g) H_g, tested by exact order count.
StarResult star_check(const Group& G, int g);
// Independent route: g and xgx^{-1} conjugate inside H_g for all x in N(H_g).
bool star_check_conjugacy_route(const Group& G, int g);

struct GroupStarReport {
    std::string group;
    std::vector<int> failing_class_reps; // element indices, one per failing class
    bool all_pass() const { return failing_class_reps.empty(); }
};

GroupStarReport star_check_group(const Group& G);

// V^g/C(g) smoothness via the reflection-generation criterion applied to the
// image of C(g) in GL(V^g).
bool smooth_check(const Group& G, int g);

struct GroupSmoothReport {
    std::string group;
    std::vector<int> failing_class_reps;
    bool all_pass() const { return failing_class_reps.empty(); }
};

GroupSmoothReport smooth_check_group(const Group& G);

// Signed conjugacy label for G(2,1,n) and G(2,2,n): positive / negative cycle
// types, plus a brute-force split tag for the degenerate type-D classes.
struct SignedClassLabel {
    Partition positive;
    Partition negative;
    std::optional<int> split_tag;

    bool operator==(const SignedClassLabel&) const = default;
    auto operator<=>(const SignedClassLabel&) const = default;
    std::string to_string() const;
};

SignedClassLabel signed_class_label(const Group& G, int g);

struct ConjugacyIdentityReport {
    long lhs = 0; // sum over classes of |C(h) \ (G/H)^h|
    long rhs = 0; // |H| - 1
    bool equal() const { return lhs == rhs; }
};

// H given by element indices; must be an abelian subgroup.
ConjugacyIdentityReport conjugacy_identity_check(const Group& G, const std::vector<int>& H);

// All abelian subgroups, each a sorted list of element indices.
std::vector<std::vector<int>> abelian_subgroups(const Group& G);

// Descriptor strings: "G(m,p,n)", "A<k>" (Weyl group of type A_k acting on
// k+1 coordinates), "B<k>", "D<k>".
Group group_from_descriptor(const std::string& descriptor, long element_budget = 200000);

} // namespace spr
