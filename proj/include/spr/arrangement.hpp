#pragma once

#include "spr/partition.hpp"
#include "spr/rational.hpp"

#include <string>
#include <vector>

namespace spr {

// Union of linear subspaces of a common dimension inside Q^ambient, each
// given by a basis (rows). The symmetry group acts by permuting ambient
// coordinates and permutes the components.
struct Arrangement {
    int ambient = 0;
    int comp_dim = 0;
    std::vector<std::vector<std::vector<Rat>>> components; // comp -> basis rows
    std::vector<std::vector<int>> symmetry;                // ambient permutations
};

// Z_lambda in t_lambda x t: graphs {(x, wx)} over coset representatives
// w in S_n/S_lambda; the symmetry is W_lambda acting on the first factor.
Arrangement build_Z(const Partition& lambda, int n, int n_bound = 6);
// S_lambda = S_n . t_lambda in t: subspaces w t_lambda, w in S_n/H_lambda.
Arrangement build_S(const Partition& lambda, int n, int n_bound = 6);

long z_component_count_formula(const Partition& lambda, int n);  // n! / prod(lambda_k!)
long s_component_count_formula(const Partition& lambda, int n);  // n! / |H_lambda|

// Dimension of the degree-d part of the coordinate ring of the reduced
// union, as the rank of the exact evaluation map of all degree-d monomials
// on a deterministic symmetric point set. Two disjoint prime pools must
// agree; one retry with fresh pools, then a hard error.
struct GradedDimResult {
    int value = 0;
    bool regenerated = false; // first pool pair disagreed
};
GradedDimResult graded_dim(const Arrangement& arr, int d, int d_bound = 6);
// Rank of the symmetry-averaging projector on the evaluation image.
GradedDimResult invariant_graded_dim(const Arrangement& arr, int d, int d_bound = 6);

// For all orbit pairs and all w: exact containment t_lambda c w t_mu must
// force lambda >= mu in dominance.
struct ContainmentReport {
    int n = 0;
    long containments_found = 0;
    bool implication_holds = false;
};
ContainmentReport containment_dominance_check(int n);

struct EqualPartsRow {
    int d = 0;
    int dim_S = 0;
    int dim_Z_inv = 0;
    bool equal = false;
};

struct EqualPartsReport {
    Partition lambda;
    int n = 0;
    long z_bar_components = 0; // components of Z/W = |S_n / H_lambda|
    long s_components = 0;
    bool component_counts_agree = false;
    std::vector<EqualPartsRow> rows;
    bool all_equal = true;
};

// Compares graded_dim(S_lambda, d) with invariant_graded_dim(Z_lambda, d)
// for d <= dmax. When all parts of lambda are equal the projection between
// the two quotients is an isomorphism, so every degree must match; for
// other lambda the rows simply report what was found.
EqualPartsReport equal_parts_check(const Partition& lambda, int n, int dmax);

} // namespace spr
