#pragma once

#include "spr/rational.hpp"

#include <vector>

namespace spr {

// Q(zeta_m) realized as Q[x] / Phi_m(x); zeta is the class of x.
// Elements are coefficient vectors of length deg Phi_m = phi(m).
struct CycloField {
    int m = 1;
    int degree = 1;
    std::vector<Rat> modulus; // Phi_m, monic, size degree+1
};

CycloField make_cyclo_field(int m);

using CycloNum = std::vector<Rat>;

CycloNum cyclo_zero(const CycloField& F);
CycloNum cyclo_one(const CycloField& F);
CycloNum cyclo_rat(const CycloField& F, const Rat& r);
CycloNum cyclo_zeta_pow(const CycloField& F, int k); // zeta^k, k may be negative

bool cyclo_is_zero(const CycloNum& a);
CycloNum cyclo_add(const CycloNum& a, const CycloNum& b);
CycloNum cyclo_sub(const CycloNum& a, const CycloNum& b);
CycloNum cyclo_neg(const CycloNum& a);
CycloNum cyclo_mul(const CycloField& F, const CycloNum& a, const CycloNum& b);
CycloNum cyclo_inv(const CycloField& F, const CycloNum& a);

// If a is some power zeta^k, returns k in [0, m); otherwise -1.
int cyclo_as_zeta_power(const CycloField& F, const CycloNum& a);

using CycloVec = std::vector<CycloNum>;
using CycloMat = std::vector<CycloVec>; // row-major

int cyclo_rank(const CycloField& F, CycloMat mat);
// Basis of the right kernel of mat (vectors of length = column count).
std::vector<CycloVec> cyclo_kernel(const CycloField& F, CycloMat mat);
// True if v lies in the span of the given (row) vectors.
bool cyclo_in_span(const CycloField& F, const std::vector<CycloVec>& span, const CycloVec& v);

} // namespace spr
