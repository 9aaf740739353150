#include "spr/cyclotomic.hpp"

#include <stdexcept>

namespace spr {

namespace {

using QPoly = std::vector<Rat>; // coefficient vector, low degree first

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    trim(c);
    return c;
}

// exact division, remainder must vanish
QPoly qp_div(QPoly a, const QPoly& b) {
    trim(a);
    QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    while (a.size() >= b.size() && !a.empty()) {
        Rat c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);
    }
    if (!a.empty()) throw std::logic_error("qp_div: nonzero remainder");
    return q;
}

QPoly qp_rem(QPoly a, const QPoly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rat c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);
    }
    return a;
}

QPoly cyclotomic_poly(int m) {
    // x^m - 1 divided by the product of Phi_d over proper divisors d of m
    QPoly num(m + 1);
    num[0] = -1;
    num[m] = 1;
    for (int d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        num = qp_div(std::move(num), cyclotomic_poly(d));
    }
    return num;
}

} // namespace

CycloField make_cyclo_field(int m) {
    if (m < 1) throw std::invalid_argument("make_cyclo_field: m must be positive");
    CycloField F;
    F.m = m;
    F.modulus = cyclotomic_poly(m);
    F.degree = static_cast<int>(F.modulus.size()) - 1;
    return F;
}

CycloNum cyclo_zero(const CycloField& F) { return CycloNum(F.degree); }

CycloNum cyclo_one(const CycloField& F) { return cyclo_rat(F, 1); }

CycloNum cyclo_rat(const CycloField& F, const Rat& r) {
    CycloNum a(F.degree);
    a[0] = r;
    return a;
}

CycloNum cyclo_zeta_pow(const CycloField& F, int k) {
    k %= F.m;
    if (k < 0) k += F.m;
    QPoly x(k + 1);
    x[k] = 1;
    QPoly r = qp_rem(std::move(x), F.modulus);
    r.resize(F.degree);
    return r;
}

bool cyclo_is_zero(const CycloNum& a) {
    for (const auto& c : a)
        if (c != 0) return false;
    return true;
}

CycloNum cyclo_add(const CycloNum& a, const CycloNum& b) {
    CycloNum c = a;
    for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    return c;
}

CycloNum cyclo_sub(const CycloNum& a, const CycloNum& b) {
    CycloNum c = a;
    for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
    return c;
}

CycloNum cyclo_neg(const CycloNum& a) {
    CycloNum c = a;
    for (auto& x : c) x = -x;
    return c;
}

CycloNum cyclo_mul(const CycloField& F, const CycloNum& a, const CycloNum& b) {
    QPoly prod = qp_mul(a, b);
    QPoly r = qp_rem(std::move(prod), F.modulus);
    r.resize(F.degree);
    return r;
}

CycloNum cyclo_inv(const CycloField& F, const CycloNum& a) {
    if (cyclo_is_zero(a)) throw std::invalid_argument("cyclo_inv: division by zero");
    // extended Euclid in Q[x] for gcd(a, Phi_m) = 1
    QPoly r0 = F.modulus, r1 = a;
    trim(r1);
    QPoly s0 = {}, s1 = {Rat(1)}; // coefficients of a
    while (!r1.empty()) {
        // r0 = q*r1 + r2
        QPoly r2 = r0, q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0);
        while (r2.size() >= r1.size() && !r2.empty()) {
            Rat c = r2.back() / r1.back();
            std::size_t shift = r2.size() - r1.size();
            q[shift] += c;
            for (std::size_t i = 0; i < r1.size(); ++i) r2[shift + i] -= c * r1[i];
            trim(r2);
        }
        QPoly s2 = s0; // s2 = s0 - q*s1
        QPoly qs = qp_mul(q, s1);
        if (s2.size() < qs.size()) s2.resize(qs.size());
        for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1) throw std::logic_error("cyclo_inv: element not invertible");
    for (auto& c : s0) c /= r0[0];
    QPoly r = qp_rem(std::move(s0), F.modulus);
    r.resize(F.degree);
    return r;
}

int cyclo_as_zeta_power(const CycloField& F, const CycloNum& a) {
    for (int k = 0; k < F.m; ++k)
        if (a == cyclo_zeta_pow(F, k)) return k;
    return -1;
}

namespace {

// Gaussian elimination; returns pivot column per row-echelon step.
int eliminate(const CycloField& F, CycloMat& mat, std::vector<int>* pivot_cols) {
    int rows = static_cast<int>(mat.size());
    int cols = rows ? static_cast<int>(mat[0].size()) : 0;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (!cyclo_is_zero(mat[r][col])) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(mat[rank], mat[piv]);
        CycloNum inv = cyclo_inv(F, mat[rank][col]);
        for (int c = col; c < cols; ++c) mat[rank][c] = cyclo_mul(F, mat[rank][c], inv);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || cyclo_is_zero(mat[r][col])) continue;
            CycloNum f = mat[r][col];
            for (int c = col; c < cols; ++c)
                mat[r][c] = cyclo_sub(mat[r][c], cyclo_mul(F, f, mat[rank][c]));
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++rank;
    }
    return rank;
}

} // namespace

int cyclo_rank(const CycloField& F, CycloMat mat) { return eliminate(F, mat, nullptr); }

std::vector<CycloVec> cyclo_kernel(const CycloField& F, CycloMat mat) {
    int cols = mat.empty() ? 0 : static_cast<int>(mat[0].size());
    std::vector<int> pivots;
    int rank = eliminate(F, mat, &pivots);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<CycloVec> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        CycloVec v(cols, cyclo_zero(F));
        v[free] = cyclo_one(F);
        for (int r = 0; r < rank; ++r)
            v[pivots[r]] = cyclo_neg(mat[r][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool cyclo_in_span(const CycloField& F, const std::vector<CycloVec>& span, const CycloVec& v) {
    CycloMat mat;
    for (const auto& row : span) mat.push_back(row);
    int r0 = cyclo_rank(F, mat);
    mat.push_back(v);
    return cyclo_rank(F, mat) == r0;
}

} // namespace spr
