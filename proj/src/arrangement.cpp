#include "spr/arrangement.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace spr {

namespace {

std::vector<int> primes_table() {
    static std::vector<int> primes = [] {
        std::vector<int> out;
        const int limit = 42000;
        std::vector<bool> composite(limit, false);
        for (int i = 2; i < limit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (int j = 2 * i; j < limit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

// block structure of t_lambda inside Q^n: block index per coordinate
std::vector<int> block_of_coordinate(const Partition& lambda, int n) {
    std::vector<int> blocks(n, -1);
    int at = 0;
    for (int j = 0; j < lambda.length(); ++j)
        for (int i = 0; i < lambda.parts[j]; ++i) blocks[at++] = j;
    if (at > n) throw std::invalid_argument("partition does not fit the ambient dimension");
    return blocks;
}

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// elements of W_lambda as permutations of the block indices (equal parts only)
std::vector<std::vector<int>> block_symmetries(const Partition& lambda) {
    int l = lambda.length();
    std::vector<std::vector<int>> out;
    std::vector<int> p(l);
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (int j = 0; j < l; ++j)
            if (lambda.parts[p[j]] != lambda.parts[j]) ok = false;
        if (ok) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

int rank_rational(std::vector<std::vector<Rat>> mat) {
    int rows = static_cast<int>(mat.size());
    int cols = rows ? static_cast<int>(mat[0].size()) : 0;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (mat[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(mat[rank], mat[piv]);
        Rat inv = mat[rank][col];
        for (int c = col; c < cols; ++c) mat[rank][c] /= inv;
        for (int r = rank + 1; r < rows; ++r) {
            if (mat[r][col] == 0) continue;
            Rat f = mat[r][col];
            for (int c = col; c < cols; ++c) mat[r][c] -= f * mat[rank][c];
        }
        ++rank;
    }
    return rank;
}

long factorial(int k) {
    long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

} // namespace

long z_component_count_formula(const Partition& lambda, int n) {
    long denom = 1;
    for (int part : lambda.parts) denom *= factorial(part);
    (void)n;
    return factorial(n) / denom;
}

long s_component_count_formula(const Partition& lambda, int n) {
    long h = 1;
    for (int part : lambda.parts) h *= factorial(part);
    for (auto [part, mult] : lambda.multiplicities()) h *= factorial(mult);
    return factorial(n) / h;
}

Arrangement build_Z(const Partition& lambda, int n, int n_bound) {
    if (lambda.size() != n) throw std::invalid_argument("build_Z: |lambda| must equal n");
    if (n > n_bound) throw std::invalid_argument("build_Z: n exceeds the configured bound");
    int l = lambda.length();
    auto blocks = block_of_coordinate(lambda, n);

    Arrangement arr;
    arr.ambient = l + n;
    arr.comp_dim = l;

    // components are graphs, one per coset w S_lambda, keyed by the map
    // coordinate -> block of w^{-1}(coordinate)
    std::set<std::vector<int>> seen;
    for (const auto& w : all_permutations(n)) {
        std::vector<int> winv(n);
        for (int i = 0; i < n; ++i) winv[w[i]] = i;
        std::vector<int> sig(n);
        for (int i = 0; i < n; ++i) sig[i] = blocks[winv[i]];
        if (!seen.insert(sig).second) continue;
        std::vector<std::vector<Rat>> basis(l, std::vector<Rat>(arr.ambient, 0));
        for (int j = 0; j < l; ++j) {
            basis[j][j] = 1;
            for (int i = 0; i < n; ++i)
                if (sig[i] == j) basis[j][l + i] = 1;
        }
        arr.components.push_back(std::move(basis));
    }

    for (const auto& v : block_symmetries(lambda)) {
        std::vector<int> perm(arr.ambient);
        for (int j = 0; j < l; ++j) perm[j] = v[j];
        for (int i = 0; i < n; ++i) perm[l + i] = l + i;
        arr.symmetry.push_back(std::move(perm));
    }
    return arr;
}

Arrangement build_S(const Partition& lambda, int n, int n_bound) {
    if (lambda.size() != n) throw std::invalid_argument("build_S: |lambda| must equal n");
    if (n > n_bound) throw std::invalid_argument("build_S: n exceeds the configured bound");
    int l = lambda.length();
    auto blocks = block_of_coordinate(lambda, n);

    Arrangement arr;
    arr.ambient = n;
    arr.comp_dim = l;

    // w t_lambda depends only on the unordered coordinate partition
    std::set<std::vector<std::vector<int>>> seen;
    for (const auto& w : all_permutations(n)) {
        std::vector<std::vector<int>> part(l);
        for (int i = 0; i < n; ++i) part[blocks[i]].push_back(w[i]);
        for (auto& blk : part) std::sort(blk.begin(), blk.end());
        std::sort(part.begin(), part.end());
        if (!seen.insert(part).second) continue;
        std::vector<std::vector<Rat>> basis(l, std::vector<Rat>(n, 0));
        for (int j = 0; j < l; ++j)
            for (int i : part[j]) basis[j][i] = 1;
        arr.components.push_back(std::move(basis));
    }

    arr.symmetry = all_permutations(n);
    return arr;
}

namespace {

std::vector<std::vector<int>> degree_monomials(int nvars, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(nvars, 0);
    auto rec = [&](auto&& self, int var, int rest) -> void {
        if (var == nvars - 1) {
            cur[var] = rest;
            out.push_back(cur);
            return;
        }
        for (int e = rest; e >= 0; --e) {
            cur[var] = e;
            self(self, var + 1, rest - e);
        }
    };
    if (nvars == 0) {
        if (d == 0) out.push_back({});
        return out;
    }
    rec(rec, 0, d);
    return out;
}

long choose_long(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// deterministic point set; primes are reused across components but fresh
// within one component
std::vector<std::vector<Rat>> sample_points(const Arrangement& arr, int d, int pool_offset,
                                            bool close_under_symmetry) {
    const auto& primes = primes_table();
    int k = arr.comp_dim;
    long per_comp = choose_long(k + d - 1, d) + 1;

    std::set<std::vector<Rat>> points;
    for (const auto& basis : arr.components) {
        for (long j = 0; j < per_comp; ++j) {
            std::vector<Rat> p(arr.ambient, 0);
            for (int i = 0; i < k; ++i) {
                std::size_t idx = pool_offset + j * k + i;
                if (idx >= primes.size()) throw std::runtime_error("sample_points: prime pool exhausted");
                Rat y = primes[idx];
                for (int c = 0; c < arr.ambient; ++c) p[c] += y * basis[i][c];
            }
            points.insert(std::move(p));
        }
    }
    if (close_under_symmetry) {
        std::vector<std::vector<Rat>> queue(points.begin(), points.end());
        while (!queue.empty()) {
            auto p = queue.back();
            queue.pop_back();
            for (const auto& perm : arr.symmetry) {
                std::vector<Rat> q(arr.ambient);
                for (int c = 0; c < arr.ambient; ++c) q[c] = p[perm[c]];
                if (points.insert(q).second) queue.push_back(std::move(q));
            }
        }
    }
    return {points.begin(), points.end()};
}

Rat eval_monomial(const std::vector<int>& expo, const std::vector<Rat>& point) {
    Rat v = 1;
    for (std::size_t i = 0; i < expo.size(); ++i)
        for (int e = 0; e < expo[i]; ++e) v *= point[i];
    return v;
}

int evaluation_rank(const Arrangement& arr, int d, int pool_offset) {
    // plain rank needs no symmetry closure; extra points cannot change it
    auto points = sample_points(arr, d, pool_offset, false);
    auto monos = degree_monomials(arr.ambient, d);
    std::vector<std::vector<Rat>> mat;
    mat.reserve(monos.size());
    for (const auto& mono : monos) {
        std::vector<Rat> row;
        row.reserve(points.size());
        for (const auto& p : points) row.push_back(eval_monomial(mono, p));
        mat.push_back(std::move(row));
    }
    return rank_rational(std::move(mat));
}

int invariant_rank(const Arrangement& arr, int d, int pool_offset) {
    auto points = sample_points(arr, d, pool_offset, true);
    std::map<std::vector<Rat>, int> point_index;
    for (std::size_t i = 0; i < points.size(); ++i) point_index[points[i]] = static_cast<int>(i);

    // point permutation per symmetry element
    std::vector<std::vector<int>> maps;
    for (const auto& perm : arr.symmetry) {
        std::vector<int> mp(points.size());
        for (std::size_t i = 0; i < points.size(); ++i) {
            std::vector<Rat> q(arr.ambient);
            for (int c = 0; c < arr.ambient; ++c) q[c] = points[i][perm[c]];
            auto it = point_index.find(q);
            if (it == point_index.end())
                throw std::logic_error("invariant_rank: point set is not symmetry-closed");
            mp[i] = it->second;
        }
        maps.push_back(std::move(mp));
    }

    auto monos = degree_monomials(arr.ambient, d);
    std::vector<std::vector<Rat>> mat;
    for (const auto& mono : monos) {
        std::vector<Rat> row;
        row.reserve(points.size());
        for (const auto& p : points) row.push_back(eval_monomial(mono, p));
        std::vector<Rat> averaged(points.size(), 0);
        for (const auto& mp : maps)
            for (std::size_t i = 0; i < points.size(); ++i) averaged[i] += row[mp[i]];
        mat.push_back(std::move(averaged));
    }
    return rank_rational(std::move(mat));
}

GradedDimResult pooled(const Arrangement& arr, int d, int d_bound,
                       int (*compute)(const Arrangement&, int, int)) {
    if (d < 0 || d > d_bound) throw std::invalid_argument("degree exceeds the configured bound");
    GradedDimResult r;
    int a = compute(arr, d, 0);
    int b = compute(arr, d, 1000);
    if (a == b) {
        r.value = a;
        return r;
    }
    // one regeneration with fresh pools, then give up
    r.regenerated = true;
    a = compute(arr, d, 2000);
    b = compute(arr, d, 3000);
    if (a != b) throw std::runtime_error("graded_dim: point sets disagree after regeneration");
    r.value = a;
    return r;
}

} // namespace

GradedDimResult graded_dim(const Arrangement& arr, int d, int d_bound) {
    return pooled(arr, d, d_bound, evaluation_rank);
}

GradedDimResult invariant_graded_dim(const Arrangement& arr, int d, int d_bound) {
    if (arr.symmetry.empty()) throw std::invalid_argument("invariant_graded_dim: no symmetry group");
    return pooled(arr, d, d_bound, invariant_rank);
}

ContainmentReport containment_dominance_check(int n) {
    if (n > 6) throw std::invalid_argument("containment_dominance_check: n exceeds the bound");
    ContainmentReport report;
    report.n = n;
    report.implication_holds = true;

    auto parts = enumerate_partitions(n);
    auto perms = all_permutations(n);

    for (const auto& la : parts) {
        auto la_blocks = block_of_coordinate(la, n);
        std::vector<std::vector<Rat>> la_basis(la.length(), std::vector<Rat>(n, 0));
        for (int i = 0; i < n; ++i) la_basis[la_blocks[i]][i] = 1;

        for (const auto& mu : parts) {
            auto mu_blocks = block_of_coordinate(mu, n);
            // distinct subspaces w t_mu
            std::set<std::vector<std::vector<int>>> seen;
            for (const auto& w : perms) {
                std::vector<std::vector<int>> part(mu.length());
                for (int i = 0; i < n; ++i) part[mu_blocks[i]].push_back(w[i]);
                for (auto& blk : part) std::sort(blk.begin(), blk.end());
                std::sort(part.begin(), part.end());
                if (!seen.insert(part).second) continue;

                std::vector<std::vector<Rat>> basis(mu.length(), std::vector<Rat>(n, 0));
                for (std::size_t j = 0; j < part.size(); ++j)
                    for (int i : part[j]) basis[j][i] = 1;
                int r0 = rank_rational(basis);
                auto joint = basis;
                joint.insert(joint.end(), la_basis.begin(), la_basis.end());
                if (rank_rational(joint) == r0) {
                    ++report.containments_found;
                    if (!dominance_leq(mu, la)) report.implication_holds = false;
                }
            }
        }
    }
    return report;
}

EqualPartsReport equal_parts_check(const Partition& lambda, int n, int dmax) {
    EqualPartsReport report;
    report.lambda = lambda;
    report.n = n;

    Arrangement Z = build_Z(lambda, n);
    Arrangement S = build_S(lambda, n);

    report.s_components = static_cast<long>(S.components.size());
    report.z_bar_components = s_component_count_formula(lambda, n);
    // components of Z/W_lambda = Z-components / |W_lambda| = |S_n / H_lambda|
    report.component_counts_agree = report.s_components == report.z_bar_components &&
                                    static_cast<long>(Z.components.size()) ==
                                        z_component_count_formula(lambda, n);

    for (int d = 0; d <= dmax; ++d) {
        EqualPartsRow row;
        row.d = d;
        row.dim_S = graded_dim(S, d, dmax).value;
        row.dim_Z_inv = invariant_graded_dim(Z, d, dmax).value;
        row.equal = row.dim_S == row.dim_Z_inv;
        if (!row.equal) report.all_equal = false;
        report.rows.push_back(row);
    }
    return report;
}

} // namespace spr
