#include "spr/series.hpp"

#include <chrono>
#include <stdexcept>

namespace spr {

std::string Mono::to_string() const {
    std::string s;
    auto append = [&s](const std::string& piece) {
        if (!s.empty()) s += "*";
        s += piece;
    };
    if (t == 1) append("t");
    else if (t != 0) append("t^" + std::to_string(t));
    if (q == 1) append("q");
    else if (q != 0) append("q^" + std::to_string(q));
    for (auto [i, e] : u) {
        if (e == 1) append("u" + std::to_string(i));
        else append("u" + std::to_string(i) + "^" + std::to_string(e));
    }
    return s.empty() ? "1" : s;
}

namespace {

Mono mono_mul(const Mono& a, const Mono& b) {
    Mono m = a;
    m.t += b.t;
    m.q += b.q;
    for (auto [i, e] : b.u) {
        m.u[i] += e;
        if (m.u[i] == 0) m.u.erase(i);
    }
    return m;
}

void add_term(Poly& p, const Mono& m, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = p.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

} // namespace

Poly poly_const(const Rat& c) {
    Poly p;
    add_term(p, Mono{}, c);
    return p;
}

Poly poly_u(const std::map<int, int>& exponents) {
    Mono m;
    for (auto [i, e] : exponents)
        if (e != 0) m.u[i] = e;
    Poly p;
    add_term(p, m, 1);
    return p;
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly out = a;
    for (const auto& [m, c] : b) add_term(out, m, c);
    return out;
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly out = a;
    for (const auto& [m, c] : b) add_term(out, m, -c);
    return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) add_term(out, mono_mul(ma, mb), ca * cb);
    return out;
}

Poly poly_scale(const Poly& a, const Rat& c) {
    Poly out;
    for (const auto& [m, v] : a) add_term(out, m, v * c);
    return out;
}

std::string poly_to_string(const Poly& p) {
    if (p.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : p) {
        if (!s.empty()) s += " + ";
        if (c == 1 && !(m == Mono{})) s += m.to_string();
        else if (m == Mono{}) s += rat_to_string(c);
        else s += rat_to_string(c) + "*" + m.to_string();
    }
    return s;
}

Series::Series(int degree_, int ubound_) : degree(degree_), ubound(ubound_), coeff(degree_ + 1) {}

Series series_zero(int degree, int ubound) { return Series(degree, ubound); }

Series series_one(int degree, int ubound) {
    Series s(degree, ubound);
    s.coeff[0] = poly_const(1);
    return s;
}

Series series_term(int degree, int ubound, const Mono& mono, const Rat& c, int xpow) {
    Series s(degree, ubound);
    for (auto [i, e] : mono.u)
        if (i > ubound) throw std::invalid_argument("series_term: u index exceeds the variable bound");
    if (xpow <= degree) add_term(s.coeff[xpow], mono, c);
    return s;
}

namespace {

void check_compatible(const Series& a, const Series& b) {
    if (a.degree != b.degree || a.ubound != b.ubound)
        throw std::invalid_argument("series operands have different truncation parameters");
}

} // namespace

Series add(const Series& a, const Series& b) {
    check_compatible(a, b);
    Series out(a.degree, a.ubound);
    for (int d = 0; d <= a.degree; ++d) out.coeff[d] = poly_add(a.coeff[d], b.coeff[d]);
    return out;
}

Series sub(const Series& a, const Series& b) {
    check_compatible(a, b);
    Series out(a.degree, a.ubound);
    for (int d = 0; d <= a.degree; ++d) out.coeff[d] = poly_sub(a.coeff[d], b.coeff[d]);
    return out;
}

Series negate(const Series& a) {
    Series out(a.degree, a.ubound);
    for (int d = 0; d <= a.degree; ++d) out.coeff[d] = poly_scale(a.coeff[d], -1);
    return out;
}

Series mul(const Series& a, const Series& b) {
    check_compatible(a, b);
    Series out(a.degree, a.ubound);
    for (int i = 0; i <= a.degree; ++i) {
        if (a.coeff[i].empty()) continue;
        for (int j = 0; i + j <= a.degree; ++j) {
            if (b.coeff[j].empty()) continue;
            Poly prod = poly_mul(a.coeff[i], b.coeff[j]);
            out.coeff[i + j] = poly_add(out.coeff[i + j], prod);
        }
    }
    return out;
}

Series scale(const Series& a, const Rat& c) {
    Series out(a.degree, a.ubound);
    for (int d = 0; d <= a.degree; ++d) out.coeff[d] = poly_scale(a.coeff[d], c);
    return out;
}

Series geometric_factor(int degree, int ubound, const Mono& mono, int k) {
    for (auto [i, e] : mono.u)
        if (i > ubound)
            throw std::invalid_argument("geometric_factor: u index exceeds the variable bound");
    if (k <= 0) throw std::invalid_argument("geometric_factor: power of x must be positive");
    Series s(degree, ubound);
    Mono acc;
    for (int d = 0; d <= degree; d += k) {
        add_term(s.coeff[d], acc, 1);
        acc = mono_mul(acc, mono);
    }
    return s;
}

Series subst_x_squared(const Series& a, int out_degree, bool negate_odd) {
    // odd coefficients of the result vanish, so the source only needs to
    // reach floor(out_degree / 2)
    if (2 * a.degree + 1 < out_degree)
        throw std::invalid_argument("subst_x_squared: source series too short for requested degree");
    Series out(out_degree, a.ubound);
    for (int d = 0; d <= a.degree && 2 * d <= out_degree; ++d) {
        out.coeff[2 * d] = (negate_odd && d % 2 == 1) ? poly_scale(a.coeff[d], -1) : a.coeff[d];
    }
    return out;
}

Series mul_by_x(const Series& a) {
    Series out(a.degree, a.ubound);
    for (int d = 1; d <= a.degree; ++d) out.coeff[d] = a.coeff[d - 1];
    return out;
}

namespace {

// t-carrying monomials must satisfy t = x (mod 2); t-free monomials are
// already in eliminated form and pass through the x-rules unchanged
void check_parity(const Mono& m, int xdeg) {
    if (m.t > 0 && (m.t - xdeg) % 2 != 0)
        throw std::invalid_argument("t/x parity violation at x-degree " + std::to_string(xdeg) +
                                    " in monomial " + m.to_string());
}

} // namespace

Series op_S(const Series& a) {
    Series out(a.degree, a.ubound);
    for (int d = 0; d <= a.degree; ++d) {
        for (const auto& [m, c] : a.coeff[d]) {
            check_parity(m, d);
            if (d % 2 == 0) continue; // even powers of x are killed
            Rat factor = 1;
            if (m.t > 0) factor = Rat(binomial(m.t, (m.t - 1) / 2));
            Mono stripped = m;
            stripped.t = 0;
            add_term(out.coeff[d], stripped, c * factor);
        }
    }
    return out;
}

Series op_Sprime(const Series& a) {
    Series out(a.degree, a.ubound);
    for (int d = 0; d <= a.degree; ++d) {
        for (const auto& [m, c] : a.coeff[d]) {
            check_parity(m, d);
            if (m.t % 2 == 1) continue; // odd powers of t are killed
            Rat factor = 1;
            if (m.t > 0) factor = Rat(binomial(m.t, m.t / 2)) / 2;
            Mono stripped = m;
            stripped.t = 0;
            add_term(out.coeff[d], stripped, c * factor);
        }
    }
    return out;
}

Poly op_Dp(const std::map<int, int>& u_monomial, int p) {
    if (p <= 0 || p % 2 != 0) throw std::invalid_argument("op_Dp: p must be even and positive");
    std::vector<int> odd_indices;
    for (auto [i, e] : u_monomial)
        if (i % 2 == 1 && e >= 1) odd_indices.push_back(i);

    Poly out;
    int n = static_cast<int>(odd_indices.size());
    if (p > n) return out;
    std::vector<int> pick(p);
    // iterate p-subsets of the available odd indices
    auto rec = [&](auto&& self, int start, int chosen) -> void {
        if (chosen == p) {
            auto m = u_monomial;
            for (int j = 0; j < p; ++j) {
                if (--m[pick[j]] == 0) m.erase(pick[j]);
            }
            out = poly_add(out, poly_u(m));
            return;
        }
        for (int i = start; i < n; ++i) {
            pick[chosen] = odd_indices[i];
            self(self, i + 1, chosen + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

Poly noncommutative_expansion(const std::map<int, int>& u_monomial) {
    Poly out = poly_u(u_monomial);
    int odd_count = 0;
    for (auto [i, e] : u_monomial)
        if (i % 2 == 1) ++odd_count;
    for (int p = 2; p <= odd_count; p += 2) out = poly_add(out, op_Dp(u_monomial, p));
    return out;
}

bool parity_respected(const Series& a) {
    for (int d = 0; d <= a.degree; ++d)
        for (const auto& [m, c] : a.coeff[d])
            if ((m.t - d) % 2 != 0) return false;
    return true;
}

bool all_coefficients_integer(const Series& a) {
    for (int d = 0; d <= a.degree; ++d)
        for (const auto& [m, c] : a.coeff[d])
            if (denominator(c) != 1) return false;
    return true;
}

int required_ubound(SeriesName name, int degree) {
    switch (name) {
    case SeriesName::FW_B:
    case SeriesName::FW_D:
        return degree; // u_m first enters at x^m
    case SeriesName::FN_B:
    case SeriesName::FN_D:
        return degree / 2; // u_m first enters at x^{2m}
    default:
        return 0;
    }
}

namespace {

Series odd_t_product(int degree, int ubound) {
    // prod_{m odd} (1 + t x^m + x^{2m})
    Series s = series_one(degree, ubound);
    for (int m = 1; m <= degree; m += 2) {
        Series f = series_one(degree, ubound);
        f = add(f, series_term(degree, ubound, Mono{.t = 1}, 1, m));
        if (2 * m <= degree) f = add(f, series_term(degree, ubound, Mono{}, 1, 2 * m));
        s = mul(s, f);
    }
    return s;
}

Series dist_odd(int degree, int ubound) {
    // prod_{m odd} (1 + x^m)
    Series s = series_one(degree, ubound);
    for (int m = 1; m <= degree; m += 2) {
        Series f = add(series_one(degree, ubound), series_term(degree, ubound, Mono{}, 1, m));
        s = mul(s, f);
    }
    return s;
}

Series p_plus(int degree, int ubound) {
    // 1/2 (prod (1-x^n)^{-1} + prod (1+x^n)^{-1});
    // the second product equals prod_{m odd} (1-x^m) up to truncation.
    Series all = series_one(degree, ubound);
    for (int n = 1; n <= degree; ++n) all = mul(all, geometric_factor(degree, ubound, Mono{}, n));
    Series alt = series_one(degree, ubound);
    for (int m = 1; m <= degree; m += 2) {
        Series f = sub(series_one(degree, ubound), series_term(degree, ubound, Mono{}, 1, m));
        alt = mul(alt, f);
    }
    return scale(add(all, alt), Rat(1, 2));
}

Series fn_d_bracket(int degree, int ubound) {
    Series t_part = op_Sprime(odd_t_product(degree, ubound));
    Series pdo = dist_odd(degree, ubound);
    Series pdo_x2 = subst_x_squared(pdo, degree);
    Series pdo_mx2 = subst_x_squared(pdo, degree, /*negate_odd=*/true);
    return add(sub(t_part, scale(pdo_x2, Rat(1, 2))), scale(pdo_mx2, Rat(1, 2)));
}

} // namespace

Series build_series(SeriesName name, int degree, int ubound) {
    if (degree < 0) throw std::invalid_argument("build_series: negative degree");
    if (ubound < required_ubound(name, degree))
        throw std::invalid_argument("build_series: u-variable bound too small to be exact at this degree");
    switch (name) {
    case SeriesName::FW_B: {
        Series s = series_one(degree, ubound);
        for (int n = 1; n <= degree; ++n) {
            s = mul(s, geometric_factor(degree, ubound, Mono{.u = {{n, 1}}}, n));
            s = mul(s, geometric_factor(degree, ubound, Mono{}, n));
        }
        return s;
    }
    case SeriesName::FN_B: {
        Series s = odd_t_product(degree, ubound);
        for (int m = 1; 2 * m <= degree; ++m)
            s = mul(s, geometric_factor(degree, ubound, Mono{.u = {{m, 1}}}, 2 * m));
        return s;
    }
    case SeriesName::FW_D: {
        Series s = p_plus(degree, ubound);
        for (int n = 1; n <= degree; ++n)
            s = mul(s, geometric_factor(degree, ubound, Mono{.u = {{n, 1}}}, n));
        return s;
    }
    case SeriesName::FN_D: {
        Series s = fn_d_bracket(degree, ubound);
        for (int m = 1; 2 * m <= degree; ++m)
            s = mul(s, geometric_factor(degree, ubound, Mono{.u = {{m, 1}}}, 2 * m));
        return s;
    }
    case SeriesName::Pplus:
        return p_plus(degree, ubound);
    case SeriesName::PdistOdd:
        return dist_odd(degree, ubound);
    case SeriesName::JacobiLHS: {
        Series s = series_one(degree, ubound);
        for (int m = 1; m <= degree; m += 2) {
            Series f = series_one(degree, ubound);
            f = add(f, series_term(degree, ubound, Mono{.q = 1}, 1, m));
            f = add(f, series_term(degree, ubound, Mono{.q = -1}, 1, m));
            if (2 * m <= degree) f = add(f, series_term(degree, ubound, Mono{}, 1, 2 * m));
            s = mul(s, f);
        }
        return s;
    }
    case SeriesName::JacobiRHS: {
        Series theta(degree, ubound);
        for (int n = 0; n * n <= degree; ++n) {
            add_term(theta.coeff[n * n], Mono{.q = n}, 1);
            if (n > 0) add_term(theta.coeff[n * n], Mono{.q = -n}, 1);
        }
        Series s = theta;
        for (int m = 1; 2 * m <= degree; ++m)
            s = mul(s, geometric_factor(degree, ubound, Mono{}, 2 * m));
        return s;
    }
    }
    throw std::logic_error("build_series: unknown series");
}

Poly lambda_contribution(const Partition& lambda, BD type) {
    if (!is_orbit_partition(lambda, type))
        throw std::invalid_argument("lambda_contribution: partition fails the orbit filter");
    auto mults = lambda.multiplicities();

    int odd_odd = 0;  // odd parts with odd multiplicity, |I^-|
    bool has_odd = false;
    for (auto [part, r] : mults)
        if (part % 2 == 1) {
            has_odd = true;
            if (r % 2 == 1) ++odd_odd;
        }

    if (type == BD::D && !has_odd) return poly_u(u_monomial(lambda_red(lambda)));
    if (type == BD::D && odd_odd == 0) return noncommutative_expansion(u_monomial(lambda_red(lambda)));

    // product over parts, with one t per odd part of odd multiplicity
    Poly prod = poly_const(1);
    for (auto [part, r] : mults) {
        if (part % 2 == 0) {
            prod = poly_mul(prod, poly_u({{part, r / 2}}));
        } else if (r % 2 == 1) {
            if (r > 1) prod = poly_mul(prod, poly_u({{part, (r - 1) / 2}}));
        } else {
            Poly f = poly_u({{part, r / 2}});
            f = poly_add(f, poly_u({{part, r / 2 - 1}}));
            prod = poly_mul(prod, f);
        }
    }

    Rat factor;
    if (type == BD::B) {
        if (odd_odd % 2 != 1) throw std::logic_error("lambda_contribution: |I^-| must be odd in type B");
        factor = Rat(binomial(odd_odd, (odd_odd - 1) / 2));
    } else {
        if (odd_odd % 2 != 0) throw std::logic_error("lambda_contribution: |I^-| must be even in type D");
        factor = Rat(binomial(odd_odd, odd_odd / 2)) / 2;
    }
    return poly_scale(prod, factor);
}

std::string identity_slug(IdentityName name) {
    switch (name) {
    case IdentityName::BnCombId: return "bn-comb";
    case IdentityName::BnMatch: return "bn-match";
    case IdentityName::DnCombId: return "dn-comb";
    case IdentityName::DnMatch: return "dn-match";
    case IdentityName::PLaSumB: return "p-sum-b";
    case IdentityName::PLaSumD: return "p-sum-d";
    case IdentityName::Jacobi: return "jacobi";
    }
    return "?";
}

std::vector<std::string> identity_slugs() {
    return {"bn-comb", "bn-match", "dn-comb", "dn-match", "p-sum-b", "p-sum-d", "jacobi"};
}

std::optional<IdentityName> identity_from_slug(const std::string& slug) {
    for (IdentityName n : {IdentityName::BnCombId, IdentityName::BnMatch, IdentityName::DnCombId,
                           IdentityName::DnMatch, IdentityName::PLaSumB, IdentityName::PLaSumD,
                           IdentityName::Jacobi})
        if (identity_slug(n) == slug) return n;
    return std::nullopt;
}

namespace {

std::pair<Series, Series> identity_sides(IdentityName name, int degree) {
    switch (name) {
    case IdentityName::BnCombId: {
        Series lhs = op_S(odd_t_product(degree, 0));
        Series rhs = series_one(degree, 0);
        for (int n = 1; 2 * n <= degree; ++n)
            rhs = mul(rhs, geometric_factor(degree, 0, Mono{}, 2 * n));
        return {lhs, mul_by_x(rhs)};
    }
    case IdentityName::BnMatch: {
        int k = required_ubound(SeriesName::FN_B, degree);
        Series lhs = op_S(build_series(SeriesName::FN_B, degree, k));
        // x FW(x^2, u) is supported on odd degrees only
        Series fw = build_series(SeriesName::FW_B, (degree - 1) / 2, k);
        Series rhs(degree, k);
        for (int d = 1; d <= degree; d += 2) rhs.coeff[d] = fw.coeff[(d - 1) / 2];
        return {lhs, rhs};
    }
    case IdentityName::DnCombId: {
        Series lhs = fn_d_bracket(degree, 0);
        Series rhs = subst_x_squared(p_plus(degree, 0), degree);
        return {lhs, rhs};
    }
    case IdentityName::DnMatch: {
        int k = required_ubound(SeriesName::FN_D, degree);
        Series lhs = build_series(SeriesName::FN_D, degree, k);
        Series rhs = subst_x_squared(build_series(SeriesName::FW_D, degree / 2, k), degree);
        return {lhs, rhs};
    }
    case IdentityName::PLaSumB: {
        int k = required_ubound(SeriesName::FN_B, degree);
        Series lhs(degree, k);
        for (int s = 1; s <= degree; s += 2)
            for (const auto& lambda : enumerate_partitions(s, PartitionFilter::OddB))
                lhs.coeff[s] = poly_add(lhs.coeff[s], lambda_contribution(lambda, BD::B));
        Series rhs = op_S(build_series(SeriesName::FN_B, degree, k));
        return {lhs, rhs};
    }
    case IdentityName::PLaSumD: {
        int k = required_ubound(SeriesName::FN_D, degree);
        Series lhs(degree, k);
        for (int s = 2; s <= degree; s += 2)
            for (const auto& lambda : enumerate_partitions(s, PartitionFilter::OddD))
                lhs.coeff[s] = poly_add(lhs.coeff[s], lambda_contribution(lambda, BD::D));
        lhs.coeff[0] = poly_const(1); // empty orbit
        Series rhs = build_series(SeriesName::FN_D, degree, k);
        return {lhs, rhs};
    }
    case IdentityName::Jacobi: {
        Series lhs = build_series(SeriesName::JacobiLHS, degree, 0);
        Series rhs = build_series(SeriesName::JacobiRHS, degree, 0);
        return {lhs, rhs};
    }
    }
    throw std::logic_error("identity_sides: unknown identity");
}

} // namespace

IdentityReport verify_identity(IdentityName name, int degree) {
    if (degree < 1) throw std::invalid_argument("verify_identity: degree must be >= 1");
    auto t0 = std::chrono::steady_clock::now();
    auto [lhs, rhs] = identity_sides(name, degree);

    IdentityReport report;
    report.name = name;
    report.degree = degree;
    report.equal = true;

    // the D-side eliminations divide by 2; the final series must be integral
    if (name == IdentityName::DnCombId || name == IdentityName::DnMatch ||
        name == IdentityName::PLaSumD) {
        if (!all_coefficients_integer(lhs) || !all_coefficients_integer(rhs))
            throw std::logic_error("verify_identity: non-integer coefficient after t-elimination");
    }

    for (int d = 0; d <= degree && report.equal; ++d) {
        if (lhs.coeff[d] != rhs.coeff[d]) {
            report.equal = false;
            report.first_diff = {d, poly_to_string(poly_sub(lhs.coeff[d], rhs.coeff[d]))};
        }
    }
    auto t1 = std::chrono::steady_clock::now();
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return report;
}

} // namespace spr
