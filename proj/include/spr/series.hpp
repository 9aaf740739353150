#pragma once

#include "spr/partition.hpp"
#include "spr/rational.hpp"
#include "spr/symbol.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace spr {

// Monomial in the bookkeeping variables: t, the Laurent variable q, and
// u_1, u_2, ... . The x-degree is not stored here; it is the index of the
// coefficient inside a Series.
struct Mono {
    int t = 0;
    int q = 0;              // Laurent exponent, may be negative
    std::map<int, int> u;   // variable index >= 1 -> exponent > 0

    auto operator<=>(const Mono&) const = default;
    std::string to_string() const;
};

using Poly = std::map<Mono, Rat>;

Poly poly_const(const Rat& c);
Poly poly_u(const std::map<int, int>& exponents); // single monomial, coefficient 1
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Rat& c);
std::string poly_to_string(const Poly& p);

// Polynomial coefficients up to the truncation degree in x. Coefficients
// beyond `degree` are unknown, not zero; arithmetic never reads past them.
struct Series {
    int degree = 0; // D
    int ubound = 0; // K, largest allowed u index
    std::vector<Poly> coeff; // size degree + 1

    Series() = default;
    Series(int degree_, int ubound_);

    bool operator==(const Series&) const = default;
};

Series series_zero(int degree, int ubound);
Series series_one(int degree, int ubound);
// single term c * mono * x^xpow
Series series_term(int degree, int ubound, const Mono& mono, const Rat& c, int xpow);

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series negate(const Series& a);
Series mul(const Series& a, const Series& b);
Series scale(const Series& a, const Rat& c);

// (1 - mono * x^k)^{-1} expanded to the truncation degree.
Series geometric_factor(int degree, int ubound, const Mono& mono, int k);

// x^d coefficient moves to x^{2d}; with negate_odd the coefficient at x^{2d}
// is multiplied by (-1)^d (substitution x -> -x^2 before doubling degrees).
Series subst_x_squared(const Series& a, int out_degree, bool negate_odd = false);
Series mul_by_x(const Series& a);

// Operator eliminating t on the B side: u-linear, kills even x-degrees, and
// on t^{2k+1} * M * x^{odd} multiplies by C(2k+1, k). A monomial whose t- and
// x-degrees disagree mod 2 is a construction bug and throws.
Series op_S(const Series& a);

// D-side analog: t^{2k+1} -> 0, t^{2k} -> C(2k,k)/2 for k > 0, t^0 fixed;
// x-degrees are untouched. Same parity guard.
Series op_Sprime(const Series& a);

// Divided-difference expansion: sum over p-element sets of distinct odd
// indices dividing the monomial. p must be even and positive.
Poly op_Dp(const std::map<int, int>& u_monomial, int p);
// (1 + D_2 + D_4 + ...) applied to a u-monomial.
Poly noncommutative_expansion(const std::map<int, int>& u_monomial);

// every monomial satisfies t-degree == x-degree (mod 2)
bool parity_respected(const Series& a);
bool all_coefficients_integer(const Series& a);

enum class SeriesName { FW_B, FN_B, FW_D, FN_D, Pplus, PdistOdd, JacobiLHS, JacobiRHS };

// Smallest u-variable bound that keeps the named series exact at `degree`.
int required_ubound(SeriesName name, int degree);
// Throws if ubound is too small for exactness at this degree.
Series build_series(SeriesName name, int degree, int ubound);

// Per-orbit polynomial in the u variables (t already eliminated). For type D
// a very-even orbit contributes u(lambda^red) once; the ledger doubles it per
// orbit tag.
Poly lambda_contribution(const Partition& lambda, BD type);

enum class IdentityName { BnCombId, BnMatch, DnCombId, DnMatch, PLaSumB, PLaSumD, Jacobi };

std::string identity_slug(IdentityName name);
std::optional<IdentityName> identity_from_slug(const std::string& slug);
std::vector<std::string> identity_slugs();

struct IdentityReport {
    IdentityName name;
    int degree = 0;
    bool equal = false;
    // smallest x-degree where the sides disagree, with the difference lhs-rhs
    std::optional<std::pair<int, std::string>> first_diff;
    long elapsed_ms = 0;
};

// Computes both sides exactly to `degree` and compares coefficient by
// coefficient. A failed identity is a report, not an error.
IdentityReport verify_identity(IdentityName name, int degree);

} // namespace spr
