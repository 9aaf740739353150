#pragma once

#include "spr/group.hpp"
#include "spr/partition.hpp"
#include "spr/series.hpp"
#include "spr/symbol.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace spr {

enum class LedgerType { A, B, D, Gm1n };

std::string ledger_type_name(LedgerType t);
std::optional<LedgerType> ledger_type_from_name(const std::string& s);

// One piece of the semiorthogonal side. Commutative pieces carry a single
// stratum label mu; a noncommutative piece keeps its expansion into motivic
// monomials as a separate view.
struct PieceLabel {
    bool noncommutative = false;
    Partition orbit;
    std::optional<int> very_even_tag;
    std::map<int, int> character;  // empty for type A
    BiPartition bipartition;       // irreducible label for B/D
    Partition mu;                  // commutative stratum (= lambda^red for noncommutative)
    std::vector<Partition> expansion; // expanded mu multiset (single entry when commutative)
};

// One piece of the motivic side: a conjugacy class with its V^g stratum.
struct MotivicPiece {
    Partition mu;       // stratum label
    Partition mu_prime; // negative cycle type (B/D); empty for A
    std::optional<int> split_tag;
    std::vector<std::pair<int, int>> colored; // (size, color) class label for G(m,1,n)
};

// Formula-enumerated class list, one piece per conjugacy class.
// For G(m,1,n) pass the color count through `m`.
std::vector<MotivicPiece> motivic_pieces(LedgerType type, int n, int m = 0);

// Cross-check of the formula enumeration against brute-force classes.
bool motivic_matches_brute_force(LedgerType type, int n, int m = 0,
                                 long element_budget = 200000);

std::vector<PieceLabel> categorical_pieces(LedgerType type, int n);

struct MatchReport {
    LedgerType type;
    int n = 0;
    int m = 0;
    long categorical_count = 0; // pieces after expansion
    long motivic_count = 0;
    bool equal = false;
    std::string first_diff; // first mu with different multiplicity, if any
};

MatchReport match_check(LedgerType type, int n, int m = 0);

// mu-label multisets as sorted lists (noncommutative pieces expanded)
std::vector<Partition> categorical_mu_multiset(LedgerType type, int n);
std::vector<Partition> motivic_mu_multiset(LedgerType type, int n, int m = 0);

// Explicit piece <-> class bijection for G(m,1,n): pieces are tuples
// (mu^(0), ..., mu^(m-1)) and classes are colored partitions carrying the
// same data. Returns true when the tuple sets coincide, the brute-force
// class count matches, and each class's fixed-space dimension equals the
// length of its color-0 partition.
struct Gm1nBijectionReport {
    int m = 0, n = 0;
    long piece_count = 0;
    long class_count = 0;
    bool verified = false;
};

Gm1nBijectionReport gm1n_bijection_check(int m, int n, long element_budget = 200000);

// Sum of u(mu) over all expanded pieces.
Poly mu_multiset_poly(const std::vector<PieceLabel>& pieces);

} // namespace spr
