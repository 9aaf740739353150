#pragma once

#include "spr/partition.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace spr {

enum class BD { B, D };

// Filter matching the orbit set of each type: partitions of 2n+1 (B) or 2n (D)
// in which every even part has even multiplicity.
PartitionFilter orbit_filter(BD type);
bool is_orbit_partition(const Partition& lambda, BD type);

// Two-row symbol. Rows are strictly increasing; type B has |top| = |bottom|+1,
// type D has |top| = |bottom| (unordered pair, stored in construction order).
struct Symbol {
    std::vector<int> top;    // R
    std::vector<int> bottom; // R'
    BD type = BD::B;

    bool operator==(const Symbol&) const = default;
    std::string to_string() const;
};

// Symbol of a bipartition at minimal padding, in canonical reduced form
// (a 0 shared by both rows is stripped and remaining entries shifted by -2,
// as long as that yields a valid symbol).
Symbol symbol_of(const BiPartition& bp, BD type);

Symbol reduce_symbol(Symbol s);
Symbol pad_symbol(Symbol s, int steps); // inverse of one reduction step, applied `steps` times

// Row -> partition: entry_i - 2i over the sorted row, zeros stripped.
Partition row_to_partition(const std::vector<int>& row);
BiPartition symbol_to_bipartition(const Symbol& s);

// Entries of both rows as one sorted multiset (similarity invariant).
std::vector<int> symbol_entry_multiset(const Symbol& s);

// Symbols are similar when, re-padded to a common size, they carry the same
// entry multiset.
bool similar(const Symbol& a, const Symbol& b);

// Trivial-character Springer image of the orbit lambda.
BiPartition spr1(const Partition& lambda, BD type);

struct OddPartEntry {
    int part = 0;              // odd part m of lambda
    int mult = 0;              // r_m
    std::vector<int> interval; // I_m, consecutive integers
    int ell = 0;               // |I_m ∩ R| - |I_m ∩ R'|
};

struct OddPartData {
    Symbol base;                      // reduced symbol of spr1(lambda)
    std::vector<OddPartEntry> entries; // ascending by part
    std::vector<int> odd_parts() const;
    std::vector<int> i_plus() const;  // ell == 0
    std::vector<int> i_minus() const; // ell == ±1
    const OddPartEntry& entry(int part) const;
};

OddPartData odd_part_data(const Partition& lambda, BD type);

// One semiorthogonal piece: orbit plus a character of the component group,
// stored as a sign vector on the odd parts of lambda. Type D labels are the
// canonical coset representatives mod the all-ones vector (value 0 on the
// smallest odd part); very-even orbits carry a tag in {0, 1}.
struct SpringerLabel {
    Partition orbit;
    std::optional<int> very_even_tag;
    std::map<int, int> character; // part -> 0/1

    bool operator==(const SpringerLabel&) const = default;
    auto operator<=>(const SpringerLabel&) const = default;

    std::vector<int> support() const;
    std::string to_string() const;
};

// All characters attached to the orbit in the Springer correspondence.
// Type B: the set Sigma_lambda itself. Type D: Sigma_lambda mod the all-ones
// vector; a very-even orbit yields its single trivial character once per tag.
std::vector<SpringerLabel> spr_characters(const Partition& lambda, BD type);

// Symbol obtained from the base symbol by swapping the row memberships of
// every interval in the support of the label.
Symbol label_symbol(const SpringerLabel& label, BD type);
BiPartition character_to_bipartition(const SpringerLabel& label, BD type);

// Partition of the character set into cosets of the (Z/2)^{I+}-image.
// Tags are not involved; very-even orbits give one singleton coset.
std::vector<std::vector<SpringerLabel>> coset_decomposition(const Partition& lambda, BD type);

// Irreducible-representation label: an (ordered for B / canonical unordered
// for D) bipartition, with a copy tag when the two components coincide (D).
struct IrrepLabel {
    BiPartition bp;
    std::optional<int> copy_tag;

    bool operator==(const IrrepLabel&) const = default;
    auto operator<=>(const IrrepLabel&) const = default;
    std::string to_string() const;
};

std::vector<IrrepLabel> enumerate_irrep_labels(int n, BD type);

// The full correspondence for rank n; throws if the construction fails to be
// a bijection onto the irreducible labels.
std::map<IrrepLabel, SpringerLabel> springer_table(int n, BD type);

// lambda^red with the multiplicity of each part in eta_support lowered by 1.
// eta_support must consist of odd parts of even multiplicity in lambda.
Partition mu_of_label(const Partition& lambda, const std::vector<int>& eta_support, BD type);

// Stratum partition of the piece the label generates. For type B this is
// mu_of_label at the I+-support of the sign vector. For type D the mod-e
// class must first be normalized against the coset base point: of the two
// vectors in the class, the one vanishing on the smallest I^- part carries
// the eta-support. Labels of noncommutative orbits (I^- empty, I nonempty)
// and very-even labels sit over the stratum lambda^red.
Partition piece_mu(const SpringerLabel& label, BD type);

} // namespace spr
