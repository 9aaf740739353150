#pragma once

#include <map>
#include <string>
#include <vector>

namespace spr {

// Weakly decreasing sequence of positive integers. The empty partition is
// allowed and denotes the unique partition of 0.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);
    Partition(std::initializer_list<int> p);

    int size() const;   // |lambda|
    int length() const; // number of parts

    // multiplicity map: part value -> count
    std::map<int, int> multiplicities() const;
    int multiplicity(int part) const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

    std::string to_string() const; // e.g. "(3,1,1)" / "()"
};

// Sorts a multiset of parts into a valid partition; zero parts are dropped.
Partition partition_from_unsorted(std::vector<int> parts);

enum class PartitionFilter { All, OddB, OddD };

// All partitions of n, lexicographically sorted (as decreasing part vectors).
// OddB keeps partitions of an odd total where every even part has even
// multiplicity; OddD is the same filter for an even total. A parity mismatch
// between filter and n throws std::invalid_argument.
std::vector<Partition> enumerate_partitions(int n, PartitionFilter filter = PartitionFilter::All);

bool every_even_part_has_even_multiplicity(const Partition& p);

// mu <= lambda in dominance order; requires |mu| == |lambda|.
bool dominance_leq(const Partition& mu, const Partition& lambda);

// Multiset union of parts of all inputs, as a partition.
Partition merge(const std::vector<Partition>& parts_list);

// Each part i kept with multiplicity floor(r_i / 2).
Partition lambda_red(const Partition& lambda);

// Exponent map of the monomial prod_i u_i^{r_i}.
std::map<int, int> u_monomial(const Partition& mu);

// Number of semistandard Young tableaux of shape lambda and content mu,
// by direct enumeration. Requires |lambda| == |mu|.
long kostka(const Partition& lambda, const Partition& mu);

// Ordered pair of partitions. For type D the canonical unordered form keeps
// the lexicographically smaller component first.
struct BiPartition {
    Partition first;
    Partition second;

    bool operator==(const BiPartition&) const = default;
    auto operator<=>(const BiPartition&) const = default;

    BiPartition canonical_unordered() const;
    std::string to_string() const;
};

// All ordered bipartitions (xi, nu) with |xi| + |nu| = n.
std::vector<BiPartition> enumerate_bipartitions(int n);

} // namespace spr
