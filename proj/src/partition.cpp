#include "spr/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace spr {

namespace {

void check_valid(const std::vector<int>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

} // namespace

Partition::Partition(std::vector<int> p) : parts(std::move(p)) { check_valid(parts); }

Partition::Partition(std::initializer_list<int> p) : parts(p) { check_valid(parts); }

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Partition::length() const { return static_cast<int>(parts.size()); }

std::map<int, int> Partition::multiplicities() const {
    std::map<int, int> m;
    for (int p : parts) ++m[p];
    return m;
}

int Partition::multiplicity(int part) const {
    return static_cast<int>(std::count(parts.begin(), parts.end(), part));
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

Partition partition_from_unsorted(std::vector<int> parts) {
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

bool every_even_part_has_even_multiplicity(const Partition& p) {
    for (auto [part, mult] : p.multiplicities())
        if (part % 2 == 0 && mult % 2 != 0) return false;
    return true;
}

std::vector<Partition> enumerate_partitions(int n, PartitionFilter filter) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be nonnegative");
    if (filter == PartitionFilter::OddB && n % 2 == 0)
        throw std::invalid_argument("odd-B filter requires an odd total");
    if (filter == PartitionFilter::OddD && n % 2 != 0)
        throw std::invalid_argument("odd-D filter requires an even total");

    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            Partition p(cur);
            if (filter == PartitionFilter::All || every_even_part_has_even_multiplicity(p))
                out.push_back(std::move(p));
            return;
        }
        for (int k = std::min(rest, maxpart); k >= 1; --k) {
            cur.push_back(k);
            rec(rest - k, k);
            cur.pop_back();
        }
    };
    rec(n, n == 0 ? 1 : n);
    std::sort(out.begin(), out.end());
    return out;
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
    if (mu.size() != lambda.size())
        throw std::invalid_argument("dominance_leq: partitions must have equal size");
    int a = 0, b = 0;
    std::size_t len = std::max(mu.parts.size(), lambda.parts.size());
    for (std::size_t i = 0; i < len; ++i) {
        a += i < mu.parts.size() ? mu.parts[i] : 0;
        b += i < lambda.parts.size() ? lambda.parts[i] : 0;
        if (a > b) return false;
    }
    return true;
}

Partition merge(const std::vector<Partition>& parts_list) {
    std::vector<int> all;
    for (const auto& p : parts_list) all.insert(all.end(), p.parts.begin(), p.parts.end());
    return partition_from_unsorted(std::move(all));
}

Partition lambda_red(const Partition& lambda) {
    std::vector<int> out;
    for (auto [part, mult] : lambda.multiplicities())
        for (int i = 0; i < mult / 2; ++i) out.push_back(part);
    return partition_from_unsorted(std::move(out));
}

std::map<int, int> u_monomial(const Partition& mu) {
    return mu.multiplicities();
}

namespace {

// Fill SSYT cells row by row; entry bounds come from row weakness and column
// strictness against the row above.
long count_ssyt(const std::vector<int>& shape, std::vector<int>& remaining,
                std::vector<std::vector<int>>& tab, int row, int col) {
    int nrows = static_cast<int>(shape.size());
    if (row == nrows) return 1;
    int next_row = row, next_col = col + 1;
    if (next_col == shape[row]) { next_row = row + 1; next_col = 0; }

    int lo = 1;
    if (col > 0) lo = std::max(lo, tab[row][col - 1]);           // weakly increasing in rows
    if (row > 0) lo = std::max(lo, tab[row - 1][col] + 1);       // strictly increasing in columns

    long total = 0;
    int maxval = static_cast<int>(remaining.size());
    for (int v = lo; v <= maxval; ++v) {
        if (remaining[v - 1] == 0) continue;
        --remaining[v - 1];
        tab[row][col] = v;
        total += count_ssyt(shape, remaining, tab, next_row, next_col);
        ++remaining[v - 1];
    }
    return total;
}

} // namespace

long kostka(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("kostka: |lambda| must equal |mu|");
    if (lambda.size() == 0) return 1;
    std::vector<int> remaining = mu.parts;
    std::vector<std::vector<int>> tab(lambda.parts.size());
    for (std::size_t i = 0; i < lambda.parts.size(); ++i) tab[i].assign(lambda.parts[i], 0);
    return count_ssyt(lambda.parts, remaining, tab, 0, 0);
}

BiPartition BiPartition::canonical_unordered() const {
    if (second < first) return {second, first};
    return *this;
}

std::string BiPartition::to_string() const {
    return first.to_string() + "|" + second.to_string();
}

std::vector<BiPartition> enumerate_bipartitions(int n) {
    std::vector<BiPartition> out;
    for (int k = 0; k <= n; ++k)
        for (const auto& a : enumerate_partitions(k))
            for (const auto& b : enumerate_partitions(n - k)) out.push_back({a, b});
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace spr
