#include "spr/symbol.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace spr {

PartitionFilter orbit_filter(BD type) {
    return type == BD::B ? PartitionFilter::OddB : PartitionFilter::OddD;
}

bool is_orbit_partition(const Partition& lambda, BD type) {
    if (type == BD::B && lambda.size() % 2 == 0) return false;
    if (type == BD::D && lambda.size() % 2 != 0) return false;
    return every_even_part_has_even_multiplicity(lambda);
}

std::string Symbol::to_string() const {
    auto row = [](const std::vector<int>& r) {
        std::string s = "{";
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(r[i]);
        }
        return s + "}";
    };
    return row(top) + "/" + row(bottom);
}

namespace {

// increasing parts of p padded with leading zeros to length len
std::vector<int> padded_increasing(const Partition& p, int len) {
    std::vector<int> v(len, 0);
    int off = len - p.length();
    if (off < 0) throw std::logic_error("padded_increasing: padding too short");
    for (int i = 0; i < p.length(); ++i) v[off + i] = p.parts[p.length() - 1 - i];
    return v;
}

std::vector<int> row_of(const Partition& p, int len) {
    auto v = padded_increasing(p, len);
    for (int i = 0; i < len; ++i) v[i] += 2 * i;
    return v;
}

bool reducible(const Symbol& s) {
    if (s.top.empty() || s.bottom.empty()) return false;
    if (s.top.front() != 0 || s.bottom.front() != 0) return false;
    // after dropping the shared 0s every remaining entry must stay >= 0
    for (std::size_t i = 1; i < s.top.size(); ++i)
        if (s.top[i] < 2) return false;
    for (std::size_t i = 1; i < s.bottom.size(); ++i)
        if (s.bottom[i] < 2) return false;
    return true;
}

} // namespace

Symbol reduce_symbol(Symbol s) {
    while (reducible(s)) {
        s.top.erase(s.top.begin());
        s.bottom.erase(s.bottom.begin());
        for (int& x : s.top) x -= 2;
        for (int& x : s.bottom) x -= 2;
    }
    return s;
}

Symbol pad_symbol(Symbol s, int steps) {
    for (int k = 0; k < steps; ++k) {
        for (int& x : s.top) x += 2;
        for (int& x : s.bottom) x += 2;
        s.top.insert(s.top.begin(), 0);
        s.bottom.insert(s.bottom.begin(), 0);
    }
    return s;
}

Symbol symbol_of(const BiPartition& bp, BD type) {
    Symbol s;
    s.type = type;
    if (type == BD::B) {
        int r = std::max({bp.first.length() - 1, bp.second.length(), 0});
        s.top = row_of(bp.first, r + 1);
        s.bottom = row_of(bp.second, r);
    } else {
        int r = std::max({bp.first.length(), bp.second.length(), 1});
        s.top = row_of(bp.first, r);
        s.bottom = row_of(bp.second, r);
    }
    return reduce_symbol(std::move(s));
}

Partition row_to_partition(const std::vector<int>& row) {
    std::vector<int> parts;
    int prev = 0;
    for (std::size_t i = 0; i < row.size(); ++i) {
        int v = row[i] - 2 * static_cast<int>(i);
        if (v < 0 || v < prev) throw std::logic_error("row_to_partition: not a symbol row");
        prev = v;
        if (v > 0) parts.push_back(v);
    }
    return partition_from_unsorted(std::move(parts));
}

BiPartition symbol_to_bipartition(const Symbol& s) {
    return {row_to_partition(s.top), row_to_partition(s.bottom)};
}

std::vector<int> symbol_entry_multiset(const Symbol& s) {
    std::vector<int> all = s.top;
    all.insert(all.end(), s.bottom.begin(), s.bottom.end());
    std::sort(all.begin(), all.end());
    return all;
}

bool similar(const Symbol& a, const Symbol& b) {
    if (a.type != b.type) return false;
    Symbol x = reduce_symbol(a), y = reduce_symbol(b);
    int dx = static_cast<int>(x.top.size());
    int dy = static_cast<int>(y.top.size());
    if (dx < dy) x = pad_symbol(x, dy - dx);
    if (dy < dx) y = pad_symbol(y, dx - dy);
    return symbol_entry_multiset(x) == symbol_entry_multiset(y);
}

BiPartition spr1(const Partition& lambda, BD type) {
    if (!is_orbit_partition(lambda, type))
        throw std::invalid_argument("spr1: partition fails the orbit filter for this type");
    // work with lambda sorted increasing (explicit, per the construction)
    std::vector<int> inc(lambda.parts.rbegin(), lambda.parts.rend());
    std::vector<int> xi, nu;
    for (std::size_t i = 0; i < inc.size(); ++i) {
        int v = inc[i] + static_cast<int>(i);
        if (v % 2 == 1)
            xi.push_back((v - 1) / 2);
        else
            nu.push_back(v / 2);
    }
    // xi, nu are increasing; subtract the index to undo the stagger
    for (std::size_t i = 0; i < xi.size(); ++i) xi[i] -= static_cast<int>(i);
    for (std::size_t i = 0; i < nu.size(); ++i) nu[i] -= static_cast<int>(i);
    return {partition_from_unsorted(std::move(xi)), partition_from_unsorted(std::move(nu))};
}

std::vector<int> OddPartData::odd_parts() const {
    std::vector<int> v;
    for (const auto& e : entries) v.push_back(e.part);
    return v;
}

std::vector<int> OddPartData::i_plus() const {
    std::vector<int> v;
    for (const auto& e : entries)
        if (e.ell == 0) v.push_back(e.part);
    return v;
}

std::vector<int> OddPartData::i_minus() const {
    std::vector<int> v;
    for (const auto& e : entries)
        if (e.ell != 0) v.push_back(e.part);
    return v;
}

const OddPartEntry& OddPartData::entry(int part) const {
    for (const auto& e : entries)
        if (e.part == part) return e;
    throw std::invalid_argument("odd part not present in lambda");
}

OddPartData odd_part_data(const Partition& lambda, BD type) {
    OddPartData data;
    data.base = symbol_of(spr1(lambda, type), type);

    std::set<int> top(data.base.top.begin(), data.base.top.end());
    std::set<int> bottom(data.base.bottom.begin(), data.base.bottom.end());
    std::set<int> sym_diff;
    for (int v : top)
        if (!bottom.count(v)) sym_diff.insert(v);
    for (int v : bottom)
        if (!top.count(v)) sym_diff.insert(v);

    // maximal runs of consecutive integers, left to right
    std::vector<std::vector<int>> runs;
    for (int v : sym_diff) {
        if (!runs.empty() && runs.back().back() == v - 1)
            runs.back().push_back(v);
        else
            runs.push_back({v});
    }

    std::vector<int> odd_parts;
    for (auto [part, mult] : lambda.multiplicities())
        if (part % 2 == 1) odd_parts.push_back(part);
    std::sort(odd_parts.begin(), odd_parts.end());

    if (runs.size() != odd_parts.size())
        throw std::logic_error("odd_part_data: interval count does not match odd part count");

    for (std::size_t i = 0; i < runs.size(); ++i) {
        OddPartEntry e;
        e.part = odd_parts[i];
        e.mult = lambda.multiplicity(e.part);
        e.interval = runs[i];
        if (static_cast<int>(e.interval.size()) != e.mult)
            throw std::logic_error("odd_part_data: interval length does not match multiplicity");
        int in_top = 0, in_bottom = 0;
        for (int v : e.interval) (top.count(v) ? in_top : in_bottom)++;
        e.ell = in_top - in_bottom;
        data.entries.push_back(std::move(e));
    }
    return data;
}

std::vector<int> SpringerLabel::support() const {
    std::vector<int> v;
    for (auto [part, c] : character)
        if (c) v.push_back(part);
    return v;
}

std::string SpringerLabel::to_string() const {
    std::string s = orbit.to_string();
    if (very_even_tag) s += *very_even_tag == 0 ? "[I]" : "[II]";
    s += ":";
    for (auto [part, c] : character) s += std::to_string(part) + "->" + std::to_string(c) + " ";
    return s;
}

namespace {

// all sign vectors on the odd parts with total ell over the support zero
std::vector<std::map<int, int>> sigma_lambda(const OddPartData& data) {
    std::vector<int> parts = data.odd_parts();
    int k = static_cast<int>(parts.size());
    std::vector<std::map<int, int>> out;
    for (int mask = 0; mask < (1 << k); ++mask) {
        int total = 0;
        std::map<int, int> c;
        for (int i = 0; i < k; ++i) {
            int bit = (mask >> i) & 1;
            c[parts[i]] = bit;
            if (bit) total += data.entry(parts[i]).ell;
        }
        if (total == 0) out.push_back(std::move(c));
    }
    return out;
}

std::map<int, int> flip_character(const std::map<int, int>& c) {
    std::map<int, int> f;
    for (auto [part, v] : c) f[part] = 1 - v;
    return f;
}

// canonical representative mod the all-ones vector: value 0 on the smallest part
std::map<int, int> canonical_mod_e(std::map<int, int> c) {
    if (!c.empty() && c.begin()->second == 1) return flip_character(c);
    return c;
}

} // namespace

std::vector<SpringerLabel> spr_characters(const Partition& lambda, BD type) {
    auto data = odd_part_data(lambda, type);
    std::vector<SpringerLabel> out;
    if (type == BD::D && data.entries.empty()) {
        // very-even orbit: trivial component group, one label per orbit tag
        out.push_back({lambda, 0, {}});
        out.push_back({lambda, 1, {}});
        return out;
    }
    auto sigma = sigma_lambda(data);
    if (type == BD::B) {
        for (auto& c : sigma) out.push_back({lambda, std::nullopt, std::move(c)});
    } else {
        std::set<std::map<int, int>> seen;
        for (auto& c : sigma) {
            auto rep = canonical_mod_e(std::move(c));
            if (seen.insert(rep).second) out.push_back({lambda, std::nullopt, std::move(rep)});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Symbol label_symbol(const SpringerLabel& label, BD type) {
    auto data = odd_part_data(label.orbit, type);
    std::set<int> top(data.base.top.begin(), data.base.top.end());
    std::set<int> bottom(data.base.bottom.begin(), data.base.bottom.end());
    for (auto [part, c] : label.character) {
        if (!c) continue;
        for (int v : data.entry(part).interval) {
            if (top.count(v)) {
                top.erase(v);
                bottom.insert(v);
            } else {
                bottom.erase(v);
                top.insert(v);
            }
        }
    }
    Symbol s;
    s.type = type;
    s.top.assign(top.begin(), top.end());
    s.bottom.assign(bottom.begin(), bottom.end());
    if (type == BD::B && s.top.size() != s.bottom.size() + 1)
        throw std::logic_error("label_symbol: swap broke the type-B row sizes");
    if (type == BD::D && s.top.size() != s.bottom.size())
        throw std::logic_error("label_symbol: swap broke the type-D row sizes");
    return s;
}

BiPartition character_to_bipartition(const SpringerLabel& label, BD type) {
    if (type == BD::D && label.character.empty() && !is_orbit_partition(label.orbit, BD::D))
        throw std::invalid_argument("character_to_bipartition: invalid label");
    auto bp = symbol_to_bipartition(label_symbol(label, type));
    if (type == BD::D) return bp.canonical_unordered();
    return bp;
}

std::vector<std::vector<SpringerLabel>> coset_decomposition(const Partition& lambda, BD type) {
    auto data = odd_part_data(lambda, type);
    auto i_minus = data.i_minus();

    if (type == BD::D && data.entries.empty())
        return {{SpringerLabel{lambda, std::nullopt, {}}}};

    auto restriction = [&](const std::map<int, int>& c) {
        std::vector<int> key;
        for (int m : i_minus) key.push_back(c.at(m));
        return key;
    };

    std::map<std::vector<int>, std::vector<SpringerLabel>> groups;
    if (type == BD::B) {
        for (auto& c : sigma_lambda(data))
            groups[restriction(c)].push_back({lambda, std::nullopt, std::move(c)});
    } else {
        // cosets pair up under the all-ones flip; key by the smaller pattern
        std::set<std::map<int, int>> seen;
        for (auto& c : sigma_lambda(data)) {
            auto rep = canonical_mod_e(c);
            if (!seen.insert(rep).second) continue;
            auto key = restriction(c);
            std::vector<int> flipped(key.size());
            for (std::size_t i = 0; i < key.size(); ++i) flipped[i] = 1 - key[i];
            groups[std::min(key, flipped)].push_back({lambda, std::nullopt, std::move(rep)});
        }
    }

    std::vector<std::vector<SpringerLabel>> out;
    for (auto& [key, labels] : groups) {
        std::sort(labels.begin(), labels.end());
        out.push_back(std::move(labels));
    }
    return out;
}

std::string IrrepLabel::to_string() const {
    std::string s = bp.to_string();
    if (copy_tag) s += *copy_tag == 0 ? "[I]" : "[II]";
    return s;
}

std::vector<IrrepLabel> enumerate_irrep_labels(int n, BD type) {
    std::vector<IrrepLabel> out;
    if (type == BD::B) {
        for (auto& bp : enumerate_bipartitions(n)) out.push_back({bp, std::nullopt});
        return out;
    }
    std::set<BiPartition> seen;
    for (auto& bp : enumerate_bipartitions(n)) {
        auto c = bp.canonical_unordered();
        if (!seen.insert(c).second) continue;
        if (c.first == c.second) {
            out.push_back({c, 0});
            out.push_back({c, 1});
        } else {
            out.push_back({c, std::nullopt});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::map<IrrepLabel, SpringerLabel> springer_table(int n, BD type) {
    if (n < 1) throw std::invalid_argument("springer_table: n must be positive");
    int total = type == BD::B ? 2 * n + 1 : 2 * n;
    std::map<IrrepLabel, SpringerLabel> table;
    for (const auto& lambda : enumerate_partitions(total, orbit_filter(type))) {
        for (const auto& label : spr_characters(lambda, type)) {
            IrrepLabel key{character_to_bipartition(label, type), std::nullopt};
            // the tag-to-copy pairing for very-even orbits is a fixed convention
            if (label.very_even_tag) key.copy_tag = label.very_even_tag;
            if (!table.emplace(key, label).second)
                throw std::logic_error("springer_table: duplicate irreducible label " + key.to_string());
        }
    }
    auto expected = enumerate_irrep_labels(n, type);
    if (table.size() != expected.size())
        throw std::logic_error("springer_table: label count mismatch");
    for (const auto& key : expected)
        if (!table.count(key))
            throw std::logic_error("springer_table: missing irreducible label " + key.to_string());
    return table;
}

Partition piece_mu(const SpringerLabel& label, BD type) {
    if (label.very_even_tag) return lambda_red(label.orbit);
    auto data = odd_part_data(label.orbit, type);
    auto iplus = data.i_plus();
    auto iminus = data.i_minus();

    std::map<int, int> c = label.character;
    if (type == BD::D) {
        if (iminus.empty()) return lambda_red(label.orbit); // noncommutative stratum
        // normalize the mod-e class: eta is read off the member vanishing on
        // the smallest I^- part
        if (c.at(iminus.front()) == 1)
            for (auto& [part, v] : c) v = 1 - v;
    }
    std::vector<int> support;
    for (int m : iplus)
        if (c.at(m) == 1) support.push_back(m);
    return mu_of_label(label.orbit, support, type);
}

Partition mu_of_label(const Partition& lambda, const std::vector<int>& eta_support, BD type) {
    auto data = odd_part_data(lambda, type);
    auto iplus = data.i_plus();
    auto mu = lambda_red(lambda).parts;
    for (int m : eta_support) {
        if (std::find(iplus.begin(), iplus.end(), m) == iplus.end())
            throw std::invalid_argument("mu_of_label: support part not in I+");
        auto it = std::find(mu.begin(), mu.end(), m);
        if (it == mu.end()) throw std::logic_error("mu_of_label: part missing from lambda^red");
        mu.erase(it);
    }
    return partition_from_unsorted(std::move(mu));
}

} // namespace spr
