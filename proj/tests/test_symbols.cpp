#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spr/rational.hpp"
#include "spr/symbol.hpp"

#include <set>

using namespace spr;

TEST_CASE("symbol_of examples, type B") {
    auto s = symbol_of({Partition{1}, Partition{1}}, BD::B);
    CHECK(s.top == std::vector<int>{0, 3});
    CHECK(s.bottom == std::vector<int>{1});

    s = symbol_of({Partition{2}, Partition{}}, BD::B);
    CHECK(s.top == std::vector<int>{2});
    CHECK(s.bottom.empty());

    s = symbol_of({Partition{}, Partition{}}, BD::B);
    CHECK(s.top == std::vector<int>{0});
    CHECK(s.bottom.empty());
}

TEST_CASE("symbol reduction and padding are inverse") {
    auto s = symbol_of({Partition{1}, Partition{1}}, BD::B);
    auto padded = pad_symbol(s, 2);
    CHECK(padded.top == std::vector<int>{0, 2, 4, 7});
    CHECK(reduce_symbol(padded) == s);
    CHECK(similar(padded, s));
}

TEST_CASE("distinct bipartitions give distinct canonical symbols (n <= 6)") {
    for (int n = 0; n <= 6; ++n) {
        for (BD type : {BD::B, BD::D}) {
            std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
            if (type == BD::B) {
                for (const auto& bp : enumerate_bipartitions(n)) {
                    auto s = symbol_of(bp, type);
                    CHECK(seen.insert({s.top, s.bottom}).second);
                    CHECK(symbol_to_bipartition(s) == bp);
                }
            } else {
                std::set<BiPartition> canon;
                for (const auto& bp : enumerate_bipartitions(n))
                    canon.insert(bp.canonical_unordered());
                for (const auto& bp : canon) {
                    auto s = symbol_of(bp, type);
                    CHECK(seen.insert({s.top, s.bottom}).second);
                    CHECK(symbol_to_bipartition(s).canonical_unordered() == bp);
                }
            }
        }
    }
}

TEST_CASE("spr1 examples, type B") {
    CHECK(spr1(Partition{3, 1, 1}, BD::B) == BiPartition{Partition{1}, Partition{1}});
    CHECK(spr1(Partition{2, 2, 1}, BD::B) == BiPartition{Partition{}, Partition{2}});
    CHECK(spr1(Partition{1, 1, 1, 1, 1}, BD::B) == BiPartition{Partition{}, Partition{1, 1}});
    CHECK(spr1(Partition{5}, BD::B) == BiPartition{Partition{2}, Partition{}});
    CHECK_THROWS_AS(spr1(Partition{4, 1}, BD::B), std::invalid_argument);
}

TEST_CASE("spr1 image has weakly increasing symbol entries (n <= 8)") {
    for (BD type : {BD::B, BD::D}) {
        for (int n = 1; n <= 8; ++n) {
            int total = type == BD::B ? 2 * n + 1 : 2 * n;
            for (const auto& lambda : enumerate_partitions(total, orbit_filter(type))) {
                auto s = symbol_of(spr1(lambda, type), type);
                // merge rows preserving the staggered reading order
                std::vector<int> seq;
                for (std::size_t i = 0; i < s.top.size() || i < s.bottom.size(); ++i) {
                    if (i < s.top.size()) seq.push_back(s.top[i]);
                    if (i < s.bottom.size()) seq.push_back(s.bottom[i]);
                }
                // type B interleaves top first; D rows have equal length and the
                // bottom entry at index i sits between top i and top i+1 only up
                // to the unordered convention, so sortedness is the invariant.
                CHECK(std::is_sorted(seq.begin(), seq.end()));
            }
        }
    }
}

TEST_CASE("odd_part_data examples") {
    auto d = odd_part_data(Partition{3, 1, 1}, BD::B);
    CHECK(d.entry(1).interval == std::vector<int>{0, 1});
    CHECK(d.entry(1).ell == 0);
    CHECK(d.entry(3).interval == std::vector<int>{3});
    CHECK(d.entry(3).ell == 1);

    d = odd_part_data(Partition{5}, BD::B);
    CHECK(d.entry(5).interval == std::vector<int>{2});
    CHECK(d.entry(5).ell == 1);

    d = odd_part_data(Partition{3, 3, 1, 1}, BD::D);
    CHECK(d.entry(1).ell == 0);
    CHECK(d.entry(3).ell == 0);
}

TEST_CASE("odd_part_data structural invariants (n <= 8)") {
    for (BD type : {BD::B, BD::D}) {
        for (int n = 1; n <= 8; ++n) {
            int total = type == BD::B ? 2 * n + 1 : 2 * n;
            for (const auto& lambda : enumerate_partitions(total, orbit_filter(type))) {
                auto d = odd_part_data(lambda, type);
                int ell_sum = 0, minus = 0;
                for (const auto& e : d.entries) {
                    CHECK(static_cast<int>(e.interval.size()) == e.mult);
                    CHECK((e.ell == 0 || e.ell == 1 || e.ell == -1));
                    CHECK((e.ell == 0) == (e.mult % 2 == 0));
                    ell_sum += e.ell;
                    if (e.ell != 0) ++minus;
                }
                int plus_ones = 0, minus_ones = 0;
                for (const auto& e : d.entries) {
                    if (e.ell == 1) ++plus_ones;
                    if (e.ell == -1) ++minus_ones;
                }
                if (type == BD::B) {
                    CHECK(ell_sum == 1);
                    CHECK(minus % 2 == 1);
                    CHECK(plus_ones == minus_ones + 1); // k+1 against k
                } else {
                    CHECK(ell_sum == 0);
                    CHECK(minus % 2 == 0);
                    CHECK(plus_ones == minus_ones);
                }
            }
        }
    }
}

TEST_CASE("spr_characters examples") {
    CHECK(spr_characters(Partition{3, 1, 1}, BD::B).size() == 2);
    CHECK(spr_characters(Partition{5}, BD::B).size() == 1);
    CHECK(spr_characters(Partition{3, 2, 2, 1}, BD::D).size() == 1);
    // very-even orbit: one trivial character per tag
    auto ve = spr_characters(Partition{2, 2}, BD::D);
    REQUIRE(ve.size() == 2);
    CHECK(ve[0].character.empty());
    CHECK(ve[0].very_even_tag.has_value());
}

TEST_CASE("character_to_bipartition examples") {
    SpringerLabel swap1{Partition{3, 1, 1}, std::nullopt, {{1, 1}, {3, 0}}};
    CHECK(character_to_bipartition(swap1, BD::B) == BiPartition{Partition{1, 1}, Partition{}});

    SpringerLabel trivial{Partition{3, 1, 1}, std::nullopt, {{1, 0}, {3, 0}}};
    CHECK(character_to_bipartition(trivial, BD::B) == BiPartition{Partition{1}, Partition{1}});

    SpringerLabel five{Partition{5}, std::nullopt, {{5, 0}}};
    CHECK(character_to_bipartition(five, BD::B) == BiPartition{Partition{2}, Partition{}});
}

TEST_CASE("all labels from one orbit have similar symbols") {
    for (BD type : {BD::B, BD::D}) {
        for (int n = 1; n <= 6; ++n) {
            int total = type == BD::B ? 2 * n + 1 : 2 * n;
            for (const auto& lambda : enumerate_partitions(total, orbit_filter(type))) {
                auto base = symbol_of(spr1(lambda, type), type);
                for (const auto& label : spr_characters(lambda, type))
                    CHECK(similar(label_symbol(label, type), base));
            }
        }
    }
}

TEST_CASE("distinct orbits land in distinct similarity classes") {
    for (BD type : {BD::B, BD::D}) {
        for (int n = 1; n <= 6; ++n) {
            int total = type == BD::B ? 2 * n + 1 : 2 * n;
            auto orbits = enumerate_partitions(total, orbit_filter(type));
            for (std::size_t i = 0; i < orbits.size(); ++i)
                for (std::size_t j = i + 1; j < orbits.size(); ++j)
                    CHECK_FALSE(similar(symbol_of(spr1(orbits[i], type), type),
                                        symbol_of(spr1(orbits[j], type), type)));
        }
    }
}

TEST_CASE("coset decomposition examples") {
    auto cs = coset_decomposition(Partition{3, 1, 1}, BD::B);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].size() == 2);

    cs = coset_decomposition(Partition{5}, BD::B);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].size() == 1);

    cs = coset_decomposition(Partition{3, 2, 2, 1}, BD::D);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].size() == 1);
}

TEST_CASE("coset counts follow the binomial formulas (n <= 8)") {
    for (BD type : {BD::B, BD::D}) {
        for (int n = 1; n <= 8; ++n) {
            int total = type == BD::B ? 2 * n + 1 : 2 * n;
            for (const auto& lambda : enumerate_partitions(total, orbit_filter(type))) {
                auto d = odd_part_data(lambda, type);
                int minus = static_cast<int>(d.i_minus().size());
                int plus = static_cast<int>(d.i_plus().size());
                auto cosets = coset_decomposition(lambda, type);
                auto labels = spr_characters(lambda, type);
                if (type == BD::B) {
                    int k = (minus - 1) / 2;
                    CHECK(Int(cosets.size()) == binomial(2 * k + 1, k));
                    CHECK(Int(labels.size()) == binomial(2 * k + 1, k) * (Int(1) << plus));
                    for (const auto& c : cosets) CHECK(Int(c.size()) == (Int(1) << plus));
                } else if (minus > 0) {
                    int k = minus / 2;
                    CHECK(Int(cosets.size()) == binomial(2 * k, k) / 2);
                    for (const auto& c : cosets) CHECK(Int(c.size()) == (Int(1) << plus));
                } else if (!d.entries.empty()) {
                    CHECK(cosets.size() == 1);
                    CHECK(Int(cosets[0].size()) == (Int(1) << (d.entries.size() - 1)));
                } else {
                    CHECK(cosets.size() == 1);
                    CHECK(cosets[0].size() == 1);
                }
            }
        }
    }
}

TEST_CASE("cosets partition the character set") {
    for (BD type : {BD::B, BD::D}) {
        for (int n = 1; n <= 7; ++n) {
            int total = type == BD::B ? 2 * n + 1 : 2 * n;
            for (const auto& lambda : enumerate_partitions(total, orbit_filter(type))) {
                auto labels = spr_characters(lambda, type);
                std::set<SpringerLabel> from_chars;
                for (auto l : labels) {
                    l.very_even_tag.reset(); // cosets are tag-free
                    from_chars.insert(l);
                }
                std::set<SpringerLabel> from_cosets;
                std::size_t total_size = 0;
                for (const auto& coset : coset_decomposition(lambda, type)) {
                    total_size += coset.size();
                    for (const auto& l : coset) CHECK(from_cosets.insert(l).second);
                }
                CHECK(total_size == from_cosets.size()); // pairwise disjoint
                CHECK(from_cosets == from_chars);
            }
        }
    }
}

TEST_CASE("springer_table small cases") {
    auto b1 = springer_table(1, BD::B);
    CHECK(b1.size() == 2);
    IrrepLabel k1{{Partition{1}, Partition{}}, std::nullopt};
    IrrepLabel k2{{Partition{}, Partition{1}}, std::nullopt};
    CHECK(b1.at(k1).orbit == Partition{3});
    CHECK(b1.at(k2).orbit == Partition{1, 1, 1});

    auto b2 = springer_table(2, BD::B);
    CHECK(b2.size() == 5);
    int from_311 = 0;
    for (const auto& [key, label] : b2)
        if (label.orbit == Partition{3, 1, 1}) ++from_311;
    CHECK(from_311 == 2);

    auto d4 = springer_table(4, BD::D);
    CHECK(d4.size() == 13);
    int from_3311 = 0;
    for (const auto& [key, label] : d4)
        if (label.orbit == Partition{3, 3, 1, 1}) ++from_3311;
    CHECK(from_3311 == 2);
}

TEST_CASE("springer_table is a bijection for n <= 8, both types") {
    for (BD type : {BD::B, BD::D})
        for (int n = 1; n <= 8; ++n) {
            auto table = springer_table(n, type); // throws on any defect
            CHECK(table.size() == enumerate_irrep_labels(n, type).size());
        }
}

TEST_CASE("mu_of_label examples") {
    CHECK(mu_of_label(Partition{3, 3, 1, 1, 1}, {3}, BD::B) == Partition{1});
    CHECK(mu_of_label(Partition{3, 1, 1}, {}, BD::B) == Partition{1});
    CHECK(mu_of_label(Partition{3, 3, 1, 1}, {1, 3}, BD::D) == Partition{});
    CHECK_THROWS_AS(mu_of_label(Partition{3, 1, 1}, {3}, BD::B), std::invalid_argument);
}
