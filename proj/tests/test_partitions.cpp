#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spr/partition.hpp"

#include <set>

using namespace spr;

TEST_CASE("enumeration counts and filters") {
    CHECK(enumerate_partitions(5).size() == 7);
    CHECK(enumerate_partitions(0).size() == 1);
    CHECK(enumerate_partitions(0)[0] == Partition{});

    auto odd_b = enumerate_partitions(5, PartitionFilter::OddB);
    std::set<Partition> expected = {
        Partition{5}, Partition{3, 1, 1}, Partition{2, 2, 1}, Partition{1, 1, 1, 1, 1}};
    CHECK(std::set<Partition>(odd_b.begin(), odd_b.end()) == expected);

    CHECK_THROWS_AS(enumerate_partitions(4, PartitionFilter::OddB), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_partitions(5, PartitionFilter::OddD), std::invalid_argument);

    // duplicate-free
    for (int n = 0; n <= 8; ++n) {
        auto all = enumerate_partitions(n);
        CHECK(std::set<Partition>(all.begin(), all.end()).size() == all.size());
    }
}

TEST_CASE("partition invariants are enforced") {
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK(partition_from_unsorted({1, 3, 0, 1}) == Partition{3, 1, 1});
}

TEST_CASE("dominance examples") {
    CHECK(dominance_leq(Partition{1, 1, 1}, Partition{2, 1}));
    CHECK_FALSE(dominance_leq(Partition{3, 3}, Partition{4, 1, 1}));
    CHECK_FALSE(dominance_leq(Partition{4, 1, 1}, Partition{3, 3}));
    CHECK(dominance_leq(Partition{2, 2}, Partition{3, 1}));
    CHECK_THROWS_AS(dominance_leq(Partition{2}, Partition{1}), std::invalid_argument);
}

TEST_CASE("dominance is a partial order with known extremes (n <= 8)") {
    for (int n = 1; n <= 8; ++n) {
        auto all = enumerate_partitions(n);
        Partition top{n};
        Partition bot(std::vector<int>(n, 1));
        for (const auto& a : all) {
            CHECK(dominance_leq(a, a));
            CHECK(dominance_leq(a, top));
            CHECK(dominance_leq(bot, a));
            for (const auto& b : all) {
                if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
                for (const auto& c : all)
                    if (dominance_leq(a, b) && dominance_leq(b, c)) CHECK(dominance_leq(a, c));
            }
        }
    }
}

TEST_CASE("merge examples") {
    CHECK(merge({Partition{2, 1}, Partition{2}}) == Partition{2, 2, 1});
    CHECK(merge({Partition{}, Partition{}}) == Partition{});
    CHECK(merge({Partition{3, 1}, Partition{1, 1}}) == Partition{3, 1, 1, 1});
}

TEST_CASE("merge monotonicity over componentwise-dominated tuples") {
    // pairs and triples of partitions with total size <= 8
    for (int total = 0; total <= 8; ++total) {
        for (int n1 = 0; n1 <= total; ++n1) {
            int n2 = total - n1;
            auto as = enumerate_partitions(n1);
            auto bs = enumerate_partitions(n2);
            for (const auto& a1 : as)
                for (const auto& a2 : as) {
                    if (!dominance_leq(a2, a1)) continue;
                    for (const auto& b1 : bs)
                        for (const auto& b2 : bs) {
                            if (!dominance_leq(b2, b1)) continue;
                            auto big = merge({a1, b1});
                            auto small = merge({a2, b2});
                            CHECK(dominance_leq(small, big));
                            if (a1 != a2 || b1 != b2) CHECK(small != big);
                        }
                }
        }
    }
    // one triple spot check
    CHECK(dominance_leq(merge({Partition{1, 1}, Partition{2, 1}, Partition{1, 1}}),
                        merge({Partition{2}, Partition{3}, Partition{1, 1}})));
}

TEST_CASE("lambda_red and u_monomial") {
    CHECK(lambda_red(Partition{3, 3, 2, 2, 1}) == Partition{3, 2});
    CHECK(lambda_red(Partition{1, 1, 1, 1}) == Partition{1, 1});
    CHECK(lambda_red(Partition{5}) == Partition{});

    std::map<int, int> expect{{1, 2}, {3, 1}};
    CHECK(u_monomial(Partition{3, 1, 1}) == expect);
    CHECK(u_monomial(Partition{}).empty());
    CHECK(u_monomial(Partition{2, 2}) == std::map<int, int>{{2, 2}});
}

TEST_CASE("kostka examples") {
    CHECK(kostka(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(kostka(Partition{2, 2}, Partition{2, 2}) == 1);
    CHECK(kostka(Partition{1, 1}, Partition{2}) == 0);
    CHECK_THROWS_AS(kostka(Partition{2}, Partition{1}), std::invalid_argument);
}

TEST_CASE("kostka support equals dominance (n <= 6)") {
    for (int n = 1; n <= 6; ++n) {
        auto all = enumerate_partitions(n);
        for (const auto& la : all) {
            CHECK(kostka(la, la) == 1);
            for (const auto& mu : all)
                CHECK((kostka(la, mu) > 0) == dominance_leq(mu, la));
        }
    }
}

TEST_CASE("bipartition enumeration and canonical form") {
    CHECK(enumerate_bipartitions(2).size() == 5);
    BiPartition bp{Partition{2}, Partition{1}};
    BiPartition swapped{Partition{1}, Partition{2}};
    CHECK(bp.canonical_unordered() == swapped.canonical_unordered());
}
