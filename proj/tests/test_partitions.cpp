#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "su3census/irreps.hpp"
#include "su3census/partitions.hpp"

using namespace su3census;

namespace {

PartSet r3_parts(long long limit) { return PartSet::from_values(build_census(limit).support()); }

std::vector<std::vector<long long>> collect(long long n, const PartSet& parts, long long max_part) {
    std::vector<std::vector<long long>> out;
    enumerate_restricted(n, parts, max_part, [&](const std::vector<long long>& p) { out.push_back(p); });
    return out;
}

}  // namespace

TEST_CASE("restricted enumeration of 6 over the achievable dimensions") {
    const auto got = collect(6, r3_parts(6), 6);
    const std::vector<std::vector<long long>> expected = {
        {6}, {3, 3}, {3, 1, 1, 1}, {1, 1, 1, 1, 1, 1}};
    CHECK(got == expected);
}

TEST_CASE("restricted enumeration of 5 over the achievable dimensions") {
    const auto got = collect(5, r3_parts(5), 5);
    const std::vector<std::vector<long long>> expected = {{3, 1, 1}, {1, 1, 1, 1, 1}};
    CHECK(got == expected);
}

TEST_CASE("zero has exactly the empty partition") {
    const auto got = collect(0, r3_parts(3), 3);
    REQUIRE(got.size() == 1);
    CHECK(got[0].empty());
}

TEST_CASE("a sum with no admissible decomposition yields an empty stream") {
    const auto got = collect(7, PartSet::from_values({3, 5}), 7);
    CHECK(got.empty());
}

TEST_CASE("max_part truncates the stream") {
    const auto got = collect(6, r3_parts(6), 3);
    const std::vector<std::vector<long long>> expected = {{3, 3}, {3, 1, 1, 1}, {1, 1, 1, 1, 1, 1}};
    CHECK(got == expected);
}

TEST_CASE("yielded partitions are ordered, sum correctly, use admissible parts only") {
    const PartSet parts = r3_parts(40);
    for (long long n : {1, 7, 19, 40}) {
        std::set<std::vector<long long>> seen;
        std::size_t count = 0;
        enumerate_restricted(n, parts, n, [&](const std::vector<long long>& p) {
            const Partition partition{p};
            REQUIRE(partition.ordered());
            REQUIRE(partition.sum() == n);
            for (long long part : p) REQUIRE(parts.contains(part));
            seen.insert(p);
            ++count;
        });
        REQUIRE(seen.size() == count);  // no duplicates
        REQUIRE(BigCount(count) == count_restricted(n, parts, n));
    }
}

TEST_CASE("unrestricted stream length matches the pentagonal recurrence") {
    for (long long n = 0; n <= 40; ++n) {
        const PartSet all = PartSet::consecutive(std::max<long long>(n, 1));
        std::size_t count = 0;
        enumerate_restricted(n, all, std::max<long long>(n, 1),
                             [&](const std::vector<long long>&) { ++count; });
        REQUIRE(BigCount(count) == count_partitions_exact(n));
    }
}

TEST_CASE("exact partition numbers") {
    CHECK(count_partitions_exact(0) == 1);
    CHECK(count_partitions_exact(6) == 11);
    CHECK(count_partitions_exact(60) == 966467);
    CHECK(count_partitions_exact(100) == 190569292);
    CHECK(count_partitions_exact(1000) == BigCount("24061467864032622473692149727991"));
}

TEST_CASE("asymptotic estimate brackets the exact count and improves") {
    CHECK(hardy_ramanujan_estimate(1) ==
          Catch::Approx(std::exp(M_PI * std::sqrt(2.0 / 3.0)) / (4.0 * std::sqrt(3.0))));
    const double r100 = to_double(count_partitions_exact(100)) / hardy_ramanujan_estimate(100);
    CHECK(r100 > 0.9);
    CHECK(r100 < 1.1);
    const double r1000 = to_double(count_partitions_exact(1000)) / hardy_ramanujan_estimate(1000);
    CHECK(std::abs(r1000 - 1.0) < std::abs(r100 - 1.0));
}

TEST_CASE("run-length shape of a partition") {
    const PartitionShape s1 = to_shape(Partition{{3, 1, 1, 1}});
    REQUIRE(s1.entries.size() == 2);
    CHECK(s1.entries[0] == PartitionShape::Entry{3, 1});
    CHECK(s1.entries[1] == PartitionShape::Entry{1, 3});
    CHECK(s1.component_count() == 4);

    CHECK(to_shape(Partition{{6}}).entries == std::vector<PartitionShape::Entry>{{6, 1}});
    CHECK(to_shape(Partition{{3, 3}}).entries == std::vector<PartitionShape::Entry>{{3, 2}});
    CHECK(to_shape(Partition{{}}).entries.empty());
}

TEST_CASE("prepending a part at least as large keeps the partition valid") {
    const PartSet parts = r3_parts(20);
    enumerate_restricted(12, parts, 12, [&](const std::vector<long long>& p) {
        const long long bound = p.empty() ? 1 : p.front();
        for (long long ell : {bound, bound + 1, bound + 5}) {
            Partition extended{{ell}};
            extended.parts.insert(extended.parts.end(), p.begin(), p.end());
            REQUIRE(extended.ordered());
            REQUIRE(extended.sum() == 12 + ell);
        }
    });
}

TEST_CASE("enumeration is streaming: state stays linear in n") {
    const long long n = 110;
    RestrictedPartitionEnumerator e(n, r3_parts(n), n);
    std::size_t count = 0;
    while (e.next()) {
        ++count;
        REQUIRE(e.current().size() <= static_cast<std::size_t>(n));
        REQUIRE(e.current().capacity() <= 2 * static_cast<std::size_t>(n));
    }
    CHECK(count == 83663);  // far below p(110) = 607163746
}

TEST_CASE("the stream strictly descends in reverse-lexicographic order") {
    // strict descent implies every partition appears exactly once
    const long long n = 60;
    const PartSet all = PartSet::consecutive(n);
    RestrictedPartitionEnumerator e(n, all, n);
    std::vector<long long> previous;
    BigCount count = 0;
    bool first = true;
    while (e.next()) {
        if (!first) REQUIRE(e.current() < previous);
        previous = e.current();
        first = false;
        ++count;
    }
    REQUIRE(count == count_partitions_exact(n));
}

TEST_CASE("count-only variant agrees with streaming on restricted sets") {
    const PartSet parts = r3_parts(60);
    for (long long n : {0, 1, 2, 13, 31, 60})
        REQUIRE(count_restricted(n, parts, n == 0 ? 1 : n) == BigCount(collect(n, parts, n == 0 ? 1 : n).size()));
}

TEST_CASE("partition line format") {
    CHECK(format_partition_line({3, 1, 1, 1}) == "3+1+1+1");
    CHECK(format_partition_line({6}) == "6");
    CHECK(format_partition_line({}) == "");
}
