#include <doctest.h>

#include <algorithm>
#include <set>

#include "genus/errors.hpp"
#include "genus/partition.hpp"

using genus::Partition;
using genus::partitions_of;

namespace {

// Euler's pentagonal number recurrence, independent of the enumerator.
std::vector<long> partition_counts(int up_to) {
    std::vector<long> p(static_cast<std::size_t>(up_to) + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= up_to; ++n)
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > n) break;
            const long sign = k % 2 == 1 ? 1 : -1;
            p[static_cast<std::size_t>(n)] += sign * p[static_cast<std::size_t>(n - g1)];
            if (g2 <= n) p[static_cast<std::size_t>(n)] += sign * p[static_cast<std::size_t>(n - g2)];
        }
    return p;
}

}  // namespace

TEST_CASE("partition counts match the pentagonal recurrence") {
    const auto counts = partition_counts(20);
    for (int n = 0; n <= 20; ++n) CHECK(partitions_of(n).size() == static_cast<std::size_t>(counts[static_cast<std::size_t>(n)]));
}

TEST_CASE("enumeration is sorted, distinct and of the right weight") {
    for (int n = 0; n <= 12; ++n) {
        const auto ps = partitions_of(n);
        CHECK(std::is_sorted(ps.begin(), ps.end()));
        CHECK(std::set<Partition>(ps.begin(), ps.end()).size() == ps.size());
        for (const auto &p : ps) {
            CHECK(p.weight() == n);
            CHECK(std::is_sorted(p.parts().rbegin(), p.parts().rend()));
        }
    }
    const auto four = partitions_of(4);
    CHECK(four.front() == Partition{4});
    CHECK(four[1] == Partition{3, 1});
    CHECK(four.back() == Partition{1, 1, 1, 1});
    CHECK(partitions_of(0) == std::vector<Partition>{Partition{}});
}

TEST_CASE("parts are normalized and validated") {
    CHECK(Partition{1, 3, 2}.parts() == std::vector<int>{3, 2, 1});
    CHECK_THROWS_AS(Partition({2, 0}), genus::InputError);
    CHECK_THROWS_AS(Partition({-1}), genus::InputError);
    CHECK(Partition{2, 1}.merged(Partition{3, 1}) == Partition{3, 2, 1, 1});
}

TEST_CASE("labels") {
    CHECK(Partition{3, 1, 1}.label() == "c3 c1^2");
    CHECK(Partition{}.label() == "1");
    CHECK(Partition{2}.label() == "c2");
}
