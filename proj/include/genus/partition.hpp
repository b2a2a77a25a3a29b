#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace genus {

/// Integer partition; indexes the Chern monomial c_{p1} c_{p2} ... c_{pk}.
///
/// Parts are kept non-increasing. Ordering compares weight first and then
/// parts in reverse-lexicographic order, so that within one weight [n]
/// precedes [n-1,1] which precedes ... [1,...,1].
class Partition {
public:
    Partition() = default;
    /// Accepts parts in any order; non-positive parts throw InputError.
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    [[nodiscard]] const std::vector<int> &parts() const { return parts_; }
    [[nodiscard]] int weight() const { return weight_; }
    [[nodiscard]] bool empty() const { return parts_.empty(); }
    [[nodiscard]] int largest() const { return parts_.empty() ? 0 : parts_.front(); }

    /// Multiset union of parts: c_lambda * c_mu = c_{lambda u mu}.
    [[nodiscard]] Partition merged(const Partition &other) const;

    /// "c1^2 c3" style label, "1" for the empty partition.
    [[nodiscard]] std::string label() const;

    friend bool operator==(const Partition &, const Partition &) = default;
    friend std::strong_ordering operator<=>(const Partition &a, const Partition &b);

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// All partitions of n in reverse-lexicographic order; n = 0 yields {[]}.
std::vector<Partition> partitions_of(int n);

}  // namespace genus
