#include "genus/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "genus/errors.hpp"

namespace genus {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p <= 0) throw InputError("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::merged(const Partition &other) const {
    Partition out;
    out.parts_.reserve(parts_.size() + other.parts_.size());
    std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
               std::back_inserter(out.parts_), std::greater<>());
    out.weight_ = weight_ + other.weight_;
    return out;
}

std::string Partition::label() const {
    if (parts_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < parts_.size();) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        if (!out.empty()) out += ' ';
        out += "c" + std::to_string(parts_[i]);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::strong_ordering operator<=>(const Partition &a, const Partition &b) {
    if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
    return b.parts_ <=> a.parts_;
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw InputError("partitions_of: negative weight");
    std::vector<Partition> out;
    std::vector<int> current;
    // Depth-first with the largest admissible part first gives reverse-lex order.
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

}  // namespace genus
