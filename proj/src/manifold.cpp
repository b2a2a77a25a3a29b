#include "genus/manifold.hpp"

#include "genus/errors.hpp"

namespace genus {

bool ManifoldData::complete() const {
    for (const auto &lambda : partitions_of(dimension))
        if (!chern_numbers.contains(lambda)) return false;
    return true;
}

void ManifoldData::require_complete() const {
    for (const auto &lambda : partitions_of(dimension))
        if (!chern_numbers.contains(lambda))
            throw InputError("manifold '" + name + "' is missing Chern number " + lambda.label());
}

const Rational &ManifoldData::chern_number(const Partition &lambda) const {
    auto it = chern_numbers.find(lambda);
    if (it == chern_numbers.end())
        throw InputError("manifold '" + name + "' is missing Chern number " + lambda.label());
    return it->second;
}

}  // namespace genus
