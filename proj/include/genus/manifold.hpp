#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "genus/betti.hpp"
#include "genus/cohomology.hpp"
#include "genus/localization.hpp"
#include "genus/partition.hpp"
#include "genus/rational.hpp"

namespace genus {

/// User-asserted annotations; never inferred from Chern data.
struct ManifoldFlags {
    bool pure_type = false;
    bool kahler_hyperbolic = false;
    bool hamiltonian_s1 = false;
    friend bool operator==(const ManifoldFlags &, const ManifoldFlags &) = default;
};

/// An almost-complex manifold of complex dimension n, described by its
/// Chern numbers c_lambda[M] for partitions lambda of n.
///
/// Catalog entries carry every partition and keep the cohomology model they
/// were integrated from (needed for products). Data read from JSON may be
/// partial; operations that need a missing number throw InputError.
struct ManifoldData {
    std::string name;
    int dimension = 0;
    std::map<Partition, Rational> chern_numbers;
    ManifoldFlags flags;
    std::optional<BettiProfile> betti;
    std::optional<FixedPointModel> action;
    std::shared_ptr<const CohomologyModel> model;

    [[nodiscard]] bool complete() const;
    /// Throws InputError naming the first missing partition.
    void require_complete() const;
    [[nodiscard]] const Rational &chern_number(const Partition &lambda) const;
};

}  // namespace genus
