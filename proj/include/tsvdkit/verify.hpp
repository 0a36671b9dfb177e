#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tsvdkit/tensor3.hpp"

namespace tsvdkit {

struct PropertyResult {
    std::string name;
    bool passed = false;
    std::string detail;  // worst observed quantity and its bound
};

/// Checks the decomposition invariants on one tensor.
///
/// Always run: reconstruction, orthogonality of the factors, f-diagonality,
/// tube-energy ordering, sigma_1 bound and location, energy identity.
/// With trials > 0, also: invariance of km_mapping under random orthogonal
/// y * a * z^T, and sigma_1 subadditivity against random partners. All
/// randomness derives from `seed`, so the report is reproducible.
std::vector<PropertyResult> run_invariant_suite(const Tensor3& a, std::uint64_t seed, int trials);

} // namespace tsvdkit
