#pragma once

#include "bicomm/rng.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bicomm {

// Result of one verification claim: a stable id, an overall pass flag, the
// per-row evidence (one line per checked fact), and the wall time spent.
struct ClaimResult {
    std::string id;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// Stable ordered list of every claim the verifier knows.
const std::vector<std::string>& claim_ids();

// Runs one claim; throws std::invalid_argument for an unknown id.
ClaimResult run_claim(const std::string& id, std::uint64_t seed = kDefaultSeed);

// Runs the given claims in order (all of them when ids is empty).
std::vector<ClaimResult> run_claims(const std::vector<std::string>& ids,
                                    std::uint64_t seed = kDefaultSeed);

} // namespace bicomm
