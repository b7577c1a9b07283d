#pragma once

#include <cstddef>
#include <cstdint>

// All tunable defaults live here so experiment runs are reproducible from a
// single place. Every value can be overridden per run through the JSON config
// (and the seed additionally through the BALLERG_SEED environment variable).
namespace ballerg::defaults {

// Hard cap on vector dimension growth (forward shift); exceeding it throws
// instead of truncating, since truncation would silently change norms.
inline constexpr std::size_t kDimCap = 256;

// Sphere-sample radius and size for seminorm specs.
inline constexpr double kSphereRadius = 0.5;
inline constexpr std::size_t kSphereCount = 2000;

// Trace length for Cesaro experiments.
inline constexpr int kTraceLength = 40;

// Convergence tolerance used by ergodicity verdicts; the persistence margin
// is 10x this value.
inline constexpr double kVerdictTol = 1e-6;

// Default RNG seed; recorded in every output file.
inline constexpr std::uint64_t kSeed = 20177;

// Evidence threshold for ball-stability probes: orbits staying below
// 1 - kStabilityDelta count as evidence of ball-bounded orbits.
inline constexpr double kStabilityDelta = 1e-3;

}  // namespace ballerg::defaults
