#pragma once

#include <cstdint>
#include <filesystem>
#include <map>

#include "gwva/grid.hpp"
#include "gwva/interpolate.hpp"
#include "gwva/validate.hpp"

namespace gwva {

/// SplitMix64 (Steele, Lea, Flood 2014): 64-bit state, additive constant
/// 0x9E3779B97F4A7C15, two xor-shift-multiply mixing rounds. Chosen over any
/// platform RNG so generated datasets are bit-identical everywhere.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) from the top 53 bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi)
    {
        return lo + (hi - lo) * next_double();
    }

private:
    std::uint64_t state_;
};

/// Desk-scale synthetic basin: smooth trend fields plus seeded noise for the
/// seven physical layers and the land-use categories, scattered sample sets
/// for the interpolated layers, and wells whose exceedance probability rises
/// with the planted vulnerability (logistic link of the given steepness).
struct SyntheticScenario {
    std::uint64_t seed = 42;
    GridHeader geometry{200, 200, 0.0, 0.0, 50.0, -9999.0};
    int n_wells = 70;
    int n_depth_samples = 19;
    int n_recharge_samples = 24;
    double link_steepness = 30.0;
};

struct SyntheticData {
    std::map<std::string, Grid> layers; // physical values / category codes
    std::vector<SamplePoint> depth_samples;
    std::vector<SamplePoint> recharge_samples;
    std::vector<Observation> wells;
    Grid planted_vi; // integer-weight DRASTIC_LU index the labels came from
};

/// Pure function of the scenario: identical scenarios produce bit-identical
/// data. Single-threaded by design.
SyntheticData generate(const SyntheticScenario& scenario);

/// Write layers/, samples/, wells.csv and a ready-to-run config.json under
/// dir. Repeated calls with the same data produce byte-identical files.
void write_scenario_files(const SyntheticData& data,
                          const std::filesystem::path& dir);

} // namespace gwva
