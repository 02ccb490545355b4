#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace vhh {

// Run-wide knobs. Defaults are the desk-scale values the check suites are
// calibrated for. gamma is validated >= 10: the sector-geometry constants
// used by several checks degrade below that.
struct RunConfig {
    double gamma = 10.0;
    double gevrey_h = 2.0;
    double temperature = 1e-3;
    std::vector<double> temperature_list;  // sweeps; falls back to {temperature}
    double lambda = 1e-2;
    int resolution = 64;          // patch-grid points per axis for sectorized quadrature
    int sunshine_resolution = 64; // spatial grid per axis for the two-loop convolution
    int workers = 1;
    std::uint64_t seed = 20260823ULL;
    std::string out_dir = ".";

    void validate() const;  // throws std::invalid_argument
    std::uint64_t hash() const;
};

// Layered configuration: file (key=value lines, '#' comments), then
// environment variables prefixed VHH_ (e.g. VHH_GAMMA), then explicit
// overrides in "key=value" form. Later layers win.
RunConfig load_config(const std::string& file_path,
                      const std::vector<std::string>& overrides);

void apply_kv(RunConfig& cfg, const std::string& key, const std::string& value);

} // namespace vhh
