#pragma once

#include "vhh/config.hpp"
#include "vhh/report.hpp"

#include <random>

namespace vhh {

// Per-module check suites behind `check bounds --suite ...`. Each returns a
// BoundReport whose asserted rows gate the exit code. arch_suite and
// renorm_suite live with their modules; these assemble the rest.
BoundReport cutoffs_suite(const RunConfig& cfg);
BoundReport propagator_suite(const RunConfig& cfg);
BoundReport counting_suite(const RunConfig& cfg, std::mt19937_64& rng);
BoundReport forest_suite(const RunConfig& cfg, std::mt19937_64& rng);

} // namespace vhh
