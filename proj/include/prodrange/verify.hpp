#ifndef PRODRANGE_VERIFY_HPP
#define PRODRANGE_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "prodrange/matrix.hpp"
#include "prodrange/report.hpp"

namespace prodrange {

/// Monte Carlo field-of-values samples: x* M x for `count` unit vectors drawn
/// as normalized complex Gaussians from a seeded deterministic stream.
std::vector<cplx> mc_points(const ComplexMatrix& m, int count, std::uint64_t seed);

enum class Suite {
    thm11,
    thm22_contain,
    thm22_equality,
    thm33,
    thm34,
    bounds,
    prop32,
};

Suite suite_from_name(const std::string& name);  // throws UnknownSuite
std::string suite_name(Suite s);

struct SuiteConfig {
    Suite suite;
    int trials = 50;
    int n = 6;
    std::uint64_t seed = 1;
    int grid = 720;
    double tolerance = 1e-6;
};

/// Runs one theorem suite; trial k uses seed + k so trials are independent
/// of execution order. Every trial appends one report.
std::vector<VerifyReport> run_suite(const SuiteConfig& cfg);

bool all_ok(const std::vector<VerifyReport>& reports);

}  // namespace prodrange

#endif
