#ifndef PRODRANGE_REPORT_HPP
#define PRODRANGE_REPORT_HPP

#include <string>
#include <vector>

namespace prodrange {

struct GapRow {
    double theta;
    double h_lhs;
    double h_rhs;
    double gap;
};

/// Outcome of one support-function comparison: per-angle gaps, the worst
/// angle, and a verdict against a tolerance. pass <=> max_gap <= tolerance.
struct VerifyReport {
    std::string name;
    int grid_size = 0;
    double max_gap = 0.0;
    double worst_theta = 0.0;
    bool pass = false;
    double tolerance = 0.0;
    bool expects_fail = false;
    std::vector<GapRow> samples;

    /// An expected-failure fixture counts as ok when it fails as expected.
    bool ok() const { return expects_fail ? !pass : pass; }
};

}  // namespace prodrange

#endif
