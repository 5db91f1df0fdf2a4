#ifndef PRODRANGE_IO_HPP
#define PRODRANGE_IO_HPP

#include <iosfwd>
#include <string>

#include "prodrange/matrix.hpp"
#include "prodrange/regions.hpp"
#include "prodrange/report.hpp"

namespace prodrange {

/// Matrix text format: line 1 is n, then n lines of n entries like
/// `0.5-0.25i`; bare reals are accepted. Throws ParseError with line/column
/// diagnostics.
ComplexMatrix read_matrix(std::istream& in);
ComplexMatrix read_matrix_file(const std::string& path);

/// Writes the same format with 17 significant digits.
void write_matrix(std::ostream& out, const ComplexMatrix& m);

/// Region CSV: rows `theta,h,re,im`, 17 significant digits.
void write_region_csv(std::ostream& out, const ConvexRegion& region);

/// Gap report CSV: rows `theta,h_lhs,h_rhs,gap` plus a final verdict line
/// `PASS|FAIL max_gap=<v>` goes to the caller's verdict stream.
void write_report_csv(std::ostream& out, const VerifyReport& report);
std::string verdict_line(const VerifyReport& report);

/// Standalone SVG: hull outline through the region's boundary points plus one
/// overlay path per generator, auto-fitted viewBox with a 5% margin.
void write_region_svg(std::ostream& out, const ConvexRegion& region);

/// One JSON object per report, stable field order, one line each.
void write_reports_jsonl(std::ostream& out, const std::vector<VerifyReport>& reports);

std::string format_double(double v);  // 17 significant digits

/// Parses one complex entry in the matrix text syntax (`0.5-0.25i`, `2`, `1i`).
cplx parse_complex(const std::string& token);

}  // namespace prodrange

#endif
