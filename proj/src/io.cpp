#include "prodrange/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "prodrange/errors.hpp"

#include "json.hpp"

namespace prodrange {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

[[noreturn]] void fail(int line, int col, const std::string& what) {
    throw ParseError("parse error at line " + std::to_string(line) + ", column " +
                     std::to_string(col) + ": " + what);
}

// entry forms: `a`, `ai`, `a+bi`, `a-bi`
cplx parse_entry(const std::string& tok, int line, int col) {
    const char* s = tok.c_str();
    char* end = nullptr;
    double first = std::strtod(s, &end);
    if (end == s) fail(line, col, "expected a number, got '" + tok + "'");
    if (*end == '\0') return {first, 0.0};
    if (*end == 'i' && end[1] == '\0') return {0.0, first};
    if (*end != '+' && *end != '-')
        fail(line, col, "malformed entry '" + tok + "'");
    const char* s2 = end;
    double second = std::strtod(s2, &end);
    if (end == s2 || *end != 'i' || end[1] != '\0')
        fail(line, col, "malformed imaginary part in '" + tok + "'");
    return {first, second};
}

std::string entry_to_string(cplx z) {
    std::string s = format_double(z.real());
    if (z.imag() != 0.0) {
        if (z.imag() >= 0.0) s += "+";
        s += format_double(z.imag());
        s += "i";
    }
    return s;
}

}  // namespace

cplx parse_complex(const std::string& token) { return parse_entry(token, 0, 0); }

ComplexMatrix read_matrix(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) fail(1, 1, "missing dimension line");
    int n = 0;
    try {
        n = std::stoi(line);
    } catch (...) {
        fail(1, 1, "dimension is not an integer: '" + line + "'");
    }
    if (n < 1) fail(1, 1, "dimension must be positive");
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (!std::getline(in, line)) fail(i + 2, 1, "missing matrix row");
        std::istringstream row(line);
        std::string tok;
        for (int j = 0; j < n; ++j) {
            if (!(row >> tok)) fail(i + 2, j + 1, "missing entry");
            m(i, j) = parse_entry(tok, i + 2, j + 1);
        }
        if (row >> tok) fail(i + 2, n + 1, "extra entry '" + tok + "'");
    }
    return m;
}

ComplexMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open matrix file: " + path);
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const ComplexMatrix& m) {
    out << m.dim() << "\n";
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            if (j) out << " ";
            out << entry_to_string(m(i, j));
        }
        out << "\n";
    }
}

void write_region_csv(std::ostream& out, const ConvexRegion& region) {
    out << "theta,h,re,im\n";
    for (const SupportSample& s : region.samples)
        out << format_double(s.theta) << "," << format_double(s.value) << ","
            << format_double(s.boundary_point.real()) << ","
            << format_double(s.boundary_point.imag()) << "\n";
}

void write_report_csv(std::ostream& out, const VerifyReport& report) {
    out << "theta,h_lhs,h_rhs,gap\n";
    for (const GapRow& r : report.samples)
        out << format_double(r.theta) << "," << format_double(r.h_lhs) << ","
            << format_double(r.h_rhs) << "," << format_double(r.gap) << "\n";
}

std::string verdict_line(const VerifyReport& report) {
    return std::string(report.pass ? "PASS" : "FAIL") +
           " max_gap=" + format_double(report.max_gap);
}

void write_region_svg(std::ostream& out, const ConvexRegion& region) {
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const SupportSample& s : region.samples) {
        xmin = std::min(xmin, s.boundary_point.real());
        xmax = std::max(xmax, s.boundary_point.real());
        ymin = std::min(ymin, s.boundary_point.imag());
        ymax = std::max(ymax, s.boundary_point.imag());
    }
    double w = xmax - xmin, h = ymax - ymin;
    if (w <= 0) w = 1.0;
    if (h <= 0) h = 1.0;
    const double margin = 0.05 * std::max(w, h);
    xmin -= margin;
    ymin -= margin;
    w += 2 * margin;
    h += 2 * margin;

    // SVG y axis points down; flip the imaginary axis
    auto px = [&](double x) { return (x - xmin) / w * 800.0; };
    auto py = [&](double y) { return (ymin + h - y) / h * 800.0; };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 800\">\n";
    out << "<polyline fill=\"#dce9f5\" stroke=\"#335\" stroke-width=\"1\" points=\"";
    for (const SupportSample& s : region.samples)
        out << px(s.boundary_point.real()) << "," << py(s.boundary_point.imag()) << " ";
    if (!region.samples.empty())
        out << px(region.samples.front().boundary_point.real()) << ","
            << py(region.samples.front().boundary_point.imag());
    out << "\"/>\n";

    for (const Generator& g : region.generators) {
        out << "<path fill=\"none\" stroke=\"#b33\" stroke-width=\"0.7\" d=\"";
        if (const EllipseDisk* e = std::get_if<EllipseDisk>(&g.primitive)) {
            const int steps = 128;
            for (int k = 0; k <= steps; ++k) {
                const double t = 2.0 * 3.141592653589793 * k / steps;
                const cplx rot(std::cos(e->axis_angle), std::sin(e->axis_angle));
                const cplx z = e->center +
                               rot * cplx(e->semi_major * std::cos(t), e->semi_minor * std::sin(t));
                out << (k == 0 ? "M" : "L") << px(z.real()) << " " << py(z.imag());
            }
        } else {
            const cplx p = std::get<cplx>(g.primitive);
            out << "M" << px(p.real()) - 3 << " " << py(p.imag()) << " l6 0 m-3 -3 l0 6";
        }
        out << "\"/>\n";
    }
    out << "</svg>\n";
}

void write_reports_jsonl(std::ostream& out, const std::vector<VerifyReport>& reports) {
    for (const VerifyReport& r : reports) {
        nlohmann::ordered_json j;
        j["name"] = r.name;
        j["grid_size"] = r.grid_size;
        j["max_gap"] = r.max_gap;
        j["worst_theta"] = r.worst_theta;
        j["pass"] = r.pass;
        j["tolerance"] = r.tolerance;
        j["expects_fail"] = r.expects_fail;
        j["ok"] = r.ok();
        out << j.dump() << "\n";
    }
}

}  // namespace prodrange
