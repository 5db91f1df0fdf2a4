#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "prodrange/contractions.hpp"
#include "prodrange/errors.hpp"
#include "prodrange/essherm.hpp"
#include "prodrange/io.hpp"
#include "prodrange/numrange.hpp"
#include "prodrange/projpairs.hpp"
#include "prodrange/verify.hpp"

namespace pr = prodrange;

namespace {

// exit-code contract: 0 pass, 1 verification failure, 2 usage/parse error,
// 3 numerical failure
constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

int default_grid() {
    if (const char* env = std::getenv("NUMRANGE_GRID")) {
        const int m = std::atoi(env);
        if (m >= 8) return m;
    }
    return 720;
}

void emit_region(const pr::ConvexRegion& region, const std::string& out_path,
                 const std::string& format) {
    std::ostringstream body;
    if (format == "svg")
        pr::write_region_svg(body, region);
    else
        pr::write_region_csv(body, region);
    if (out_path.empty() || out_path == "-") {
        std::cout << body.str();
    } else {
        std::ofstream f(out_path);
        f << body.str();
    }
}

pr::ProjPairCanonicalForm parse_form(const std::string& spec) {
    // p,q,r,s:c1,c2,...
    pr::ProjPairCanonicalForm form;
    const auto colon = spec.find(':');
    std::istringstream head(spec.substr(0, colon));
    char comma;
    if (!(head >> form.p >> comma >> form.q >> comma >> form.r >> comma >> form.s))
        throw pr::ParseError("bad --form multiplicities: " + spec);
    if (colon != std::string::npos) {
        std::istringstream tail(spec.substr(colon + 1));
        std::string tok;
        while (std::getline(tail, tok, ','))
            if (!tok.empty()) form.angles.push_back(std::stod(tok));
    }
    return form;
}

struct RegionArgs {
    std::vector<std::string> files;
    std::string form_spec;
    std::string endpoints_spec;
    std::string mode = "projections";
    std::string out;
    std::string format = "csv";
    int grid = 0;
    double tol = 1e-6;
};

int run_region(const RegionArgs& args) {
    const int m = args.grid ? args.grid : default_grid();

    pr::ComplexMatrix a, b;
    if (!args.form_spec.empty()) {
        auto [p, q] = pr::build_pair(parse_form(args.form_spec));
        a = p;
        b = q;
    } else if (args.files.size() == 2) {
        a = pr::read_matrix_file(args.files[0]);
        b = pr::read_matrix_file(args.files[1]);
    } else {
        throw pr::ParseError("region: need two matrix files or --form");
    }

    pr::ConvexRegion region;
    if (args.mode == "projections") {
        region = pr::wpq_region(a, b, m);
    } else if (args.mode == "contractions") {
        region = pr::containment_region(a, b, m);
    } else if (args.mode == "two_point") {
        region = pr::two_point_product_region(a, b, m);
    } else if (args.mode == "essherm") {
        if (!args.endpoints_spec.empty()) {
            // user-supplied exact segment endpoints a1,a2,b1,b2
            std::vector<pr::cplx> e;
            std::istringstream in(args.endpoints_spec);
            std::string tok;
            while (std::getline(in, tok, ',')) e.push_back(pr::parse_complex(tok));
            if (e.size() != 4) throw pr::ParseError("--endpoints needs a1,a2,b1,b2");
            pr::EssHermForm fa = pr::detect_essentially_hermitian(a);
            pr::EssHermForm fb = pr::detect_essentially_hermitian(b);
            auto pa = pr::dilate_projection_a(fa.A1);
            auto qb = pr::dilate_projection_b(fb.A1);
            region = pr::two_point_region_from_projections(pa, qb, e[0], e[1], e[2], e[3], m);
        } else {
            region = pr::essherm_dilation_region(a, b, m, args.tol).first;
        }
    } else {
        throw pr::ParseError("region: unknown mode " + args.mode);
    }

    for (const pr::Generator& g : region.generators) std::cerr << "generator: " << g.label << "\n";
    emit_region(region, args.out, args.format);
    return kExitOk;
}

int run_demo(const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    const int m = default_grid();

    auto dump_region = [&](const std::string& name, const pr::ConvexRegion& region) {
        std::ofstream csv(out_dir + "/" + name + ".csv");
        pr::write_region_csv(csv, region);
        std::ofstream svg(out_dir + "/" + name + ".svg");
        pr::write_region_svg(svg, region);
    };

    // disk of radius 1/2: the 2x2 nilpotent
    pr::ComplexMatrix nil(2, {0.0, 1.0, 0.0, 0.0});
    dump_region("nilpotent_disk", pr::range_polygon(nil, m));

    // the commuting counterexample: W(AB) vs conv{E(1), E(1/4)}
    pr::ComplexMatrix half = pr::ComplexMatrix::diag(std::vector<double>{1.0, 0.5});
    dump_region("intro_product_range", pr::range_polygon(half * half, m));
    dump_region("intro_hull", pr::containment_region(half, half, m));
    {
        pr::VerifyReport rep = pr::equality_check(half, half, m, 1e-6);
        std::ofstream f(out_dir + "/intro_equality.csv");
        pr::write_report_csv(f, rep);
        std::cout << "intro counterexample: " << pr::verdict_line(rep) << "\n";
    }

    // single-angle projection pair, c = 0.8
    pr::ProjPairCanonicalForm form;
    form.angles = {0.8};
    auto [p, q] = pr::build_pair(form);
    dump_region("projpair_c08", pr::wpq_region(p, q, m));
    dump_region("projpair_c08_sweep", pr::range_polygon(p * q, m));

    // reflections product: segment joining +-i
    pr::EllipseDisk seg = pr::ellipse_general(1.0, -1.0, 1.0, -1.0, std::sqrt(0.5));
    pr::Generator g{"reflections", seg};
    dump_region("reflections_segment", pr::hull_region({g}, m));

    // three-point diagonal fixture: strict containment under the dilation
    pr::ComplexMatrix d1 = pr::ComplexMatrix::diag(std::vector<double>{0.0, 0.5, 1.0});
    pr::ComplexMatrix d2 = pr::ComplexMatrix::diag(std::vector<double>{1.0, 0.5, 0.0});
    auto [region, rep] = pr::essherm_dilation_region(d1, d2, m, 1e-6);
    dump_region("essherm_dilation", region);
    dump_region("essherm_sweep", pr::range_polygon(d1 * d2, m));
    std::cout << "three-point containment: " << pr::verdict_line(rep) << "\n";

    std::cout << "demo artifacts written to " << out_dir << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical ranges of matrix products: regions, sweeps, theorem suites"};
    app.require_subcommand(1);

    // range
    std::string range_file, range_out, range_format = "csv";
    int range_grid = 0;
    auto* range_cmd = app.add_subcommand("range", "numerical range sweep of one matrix");
    range_cmd->add_option("matrix", range_file, "matrix text file")->required();
    range_cmd->add_option("--grid,-m", range_grid, "grid size (default 720 or NUMRANGE_GRID)");
    range_cmd->add_option("--out,-o", range_out, "output path (default stdout)");
    range_cmd->add_option("--format,-f", range_format, "csv|svg")
        ->check(CLI::IsMember({"csv", "svg"}));

    // region
    RegionArgs region_args;
    auto* region_cmd = app.add_subcommand("region", "containment region of a product");
    region_cmd->add_option("files", region_args.files, "two matrix files")->expected(0, 2);
    region_cmd->add_option("--form", region_args.form_spec,
                           "canonical projection pair p,q,r,s:c1,c2,...");
    region_cmd->add_option("--endpoints", region_args.endpoints_spec,
                           "segment endpoints a1,a2,b1,b2 (essherm mode)");
    region_cmd->add_option("--mode", region_args.mode,
                           "projections|contractions|two_point|essherm")
        ->check(CLI::IsMember({"projections", "contractions", "two_point", "essherm"}));
    region_cmd->add_option("--grid,-m", region_args.grid, "grid size");
    region_cmd->add_option("--tol", region_args.tol, "tolerance for verdicts");
    region_cmd->add_option("--out,-o", region_args.out, "output path");
    region_cmd->add_option("--format,-f", region_args.format, "csv|svg")
        ->check(CLI::IsMember({"csv", "svg"}));

    // verify
    std::string suite_name, verify_jsonl;
    int trials = 50, vn = 6, vgrid = 0;
    std::uint64_t seed = 1;
    double vtol = 1e-6;
    auto* verify_cmd = app.add_subcommand("verify", "run a theorem verification suite");
    verify_cmd->add_option("suite", suite_name,
                           "thm11|thm22_contain|thm22_equality|thm33|thm34|bounds|prop32")
        ->required();
    verify_cmd->add_option("--trials", trials, "number of trials");
    verify_cmd->add_option("--n", vn, "matrix dimension bound");
    verify_cmd->add_option("--seed", seed, "base seed");
    verify_cmd->add_option("--tol", vtol, "verdict tolerance");
    verify_cmd->add_option("--grid,-m", vgrid, "grid size");
    verify_cmd->add_option("--jsonl", verify_jsonl, "write JSON-lines reports to this file");

    // demo
    std::string demo_dir = "demo_out";
    auto* demo_cmd = app.add_subcommand("demo", "regenerate the worked examples");
    demo_cmd->add_option("--out,-o", demo_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (range_cmd->parsed()) {
            const int m = range_grid ? range_grid : default_grid();
            pr::ComplexMatrix a = pr::read_matrix_file(range_file);
            emit_region(pr::range_polygon(a, m), range_out, range_format);
            return kExitOk;
        }
        if (region_cmd->parsed()) return run_region(region_args);
        if (verify_cmd->parsed()) {
            pr::SuiteConfig cfg;
            cfg.suite = pr::suite_from_name(suite_name);
            cfg.trials = trials;
            cfg.n = vn;
            cfg.seed = seed;
            cfg.grid = vgrid ? vgrid : default_grid();
            cfg.tolerance = vtol;
            std::vector<pr::VerifyReport> reports = pr::run_suite(cfg);
            if (!verify_jsonl.empty()) {
                std::ofstream f(verify_jsonl);
                pr::write_reports_jsonl(f, reports);
            } else {
                pr::write_reports_jsonl(std::cout, reports);
            }
            int ok_count = 0;
            for (const auto& r : reports)
                if (r.ok()) ++ok_count;
            std::cout << suite_name << ": " << ok_count << "/" << reports.size()
                      << " trials ok\n";
            return pr::all_ok(reports) ? kExitOk : kExitVerifyFail;
        }
        if (demo_cmd->parsed()) return run_demo(demo_dir);
    } catch (const pr::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const pr::UnknownSuite& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const pr::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitUsage;
}
