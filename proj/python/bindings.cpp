#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "prodrange/contractions.hpp"
#include "prodrange/eig.hpp"
#include "prodrange/errors.hpp"
#include "prodrange/essherm.hpp"
#include "prodrange/numrange.hpp"
#include "prodrange/projpairs.hpp"
#include "prodrange/regions.hpp"
#include "prodrange/verify.hpp"

namespace py = pybind11;
using namespace prodrange;

namespace {

ComplexMatrix to_matrix(const py::array_t<cplx>& arr) {
    const auto buf = arr.request();
    if (buf.ndim != 2 || buf.shape[0] != buf.shape[1])
        throw py::value_error("expected a square 2-D complex array");
    const int n = static_cast<int>(buf.shape[0]);
    ComplexMatrix m(n);
    const auto acc = arr.unchecked<2>();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = acc(i, j);
    return m;
}

py::array_t<cplx> from_matrix(const ComplexMatrix& m) {
    const int n = m.dim();
    py::array_t<cplx> arr({n, n});
    auto acc = arr.mutable_unchecked<2>();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) acc(i, j) = m(i, j);
    return arr;
}

py::dict region_to_dict(const ConvexRegion& r) {
    std::vector<double> thetas, values;
    std::vector<cplx> points;
    for (const SupportSample& s : r.samples) {
        thetas.push_back(s.theta);
        values.push_back(s.value);
        points.push_back(s.boundary_point);
    }
    py::list gens;
    for (const Generator& g : r.generators) gens.append(g.label);
    py::dict d;
    d["grid_size"] = r.grid_size;
    d["theta"] = py::array_t<double>(py::cast(thetas));
    d["h"] = py::array_t<double>(py::cast(values));
    d["boundary"] = py::array_t<cplx>(py::cast(points));
    d["generators"] = gens;
    return d;
}

}  // namespace

PYBIND11_MODULE(_prodrange, m) {
    m.doc() = "numerical ranges of matrix products";

    py::register_exception<Error>(m, "ProdrangeError");

    py::class_<EllipseDisk>(m, "EllipseDisk")
        .def_readonly("center", &EllipseDisk::center)
        .def_readonly("semi_major", &EllipseDisk::semi_major)
        .def_readonly("semi_minor", &EllipseDisk::semi_minor)
        .def_readonly("axis_angle", &EllipseDisk::axis_angle)
        .def_readonly("focus1", &EllipseDisk::focus1)
        .def_readonly("focus2", &EllipseDisk::focus2)
        .def("support", &EllipseDisk::support)
        .def("support_point", &EllipseDisk::support_point);

    py::class_<VerifyReport>(m, "VerifyReport")
        .def_readonly("name", &VerifyReport::name)
        .def_readonly("grid_size", &VerifyReport::grid_size)
        .def_readonly("max_gap", &VerifyReport::max_gap)
        .def_readonly("worst_theta", &VerifyReport::worst_theta)
        .def_readonly("passed", &VerifyReport::pass)
        .def_readonly("tolerance", &VerifyReport::tolerance)
        .def_readonly("expects_fail", &VerifyReport::expects_fail)
        .def("ok", &VerifyReport::ok);

    py::class_<ProjPairCanonicalForm>(m, "ProjPairCanonicalForm")
        .def(py::init<>())
        .def_readwrite("p", &ProjPairCanonicalForm::p)
        .def_readwrite("q", &ProjPairCanonicalForm::q)
        .def_readwrite("r", &ProjPairCanonicalForm::r)
        .def_readwrite("s", &ProjPairCanonicalForm::s)
        .def_readwrite("angles", &ProjPairCanonicalForm::angles)
        .def("dim", &ProjPairCanonicalForm::dim);

    m.def("herm_eig", [](const py::array_t<cplx>& h) {
        HermEigResult r = herm_eig(to_matrix(h));
        return py::make_tuple(py::array_t<double>(py::cast(r.eigenvalues)),
                              from_matrix(r.eigenvectors));
    });
    m.def("sqrt_psd",
          [](const py::array_t<cplx>& a) { return from_matrix(sqrt_psd(to_matrix(a))); });
    m.def("spectrum_of_product_pos", [](const py::array_t<cplx>& a, const py::array_t<cplx>& b) {
        return spectrum_of_product_pos(to_matrix(a), to_matrix(b));
    });

    m.def("support", [](const py::array_t<cplx>& a, double theta) {
        SupportSample s = support(to_matrix(a), theta);
        return py::make_tuple(s.value, s.boundary_point);
    });
    m.def("range_polygon", [](const py::array_t<cplx>& a, int grid) {
        return region_to_dict(range_polygon(to_matrix(a), grid));
    }, py::arg("a"), py::arg("grid") = 720);
    m.def("ellipse_from_2x2",
          [](const py::array_t<cplx>& c) { return ellipse_from_2x2(to_matrix(c)); });

    m.def("ellipse_E", &ellipse_E);
    m.def("ellipse_general", &ellipse_general);

    m.def("build_pair", [](const ProjPairCanonicalForm& form, std::uint64_t seed) {
        auto [p, q] = build_pair(form, seed);
        return py::make_tuple(from_matrix(p), from_matrix(q));
    }, py::arg("form"), py::arg("conjugate_seed") = 0);
    m.def("decompose_pair", [](const py::array_t<cplx>& p, const py::array_t<cplx>& q) {
        return decompose_pair(to_matrix(p), to_matrix(q));
    });
    m.def("wpq_region", [](const py::array_t<cplx>& p, const py::array_t<cplx>& q, int grid) {
        return region_to_dict(wpq_region(to_matrix(p), to_matrix(q), grid));
    }, py::arg("p"), py::arg("q"), py::arg("grid") = 720);

    m.def("containment_region",
          [](const py::array_t<cplx>& a, const py::array_t<cplx>& b, int grid) {
              return region_to_dict(containment_region(to_matrix(a), to_matrix(b), grid));
          }, py::arg("a"), py::arg("b"), py::arg("grid") = 720);
    m.def("equality_check",
          [](const py::array_t<cplx>& a, const py::array_t<cplx>& b, int grid, double tol) {
              return equality_check(to_matrix(a), to_matrix(b), grid, tol);
          }, py::arg("a"), py::arg("b"), py::arg("grid") = 720, py::arg("tol") = 1e-6);
    m.def("strip_bounds_check", [](const py::array_t<cplx>& a, const py::array_t<cplx>& b) {
        return strip_bounds_check(to_matrix(a), to_matrix(b));
    });

    m.def("two_point_product_region",
          [](const py::array_t<cplx>& a, const py::array_t<cplx>& b, int grid) {
              return region_to_dict(two_point_product_region(to_matrix(a), to_matrix(b), grid));
          }, py::arg("a"), py::arg("b"), py::arg("grid") = 720);
    m.def("essherm_dilation_region",
          [](const py::array_t<cplx>& a, const py::array_t<cplx>& b, int grid, double tol) {
              auto [region, rep] = essherm_dilation_region(to_matrix(a), to_matrix(b), grid, tol);
              return py::make_tuple(region_to_dict(region), rep);
          }, py::arg("a"), py::arg("b"), py::arg("grid") = 720, py::arg("tol") = 1e-6);
    m.def("lambda_pairing", &lambda_pairing);

    m.def("mc_points", [](const py::array_t<cplx>& a, int count, std::uint64_t seed) {
        return mc_points(to_matrix(a), count, seed);
    }, py::arg("a"), py::arg("count") = 1000, py::arg("seed") = 1);
    m.def("run_suite", [](const std::string& suite, int trials, int n, std::uint64_t seed,
                          int grid, double tol) {
        SuiteConfig cfg;
        cfg.suite = suite_from_name(suite);
        cfg.trials = trials;
        cfg.n = n;
        cfg.seed = seed;
        cfg.grid = grid;
        cfg.tolerance = tol;
        return run_suite(cfg);
    }, py::arg("suite"), py::arg("trials") = 20, py::arg("n") = 6, py::arg("seed") = 1,
       py::arg("grid") = 720, py::arg("tol") = 1e-6);
}
