#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eqt/cli.hpp"
#include "eqt/io.hpp"
#include "eqt/suites.hpp"

namespace py = pybind11;

namespace {

py::object to_py(const eqt::Scalar& x)
{
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    if (denominator(x) == 1)
        return py::int_(py::str(x.str()));
    return fraction(py::str(x.str()));
}

py::dict to_py(const eqt::ResultTable& t)
{
    py::list rows;
    for (const auto& r : t.rows) {
        py::list tors;
        for (const auto& d : r.h.torsion)
            tors.append(to_py(d));
        py::dict row;
        row["degree"] = r.degree;
        row["rank"] = r.h.free_rank;
        row["torsion"] = tors;
        rows.append(row);
    }
    py::list actions;
    for (const auto& a : t.actions) {
        py::list m;
        for (const auto& line : a.matrix) {
            py::list l;
            for (const auto& v : line)
                l.append(to_py(v));
            m.append(l);
        }
        py::dict d;
        d["xi"] = a.i;
        d["degree"] = a.degree;
        d["matrix"] = m;
        actions.append(d);
    }
    py::dict out;
    out["title"] = t.title;
    out["ring"] = t.ring;
    out["max_degree"] = t.max_degree;
    out["rows"] = rows;
    if (!t.actions.empty())
        out["actions"] = actions;
    return out;
}

eqt::Query query(const std::string& source, const std::string& ring, int max_degree, int rank,
                 const std::string& side = "")
{
    eqt::Query q;
    q.source = source;
    q.ring = ring;
    q.max_degree = max_degree;
    q.rank = rank;
    q.side = side;
    return q;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Torus-equivariant and intersection homology over Z, Q and F_p";
    py::register_exception<eqt::ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<eqt::ValidationError>(m, "ValidationError", PyExc_ValueError);

    m.def(
        "homology",
        [](const std::string& source, const std::string& ring, int max_degree) {
            return to_py(eqt::homology_table(query(source, ring, max_degree, 0)));
        },
        py::arg("source"), py::arg("ring") = "Z", py::arg("max_degree") = 4);
    m.def(
        "cartan",
        [](const std::string& source, int rank, const std::string& ring, int max_degree) {
            return to_py(eqt::cartan_table(query(source, ring, max_degree, rank)));
        },
        py::arg("source"), py::arg("rank") = 1, py::arg("ring") = "Z", py::arg("max_degree") = 4);
    m.def(
        "pullback",
        [](const std::string& source, const std::string& ring, int max_degree) {
            return to_py(eqt::pullback_table(query(source, ring, max_degree, 0)));
        },
        py::arg("source"), py::arg("ring") = "Z", py::arg("max_degree") = 4);
    m.def(
        "ih",
        [](const std::string& source, const std::string& ring, int max_degree) {
            return to_py(eqt::ih_table(query(source, ring, max_degree, 0)));
        },
        py::arg("source"), py::arg("ring") = "Z", py::arg("max_degree") = 4);
    m.def(
        "ih_equivariant",
        [](const std::string& source, const std::string& side, int rank, const std::string& ring, int max_degree) {
            return to_py(eqt::ih_equivariant_table(query(source, ring, max_degree, rank, side)));
        },
        py::arg("source"), py::arg("side") = "", py::arg("rank") = 0, py::arg("ring") = "Z", py::arg("max_degree") = 4);
    m.def(
        "verify",
        [](const std::string& suite, std::uint64_t seed, int rank, int max_degree, int samples) {
            eqt::SuiteOptions o;
            o.seed = seed;
            o.r = rank;
            o.max_degree = max_degree;
            o.samples = samples;
            eqt::SuiteReport rep;
            {
                py::gil_scoped_release nogil;
                rep = eqt::run_suite(suite, o);
            }
            py::list checks;
            for (const auto& c : rep.checks) {
                py::dict d;
                d["name"] = c.name;
                d["criterion"] = c.criterion;
                d["ok"] = c.ok;
                d["cases"] = c.cases;
                d["witness"] = c.witness;
                d["informational"] = c.informational;
                checks.append(d);
            }
            py::dict out;
            out["suite"] = rep.suite;
            out["ok"] = rep.ok();
            out["checks"] = checks;
            return out;
        },
        py::arg("suite"), py::arg("seed") = 7, py::arg("rank") = 2, py::arg("max_degree") = 6, py::arg("samples") = 1);
    m.def("suite_names", &eqt::suite_names);
}
