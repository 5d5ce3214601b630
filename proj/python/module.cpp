#include "hirz/casework.hpp"
#include "hirz/genera.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace hirz;

namespace {

py::object json_loads(const std::string& s) {
    return py::module_::import("json").attr("loads")(s);
}

std::string json_dumps(const py::object& o) {
    return py::cast<std::string>(
        py::module_::import("json").attr("dumps")(o));
}

}  // namespace

PYBIND11_MODULE(_hirz, m) {
    m.doc() = "Exact chi_y-genus tables and replayable elimination"
              " certificates for the Chern-number characterization of"
              " projective space.";

    m.def(
        "t_polynomial",
        [](int n) { return genus_table(n).tPoly.render(); },
        py::arg("n"),
        "Canonical text of t_n(z; c_1..c_n).");

    m.def(
        "chi_p",
        [](int n, int p) {
            if (p < 0 || p > n) throw std::out_of_range("p out of range");
            return genus_table(n).chiP[static_cast<std::size_t>(p)]
                .render();
        },
        py::arg("n"), py::arg("p"),
        "Canonical text of the chi_y coefficient T_n^p.");

    m.def(
        "initial_c1_candidates",
        [](int n) {
            std::vector<long> out;
            for (const auto& c : initial_c1_candidates(n))
                out.push_back(c.get_si());
            return out;
        },
        py::arg("n"));

    m.def(
        "run_dimension",
        [](int n, bool use_external_axioms) {
            return json_loads(
                run_dimension(n, use_external_axioms).to_json().dump());
        },
        py::arg("n"), py::arg("use_external_axioms") = true,
        "Elimination certificate for dimension n as a plain dict.");

    m.def(
        "replay",
        [](const py::object& cert) {
            auto c = EliminationCertificate::from_json(
                nlohmann::json::parse(json_dumps(cert)));
            ReplayResult r = replay(c);
            return py::make_tuple(r.ok, r.mismatches);
        },
        py::arg("certificate"),
        "Re-executes every step; returns (ok, mismatches).");

    m.def(
        "execute_step",
        [](const std::string& kind, const py::object& inputs) {
            return json_loads(
                execute_step(kind, nlohmann::json::parse(json_dumps(inputs)))
                    .dump());
        },
        py::arg("kind"), py::arg("inputs"),
        "Recomputes the evidence for one certificate step.");
}
