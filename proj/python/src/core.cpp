// Copyright 2026 The phocs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <complex>
#include <sstream>

#include "phocs/circuit.hpp"
#include "phocs/dense.hpp"
#include "phocs/equivalence.hpp"
#include "phocs/error.hpp"
#include "phocs/general_form.hpp"
#include "phocs/phased_clifford.hpp"
#include "phocs/selfcheck.hpp"
#include "phocs/simulator.hpp"

namespace py = pybind11;
using namespace phocs;

namespace {

std::complex<double> to_complex(const ExactScalar &x) {
    const auto &c = x.coefficients();
    const double h = std::sqrt(0.5);
    std::complex<double> v(c[0] + h * (c[1] - c[3]), c[2] + h * (c[1] + c[3]));
    return v * std::pow(h, x.sqrt2_exponent());
}

BitVector bits_of(const std::vector<int> &r, size_t n) {
    if (r.size() != n) {
        throw py::value_error("expected " + std::to_string(n) + " bits, got " + std::to_string(r.size()));
    }
    BitVector v(n);
    for (size_t i = 0; i < n; ++i) {
        v.set(i, r[i] & 1);
    }
    return v;
}

std::vector<int> list_of(const BitVector &v) {
    std::vector<int> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        out[i] = v.get(i) ? 1 : 0;
    }
    return out;
}

py::dict report_dict(const EquivalenceReport &rep, const Circuit &c1) {
    py::dict d;
    d["verdict"] = verdict_name(rep.verdict);
    d["constant_phase"] = rep.constant_phase ? py::cast(*rep.constant_phase) : py::none();
    if (!rep.witness) {
        d["witness"] = py::none();
        return d;
    }
    const Witness &w = *rep.witness;
    py::dict wd;
    wd["r"] = list_of(w.r);
    py::dict angles;
    for (size_t i = 0; i < c1.angles.size() && i < w.r.size(); ++i) {
        angles[py::str(c1.angles[i])] = w.r.get(i) ? 1 : 0;
    }
    wd["angles"] = angles;
    wd["outcomes"] = list_of(w.outcomes);
    wd["what"] = w.what;
    wd["basis"] = w.basis ? py::cast(list_of(*w.basis)) : py::none();
    wd["amplitude1"] = w.amp1 ? py::cast(w.amp1->to_string()) : py::none();
    wd["amplitude2"] = w.amp2 ? py::cast(w.amp2->to_string()) : py::none();
    d["witness"] = wd;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Phase-exact stabilizer circuit simulation and equivalence checking";

    static py::exception<Error> error_type(m, "PhocsError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const Error &e) {
            py::object inst = py::handle(error_type.ptr())(e.what());
            inst.attr("code") = std::string(error_code_name(e.code()));
            PyErr_SetObject(error_type.ptr(), inst.ptr());
        }
    });

    py::class_<PauliOperator>(m, "Pauli")
        .def(py::init([](const std::string &text, size_t n) { return PauliOperator::parse(text, n); }),
             py::arg("text"), py::arg("num_qubits"))
        .def_property_readonly("num_qubits", &PauliOperator::num_qubits)
        .def_property_readonly("phase", [](const PauliOperator &p) { return int(p.s); },
                               "Exponent s in i^s X^x Z^z.")
        .def_property_readonly("x", [](const PauliOperator &p) { return list_of(p.x); })
        .def_property_readonly("z", [](const PauliOperator &p) { return list_of(p.z); })
        .def("is_hermitian", &PauliOperator::is_hermitian)
        .def("commutes", [](const PauliOperator &a, const PauliOperator &b) { return !comm(a, b); })
        .def("__mul__", [](const PauliOperator &a, const PauliOperator &b) { return mul(a, b); })
        .def("__eq__", [](const PauliOperator &a, const PauliOperator &b) { return a == b; })
        .def("__str__", &PauliOperator::to_string)
        .def("__repr__", [](const PauliOperator &p) { return "Pauli('" + p.to_string() + "')"; });

    py::class_<GeneralForm>(m, "GeneralForm")
        .def_property_readonly("num_qubits", &GeneralForm::num_qubits)
        .def_property_readonly("num_outcomes", &GeneralForm::num_outcomes)
        .def_property_readonly("num_params", &GeneralForm::num_params)
        .def_property_readonly("num_angles", [](const GeneralForm &g) { return g.n_angle; })
        .def_property_readonly("half", [](const GeneralForm &g) { return g.half; })
        .def("outcomes", [](const GeneralForm &g, const std::vector<int> &r) {
            return list_of(outcome_at(g, bits_of(r, g.num_params())));
        }, py::arg("r"))
        .def("state", [](const GeneralForm &g, const std::vector<int> &r) {
            DenseState st = dense_state(state_at(g, bits_of(r, g.num_params())));
            std::vector<std::complex<double>> out;
            out.reserve(st.amp.size());
            for (const ExactScalar &a : st.amp) {
                out.push_back(to_complex(a));
            }
            return out;
        }, py::arg("r"), "Dense amplitudes at r; qubit 0 is the low bit of the index.")
        .def("canonical", [](const GeneralForm &g) { return canonicalize(g); })
        .def("is_canonical", [](const GeneralForm &g) { return is_canonical(g); })
        .def("dump", [](const GeneralForm &g) { return dump(g); })
        .def("__eq__", [](const GeneralForm &a, const GeneralForm &b) { return a == b; })
        .def_static("load", [](const std::string &text) {
            std::istringstream in(text);
            return read_general_form(in);
        });

    m.def("simulate", [](const std::string &text) { return simulate(lower_rotations(parse_circuit(text))); },
          py::arg("circuit"), "General form of a circuit given in the line format.");

    m.def("check", [](const std::string &a, const std::string &b, const std::string &map, bool oracle) {
        Circuit c1 = parse_circuit(a), c2 = parse_circuit(b);
        Correspondence corr = map.empty() ? Correspondence{} : parse_correspondence(map);
        py::dict d = report_dict(check_circuits(c1, c2, corr), c1);
        if (oracle) {
            d["oracle"] = verdict_name(oracle_check(c1, c2, corr).verdict);
        }
        return d;
    }, py::arg("first"), py::arg("second"), py::arg("map") = "", py::arg("oracle") = false);

    m.def("generate_table", [] {
        std::ostringstream out;
        write_table(out, generate_table());
        return out.str();
    });
    m.def("verify_table", [](const std::string &text) {
        std::istringstream in(text);
        return verify_table(read_table(in));
    }, "Failing keys; empty when every entry checks out.");

    m.def("selfcheck", [](uint64_t seed, size_t iters, size_t jobs) {
        std::vector<SuiteResult> res;
        {
            py::gil_scoped_release release;
            res = run_selfcheck(seed, iters, jobs);
        }
        py::list out;
        for (const SuiteResult &s : res) {
            py::dict d;
            d["name"] = s.name;
            d["cases"] = s.cases;
            d["failures"] = s.failures;
            d["reproducer"] = s.reproducer;
            out.append(d);
        }
        return out;
    }, py::arg("seed") = 1, py::arg("iters") = 100, py::arg("jobs") = 1);
}
