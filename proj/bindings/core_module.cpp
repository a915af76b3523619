#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "partrec/analytic.hpp"
#include "partrec/modular_forms.hpp"
#include "partrec/partitions.hpp"
#include "partrec/rankin_cohen.hpp"
#include "partrec/trunc_series.hpp"

namespace py = pybind11;
using namespace partrec;

namespace {

py::int_ to_py_int(const Int& v) {
    const std::string s = v.get_str();
    PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

py::list int_list(const std::vector<Int>& values) {
    py::list out;
    for (const auto& v : values) out.append(to_py_int(v));
    return out;
}

PartitionTable make_table(const std::string& kind, unsigned t, std::size_t n_max) {
    if (kind == "ordinary") return PartitionTable::ordinary(n_max);
    if (kind == "colored") return PartitionTable::colored(t, n_max);
    if (kind == "regular") return PartitionTable::regular(t, n_max);
    throw std::invalid_argument("kind must be ordinary|colored|regular");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact recurrences for colored and regular partition functions";

    m.def(
        "partition_counts",
        [](const std::string& kind, unsigned t, std::size_t n_max) {
            return int_list(make_table(kind, t, n_max).values());
        },
        py::arg("kind"), py::arg("t"), py::arg("n_max"),
        "Partition counts p(0..n_max) from the generating function.");

    m.def(
        "recurrence_counts",
        [](const std::string& kind, unsigned t, std::size_t n_max) {
            const auto table = make_table(kind, t, n_max);
            py::list out;
            out.append(to_py_int(table.at(0)));
            for (std::size_t n = 1; n <= n_max; ++n) {
                Int v;
                if (kind == "ordinary")
                    v = euler_recurrence(n, table);
                else if (kind == "colored" && t == 2)
                    v = p2_recurrence(n, table);
                else if (kind == "colored" && t == 3)
                    v = p3_recurrence_v0(n, table);
                else if (kind == "regular")
                    v = pt_regular_recurrence(t, n, table);
                else
                    throw std::invalid_argument("no recurrence for this kind/t");
                out.append(to_py_int(v));
            }
            return out;
        },
        py::arg("kind"), py::arg("t"), py::arg("n_max"),
        "Counts recomputed through the matching recurrence (index 0 copies the table).");

    m.def(
        "classify",
        [](long long n) {
            const auto c = classify(n);
            py::dict d;
            d["pentagonal_j"] = c.pentagonal_j ? py::object(py::int_(*c.pentagonal_j))
                                               : py::object(py::none());
            d["triangular_k"] = c.triangular_k ? py::object(py::int_(*c.triangular_k))
                                               : py::object(py::none());
            return d;
        },
        py::arg("n"));

    m.def("alpha", [](unsigned v) { return to_string(alpha(v)); }, py::arg("v"),
          "alpha_v as an exact 'p/q' string.");
    m.def("beta", [](unsigned v) { return to_string(beta(v)); }, py::arg("v"),
          "beta_v as an exact 'p/q' string (v in {6,8,9,10,11,13}).");
    m.def(
        "bracket_coefficient",
        [](unsigned v, unsigned long long n, unsigned long long k) {
            return to_string(calE(v, n, k));
        },
        py::arg("v"), py::arg("n"), py::arg("k"),
        "Exact E_v(n,k) as a 'p/q' string.");

    m.def("bernoulli", [](unsigned m2) { return to_string(bernoulli(m2)); }, py::arg("m"));
    m.def("sigma", [](unsigned e, unsigned long long n) { return to_py_int(sigma(e, n)); },
          py::arg("e"), py::arg("n"));
    m.def("tau", [](std::size_t n_max) { return int_list(delta_coeffs(n_max)); },
          py::arg("n_max"), "Cusp form coefficients tau(0..n_max) of the weight-12 form.");

    m.def(
        "verify_theorem2",
        [](unsigned v, std::size_t n_max) {
            const auto p3 = PartitionTable::colored(3, n_max);
            const auto rep = verify_theorem2(v, n_max, p3);
            py::dict d;
            d["v"] = rep.v;
            d["N"] = rep.N;
            d["ok"] = rep.ok;
            d["alpha"] = to_string(rep.alpha);
            d["beta"] = rep.beta ? py::object(py::str(to_string(*rep.beta)))
                                 : py::object(py::none());
            d["first_mismatch"] = rep.first_mismatch
                                      ? py::object(py::int_(*rep.first_mismatch))
                                      : py::object(py::none());
            return d;
        },
        py::arg("v"), py::arg("n_max"),
        "Exact coefficient-wise check of the weight-2v decomposition.");

    m.def(
        "weighted_sum",
        [](unsigned v, unsigned M, unsigned N, long prec) {
            TruncationParams params{M, N, prec};
            const unsigned long long max_odd = (N % 2 == 1) ? N : N - 1;
            const std::size_t order = (max_odd * max_odd - 1) / 8;
            const auto table = eigenforms_numeric(2 * v, order, prec);
            py::list out;
            for (const auto& f : table.forms) {
                const auto ws = weighted_sum_Df(v, f, params);
                out.append(py::make_tuple(ws.value.to_string(12), ws.tail_bound.to_string(4)));
            }
            return out;
        },
        py::arg("v"), py::arg("M") = 100, py::arg("N") = 700, py::arg("prec") = 60,
        "Truncated weighted Dirichlet sums, one (value, tail_bound) pair per eigenform.");

    m.def(
        "verify_theorem3",
        [](unsigned v, unsigned n_max, unsigned M, unsigned N, long prec) {
            TruncationParams params{M, N, prec};
            const auto p3 = PartitionTable::colored(3, n_max);
            const auto rep = verify_theorem3(v, n_max, params, p3);
            py::dict d;
            d["v"] = rep.v;
            d["n_max"] = rep.n_max;
            d["max_residual"] = rep.max_residual;
            d["tail_bound"] = rep.tail_bound;
            d["status"] = rep.status;
            return d;
        },
        py::arg("v"), py::arg("n_max"), py::arg("M") = 100, py::arg("N") = 700,
        py::arg("prec") = 60, "Residual check of the trace-form recurrence.");
}
