#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "latcol/cli.hpp"
#include "latcol/collineation.hpp"
#include "latcol/errors.hpp"
#include "latcol/opspaces.hpp"
#include "latcol/structure.hpp"
#include "latcol/verify.hpp"

namespace py = pybind11;
using namespace latcol;

namespace {

// Entries arrive as anything whose str() is a scalar: int, Fraction, "1/2+i".
Scalar to_scalar(const py::handle& h) { return Scalar::parse(py::str(h).cast<std::string>()); }

Matrix to_matrix(const py::sequence& rows) {
    const std::size_t r = rows.size();
    if (r == 0) {
        throw InputError("empty matrix");
    }
    const std::size_t c = py::len(rows[0]);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        py::sequence row = rows[i];
        if (row.size() != c) {
            throw InputError("ragged matrix: row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                             " entries, expected " + std::to_string(c));
        }
        for (std::size_t j = 0; j < c; ++j) {
            m(i, j) = to_scalar(row[j]);
        }
    }
    return m;
}

Vector to_vector(const py::sequence& v) {
    Vector out;
    for (const auto& e : v) {
        out.push_back(to_scalar(e));
    }
    return out;
}

std::vector<Scalar> to_spectrum(const std::optional<py::sequence>& s) {
    return s ? to_vector(*s) : std::vector<Scalar>{Scalar(0)};
}

using StrMatrix = std::vector<std::vector<std::string>>;

StrMatrix from_matrix(const Matrix& m) {
    StrMatrix out(m.rows(), std::vector<std::string>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out[i][j] = m(i, j).to_string();
        }
    }
    return out;
}

std::vector<StrMatrix> from_space(const OperatorSpace& s) {
    std::vector<StrMatrix> out;
    for (const auto& b : s.basis()) {
        out.push_back(from_matrix(b));
    }
    return out;
}

StrMatrix from_subspace(const Subspace& s) { return from_matrix(s.basis()); }

py::dict from_verdict(const ColVerdict& v) {
    py::dict d;
    d["verdict"] = to_string(v.verdict);
    d["member"] = v.is_member();
    d["decision_path"] = v.decision_path;
    d["permutation"] = v.permutation;
    d["vectors_tested"] = v.stats.vectors_tested;
    d["seed"] = v.stats.seed;
    if (v.witness) {
        py::dict w;
        w["basis"] = from_subspace(v.witness->subspace);
        w["direction"] = to_string(v.witness->direction);
        w["source"] = v.witness->source;
        d["witness"] = w;
    } else {
        d["witness"] = py::none();
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_latcol, m) {
    m.doc() = "Exact lattice and collineation computations over the Gaussian rationals";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ArithmeticError);

    m.def("parse_scalar", [](const std::string& s) { return Scalar::parse(s).to_string(); },
          "Canonical text of a scalar such as '2/4-i'.");
    m.def("commutant", [](const py::sequence& a) { return from_space(commutant(to_matrix(a))); },
          "Basis of {T : AT = TA}.");
    m.def("intertwiners",
          [](const py::sequence& a, const py::sequence& b) { return from_space(intertwiners(to_matrix(a), to_matrix(b))); },
          "Basis of {T : AT = TB}.");
    m.def(
        "alg_lat",
        [](const py::sequence& a, std::optional<py::sequence> spectrum) {
            const Matrix mat = to_matrix(a);
            return from_space(spectrum ? alg_lat_primary(mat, to_spectrum(spectrum)) : alg_lat_commutant(mat));
        },
        py::arg("a"), py::arg("spectrum") = py::none(),
        "Basis of the algebra leaving the invariant-subspace lattice fixed.");
    m.def("jordan_type", [](const py::sequence& n) { return jordan_type(to_matrix(n)).blocks; });
    m.def("jordan_matrix", [](const std::vector<std::size_t>& blocks) {
        return from_matrix(jordan_matrix(JordanType{blocks}));
    });
    m.def(
        "col_check",
        [](const py::sequence& a, const py::sequence& t, std::optional<py::sequence> spectrum, std::uint64_t seed,
           std::size_t samples) {
            VectorSample smp;
            smp.seed = seed;
            smp.random_count = samples;
            return from_verdict(col_check(to_matrix(a), to_matrix(t), to_spectrum(spectrum), smp));
        },
        py::arg("a"), py::arg("t"), py::arg("spectrum") = py::none(), py::arg("seed") = 0, py::arg("samples") = 100,
        "Decide whether T maps the invariant-subspace lattice of A onto itself.");
    m.def("diagonal_separator", [](const py::sequence& n) {
        const SeparatorCertificate s = diagonal_separator(to_matrix(n));
        py::dict d;
        d["d"] = from_matrix(s.d);
        d["k"] = from_subspace(s.k);
        d["verified"] = s.verified();
        return d;
    });
    m.def("hankel_witness", [](std::size_t rows, std::size_t cols, const py::sequence& t, const py::sequence& x) {
        return from_matrix(hankel_witness(rows, cols, to_matrix(t), to_vector(x)));
    });
    m.def("run_suite", [](const std::string& selector) {
        const SuiteResult r = run_suite(selector);
        py::dict d;
        d["id"] = r.id;
        d["name"] = r.name;
        d["passed"] = r.passed();
        d["seconds"] = r.seconds;
        d["detail"] = r.detail;
        return d;
    });
    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
