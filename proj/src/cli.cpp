#include "latcol/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>

#include "latcol/collineation.hpp"
#include "latcol/errors.hpp"
#include "latcol/io.hpp"
#include "latcol/opspaces.hpp"
#include "latcol/structure.hpp"
#include "latcol/verify.hpp"

namespace latcol {

namespace {

std::string join_scalars(const std::vector<Scalar>& v, const char* sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? sep : "") + v[i].to_string();
    }
    return out;
}

std::string join_indices(const std::vector<std::size_t>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? " " : "") + std::to_string(v[i]);
    }
    return out + "]";
}

std::string bits(const std::vector<bool>& v) {
    std::string out;
    for (bool b : v) {
        out += b ? '1' : '0';
    }
    return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

Matrix require_square(const MatrixFile& f, const std::string& what) {
    if (!f.matrix.is_square()) {
        throw InputError(what + " must be square, got " + std::to_string(f.matrix.rows()) + "x" +
                         std::to_string(f.matrix.cols()));
    }
    return f.matrix;
}

Matrix require_nilpotent(const Matrix& n, const std::string& what) {
    if (!is_nilpotent(n)) {
        throw PreconditionError(what + " is not nilpotent");
    }
    return n;
}

void add_space(Report& r, const OperatorSpace& s) {
    r.add("outcome", "space of dimension " + std::to_string(s.dim()));
    r.add("dim", s.dim());
    for (std::size_t k = 0; k < s.dim(); ++k) {
        r.add("basis_" + std::to_string(k), s.basis_element(k).to_string());
    }
}

// A vector is either a matrix file holding one row or one column, or an
// inline list of scalars such as "1,0,-1/2".
Vector read_vector(const std::string& arg) {
    if (std::filesystem::is_regular_file(arg)) {
        const Matrix m = read_matrix_file(arg).matrix;
        if (m.cols() == 1) {
            return m.column(0);
        }
        if (m.rows() == 1) {
            return Vector(m.row(0).begin(), m.row(0).end());
        }
        throw InputError(arg + ": expected a single row or column, got " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
    }
    return parse_scalar_list(arg, "vector argument");
}

std::vector<Scalar> spectrum_for(const MatrixFile& f, const std::string& option) {
    if (!option.empty()) {
        return parse_scalar_list(option, "--spectrum");
    }
    if (f.spectrum) {
        return *f.spectrum;
    }
    return {Scalar(0)};
}

struct Options {
    std::string a, b, t, x, suite, spectrum;
    std::uint64_t seed = 0;
    std::size_t samples = 100;
    int grid = 2;
    std::size_t random = 0;
};

int cmd_commutant(const Options& o, Report& r) {
    const MatrixFile f = read_matrix_file(o.a);
    const Matrix a = require_square(f, "A");
    r.add_inputs(format_matrix_file(a));
    r.add("seed", "0");
    r.add("size", a.rows());
    add_space(r, commutant(a));
    return kExitOk;
}

int cmd_intertwine(const Options& o, Report& r) {
    const Matrix a = require_square(read_matrix_file(o.a), "A");
    const Matrix b = require_square(read_matrix_file(o.b), "B");
    r.add_inputs(format_matrix_file(a) + format_matrix_file(b));
    r.add("seed", "0");
    r.add("shape", std::to_string(a.rows()) + "x" + std::to_string(b.rows()));
    add_space(r, intertwiners(a, b));
    return kExitOk;
}

int cmd_alglat(const Options& o, Report& r) {
    const MatrixFile f = read_matrix_file(o.a);
    const Matrix n = require_square(f, "N");
    r.add_inputs(format_matrix_file(n, f.spectrum));
    r.add("seed", "0");
    const bool primary = f.spectrum && !(f.spectrum->size() == 1 && f.spectrum->front().is_zero());
    if (primary) {
        r.add("mode", "primary");
        r.add("spectrum", join_scalars(*f.spectrum));
        add_space(r, alg_lat_primary(n, *f.spectrum));
        return kExitOk;
    }
    require_nilpotent(n, "N");
    const JordanType type = jordan_type(n);
    const OperatorSpace al = alg_lat_commutant(n);
    r.add("mode", "nilpotent");
    r.add("jordan_type", type.to_string());
    if (n == jordan_matrix(type)) {
        r.add("blockwise_closed_form", al == refl_blockwise(type) ? "equal" : "differs");
    }
    add_space(r, al);
    return kExitOk;
}

int cmd_jordan(const Options& o, Report& r) {
    const Matrix n = require_square(read_matrix_file(o.a), "N");
    r.add_inputs(format_matrix_file(n));
    r.add("seed", "0");
    const std::size_t index = nil_index(n);
    const JordanBasis jb = jordan_basis(n);
    r.add("outcome", "nilpotent of type " + jb.type.to_string());
    r.add("nil_index", index);
    r.add("jordan_type", jb.type.to_string());
    r.add("basis", jb.basis.to_string());
    r.add("basis_inverse", jb.basis_inverse.to_string());
    const HyperinvariantGenerators h = hyperinvariant_generators(n);
    r.add("hyperinvariant_generated", h.closure.size());
    for (std::size_t k = 0; k < h.closure.size(); ++k) {
        r.add("hyperinvariant_" + std::to_string(k), h.closure[k].to_string());
    }
    return kExitOk;
}

int cmd_decompose(const Options& o, Report& r) {
    const MatrixFile f = read_matrix_file(o.a);
    const Matrix a = require_square(f, "A");
    const std::vector<Scalar> spectrum = spectrum_for(f, o.spectrum);
    r.add_inputs(format_matrix_file(a, spectrum));
    r.add("seed", "0");
    const PrimaryDecomposition pd = primary_decompose(a, spectrum);
    r.add("outcome", std::to_string(pd.components.size()) + " primary components");
    r.add("components", pd.components.size());
    for (std::size_t j = 0; j < pd.components.size(); ++j) {
        const auto& c = pd.components[j];
        const std::string key = "component_" + std::to_string(j);
        r.add(key, "eigenvalue=" + c.eigenvalue.to_string() + " exponent=" + std::to_string(c.exponent) +
                       " dim=" + std::to_string(c.basis.cols()) + " type=" + c.type.to_string());
        r.add(key + "_basis", c.basis.to_string());
    }
    std::string classes;
    for (const auto& cls : group_by_similarity(pd)) {
        classes += (classes.empty() ? "" : " ") + join_indices(cls);
    }
    r.add("similarity_classes", classes);
    r.add("change_of_basis", pd.change_of_basis.to_string());
    return kExitOk;
}

int cmd_colcheck(const Options& o, Report& r) {
    const MatrixFile fa = read_matrix_file(o.a);
    const Matrix a = require_square(fa, "A");
    const Matrix t = require_square(read_matrix_file(o.t), "T");
    if (t.rows() != a.rows()) {
        throw InputError("T must have the size of A (" + std::to_string(a.rows()) + ")");
    }
    const std::vector<Scalar> spectrum = spectrum_for(fa, o.spectrum);
    r.add_inputs(format_matrix_file(a, spectrum) + format_matrix_file(t) + "samples=" + std::to_string(o.samples));
    r.add("seed", std::to_string(o.seed));
    r.add("samples", o.samples);
    VectorSample sample;
    sample.seed = o.seed;
    sample.random_count = o.samples;
    const ColVerdict v = col_check(a, t, spectrum, sample);
    r.add("outcome", v.is_member() ? "member" : "not a member");
    r.add("verdict", to_string(v.verdict));
    for (std::size_t k = 0; k < v.decision_path.size(); ++k) {
        r.add("step_" + std::to_string(k), v.decision_path[k]);
    }
    if (!v.permutation.empty()) {
        r.add("permutation", join_indices(v.permutation));
    }
    if (v.witness) {
        r.add("witness_direction", to_string(v.witness->direction));
        r.add("witness_source", v.witness->source);
        r.add("witness_subspace", v.witness->subspace.to_string());
        r.add("witness_verified", yes_no(verify_witness(a, t, *v.witness)));
    }
    r.add("vectors_tested", v.stats.vectors_tested);
    return v.is_member() ? kExitOk : kExitRefuted;
}

int cmd_witness(const Options& o, Report& r) {
    const Matrix n = require_square(read_matrix_file(o.a), "N");
    const Matrix t = require_square(read_matrix_file(o.t), "T");
    const Vector x = read_vector(o.x);
    if (t.rows() != n.rows() || x.size() != n.rows()) {
        throw InputError("N, T and x must share the dimension " + std::to_string(n.rows()));
    }
    require_nilpotent(n, "N");
    r.add_inputs(format_matrix_file(n) + format_matrix_file(t) + to_string(x));
    r.add("seed", "0");
    r.add("x", to_string(x));
    const auto b = commutant_witness(n, t, x);
    r.add("commutant_witness", b ? b->to_string() : "none");
    const CyclicImageReport c = cyclic_image_check(n, t, x);
    r.add("height", c.height);
    r.add("image_is_cyclic", bits(c.image_is_cyclic));
    r.add("cyclic_commutes", bits(c.cyclic_commutes));
    r.add("top_annihilated", yes_no(c.top_annihilated));
    const bool ok = b.has_value() && c.passed();
    r.add("outcome", ok ? "consistent" : "refutes membership");
    return ok ? kExitOk : kExitRefuted;
}

int cmd_separator(const Options& o, Report& r) {
    const Matrix n = require_nilpotent(require_square(read_matrix_file(o.a), "N"), "N");
    r.add_inputs(format_matrix_file(n));
    r.add("seed", "0");
    const SeparatorCertificate s = diagonal_separator(n);
    r.add("outcome", s.verified() ? "separator verified" : "separator not verified");
    r.add("d", s.d.to_string());
    r.add("k", s.k.to_string());
    r.add("d_invertible", yes_no(s.d_invertible));
    r.add("d_in_alg_lat", yes_no(s.d_in_alg_lat));
    r.add("k_invariant", yes_no(s.k_invariant));
    r.add("dk_not_invariant", yes_no(s.dk_not_invariant));
    r.add("verified", yes_no(s.verified()));
    return s.verified() ? kExitOk : kExitRefuted;
}

int cmd_lattice(const Options& o, Report& r) {
    if (o.grid < 0) {
        throw InputError("--grid must be non-negative");
    }
    r.add_inputs("grid=" + std::to_string(o.grid) + " random=" + std::to_string(o.random));
    r.add("seed", std::to_string(o.seed));
    r.add("grid", std::to_string(o.grid));
    const auto elems = lat_j2j2_sample(o.grid, o.random, o.seed);
    r.add("outcome", std::to_string(elems.size()) + " invariant subspaces");
    r.add("count", elems.size());
    for (std::size_t k = 0; k < elems.size(); ++k) {
        const auto& e = elems[k];
        std::string line = to_string(e.kind);
        if (!e.params.empty()) {
            line += " (" + join_scalars(e.params, ",") + ")";
        }
        r.add("element_" + std::to_string(k), line + " " + e.realized.to_string());
    }
    return kExitOk;
}

int cmd_verify(const Options& o, Report& r) {
    r.add_inputs("suite=" + o.suite);
    r.add("seed", "0");
    std::vector<SuiteResult> results;
    if (o.suite.empty() || o.suite == "all") {
        results = run_all_suites();
    } else {
        results.push_back(run_suite(o.suite));
    }
    const auto passed = static_cast<std::size_t>(
        std::count_if(results.begin(), results.end(), [](const SuiteResult& s) { return s.passed(); }));
    r.add("outcome", passed == results.size() ? "all suites passed" : "suite failures");
    for (const auto& s : results) {
        r.add("suite_" + std::to_string(s.id), s.line());
    }
    r.add("passed", std::to_string(passed) + "/" + std::to_string(results.size()));
    return passed == results.size() ? kExitOk : kExitRefuted;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact lattice, reflexivity and collineation computations for finite matrices", "latcol"};
    app.require_subcommand(1);
    Options o;

    struct Command {
        CLI::App* app;
        std::function<int(const Options&, Report&)> run;
    };
    std::vector<Command> commands;
    auto add = [&](const std::string& name, const std::string& help, std::function<int(const Options&, Report&)> fn) {
        CLI::App* sub = app.add_subcommand(name, help);
        commands.push_back({sub, std::move(fn)});
        return sub;
    };

    auto* c = add("commutant", "basis of {T : AT = TA}", cmd_commutant);
    c->add_option("A", o.a, "matrix file")->required();

    c = add("intertwine", "basis of {T : AT = TB}", cmd_intertwine);
    c->add_option("A", o.a, "matrix file")->required();
    c->add_option("B", o.b, "matrix file")->required();

    c = add("alglat", "algebra of the invariant-subspace lattice", cmd_alglat);
    c->add_option("N", o.a, "matrix file (nilpotent, or with a spectrum line)")->required();

    c = add("jordan", "Jordan type, basis and hyperinvariant subspaces of a nilpotent matrix", cmd_jordan);
    c->add_option("N", o.a, "matrix file")->required();

    c = add("decompose", "primary decomposition for a given spectrum", cmd_decompose);
    c->add_option("A", o.a, "matrix file")->required();
    c->add_option("--spectrum", o.spectrum, "distinct eigenvalues, comma separated");

    c = add("colcheck", "decide whether T maps Lat(A) onto itself", cmd_colcheck);
    c->add_option("A", o.a, "matrix file")->required();
    c->add_option("T", o.t, "matrix file")->required();
    c->add_option("--seed", o.seed, "seed of the random sample vectors");
    c->add_option("--samples", o.samples, "number of random sample vectors");
    c->add_option("--spectrum", o.spectrum, "distinct eigenvalues, comma separated");

    c = add("witness", "commutant witness and cyclic-image identities at x", cmd_witness);
    c->add_option("N", o.a, "matrix file")->required();
    c->add_option("T", o.t, "matrix file")->required();
    c->add_option("x", o.x, "vector file or comma-separated scalars")->required();

    c = add("separator", "certificate that a diagonal alg-lat element is not a collineation", cmd_separator);
    c->add_option("N", o.a, "matrix file")->required();

    c = add("sample-lattice-j2j2", "sampled invariant subspaces of J2 + J2", cmd_lattice);
    c->add_option("--grid", o.grid, "parameter range -g..g");
    c->add_option("--random", o.random, "extra random parameter sets per kind");
    c->add_option("--seed", o.seed, "seed of the random parameter sets");

    c = add("verify", "run the acceptance suites", cmd_verify);
    c->add_option("suite", o.suite, "suite number or name (default: all)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    for (const auto& cmd : commands) {
        if (!cmd.app->parsed()) {
            continue;
        }
        Report report(cmd.app->get_name());
        const auto start = std::chrono::steady_clock::now();
        try {
            const int code = cmd.run(o, report);
            report.set_timing(std::chrono::steady_clock::now() - start);
            report.write(out);
            return code;
        } catch (const PreconditionError& e) {
            err << "precondition error: " << e.what() << '\n';
            return kExitPrecondition;
        } catch (const std::invalid_argument& e) {
            err << "input error: " << e.what() << '\n';
            return kExitInputError;
        } catch (const std::domain_error& e) {
            err << "precondition error: " << e.what() << '\n';
            return kExitPrecondition;
        }
    }
    return kExitInputError;
}

}  // namespace latcol
