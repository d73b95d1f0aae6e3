// Copyright 2026 The fermialg Authors
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

#include "fermialg_cli/cli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "fermialg/eigen.hpp"
#include "fermialg/fermi_ops.hpp"
#include "fermialg/op_spec.hpp"

namespace fermialg::cli {

bool Suite::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed(); });
}

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEigenvalueTolerance = 1e-10;
constexpr double kProjectorTolerance = 1e-8;
constexpr double kUnitarityTolerance = 1e-12;
constexpr double kPropagatorTolerance = 1e-10;
constexpr int kDefaultReportModes = 6;

std::string fmt(double x) {
    if (x == 0.0) {
        return "0";
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", x);
    return buf;
}

double max_abs(const SparseOperator& a) {
    double m = 0.0;
    for (const Entry& e : a.entries()) {
        m = std::max(m, std::abs(e.value));
    }
    return m;
}

double flag(bool ok) {
    return ok ? 0.0 : 1.0;
}

Suite car_suite(int n) {
    const std::size_t dim = mode_dimension(n);
    const SparseOperator id = SparseOperator::identity(dim);
    std::vector<SparseOperator> c;
    std::vector<SparseOperator> cd;
    for (int k = 1; k <= n; ++k) {
        c.push_back(annihilation(n, k));
        cd.push_back(creation(n, k));
    }
    double mixed = 0.0;
    double lowered = 0.0;
    double raised = 0.0;
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            SparseOperator ac = anticommutator(cd[j], c[k]);
            mixed = std::max(mixed, j == k ? max_abs_diff(ac, id) : max_abs(ac));
            lowered = std::max(lowered, max_abs(anticommutator(c[j], c[k])));
            raised = std::max(raised, max_abs(anticommutator(cd[j], cd[k])));
        }
    }
    return {"car",
            {{"{c_j+, c_k} = delta_jk I", mixed, 0.0},
             {"{c_j, c_k} = 0", lowered, 0.0},
             {"{c_j+, c_k+} = 0", raised, 0.0}}};
}

Suite majorana_suite(int n) {
    const SparseOperator id = SparseOperator::identity(mode_dimension(n));
    std::vector<SparseOperator> gammas;
    for (int k = 1; k <= n; ++k) {
        gammas.push_back(majorana(n, k, MajoranaComponent::first));
        gammas.push_back(majorana(n, k, MajoranaComponent::second));
    }
    double square = 0.0;
    double cross = 0.0;
    for (std::size_t a = 0; a < gammas.size(); ++a) {
        square = std::max(square, max_abs_diff(gammas[a] * gammas[a], id));
        for (std::size_t b = a + 1; b < gammas.size(); ++b) {
            cross = std::max(cross, max_abs(anticommutator(gammas[a], gammas[b])));
        }
    }
    return {"majorana", {{"gamma^2 = I", square, 0.0}, {"{gamma_a, gamma_b} = 0", cross, 0.0}}};
}

Suite ladder_suite(int n) {
    Suite suite{"ladder", {}};
    for (const IdentityCheck& id : verify_identities(n)) {
        suite.checks.push_back({id.name, id.residual, 0.0});
    }
    return suite;
}

Suite spectrum_suite(int n, std::size_t cap) {
    SpectrumComparison cmp = cross_check_spectrum(n, cap);
    return {"spectrum",
            {{"multiplicities {-1:1, 0:2^n-2, +1:1}", flag(cmp.same_multiplicities), 0.0},
             {"eigenvalues analytic vs numeric", cmp.eigenvalue_error, kEigenvalueTolerance},
             {"eigenprojectors analytic vs numeric", cmp.projector_error, kProjectorTolerance}}};
}

Suite propagator_suite(int n, const std::vector<double>& thetas, std::size_t cap) {
    Suite suite{"propagator", {}};
    const SparseOperator k = hamiltonian_k(n);
    const SparseOperator id = SparseOperator::identity(mode_dimension(n));
    for (double theta : thetas) {
        const SparseOperator u = propagator(n, theta);
        suite.checks.push_back({"unitarity at theta=" + fmt(theta), max_abs_diff(u * adjoint(u), id),
                                kUnitarityTolerance});
        suite.checks.push_back({"closed form vs expm at theta=" + fmt(theta),
                                max_abs_diff(u, expm_hermitian(k, theta, cap)), kPropagatorTolerance});
    }
    return suite;
}

Suite lie_suite(int n) {
    Suite suite{"lie", {}};
    const std::vector<SparseOperator> ladder{product_raising(n), product_lowering(n)};
    const LieBasis sl2 = close(ladder);
    const LieReport sl2_report = killing_classify(sl2);
    suite.checks.push_back({"<raise, lower> dimension = 3", std::abs(double(sl2.size()) - 3.0), 0.0});
    suite.checks.push_back(
        {"<raise, lower> Killing signature (2,1,0)", flag(sl2_report.signature == KillingSignature{2, 1, 0}), 0.0});
    suite.checks.push_back({"<raise, lower> closure defect", closure_defect(sl2), kIndependenceTolerance});

    const LieBasis kn = close_kn(n);
    const LieReport kn_report = killing_classify(kn);
    suite.checks.push_back({"<K, N> dimension = 4", std::abs(double(kn.size()) - 4.0), 0.0});
    suite.checks.push_back({"<K, N> not semisimple", flag(!kn_report.semisimple), 0.0});
    suite.checks.push_back({"<K, N> center dimension = 1", std::abs(double(kn_report.center_dim) - 1.0), 0.0});
    suite.checks.push_back(
        {"<K, N> contains N - (n/2)[R,L]", span_residual(kn, kn_central_element(n)), kIndependenceTolerance});
    suite.checks.push_back({"<K, N> closure defect", closure_defect(kn), kIndependenceTolerance});
    return suite;
}

std::string verify_table(int n, const std::vector<Suite>& suites) {
    std::ostringstream os;
    bool all = true;
    for (const Suite& suite : suites) {
        for (const Check& c : suite.checks) {
            all = all && c.passed();
            os << (c.passed() ? "PASS  " : "FAIL  ") << suite.name << "  " << c.name << "  residual=" << fmt(c.residual)
               << " tol=" << fmt(c.tolerance) << "\n";
        }
    }
    os << "verify n=" << n << ": " << (all ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string matrix_table(const SparseOperator& a) {
    std::ostringstream os;
    os << "dim " << a.dim() << "\n";
    for (const Entry& e : a.entries()) {
        os << e.row << " " << e.col << " " << fmt(e.value.real()) << " " << fmt(e.value.imag()) << "\n";
    }
    return os.str();
}

std::string state_table(const DenseVector& psi) {
    std::ostringstream os;
    os << "dim " << psi.dim() << "\n";
    for (std::size_t i = 0; i < psi.dim(); ++i) {
        os << i << " " << fmt(psi[i].real()) << " " << fmt(psi[i].imag()) << "\n";
    }
    return os.str();
}

std::string spectrum_table(const SpectrumResult& s) {
    std::ostringstream os;
    os << "eigenvalue multiplicity\n";
    for (const Eigenspace& space : s.spaces) {
        os << fmt(space.value) << " " << space.multiplicity() << "\n";
    }
    return os.str();
}

std::string lie_table(const LieReport& r) {
    std::ostringstream os;
    os << "dimension " << r.dimension << "\n"
       << "semisimple " << (r.semisimple ? "true" : "false") << "\n"
       << "signature " << r.signature.positive << " " << r.signature.negative << " " << r.signature.zero << "\n"
       << "center_dim " << r.center_dim << "\n"
       << "tag " << to_string(r.tag) << "\n";
    for (const auto& [name, value] : r.residuals) {
        os << "residual." << name << " " << fmt(value) << "\n";
    }
    return os.str();
}

struct Request {
    std::string op;
    std::string gens;
    std::optional<int> n;
    std::optional<double> theta;
    std::string state;
    std::string out;
    std::string format = "json";
    std::optional<double> tol;
    std::optional<std::size_t> cap;
};

void require(bool ok, const char* message) {
    if (!ok) {
        throw ParseError(message);
    }
}

DenseVector load_state(const Request& r, int& n) {
    DenseVector psi = state_from_json(read_json_file(r.state));
    n = std::countr_zero(psi.dim());
    if (r.n && *r.n != n) {
        throw DimensionError("state dimension does not match --n");
    }
    return psi;
}

std::string execute(const std::string& sub, const Request& r, int& code) {
    const bool table = r.format == "table";
    code = kExitOk;
    if (sub == "repr") {
        require(!r.op.empty(), "repr requires --op");
        const SparseOperator a = build_operator(parse_operator_spec(r.op));
        return table ? matrix_table(a) : dump(to_json(a));
    }
    if (sub == "spectrum") {
        const std::size_t cap = r.cap.value_or(kDefaultEigenCap);
        SpectrumResult s;
        if (!r.op.empty()) {
            s = numeric_spectrum(build_operator(parse_operator_spec(r.op)), cap);
        } else {
            require(r.n.has_value(), "spectrum requires --op or --n");
            if (*r.n >= 1 && *r.n <= kMaxModes && mode_dimension(*r.n) > cap) {
                throw CapacityError("spectrum dimension exceeds --cap");
            }
            s = k_spectrum_analytic(*r.n);
        }
        return table ? spectrum_table(s) : dump(to_json(s));
    }
    if (sub == "evolve") {
        require(r.theta.has_value(), "evolve requires --theta");
        require(r.state.empty() != r.op.empty(), "evolve requires exactly one of --state or --op");
        if (!r.state.empty()) {
            int n = 0;
            const DenseVector psi = load_state(r, n);
            const DenseVector out = evolve_state(psi, n, *r.theta);
            return table ? state_table(out) : dump(to_json(out));
        }
        const OperatorSpec spec = parse_operator_spec(r.op);
        const SparseOperator a = heisenberg_evolve(build_operator(spec), r.n.value_or(operator_modes(spec)), *r.theta);
        return table ? matrix_table(a) : dump(to_json(a));
    }
    if (sub == "closure") {
        const double tol = r.tol.value_or(kIndependenceTolerance);
        LieBasis basis;
        if (!r.gens.empty()) {
            std::vector<SparseOperator> gens;
            for (const OperatorSpec& spec : parse_operator_list(r.gens)) {
                gens.push_back(build_operator(spec));
            }
            basis = close(gens, tol, r.cap.value_or(kDefaultMaxLieDim));
        } else {
            require(r.n.has_value(), "closure requires --gens or --n");
            basis = close_kn(*r.n, tol);
        }
        const LieReport report = killing_classify(basis);
        return table ? lie_table(report) : dump(to_json(report));
    }
    if (sub == "tangle") {
        require(!r.state.empty(), "tangle requires --state");
        int n = 0;
        const DenseVector psi = load_state(r, n);
        const TangleResult t = n_tangle(psi, n, TangleMethod::direct);
        if (table) {
            return "n " + std::to_string(t.n) + "\ntangle " + fmt(t.value) + "\nmethod direct\n";
        }
        return dump(to_json(t));
    }
    if (sub == "verify") {
        require(r.n.has_value(), "verify requires --n");
        VerifyOptions options;
        options.n = *r.n;
        options.tol = r.tol;
        options.theta = r.theta;
        options.cap = r.cap.value_or(kDefaultEigenCap);
        const std::vector<Suite> suites = run_verify(options);
        const bool ok = std::all_of(suites.begin(), suites.end(), [](const Suite& s) { return s.passed(); });
        code = ok ? kExitOk : kExitVerificationFailed;
        return table ? verify_table(options.n, suites) : dump(to_json(options.n, suites));
    }
    require(sub == "report", "unknown subcommand");
    return build_report(r.n.value_or(kDefaultReportModes));
}

std::string json_block(const Json& j) {
    return "```json\n" + j.dump(2) + "\n```\n\n";
}

double clean(double x) {
    return std::abs(x) < 1e-12 ? 0.0 : x;
}

}  // namespace

std::vector<Suite> run_verify(const VerifyOptions& options) {
    const int n = options.n;
    if (n < 1 || n > kMaxModes) {
        throw DomainError("verify requires 1 <= n <= 24");
    }
    if (mode_dimension(n) > options.cap) {
        throw CapacityError("verify dimension exceeds --cap");
    }
    std::vector<double> thetas{0.0, 0.37, kPi / 2, kPi};
    if (options.theta) {
        thetas = {*options.theta};
    }
    std::vector<Suite> suites{car_suite(n),
                              majorana_suite(n),
                              ladder_suite(n),
                              spectrum_suite(n, options.cap),
                              propagator_suite(n, thetas, options.cap),
                              lie_suite(n)};
    if (options.tol) {
        for (Suite& suite : suites) {
            for (Check& c : suite.checks) {
                if (c.tolerance > 0.0) {
                    c.tolerance = *options.tol;
                }
            }
        }
    }
    return suites;
}

Json to_json(int n, const std::vector<Suite>& suites) {
    Json list = Json::array();
    bool all = true;
    for (const Suite& suite : suites) {
        Json checks = Json::array();
        for (const Check& c : suite.checks) {
            Json jc;
            jc["name"] = c.name;
            jc["residual"] = number(c.residual);
            jc["tolerance"] = number(c.tolerance);
            jc["passed"] = c.passed();
            checks.push_back(std::move(jc));
        }
        Json js;
        js["name"] = suite.name;
        js["passed"] = suite.passed();
        js["checks"] = std::move(checks);
        list.push_back(std::move(js));
        all = all && suite.passed();
    }
    Json j;
    j["n"] = n;
    j["passed"] = all;
    j["suites"] = std::move(list);
    return j;
}

std::string build_report(int max_n) {
    if (max_n < 2 || max_n > 8) {
        throw DomainError("report supports 2 <= n <= 8");
    }
    std::ostringstream os;
    os << "# fermialg report\n\n";

    os << "## Operator matrices\n\n";
    const std::vector<std::string> specs{"c+(1,1)", "c-(1,1)", "K(1)", "N(1)", "c+(2,1)", "c+(2,2)",
                                         "c-(2,1)", "c-(2,2)", "K(2)", "N(2)"};
    for (const std::string& spec : specs) {
        os << "### " << spec << "\n\n" << json_block(to_json(build_operator(parse_operator_spec(spec))));
    }
    os << "### c-(1,1) c+(1,1)\n\n" << json_block(to_json(annihilation(1, 1) * creation(1, 1)));
    os << "### [c+(2,2) c+(2,1), c-(2,1) c-(2,2)]\n\n"
       << json_block(to_json(commutator(product_raising(2), product_lowering(2))));

    os << "## Spectrum of K\n\n";
    os << "| n | dim | mult(-1) | mult(0) | mult(+1) | eigenvalue error | projector error |\n";
    os << "|---|---|---|---|---|---|---|\n";
    for (int n = 1; n <= max_n; ++n) {
        const SpectrumResult s = k_spectrum_analytic(n);
        std::map<double, std::size_t> mult;
        for (const Eigenspace& space : s.spaces) {
            mult[space.value] = space.multiplicity();
        }
        std::string eig = "-";
        std::string proj = "-";
        if (n >= 2) {
            const SpectrumComparison cmp = cross_check_spectrum(n);
            eig = fmt(cmp.eigenvalue_error);
            proj = fmt(cmp.projector_error);
        }
        os << "| " << n << " | " << s.dim << " | " << mult[-1.0] << " | " << mult[0.0] << " | " << mult[1.0] << " | "
           << eig << " | " << proj << " |\n";
    }
    os << "\n";

    os << "## Lie algebras\n\n";
    os << "| n | generators | dimension | signature | semisimple | center | tag | residual of I |\n";
    os << "|---|---|---|---|---|---|---|---|\n";
    Json reports = Json::object();
    for (int n = 1; n <= 5; ++n) {
        const std::vector<SparseOperator> ladder{product_raising(n), product_lowering(n)};
        const std::pair<std::string, LieBasis> algebras[] = {{"raise, lower", close(ladder)}, {"K, N", close_kn(n)}};
        for (const auto& [label, basis] : algebras) {
            const LieReport r = killing_classify(basis);
            const double identity = span_residual(basis, SparseOperator::identity(mode_dimension(n)));
            os << "| " << n << " | " << label << " | " << r.dimension << " | (" << r.signature.positive << ","
               << r.signature.negative << "," << r.signature.zero << ") | " << (r.semisimple ? "yes" : "no") << " | "
               << r.center_dim << " | " << to_string(r.tag) << " | " << fmt(identity) << " |\n";
            if (n == 3) {
                reports[label] = to_json(r);
            }
        }
    }
    os << "\n### Reports at n = 3\n\n" << json_block(reports);

    os << "## Commutator ladder\n\n| n | identity | residual |\n|---|---|---|\n";
    for (int n = 1; n <= 3; ++n) {
        for (const IdentityCheck& id : verify_identities(n)) {
            os << "| " << n << " | `" << id.name << "` | " << fmt(id.residual) << " |\n";
        }
    }
    os << "\n";

    os << "## Spin model, n = 2\n\n| eigenvalue | multiplicity |\n|---|---|\n";
    for (const Eigenspace& space : numeric_spectrum(hamiltonian_spin(2)).spaces) {
        os << "| " << fmt(clean(space.value)) << " | " << space.multiplicity() << " |\n";
    }
    os << "\n| commutator | max abs entry |\n|---|---|\n";
    os << "| [Nspin, Sz] | " << fmt(max_abs(commutator(number_spin(2), sz(2)))) << " |\n";
    os << "| [Kspin, Nspin] | " << fmt(max_abs(commutator(hamiltonian_spin(2), number_spin(2)))) << " |\n";
    os << "| [Kspin, Sz] | " << fmt(max_abs(commutator(hamiltonian_spin(2), sz(2)))) << " |\n\n";

    os << "## Entanglement of K eigenvectors\n\n| n | state | eigenvalue | tangle |\n|---|---|---|---|\n";
    for (int n = 2; n <= 4; ++n) {
        for (const EntanglementRow& row : classify_eigenspace_entanglement(n)) {
            os << "| " << n << " | " << row.label << " | " << fmt(row.eigenvalue) << " | " << fmt(clean(row.tangle))
               << " |\n";
        }
    }
    return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Jordan-Wigner fermion operators, spectra, Lie closures and n-tangles.", "fermialg"};
    app.fallthrough();
    app.require_subcommand(1, 1);
    Request r;
    app.add_option("--op", r.op, "Operator, e.g. K(3), c+(3,2), maj(3,1,2)");
    app.add_option("--gens", r.gens, "Comma separated generator list");
    app.add_option("--n", r.n, "Number of modes");
    app.add_option("--theta", r.theta, "Evolution parameter");
    app.add_option("--state", r.state, "State JSON file");
    app.add_option("--out", r.out, "Write output to this file");
    app.add_option("--format", r.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--tol", r.tol, "Tolerance override");
    app.add_option("--cap", r.cap, "Dimension cap");
    app.add_subcommand("repr", "Print an operator as sparse JSON");
    app.add_subcommand("spectrum", "Eigenspaces of --op, or of K(n) in closed form");
    app.add_subcommand("evolve", "Apply exp(-i theta K) to a state, or conjugate --op");
    app.add_subcommand("closure", "Lie closure of --gens, or of {K, N} with --n");
    app.add_subcommand("tangle", "n-tangle of a state file");
    app.add_subcommand("verify", "Run the identity suites at --n modes");
    app.add_subcommand("report", "Markdown report of every table");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int status = app.exit(e, out, err);
        return status == 0 ? kExitOk : kExitParse;
    }

    try {
        int code = kExitOk;
        const std::string text = execute(app.get_subcommands().front()->get_name(), r, code);
        if (r.out.empty()) {
            out << text;
        } else {
            write_text_file(r.out, text);
        }
        return code;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const DimensionError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
}

}  // namespace fermialg::cli
