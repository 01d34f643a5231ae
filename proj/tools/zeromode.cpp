// zeromode: figure data, divergence sweeps and the oracle report.
//
// Exit status: 0 success, 1 oracle check failure, 2 usage error,
// 3 numerical error.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "zeromode/errors.hpp"
#include "zeromode/oracle_suite.hpp"
#include "zeromode/sweep.hpp"

namespace {

using namespace zeromode;

struct Common {
    std::string out;
    std::string format = "csv";
    std::string grid;
    unsigned jobs = 1;
    double zero_tol = kDefaultZeroTol;
    double rel_tol = 1e-8;

    CommonOptions options() const { return {jobs, zero_tol, rel_tol}; }
};

void add_common(CLI::App* sub, Common& c, bool with_grid) {
    sub->add_option("--out", c.out, "Output path (stdout when omitted)");
    sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    if (with_grid) sub->add_option("--grid", c.grid, "start:stop:count[:geom]");
    sub->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
    sub->add_option("--zero-tol", c.zero_tol, "Relative zero-mode tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--rel-tol", c.rel_tol, "Quadrature relative tolerance")->check(CLI::PositiveNumber);
}

void maybe_grid(const Common& c, ParamGrid& g) {
    if (!c.grid.empty()) g = parse_grid(c.grid);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entanglement entropy of quadratic and continuous-spectrum systems, with zero-mode divergence checks"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    Common common;
    Fig1Options fig1;
    Fig2Options fig2;
    Fig3Options fig3;
    Fig4Options fig4;
    TripartiteSweepOptions tri;
    LatticeSweepOptions lat;
    std::string axis = "mu";
    OracleOptions oracle;
    bool timings = false;

    auto* c1 = app.add_subcommand("fig1", "S(R) of two oscillators with negative coupling; columns R,S");
    add_common(c1, common, true);

    auto* c2 = app.add_subcommand("fig2", "Plane-wave limit S = -sqrt2 ln R; columns R,S,S_reference");
    add_common(c2, common, true);
    c2->add_option("--omega0", fig2.omega0)->check(CLI::PositiveNumber);
    c2->add_option("--mass", fig2.mass)->check(CLI::PositiveNumber);
    c2->add_option("--hbar", fig2.hbar)->check(CLI::PositiveNumber);

    auto* c3 = app.add_subcommand("fig3", "Hydrogen entropy density g(kappa); columns zeta,kappa,g plus a summary");
    add_common(c3, common, true);
    c3->add_option("--zeta", fig3.zetas, "Zeta values (repeat or comma separated)")->delimiter(',');
    c3->add_option("--eta", fig3.eta)->check(CLI::PositiveNumber);

    auto* c4 = app.add_subcommand("fig4", "Distorted-coordinate entropy; columns eps,lambda,S,warning");
    add_common(c4, common, true);

    auto* ct = app.add_subcommand("tripartite-sweep",
                                  "S1, S2 along k = (a^2+b^2)(1+delta); grid is over delta");
    add_common(ct, common, true);
    ct->add_option("--alpha-t", tri.alpha_t, "Scaled x1-environment coupling");
    ct->add_option("--beta-t", tri.beta_t, "Scaled x2-environment coupling");

    auto* cl = app.add_subcommand("lattice-sweep", "Half-chain entropy of the periodic lattice field");
    add_common(cl, common, true);
    cl->add_option("--axis", axis, "mu (transformed system) or spacing (original, grid over a)")
        ->check(CLI::IsMember({"mu", "spacing"}));
    cl->add_option("--sites", lat.sites)->check(CLI::Range(2, 1024));
    cl->add_option("--m-f", lat.m_f, "Field mass (spacing axis)")->check(CLI::NonNegativeNumber);

    auto* co = app.add_subcommand("oracle", "Run every cross-check and print the report");
    add_common(co, common, false);
    co->add_flag("--timings", timings, "Append per-check wall time (output no longer reproducible)");
    co->add_option("--xi-perturbation", oracle.xi_perturbation, "Offset added to closed-form xi (mutation test)")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const Format fmt = parse_format(common.format);
        const CommonOptions opts = common.options();
        SweepOutput out;
        int status = 0;
        if (c1->parsed()) {
            maybe_grid(common, fig1.grid);
            out = run_fig1(fig1, opts);
        } else if (c2->parsed()) {
            maybe_grid(common, fig2.grid);
            out = run_fig2(fig2, opts);
        } else if (c3->parsed()) {
            maybe_grid(common, fig3.kappa_grid);
            out = run_fig3(fig3, opts);
        } else if (c4->parsed()) {
            maybe_grid(common, fig4.grid);
            out = run_fig4(fig4, opts);
        } else if (ct->parsed()) {
            maybe_grid(common, tri.delta_grid);
            out = run_tripartite_sweep(tri, opts);
        } else if (cl->parsed()) {
            lat.axis = axis == "mu" ? LatticeAxis::mu : LatticeAxis::spacing;
            if (lat.axis == LatticeAxis::spacing) lat.grid = ParamGrid{2.0, 0.1, 20, Spacing::geometric};
            maybe_grid(common, lat.grid);
            out = run_lattice_sweep(lat, opts);
        } else {
            oracle.jobs = common.jobs;
            const auto report = run_oracle_suite(oracle);
            out = report_output(report, timings);
            status = report.ok() ? 0 : 1;
        }
        emit(out, fmt, common.out);
        return status;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const NumericError& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        // I/O failures: the message carries the path.
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
