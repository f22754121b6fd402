#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>

#include "zexplore/argtrack.hpp"
#include "zexplore/csv.hpp"
#include "zexplore/errors.hpp"
#include "zexplore/figures.hpp"
#include "zexplore/identities.hpp"
#include "zexplore/oracle.hpp"
#include "zexplore/zeros.hpp"

using namespace zexplore;

namespace {

// stdout unless --out was given
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& os() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

struct Options {
    double sigma_min = 0, sigma_max = 0, rho_min = 0, rho_max = 0;
    int n_sigma = 0, n_rho = 0;
    double tol = 0;
    std::string out;
    int figure = 0;
    double min = 10, max = 30;
    std::string kind = "FULL";
    double sigma = 0.5;
    std::string angle = "alpha";
    std::string events;
    std::string golden = ZEXPLORE_DATA_DIR "/golden_oracle.csv";
};

int run_identities(const Options& o, const CLI::App& sub) {
    Grid grid = Grid::standard();
    const bool custom = sub.count("--sigma-min") || sub.count("--sigma-max") || sub.count("--n-sigma") ||
                        sub.count("--rho-min") || sub.count("--rho-max") || sub.count("--n-rho");
    if (custom) {
        Grid d = Grid::standard();
        grid = Grid::linspace(sub.count("--sigma-min") ? o.sigma_min : d.sigmas.front(),
                              sub.count("--sigma-max") ? o.sigma_max : d.sigmas.back(),
                              sub.count("--n-sigma") ? o.n_sigma : static_cast<int>(d.sigmas.size()),
                              sub.count("--rho-min") ? o.rho_min : d.rhos.front(),
                              sub.count("--rho-max") ? o.rho_max : d.rhos.back(),
                              sub.count("--n-rho") ? o.n_rho : static_cast<int>(d.rhos.size()));
    }
    const double tol = sub.count("--tol") ? o.tol : default_tolerance();
    std::vector<std::string> ids;
    for (const auto& info : registry()) ids.push_back(info.id);
    SweepReport rep = sweep(ids, grid, EvalConfig{}, tol);
    if (!o.out.empty()) {
        Output out(o.out);
        write_sweep_csv(out.os(), rep);
    }
    print_sweep_summary(std::cout, rep);
    return rep.failed == 0 ? 0 : 1;
}

int run_zeros(const Options& o) {
    Output out(o.out);
    std::vector<ZeroRecord> zs;
    if (o.kind == "FULL") zs = find_zeros(o.min, o.max);
    else if (o.kind == "REAL_HALF") zs = find_half_zeros(o.min, o.max, ZeroKind::REAL_HALF);
    else zs = find_half_zeros(o.min, o.max, ZeroKind::IMAG_HALF);
    write_zero_csv(out.os(), zs);
    return 0;
}

int run_figure(const Options& o) {
    Output out(o.out);
    switch (o.figure) {
        case 1: write_figure1(out.os()); break;
        case 2: write_figure2(out.os()); break;
        case 3: write_figure3(out.os()); break;
        default: write_figure4(out.os()); break;
    }
    return 0;
}

int run_trace(const Options& o) {
    const auto kind = parse_angle(o.angle.c_str());
    if (!kind) throw CLI::ValidationError("--angle", "unknown angle '" + o.angle + "'");
    ArgTrace t = track(o.sigma, o.max, *kind);
    Output out(o.out);
    CsvWriter w(out.os(), {"rho", "angle", "principal_arg", "k"});
    for (std::size_t i = 0; i < t.rho_samples.size(); ++i) {
        if (t.rho_samples[i] < o.min) continue;
        w << t.rho_samples[i] << t.angle_samples[i] << t.principal_samples[i] << t.k_at(i);
        w.end_row();
    }
    if (!o.events.empty()) {
        Output ev(o.events);
        CsvWriter e(ev.os(), {"rho", "jump_over_pi", "parity"});
        for (const auto& j : t.jump_events) {
            e << j.rho << j.jump_over_pi << (j.odd ? "odd" : "even");
            e.end_row();
        }
    }
    return 0;
}

int run_oracle(const Options& o) {
    OracleReport rep = check_against_golden(read_golden_file(o.golden));
    for (const auto& [q, worst] : rep.worst_abs)
        std::cout << q << ": worst_abs=" << fmt15(worst) << " tol=" << fmt15(oracle_tolerance(q)) << "\n";
    for (const auto& m : rep.mismatches)
        std::cout << "MISMATCH " << m.row.quantity << " at (" << fmt15(m.row.point.sigma) << ", "
                  << fmt15(m.row.point.rho) << "): abs_error=" << fmt15(m.abs_error) << "\n";
    std::cout << "rows=" << rep.rows << " mismatches=" << rep.mismatches.size() << "\n";
    return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical checks of zeta functional-equation identities"};
    app.require_subcommand(1);
    Options o;

    auto* ids = app.add_subcommand("identities", "sweep every registered identity over a grid");
    ids->add_option("--sigma-min", o.sigma_min);
    ids->add_option("--sigma-max", o.sigma_max);
    ids->add_option("--n-sigma", o.n_sigma)->check(CLI::PositiveNumber);
    ids->add_option("--rho-min", o.rho_min);
    ids->add_option("--rho-max", o.rho_max);
    ids->add_option("--n-rho", o.n_rho)->check(CLI::PositiveNumber);
    ids->add_option("--tol", o.tol, "residual tolerance (default: ZEXPLORE_TOL or 1e-7)")->check(CLI::PositiveNumber);
    ids->add_option("--out", o.out, "write per-point results as CSV");

    auto* zs = app.add_subcommand("zeros", "critical-line zeros and half-zeros");
    zs->add_option("--min", o.min)->capture_default_str();
    zs->add_option("--max", o.max)->capture_default_str();
    zs->add_option("--kind", o.kind)->check(CLI::IsMember({"FULL", "REAL_HALF", "IMAG_HALF"}))->capture_default_str();
    zs->add_option("--out", o.out);

    auto* fig = app.add_subcommand("figure", "CSV series behind figures 1-4");
    fig->add_option("--n", o.figure)->required()->check(CLI::Range(1, 4));
    fig->add_option("--out", o.out);

    auto* tr = app.add_subcommand("trace", "continuous argument along a vertical line");
    tr->add_option("--sigma", o.sigma)->capture_default_str();
    tr->add_option("--angle", o.angle, "alpha, alpha_tilde, beta, beta_tilde, gamma, theta")->capture_default_str();
    tr->add_option("--min", o.min)->capture_default_str();
    tr->add_option("--max", o.max)->capture_default_str();
    tr->add_option("--out", o.out);
    tr->add_option("--events", o.events, "write jump events as CSV");

    auto* orc = app.add_subcommand("oracle-check", "compare engine values with the golden file");
    orc->add_option("--golden", o.golden)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*ids) return run_identities(o, *ids);
        if (*zs) return run_zeros(o);
        if (*fig) return run_figure(o);
        if (*tr) return run_trace(o);
        return run_oracle(o);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
