#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "subdiff/l1_solver.hpp"
#include "subdiff/mittag_leffler.hpp"
#include "subdiff/problem_io.hpp"
#include "subdiff/spectral_solver.hpp"
#include "subdiff/studies.hpp"

namespace {

using namespace subdiff;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

class CsvOut {
public:
    explicit CsvOut(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::invalid_argument("cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? (std::ostream&)file_ : std::cout; }

private:
    std::ofstream file_;
};

std::string join(const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + fmt17(v[i]);
    return s;
}

int run_ml(double alpha, double beta, const std::vector<double>& zs, const std::string& out) {
    CsvOut csv(out);
    auto& os = csv.stream();
    os << "# subdiff ml alpha=" << fmt17(alpha) << " beta=" << fmt17(beta) << " z=[" << join(zs) << "]\n";
    os << "z,value,status\n";
    bool failed = false;
    for (double z : zs) {
        try {
            double v = ml(MLParams{alpha, beta}, z);
            os << fmt17(z) << "," << fmt17(v) << ",ok\n";
        } catch (const certification_error& e) {
            os << fmt17(z) << ",nan,certification-failure\n";
            failed = true;
        }
    }
    return failed ? 3 : 0;
}

int run_solve(const std::string& problem_path, const std::string& out) {
    ProblemSpec problem = load_problem(problem_path);
    SolutionField sol = solve(problem);
    SolutionNorms norms = full_solution_norm(problem.alpha, sol.traj);
    CsvOut csv(out);
    auto& os = csv.stream();
    os << "# subdiff solve problem=" << problem_path << " alpha=" << fmt17(problem.alpha.value)
       << " T=" << fmt17(problem.grid.horizon) << " n_time=" << problem.grid.cells
       << " L=" << fmt17(problem.length) << " M=" << problem.mode_count() << "\n";
    os << "# norm_l2_h1=" << fmt17(norms.l2_h1) << "\n";
    os << "# norm_halpha_hm1=" << fmt17(norms.halpha_hm1) << "\n";
    os << "t,k,d\n";
    for (int i = 0; i <= problem.grid.cells; ++i)
        for (int k = 1; k <= problem.mode_count(); ++k)
            os << fmt17(problem.grid.node(i)) << "," << k << ","
               << fmt17(sol.traj.modes[(std::size_t)k - 1][(std::size_t)i]) << "\n";
    return 0;
}

int run_trace(double alpha, double delta, int grid_n, int modes, const std::vector<double>& s_list,
              const std::string& out) {
    TimeGrid grid(1.0, grid_n);
    auto rows = trace_study(alpha, delta, s_list, grid, modes);
    CsvOut csv(out);
    auto& os = csv.stream();
    os << "# subdiff trace-study alpha=" << fmt17(alpha) << " delta=" << fmt17(delta)
       << " grid=" << grid_n << " modes=" << modes << " s=[" << join(s_list) << "]\n";
    os << "s,t,value,asserted\n";
    for (const auto& r : rows)
        os << fmt17(r.s) << "," << fmt17(r.t) << "," << fmt17(r.value) << "," << (r.asserted ? 1 : 0)
           << "\n";
    // sanity check on asserted columns: the value must have decayed toward t=0
    const std::size_t per_col = (std::size_t)grid_n + 1;
    for (std::size_t c = 0; c * per_col < rows.size(); ++c) {
        const TraceRow& first = rows[c * per_col + 1];   // t_1
        const TraceRow& last = rows[(c + 1) * per_col - 1];  // t_n
        if (first.asserted && !(first.value < last.value)) {
            std::cerr << "trace-study: no decay toward t=0 for s=" << first.s << "\n";
            return 3;
        }
    }
    return 0;
}

int run_stability(const std::vector<double>& alphas, double delta, int trials, int modes, int grid_n,
                  std::uint64_t seed, const std::string& out) {
    TimeGrid grid(1.0, grid_n);
    StabilityStudy study = stability_study(alphas, delta, trials, modes, grid, seed);
    CsvOut csv(out);
    auto& os = csv.stream();
    os << "# subdiff stability-study alpha=[" << join(alphas) << "] delta=" << fmt17(delta)
       << " trials=" << trials << " modes=" << modes << " grid=" << grid_n << " seed=" << seed << "\n";
    for (const auto& [a, m] : study.max_ratio)
        os << "# max_ratio alpha=" << fmt17(a) << " value=" << fmt17(m) << "\n";
    os << "alpha,trial,ratio\n";
    for (const auto& r : study.rows)
        os << fmt17(r.alpha) << "," << r.trial << "," << fmt17(r.ratio) << "\n";
    return 0;
}

int run_convergence(const std::string& problem_path, int refinements, const std::string& out) {
    ProblemSpec problem = load_problem(problem_path);
    ConvergenceReport rep = cross_validate(problem, refinements);
    CsvOut csv(out);
    auto& os = csv.stream();
    os << "# subdiff convergence problem=" << problem_path << " refinements=" << refinements << "\n";
    os << "n,distance,fitted_order\n";
    for (std::size_t i = 0; i < rep.cells.size(); ++i)
        os << rep.cells[i] << "," << fmt17(rep.distances[i]) << "," << fmt17(rep.fitted_order) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"subdiff: batch driver for the subdiffusion solver toolkit"};
    app.require_subcommand(1);

    double alpha = 0.75, beta = 1.0, delta = 0.1;
    int grid_n = 256, modes = 32, trials = 20, refinements = 4;
    std::uint64_t seed = 0;
    std::string out, problem_path;
    std::vector<double> zs, s_list, alphas;

    auto* ml_cmd = app.add_subcommand("ml", "evaluate E_{alpha,beta} on a list of points");
    ml_cmd->add_option("--alpha", alpha)->required();
    ml_cmd->add_option("--beta", beta)->capture_default_str();
    ml_cmd->add_option("--out", out);
    ml_cmd->add_option("z", zs, "evaluation points")->required();

    auto* solve_cmd = app.add_subcommand("solve", "solve a problem file, emit mode trajectories");
    solve_cmd->add_option("--problem", problem_path)->required()->check(CLI::ExistingFile);
    solve_cmd->add_option("--out", out);

    auto* trace_cmd = app.add_subcommand("trace-study", "||u(t)-g||_{H^s} columns for rough data");
    trace_cmd->add_option("--alpha", alpha)->required();
    trace_cmd->add_option("--delta", delta)->capture_default_str();
    trace_cmd->add_option("--grid", grid_n)->capture_default_str();
    trace_cmd->add_option("--modes", modes)->capture_default_str();
    trace_cmd->add_option("--out", out);
    trace_cmd->add_option("s", s_list, "spatial orders")->required();

    auto* stab_cmd = app.add_subcommand("stability-study", "stability ratios over seeded random problems");
    stab_cmd->add_option("--alpha", alphas, "alpha list")->required();
    stab_cmd->add_option("--delta", delta)->capture_default_str();
    stab_cmd->add_option("--trials", trials)->capture_default_str();
    stab_cmd->add_option("--modes", modes)->capture_default_str();
    stab_cmd->add_option("--grid", grid_n)->capture_default_str();
    stab_cmd->add_option("--seed", seed)->required();
    stab_cmd->add_option("--out", out);

    auto* conv_cmd = app.add_subcommand("convergence", "spectral-vs-L1 cross validation distances");
    conv_cmd->add_option("--problem", problem_path)->required()->check(CLI::ExistingFile);
    conv_cmd->add_option("--refinements", refinements)->capture_default_str();
    conv_cmd->add_option("--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // validation failures map to 2
    }

    try {
        if (ml_cmd->parsed()) return run_ml(alpha, beta, zs, out);
        if (solve_cmd->parsed()) return run_solve(problem_path, out);
        if (trace_cmd->parsed()) return run_trace(alpha, delta, grid_n, modes, s_list, out);
        if (stab_cmd->parsed()) return run_stability(alphas, delta, trials, modes, grid_n, seed, out);
        if (conv_cmd->parsed()) return run_convergence(problem_path, refinements, out);
    } catch (const certification_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
