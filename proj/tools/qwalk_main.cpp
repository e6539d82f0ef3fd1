#include <fstream>
#include <future>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qwalk/qwalk.hpp"

namespace {

using namespace qwalk;

/// Angles are accepted as plain decimals or pi-literals: "pi", "pi/4",
/// "3pi/8", "-pi/2", "0.3pi", "1.5707963".
double parse_angle(const std::string& text) {
    static const std::regex pattern(
        R"(^\s*([+-])?\s*(\d+\.?\d*(?:[eE][+-]?\d+)?|\.\d+)?\s*\*?\s*(pi)?\s*(?:/\s*(\d+\.?\d*))?\s*$)");
    std::smatch m;
    if (!std::regex_match(text, m, pattern) || (m[2].str().empty() && m[3].str().empty()))
        throw std::domain_error("cannot parse angle '" + text + "'");
    double value = m[2].str().empty() ? 1.0 : std::stod(m[2].str());
    if (m[3].matched) value *= pi;
    if (m[4].matched) value /= std::stod(m[4].str());
    if (m[1].matched && m[1].str() == "-") value = -value;
    return value;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream file(path);
    if (!file) throw std::domain_error("cannot open output file: " + path);
    file << content;
}

struct SetupFlags {
    std::string theta;
    std::string phi1 = "0";
    std::string phi2 = "0";
    std::string varphi = "pi/4";
    std::string xi = "pi/2";

    void attach(CLI::App* cmd) {
        cmd->add_option("--theta", theta, "coin angle theta (radians or pi-literal)")
            ->required();
        cmd->add_option("--phi1", phi1, "coin phase phi1 [default 0]");
        cmd->add_option("--phi2", phi2, "coin phase phi2 [default 0]");
        cmd->add_option("--varphi", varphi, "coin-state angle varphi [default pi/4]");
        cmd->add_option("--xi", xi, "coin-state phase xi [default pi/2]");
    }
    CoinSetup build() const {
        return CoinSetup(parse_angle(theta), parse_angle(phi1), parse_angle(phi2),
                         parse_angle(varphi), parse_angle(xi));
    }
};

std::string grid_csv(double x_min, double x_max, int points,
                     const std::function<double(double)>& f) {
    if (points < 2) throw std::domain_error("--grid must be at least 2");
    if (!(x_min < x_max)) throw std::domain_error("--x-min must be below --x-max");
    std::ostringstream os;
    os << "x,f\n";
    for (int i = 0; i < points; ++i) {
        const double x = x_min + (x_max - x_min) * i / (points - 1);
        os << fmt17(x) << ',' << fmt17(f(x)) << '\n';
    }
    return os.str();
}

void cmd_simulate_quantum(const SetupFlags& flags, int n, const std::string& out,
                          const std::string& format) {
    const SpatialDistribution dist = distribution(evolve(flags.build(), n));
    std::ostringstream os;
    if (format == "json")
        os << to_json(dist).dump(2) << '\n';
    else
        write_csv(os, dist);
    write_output(out, os.str());
}

void cmd_simulate_classical(double delta, double q0_up, int n, bool joint,
                            const std::string& out, const std::string& format) {
    const ClassicalJointState state = evolve(CorrelationParams(delta, q0_up), n);
    std::ostringstream os;
    if (joint) {
        if (format == "json")
            throw std::domain_error("--joint output supports csv only");
        write_csv(os, state);
    } else {
        const SpatialDistribution dist = marginal(state);
        if (format == "json")
            os << to_json(dist).dump(2) << '\n';
        else
            write_csv(os, dist);
    }
    write_output(out, os.str());
}

void cmd_closed_form(const SetupFlags& flags, int n, const std::string& method, int grid,
                     const std::string& out) {
    const CoinSetup setup = flags.build();
    AmplitudeTable table;
    if (method == "direct")
        table = evolve(setup, n);
    else if (method == "lemma")
        table = quantum_amplitudes_closed(setup, n);
    else
        table = grid > 0 ? fourier_oracle(setup, n, grid) : fourier_oracle(setup, n);
    std::ostringstream os;
    write_csv(os, table);
    write_output(out, os.str());
}

void cmd_classify(const SetupFlags& flags, const std::string& out) {
    const CoinSetup setup = flags.build();
    nlohmann::json result;
    result["setup"] = setup_to_json(setup);
    result["symmetric"] = is_symmetric(setup);
    result["lambda"] = nullptr;
    if (!coin_is_singular(setup.theta())) result["lambda"] = lambda_of(setup);
    const CanonicalTriple canonical = canonical_distributional(setup);
    result["canonical"] = {{"varphi", canonical.varphi}, {"xi", canonical.xi},
                           {"theta", canonical.theta}};
    if (is_trivial(setup)) {
        result["asymptotic"] = nullptr;
        result["note"] = "trivial coin: no limiting distribution, asymptotic class undefined";
    } else {
        const AsymptoticTriple asym = canonical_asymptotic(setup);
        result["asymptotic"] = {{"varphi", asym.varphi}, {"xi", asym.xi},
                                {"theta", asym.theta}};
    }
    write_output(out, result.dump(2) + "\n");
}

void cmd_variance_scan(const std::vector<std::string>& thetas,
                       const std::vector<double>& deltas, int n_max,
                       const std::string& out) {
    if (thetas.empty() == deltas.empty())
        throw std::domain_error("provide exactly one of --theta (quantum) or --delta (classical)");
    if (n_max < 1) throw std::domain_error("--n-max must be at least 1");

    struct Column {
        double param;
        std::vector<double> variances; // index n-1
    };
    std::vector<std::future<Column>> futures;

    if (!thetas.empty()) {
        for (const std::string& text : thetas) {
            const double theta = parse_angle(text);
            futures.push_back(std::async(std::launch::async, [theta, n_max] {
                Column col{theta, {}};
                col.variances.reserve(static_cast<size_t>(n_max));
                const CoinSetup setup(wrap_two_pi(theta), 0.0, 0.0, pi / 4, pi / 2);
                evolve(setup, n_max, [&](const WalkState& w) {
                    col.variances.push_back(variance(distribution(w)));
                });
                return col;
            }));
        }
    } else {
        for (const double delta : deltas) {
            if (!(delta >= -1.0 && delta <= 1.0))
                throw std::domain_error("--delta values must lie in [-1, 1]");
            futures.push_back(std::async(std::launch::async, [delta, n_max] {
                Column col{delta, {}};
                col.variances.reserve(static_cast<size_t>(n_max));
                for (int n = 1; n <= n_max; ++n)
                    col.variances.push_back(delta == 1.0 ? static_cast<double>(n) * n
                                                         : gillis_variance(delta, n));
                return col;
            }));
        }
    }

    std::ostringstream os;
    os << "n,param,variance\n";
    for (auto& future : futures) {
        const Column col = future.get();
        for (int n = 1; n <= n_max; ++n)
            os << n << ',' << fmt17(col.param) << ','
               << fmt17(col.variances[static_cast<size_t>(n - 1)]) << '\n';
    }
    write_output(out, os.str());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"coined quantum walks and correlated classical walks on the line"};
    app.require_subcommand(1);

    // simulate-quantum
    auto* sim_q = app.add_subcommand("simulate-quantum",
                                     "evolve a coined walk and write its spatial pmf");
    SetupFlags sq_flags;
    sq_flags.attach(sim_q);
    int sq_n = 0;
    std::string sq_out, sq_format = "csv";
    sim_q->add_option("--n", sq_n, "number of steps")->required()
        ->check(CLI::NonNegativeNumber);
    sim_q->add_option("--out", sq_out, "output path (default stdout)");
    sim_q->add_option("--format", sq_format)->check(CLI::IsMember({"csv", "json"}));

    // simulate-classical
    auto* sim_c = app.add_subcommand("simulate-classical",
                                     "evolve a correlated walk and write its distribution");
    double sc_delta = 0.0, sc_q0 = 0.5;
    int sc_n = 0;
    bool sc_joint = false;
    std::string sc_out, sc_format = "csv";
    sim_c->add_option("--delta", sc_delta, "correlation coefficient in [-1, 1]")->required();
    sim_c->add_option("--q0-up", sc_q0, "initial up-probability [default 0.5]");
    sim_c->add_option("--n", sc_n, "number of steps")->required()
        ->check(CLI::NonNegativeNumber);
    sim_c->add_flag("--joint", sc_joint, "emit the joint (site, direction) table");
    sim_c->add_option("--out", sc_out, "output path (default stdout)");
    sim_c->add_option("--format", sc_format)->check(CLI::IsMember({"csv", "json"}));

    // closed-form
    auto* closed = app.add_subcommand(
        "closed-form", "amplitude table via direct evolution, the closed form, or the "
                       "Fourier oracle (identical CSV layout for shell-level diffs)");
    SetupFlags cf_flags;
    cf_flags.attach(closed);
    int cf_n = 0, cf_grid = 0;
    std::string cf_method, cf_out;
    closed->add_option("--n", cf_n, "number of steps")->required()
        ->check(CLI::NonNegativeNumber);
    closed->add_option("--method", cf_method, "direct | lemma | fourier")->required()
        ->check(CLI::IsMember({"direct", "lemma", "fourier"}));
    closed->add_option("--grid", cf_grid, "momentum grid size for fourier (default 2n+2)");
    closed->add_option("--out", cf_out, "output path (default stdout)");

    // classify
    auto* classify = app.add_subcommand("classify",
                                        "symmetry, lambda and canonical representatives");
    SetupFlags cl_flags;
    cl_flags.attach(classify);
    std::string cl_out;
    classify->add_option("--out", cl_out, "output path (default stdout)");

    // variance-scan
    auto* scan = app.add_subcommand("variance-scan",
                                    "variance vs step count over a parameter grid");
    std::vector<std::string> vs_thetas;
    std::vector<double> vs_deltas;
    int vs_n_max = 100;
    std::string vs_out;
    scan->add_option("--theta", vs_thetas, "quantum scan: theta values (repeatable)");
    scan->add_option("--delta", vs_deltas, "classical scan: delta values (repeatable)");
    scan->add_option("--n-max", vs_n_max, "largest step count [default 100]");
    scan->add_option("--out", vs_out, "output path (default stdout)");

    // limit-density
    auto* limit = app.add_subcommand("limit-density",
                                     "limiting density curve (quantum or classical)");
    std::string ld_theta, ld_lambda = "0", ld_out;
    SetupFlags ld_flags; // only used when --varphi/--xi given
    double ld_delta = 0.0;
    bool ld_have_delta = false;
    int ld_grid = 2001, ld_empirical_n = 0;
    double ld_xmin = 0.0, ld_xmax = 0.0;
    bool ld_have_xmin = false, ld_have_xmax = false;
    limit->add_option("--theta", ld_theta, "coin angle (non-trivial)");
    limit->add_option("--lambda", ld_lambda, "asymmetry parameter [default 0]");
    limit->add_option("--phi1", ld_flags.phi1, "full-setup mode: coin phase phi1");
    limit->add_option("--phi2", ld_flags.phi2, "full-setup mode: coin phase phi2");
    auto* ld_vp = limit->add_option("--varphi", ld_flags.varphi,
                                    "full-setup mode: derive lambda from the setup");
    auto* ld_xi = limit->add_option("--xi", ld_flags.xi, "full-setup mode: coin-state phase");
    limit->add_option("--delta", ld_delta, "classical mode: Gaussian limit for this delta")
        ->each([&](const std::string&) { ld_have_delta = true; });
    limit->add_option("--grid", ld_grid, "number of sample points [default 2001]");
    limit->add_option("--x-min", ld_xmin)->each([&](const std::string&) { ld_have_xmin = true; });
    limit->add_option("--x-max", ld_xmax)->each([&](const std::string&) { ld_have_xmax = true; });
    limit->add_option("--empirical-n", ld_empirical_n,
                      "also write <out>.empirical.csv with the rescaled pmf at this n");
    limit->add_option("--out", ld_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);

        if (sim_q->parsed()) cmd_simulate_quantum(sq_flags, sq_n, sq_out, sq_format);
        if (sim_c->parsed())
            cmd_simulate_classical(sc_delta, sc_q0, sc_n, sc_joint, sc_out, sc_format);
        if (closed->parsed()) cmd_closed_form(cf_flags, cf_n, cf_method, cf_grid, cf_out);
        if (classify->parsed()) cmd_classify(cl_flags, cl_out);
        if (scan->parsed()) cmd_variance_scan(vs_thetas, vs_deltas, vs_n_max, vs_out);

        if (limit->parsed()) {
            if (ld_have_delta) {
                if (!ld_theta.empty())
                    throw std::domain_error("give either --delta or --theta, not both");
                const double delta = ld_delta;
                write_output(ld_out,
                             grid_csv(ld_have_xmin ? ld_xmin : -10.0,
                                      ld_have_xmax ? ld_xmax : 10.0, ld_grid, [&](double x) {
                                          return classical_limit_density(delta, x);
                                      }));
            } else {
                if (ld_theta.empty())
                    throw std::domain_error("limit-density needs --theta (quantum) or --delta "
                                            "(classical)");
                ld_flags.theta = ld_theta;
                const double theta_value = wrap_two_pi(parse_angle(ld_theta));
                if (coin_is_trivial(theta_value))
                    throw no_limit_error("trivial coin (--theta multiple of pi/2): no "
                                         "limiting density");
                LimitParams params = (ld_vp->count() > 0 || ld_xi->count() > 0)
                                         ? LimitParams::from_setup(ld_flags.build())
                                         : LimitParams(std::cos(rho(theta_value)),
                                                       parse_angle(ld_lambda));
                write_output(ld_out, grid_csv(ld_have_xmin ? ld_xmin : -1.0,
                                              ld_have_xmax ? ld_xmax : 1.0, ld_grid,
                                              [&](double x) { return density(params, x); }));
                if (ld_empirical_n > 0) {
                    if (ld_out.empty() || ld_out == "-")
                        throw std::domain_error("--empirical-n needs --out");
                    const int n = ld_empirical_n;
                    const SpatialDistribution dist =
                        distribution(evolve(ld_flags.build(), n));
                    std::ostringstream os;
                    os << "x,f\n";
                    for (int j = -n; j <= n; j += 2)
                        os << fmt17(static_cast<double>(j) / n) << ','
                           << fmt17(dist.at(j) * n / 2.0) << '\n';
                    write_output(ld_out + ".empirical.csv", os.str());
                }
            }
        }
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const numerical_error& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
