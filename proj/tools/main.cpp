// roofbound: upper bounds for polynomial SL-invariant entanglement measures
// of mixed states via iterative rank-two reduction.

#include "roofbound/errors.hpp"
#include "roofbound/io.hpp"
#include "roofbound/ising.hpp"
#include "roofbound/states.hpp"
#include "roofbound/threading.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace rb = roofbound;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitInvalidData = 4;

struct SweepFlags {
    double start = 0.0, end = 1.0;
    int steps = 201;
    std::string out;
    std::uint64_t seed = 0;
    bool basis_search = false;
    bool trace = false;
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw rb::Error("cannot open output file: " + path);
    f << content;
    if (!f) throw rb::Error("failed writing output file: " + path);
}

rb::PeelConfig peel_config(const SweepFlags& flags) {
    rb::PeelConfig cfg;
    cfg.basis_search = flags.basis_search;
    cfg.rng_seed = flags.seed;
    return cfg;
}

void print_trace(const std::vector<rb::PeelStep>& steps) {
    int k = 0;
    for (const auto& s : steps) {
        std::ostringstream line;
        line << "step=" << ++k << " pair=(" << s.index_i << "," << s.index_f << ")"
             << " p_i=" << rb::csv_number(s.p_i);
        if (s.interval)
            line << " interval=[" << rb::csv_number(s.interval->p_min) << ","
                 << rb::csv_number(s.interval->p_max) << "]";
        else
            line << " interval=none";
        line << " outcome=" << rb::to_string(s.kind)
             << " lambda=" << rb::csv_number(s.reduced_weight)
             << " f_k=" << rb::csv_number(s.f_k);
        if (s.off_axis)
            line << " off_axis w_zero=" << rb::csv_number(s.w_zero)
                 << " (three eigenstates effectively in the decomposition)";
        if (!s.note.empty()) line << " note=" << s.note;
        std::cout << line.str() << "\n";
    }
}

int cmd_bench(const std::string& state, const std::string& basis,
              const SweepFlags& flags) {
    std::function<rb::Ensemble(double)> make;
    if (state == "wlike") {
        if (basis == "product")
            make = [](double p) { return rb::w_like_ensemble(p, rb::WLikeBasis::product); };
        else if (basis == "ghz")
            make = [](double p) { return rb::w_like_ensemble(p, rb::WLikeBasis::ghz); };
        else {
            std::cerr << "bench: basis for wlike must be product|ghz\n";
            return kExitUsage;
        }
    } else if (state == "ghzwerner") {
        if (basis == "product")
            make = [](double p) { return rb::ghz_werner_ensemble(p, rb::GhzWernerBasis::product); };
        else if (basis == "wphase")
            make = [](double p) { return rb::ghz_werner_ensemble(p, rb::GhzWernerBasis::w_phase); };
        else {
            std::cerr << "bench: basis for ghzwerner must be product|wphase\n";
            return kExitUsage;
        }
    } else {
        std::cerr << "bench: state must be wlike|ghzwerner\n";
        return kExitUsage;
    }

    const rb::PeelConfig cfg = peel_config(flags);
    const auto& measure = rb::tau3_measure();
    std::vector<double> raw(flags.steps);
    rb::parallel_for(flags.steps, [&](size_t i) {
        const double p = flags.start + (flags.end - flags.start) * double(i) / (flags.steps - 1);
        raw[i] = rb::peel(make(p), measure, cfg).value;
    });

    std::vector<std::pair<double, double>> samples(flags.steps);
    for (int i = 0; i < flags.steps; ++i) {
        const double p = flags.start + (flags.end - flags.start) * double(i) / (flags.steps - 1);
        samples[i] = {p, raw[i]};
    }
    const auto env = rb::lower_convex_envelope(samples);

    std::ostringstream csv;
    csv << "p,raw_bound,convexified_bound\n";
    for (int i = 0; i < flags.steps; ++i)
        csv << rb::csv_number(samples[i].first) << "," << rb::csv_number(samples[i].second)
            << "," << rb::csv_number(env[i].second) << "\n";
    write_file(flags.out, csv.str());
    return 0;
}

int cmd_ising(const SweepFlags& flags, bool diagnostics) {
    const rb::PeelConfig cfg = [&] {
        rb::PeelConfig c;
        c.basis_search = true;  // default candidates for the physics sweep
        c.rng_seed = flags.seed;
        return c;
    }();
    std::vector<double> grid(flags.steps);
    for (int i = 0; i < flags.steps; ++i)
        grid[i] = flags.start + (flags.end - flags.start) * double(i) / (flags.steps - 1);
    const auto records = rb::sweep(grid, rb::tau3_measure(), cfg);

    std::ostringstream csv;
    csv << "lambda,sqrt_tau3_upper,six_smallest_sum,five_smallest_sum";
    if (diagnostics)
        for (int k = 0; k < 8; ++k) csv << ",eig" << k;
    csv << "\n";
    for (const auto& r : records) {
        csv << rb::csv_number(r.lambda) << "," << rb::csv_number(r.upper_bound) << ","
            << rb::csv_number(r.six_smallest_sum) << ","
            << rb::csv_number(r.five_smallest_sum);
        if (diagnostics)
            for (int k = 0; k < 8; ++k) csv << "," << rb::csv_number(r.eigenvalues[k]);
        csv << "\n";
    }
    write_file(flags.out, csv.str());
    return 0;
}

int cmd_bound(const std::string& input, const std::string& measure_name,
              const SweepFlags& flags) {
    std::ifstream in(input);
    if (!in) {
        std::cerr << "bound: cannot open " << input << "\n";
        return kExitIo;
    }
    rb::DensityMatrix rho = rb::read_density_matrix(in);
    rb::validate_density_matrix(rho);

    const rb::MeasureSpec* measure = nullptr;
    if (measure_name == "tau3") measure = &rb::tau3_measure();
    else if (measure_name == "concurrence") measure = &rb::concurrence_measure();
    else if (measure_name == "auto") {
        if (rho.n_qubits == 3) measure = &rb::tau3_measure();
        else if (rho.n_qubits == 2) measure = &rb::concurrence_measure();
        else throw rb::Error("bound: no default measure for this qubit count");
    } else {
        std::cerr << "bound: measure must be auto|tau3|concurrence\n";
        return kExitUsage;
    }
    if (rho.n_qubits == 3 && measure->degree_D == 2) {
        std::cerr << "bound: concurrence needs a two-qubit state\n";
        return kExitUsage;
    }

    rb::PeelConfig cfg = peel_config(flags);
    const rb::Ensemble ens = rb::decompose(rho, cfg.rank_tol);
    const rb::BoundResult res = rb::peel(ens, *measure, cfg);

    std::cout << "upper_bound " << rb::csv_number(res.value) << "\n";
    std::cout << "candidates";
    for (double v : res.candidate_values) std::cout << " " << rb::csv_number(v);
    std::cout << "\n";
    std::cout << "hint_more_states " << (res.hint_more_states ? "true" : "false") << "\n";
    if (flags.trace) print_trace(res.steps);
    return 0;
}

int cmd_simplex(const std::string& pair, const std::string& measure_name) {
    const auto comma = pair.find(',');
    if (comma == std::string::npos) {
        std::cerr << "simplex: --pair expects name,name\n";
        return kExitUsage;
    }
    const rb::PureState a = rb::make_pure(pair.substr(0, comma));
    const rb::PureState b = rb::make_pure(pair.substr(comma + 1));
    const auto& measure = measure_name == "concurrence" ? rb::concurrence_measure()
                                                        : rb::tau3_measure();
    const rb::ZeroSimplex zs = rb::solve(a, b, measure);
    if (zs.all_zero_line) {
        std::cout << "all_zero_line\n";
        return 0;
    }
    for (const auto& z : zs.roots.finite)
        std::cout << "root " << rb::csv_number(z.real()) << " "
                  << rb::csv_number(z.imag()) << "\n";
    for (int k = 0; k < zs.roots.infinite_count; ++k) std::cout << "root inf\n";
    for (const auto& ap : zs.axis_points)
        std::cout << "axis_point Z=(" << rb::csv_number(ap.Z.real()) << ","
                  << rb::csv_number(ap.Z.imag()) << ") p=" << rb::csv_number(ap.p) << "\n";
    if (const auto iv = rb::interval(zs))
        std::cout << "interval [" << rb::csv_number(iv->p_min) << ","
                  << rb::csv_number(iv->p_max) << "]\n";
    else
        std::cout << "interval none\n";
    return 0;
}

int cmd_curve(const std::string& pair, const std::string& measure_name, int steps,
              const std::string& out) {
    const auto comma = pair.find(',');
    if (comma == std::string::npos) {
        std::cerr << "curve: --pair expects name,name\n";
        return kExitUsage;
    }
    const rb::PureState a = rb::make_pure(pair.substr(0, comma));
    const rb::PureState b = rb::make_pure(pair.substr(comma + 1));
    const auto& measure = measure_name == "concurrence" ? rb::concurrence_measure()
                                                        : rb::tau3_measure();
    rb::PeelConfig cfg;
    auto resolver = [&](const rb::PureState& pi, const rb::PureState& pf, double p,
                        const rb::ZeroSimplex& zs) {
        const rb::OffAxisOutcome oa = rb::off_axis(pi, pf, p, zs, measure, cfg);
        return oa.residual_weight * rb::eval_E(measure, oa.psi_off);
    };
    const auto curve = rb::characteristic_curve(a, b, steps, measure, resolver);
    std::ostringstream csv;
    csv << "p,raw_bound,convexified_bound\n";
    for (const auto& s : curve)
        csv << rb::csv_number(s.p) << "," << rb::csv_number(s.raw) << ","
            << rb::csv_number(s.convexified) << "\n";
    if (out.empty()) std::cout << csv.str();
    else write_file(out, csv.str());
    return 0;
}

int cmd_selftest() {
    int failures = 0;
    auto check = [&](bool ok, const std::string& what) {
        std::cout << (ok ? "[ok]   " : "[FAIL] ") << what << "\n";
        if (!ok) ++failures;
    };
    const auto& t3 = rb::tau3_measure();
    check(std::abs(rb::eval_E(t3, rb::make_pure("ghz_plus")) - 1.0) < 1e-12,
          "sqrt(tau3) of GHZ equals 1");
    check(rb::eval_E(t3, rb::make_pure("w")) < 1e-12, "sqrt(tau3) of W vanishes");
    const rb::Ensemble pure{{1.0}, {rb::make_pure("ghz_plus")}};
    check(std::abs(rb::peel(pure, t3).value - 1.0) < 1e-12, "pure-state identity");
    const auto wl = rb::w_like_ensemble(0.75, rb::WLikeBasis::ghz);
    check(rb::peel(wl, t3).value < 1e-9, "W-like bound vanishes at p = 3/4");
    const rb::IsingParams p0{0.0};
    check(std::abs(rb::g_function(p0, 0) - 1.0) < 1e-9, "G(0) = 1 at lambda = 0");
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Convex-roof upper bounds for SL-invariant entanglement measures"};
    app.require_subcommand(1);

    SweepFlags flags;
    std::string state, basis = "product", input, measure = "auto", pair;
    bool diagnostics = false;
    int curve_steps = 201;
    std::string curve_out;

    auto* bench = app.add_subcommand("bench", "benchmark-state sweep to CSV");
    bench->add_option("--state", state, "wlike|ghzwerner")->required();
    bench->add_option("--basis", basis, "product|ghz|wphase");
    bench->add_option("--start", flags.start, "sweep start");
    bench->add_option("--end", flags.end, "sweep end");
    bench->add_option("--steps", flags.steps, "grid points")->check(CLI::Range(2, 100000));
    bench->add_option("--out", flags.out, "output CSV path")->required();
    bench->add_option("--seed", flags.seed, "rng seed");
    bench->add_flag("--basis-search", flags.basis_search, "minimize over basis candidates");

    auto* ising = app.add_subcommand("ising", "transverse-field chain sweep to CSV");
    SweepFlags ising_flags;
    ising_flags.start = 0.05;
    ising_flags.end = 3.0;
    ising_flags.steps = 60;
    ising->add_option("--start", ising_flags.start, "lambda start")->check(CLI::NonNegativeNumber);
    ising->add_option("--end", ising_flags.end, "lambda end");
    ising->add_option("--steps", ising_flags.steps, "grid points")->check(CLI::Range(2, 100000));
    ising->add_option("--out", ising_flags.out, "output CSV path")->required();
    ising->add_option("--seed", ising_flags.seed, "rng seed");
    ising->add_flag("--diagnostics", diagnostics, "append all 8 eigenvalues per row");

    auto* bound = app.add_subcommand("bound", "bound for a density-matrix file");
    bound->add_option("--input", input, "density matrix file")->required();
    bound->add_option("--measure", measure, "auto|tau3|concurrence");
    bound->add_option("--seed", flags.seed, "rng seed");
    bound->add_flag("--basis-search", flags.basis_search, "minimize over basis candidates");
    bound->add_flag("--trace", flags.trace, "print the peel steps");

    auto* simplex = app.add_subcommand("simplex", "zero-simplex inspection");
    simplex->add_option("--pair", pair, "named states, comma separated")->required();
    simplex->add_option("--measure", measure, "tau3|concurrence");

    auto* curve = app.add_subcommand("curve", "rank-two characteristic curve");
    curve->add_option("--pair", pair, "named states, comma separated")->required();
    curve->add_option("--measure", measure, "tau3|concurrence");
    curve->add_option("--steps", curve_steps, "grid points")->check(CLI::Range(2, 100000));
    curve->add_option("--out", curve_out, "output CSV path (stdout if omitted)");

    auto* selftest = app.add_subcommand("selftest", "quick canned checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (bench->parsed()) return cmd_bench(state, basis, flags);
        if (ising->parsed()) return cmd_ising(ising_flags, diagnostics);
        if (bound->parsed()) return cmd_bound(input, measure, flags);
        if (simplex->parsed()) return cmd_simplex(pair, measure == "auto" ? "tau3" : measure);
        if (curve->parsed()) return cmd_curve(pair, measure == "auto" ? "tau3" : measure,
                                              curve_steps, curve_out);
        if (selftest->parsed()) return cmd_selftest();
    } catch (const rb::InvalidDensityMatrix& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidData;
    } catch (const rb::UnknownName& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const rb::BadProbability& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const rb::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidData;
    }
    return kExitUsage;
}
