// Command line front end: every subcommand computes through the core library
// and emits CSV (the verify report is plain text). Exit codes: 0 success,
// 2 argument errors, 1 numerical-range errors or an unwritable output path.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "qentropy/channels.hpp"
#include "qentropy/constants.hpp"
#include "qentropy/csv.hpp"
#include "qentropy/entropy.hpp"
#include "qentropy/heatfield.hpp"
#include "qentropy/transfer.hpp"
#include "qentropy/verify.hpp"

namespace {

using qentropy::PhysicalConstants;

struct CommonFlags {
    std::string out_path;  // empty means standard output
    int precision = qentropy::csv::configured_precision();
};

// Every subcommand accepts the shared output flags, so each --help lists them.
void add_common_flags(CLI::App* cmd, CommonFlags& common) {
    cmd->add_option("--out", common.out_path,
                    "write the output to this file instead of standard output");
    cmd->add_option("--precision", common.precision,
                    "significant digits for numbers, 1-17 (overrides the "
                    "QENTROPY_PRECISION environment variable)")
        ->check(CLI::Range(1, 17));
}

int write_payload(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return 0;
    }
    std::ofstream file(out_path);
    if (!file) {
        std::cerr << "error: cannot open '" << out_path << "' for writing\n";
        return 1;
    }
    file << payload;
    file.flush();
    if (!file) {
        std::cerr << "error: failed while writing '" << out_path << "'\n";
        return 1;
    }
    return 0;
}

std::pair<int, double> parse_mode_arg(const std::string& arg) {
    int n = 0;
    double amp = 0.0;
    char trailing = 0;
    if (std::sscanf(arg.c_str(), "%d:%lf%c", &n, &amp, &trailing) != 2) {
        throw std::invalid_argument("mode must be n:amplitude, got '" + arg + "'");
    }
    return {n, amp};
}

std::string render(const qentropy::csv::Table& table) {
    std::ostringstream out;
    qentropy::csv::write(table, out);
    return out.str();
}

std::string fmt(double value, int precision) {
    return qentropy::csv::format_number(value, precision);
}

std::string run_constants(const PhysicalConstants& c, int p) {
    qentropy::csv::Table t;
    t.header = {"name", "value", "unit"};
    t.rows = {
        {"boltzmann_constant", fmt(c.k_B, p), "J/K"},
        {"planck_constant", fmt(c.h, p), "J s"},
        {"reduced_planck_constant", fmt(c.hbar, p), "J s"},
        {"elementary_charge", fmt(c.e, p), "C"},
        {"electric_conductance_quantum", fmt(qentropy::electric_conductance_quantum(c), p),
         "S"},
        {"single_spin_conductance_quantum",
         fmt(qentropy::single_spin_conductance_quantum(c), p), "S"},
        {"entropy_conductance_quantum", fmt(qentropy::entropy_conductance_quantum(c), p),
         "J/(K^2 s)"},
        {"thermal_conductance_quantum_1K",
         fmt(qentropy::thermal_conductance_quantum(c, 1.0), p), "W/K"},
        {"lorenz_number", fmt(qentropy::lorenz_number(c), p), "W Ohm/K^2"},
    };
    return render(t);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantized entropy toolkit: conductance quanta, ballistic channels, "
                 "variational heat fields, packet transfer and spin relaxation"};
    app.require_subcommand(1);
    CommonFlags common;

    auto* cmd_constants = app.add_subcommand(
        "constants", "fundamental constants and derived quanta as name,value,unit CSV");
    add_common_flags(cmd_constants, common);

    auto* cmd_stair = app.add_subcommand(
        "staircase", "conductance staircase G(w) as w_m,G_S CSV");
    double wmin = 0.0, wmax = 0.0, lambda_f = 0.0;
    int steps = 200;
    bool spinless = false;
    cmd_stair->add_option("--wmin", wmin, "smallest wire width (m)")->required();
    cmd_stair->add_option("--wmax", wmax, "largest wire width (m)")->required();
    cmd_stair->add_option("--steps", steps, "number of widths in the sweep")
        ->capture_default_str();
    cmd_stair->add_option("--lambda-f", lambda_f, "Fermi wavelength (m)")->required();
    cmd_stair->add_flag("--spinless", spinless,
                        "use the single-spin quantum e^2/h instead of 2e^2/h");
    add_common_flags(cmd_stair, common);

    auto* cmd_heat = app.add_subcommand(
        "solve-heat", "evolve a spectral temperature field; CSV t_s,x_m,T_K, or "
                      "t_s,k_per_m,a,b with --potential");
    double length = 0.0, diff = 0.0, t_end = 0.0, t0 = 300.0, gauge = 0.0;
    int nt = 11, nx = 51;
    bool as_potential = false;
    std::vector<std::string> heat_modes;
    cmd_heat->add_option("--length", length, "periodic domain length (m)")->required();
    cmd_heat->add_option("--d", diff, "thermal diffusivity (m^2/s)")->required();
    cmd_heat->add_option("--t0", t0, "reference temperature (K)")->capture_default_str();
    cmd_heat->add_option("--mode", heat_modes,
                         "initial mode as n:amplitude_K, repeatable")->required();
    cmd_heat->add_option("--t-end", t_end, "final time (s)")->required();
    cmd_heat->add_option("--nt", nt, "number of time samples")
        ->check(CLI::Range(2, 1000000))
        ->capture_default_str();
    cmd_heat->add_option("--nx", nx, "number of spatial samples (temperature output)")
        ->check(CLI::Range(2, 1000000))
        ->capture_default_str();
    cmd_heat->add_flag("--potential", as_potential,
                       "emit the potential representation t_s,k_per_m,a,b");
    cmd_heat->add_option("--gauge", gauge,
                         "growing-branch amplitude added to every potential mode")
        ->capture_default_str();
    add_common_flags(cmd_heat, common);

    auto* cmd_action = app.add_subcommand(
        "action-check", "scan the action around a solution; CSV epsilon,action");
    double a_length = 0.0, a_diff = 0.0, a_t1 = 0.0, a_t2 = 1.0, eta_scale = 0.5;
    double eps_min = -1.0, eps_max = 1.0;
    int samples = 2001, eps_steps = 11;
    std::vector<std::string> action_modes;
    cmd_action->add_option("--length", a_length, "periodic domain length (m)")->required();
    cmd_action->add_option("--d", a_diff, "thermal diffusivity (m^2/s)")->required();
    cmd_action->add_option("--mode", action_modes,
                           "decaying-branch mode as n:amplitude, repeatable")->required();
    cmd_action->add_option("--t1", a_t1, "window start (s)")->capture_default_str();
    cmd_action->add_option("--t2", a_t2, "window end (s)")->capture_default_str();
    cmd_action->add_option("--samples", samples, "time samples in the window")
        ->check(CLI::Range(3, 1000000))
        ->capture_default_str();
    cmd_action->add_option("--eta", eta_scale,
                           "bump perturbation amplitude, as a fraction of each mode")
        ->capture_default_str();
    cmd_action->add_option("--eps-min", eps_min, "smallest epsilon")->capture_default_str();
    cmd_action->add_option("--eps-max", eps_max, "largest epsilon")->capture_default_str();
    cmd_action->add_option("--eps-steps", eps_steps, "number of epsilon samples")
        ->check(CLI::Range(2, 10000))
        ->capture_default_str();
    add_common_flags(cmd_action, common);

    auto* cmd_pendry = app.add_subcommand(
        "pendry", "Pendry bounds and the conductance quanta at temperature T; CSV "
                  "name,value,unit");
    double p_temp = 0.0;
    cmd_pendry->add_option("--temp", p_temp, "temperature (K)")->required();
    add_common_flags(cmd_pendry, common);

    auto* cmd_packet = app.add_subcommand(
        "packet", "entropy bookkeeping of one quantum h*nu at temperature T; CSV "
                  "name,value,unit");
    double pk_nu = 0.0, pk_temp = 0.0;
    cmd_packet->add_option("--nu", pk_nu, "packet frequency (Hz)")->required();
    cmd_packet->add_option("--temp", pk_temp, "temperature (K)")->required();
    add_common_flags(cmd_packet, common);

    auto* cmd_transfer = app.add_subcommand(
        "transfer", "two-subdomain single-packet ledger; CSV quantity,value_W_per_K");
    double tr_t1 = 0.0, tr_t2 = 0.0, tr_nu = 0.0;
    cmd_transfer->add_option("--t1", tr_t1, "emitter temperature (K)")->required();
    cmd_transfer->add_option("--t2", tr_t2, "absorber temperature (K)")->required();
    cmd_transfer->add_option("--nu", tr_nu, "packet frequency (Hz)")->required();
    add_common_flags(cmd_transfer, common);

    auto* cmd_spin = app.add_subcommand(
        "spin", "spin-lattice relaxation quanta; CSV name,value,unit");
    double sp_gamma = 0.0, sp_b0 = 0.0, sp_temp = 0.0;
    cmd_spin->add_option("--gamma", sp_gamma, "gyromagnetic ratio (rad/(s T))")->required();
    cmd_spin->add_option("--b0", sp_b0, "magnetic flux density (T)")->required();
    cmd_spin->add_option("--temp", sp_temp, "lattice temperature (K)")->required();
    add_common_flags(cmd_spin, common);

    auto* cmd_verify = app.add_subcommand(
        "verify", "run the full invariant suite and print PASS/FAIL per property");
    add_common_flags(cmd_verify, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const auto c = PhysicalConstants::codata2018();
    const int p = common.precision;

    try {
        if (app.got_subcommand(cmd_constants)) {
            return write_payload(run_constants(c, p), common.out_path);
        }

        if (app.got_subcommand(cmd_stair)) {
            const auto pts =
                qentropy::conductance_staircase(c, wmin, wmax, steps, lambda_f, !spinless);
            qentropy::csv::Table t;
            t.header = {"w_m", "G_S"};
            for (const auto& pt : pts) {
                t.rows.push_back({fmt(pt.w, p), fmt(pt.G, p)});
            }
            return write_payload(render(t), common.out_path);
        }

        if (app.got_subcommand(cmd_heat)) {
            qentropy::TemperatureField init{length, t0, {}};
            for (const auto& arg : heat_modes) {
                const auto [n, amp] = parse_mode_arg(arg);
                init.modes.push_back({qentropy::mode_wavenumber(length, n), amp});
            }
            if (!(t_end > 0.0)) {
                throw std::invalid_argument("--t-end must be > 0");
            }
            qentropy::csv::Table t;
            if (as_potential) {
                qentropy::SpectralPotentialField phi{length, t0, {}};
                for (const auto& mode : init.modes) {
                    phi.modes.push_back(
                        {mode.k, mode.amplitude / (2.0 * diff * (mode.k * mode.k)), gauge});
                }
                t.header = {"t_s", "k_per_m", "a", "b"};
                for (int i = 0; i < nt; ++i) {
                    const double time = t_end * static_cast<double>(i) / (nt - 1);
                    const auto phi_t = qentropy::evolve_potential(phi, diff, time);
                    for (const auto& mode : phi_t.modes) {
                        t.rows.push_back({fmt(time, p), fmt(mode.k, p), fmt(mode.a, p),
                                          fmt(mode.b, p)});
                    }
                }
            } else {
                t.header = {"t_s", "x_m", "T_K"};
                for (int i = 0; i < nt; ++i) {
                    const double time = t_end * static_cast<double>(i) / (nt - 1);
                    const auto field = qentropy::evolve_fourier(init, diff, time);
                    for (int j = 0; j < nx; ++j) {
                        const double x = length * static_cast<double>(j) / (nx - 1);
                        t.rows.push_back(
                            {fmt(time, p), fmt(x, p), fmt(qentropy::temperature_at(field, x), p)});
                    }
                }
            }
            return write_payload(render(t), common.out_path);
        }

        if (app.got_subcommand(cmd_action)) {
            qentropy::SpectralPotentialField phi{a_length, 300.0, {}};
            std::vector<double> ks;
            std::vector<double> eta_amps;
            for (const auto& arg : action_modes) {
                const auto [n, amp] = parse_mode_arg(arg);
                const double k = qentropy::mode_wavenumber(a_length, n);
                phi.modes.push_back({k, amp, 0.0});
                ks.push_back(k);
                eta_amps.push_back(eta_scale * amp);
            }
            const auto optimal =
                qentropy::solve_potential_trajectory(phi, a_diff, a_t1, a_t2, samples);
            const auto eta =
                qentropy::bump_perturbation(a_length, ks, eta_amps, a_t1, a_t2, samples);
            std::vector<double> epsilons;
            for (int i = 0; i < eps_steps; ++i) {
                epsilons.push_back(eps_min + (eps_max - eps_min) *
                                                 static_cast<double>(i) / (eps_steps - 1));
            }
            const auto scan =
                qentropy::perturbation_action_scan(optimal, eta, epsilons, a_diff);
            qentropy::csv::Table t;
            t.header = {"epsilon", "action"};
            for (const auto& [eps, value] : scan) {
                t.rows.push_back({fmt(eps, p), fmt(value, p)});
            }
            return write_payload(render(t), common.out_path);
        }

        if (app.got_subcommand(cmd_pendry)) {
            qentropy::csv::Table t;
            t.header = {"name", "value", "unit"};
            t.rows = {
                {"pendry_max_heat_rate", fmt(qentropy::pendry_max_heat_rate(c, p_temp), p),
                 "W"},
                {"pendry_max_entropy_rate",
                 fmt(qentropy::pendry_max_entropy_rate(c, p_temp), p), "W/K"},
                {"thermal_conductance_quantum",
                 fmt(qentropy::thermal_conductance_quantum(c, p_temp), p), "W/K"},
                {"entropy_conductance_quantum",
                 fmt(qentropy::entropy_conductance_quantum(c), p), "J/(K^2 s)"},
            };
            return write_payload(render(t), common.out_path);
        }

        if (app.got_subcommand(cmd_packet)) {
            const qentropy::QuantumPacket packet{pk_nu};
            const double i_s = qentropy::entropy_current_from_packet(c, packet);
            const double sigma = qentropy::packet_entropy_production(c, packet, pk_temp);
            const auto balance = qentropy::entropy_balance(i_s, sigma);
            qentropy::csv::Table t;
            t.header = {"name", "value", "unit"};
            t.rows = {
                {"packet_energy", fmt(qentropy::packet_energy(c, packet), p), "J"},
                {"entropy_current", fmt(i_s, p), "W/K"},
                {"entropy_production", fmt(sigma, p), "W/K"},
                {"balance_dS_dt", fmt(balance.dS_dt, p), "W/K"},
            };
            return write_payload(render(t), common.out_path);
        }

        if (app.got_subcommand(cmd_transfer)) {
            const auto ledger = qentropy::single_packet_transfer(
                c, {"emitter", tr_t1}, {"absorber", tr_t2}, {tr_nu});
            qentropy::csv::Table t;
            t.header = {"quantity", "value_W_per_K"};
            t.rows = {
                {"emitter_rate", fmt(ledger.emitter_rate, p)},
                {"absorber_rate", fmt(ledger.absorber_rate, p)},
                {"emitter_current", fmt(ledger.emitter_current, p)},
                {"absorber_current", fmt(ledger.absorber_current, p)},
                {"emitter_production", fmt(ledger.emitter_production, p)},
                {"absorber_production", fmt(ledger.absorber_production, p)},
                {"net_rate", fmt(ledger.net_rate, p)},
            };
            return write_payload(render(t), common.out_path);
        }

        if (app.got_subcommand(cmd_spin)) {
            const qentropy::SpinSystem spin{sp_gamma, sp_b0, sp_temp};
            const auto report = qentropy::spin_relaxation_report(c, spin);
            qentropy::csv::Table t;
            t.header = {"name", "value", "unit"};
            t.rows = {
                {"larmor_frequency", fmt(report.nu, p), "Hz"},
                {"angular_larmor_frequency", fmt(qentropy::angular_larmor_frequency(spin), p),
                 "rad/s"},
                {"zeeman_splitting", fmt(qentropy::zeeman_splitting(c, spin), p), "J"},
                {"I_S", fmt(report.I_S, p), "W/K"},
                {"Sigma", fmt(report.Sigma, p), "W/K"},
                {"I_S_spin_form", fmt(report.I_S_spin_form, p), "W/K"},
                {"Sigma_spin_form", fmt(report.Sigma_spin_form, p), "W/K"},
            };
            return write_payload(render(t), common.out_path);
        }

        if (app.got_subcommand(cmd_verify)) {
            const auto results = qentropy::verify::run_all();
            std::ostringstream report;
            const int failures = qentropy::verify::print_report(results, report);
            const int write_status = write_payload(report.str(), common.out_path);
            if (write_status != 0) return write_status;
            return failures == 0 ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::range_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    std::cerr << "error: no subcommand dispatched\n";
    return 2;
}
