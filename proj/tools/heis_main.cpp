// Command-line front end: every pipeline as a verb with reproducible,
// machine-readable output.  Data goes to stdout; a run manifest with a
// digest of the payload goes to stderr.  Exit codes: 0 ok, 2 bad input,
// 3 math error.

#include "heis/conjecture.hpp"
#include "heis/ensemble.hpp"
#include "heis/exact_rational.hpp"
#include "heis/poles.hpp"
#include "heis/thermo.hpp"
#include "heis/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using heis::Error;

// ----------------------------------------------------------------------
// SHA-256 (FIPS 180-4), compact single-buffer implementation.

struct Sha256 {
    static std::string hex(const std::string& data) {
        static constexpr std::uint32_t k[64] = {
            0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1, 0x923f82a4,
            0xab1c5ed5, 0xd807aa98, 0x12835b01, 0x243185be, 0x550c7dc3, 0x72be5d74, 0x80deb1fe,
            0x9bdc06a7, 0xc19bf174, 0xe49b69c1, 0xefbe4786, 0x0fc19dc6, 0x240ca1cc, 0x2de92c6f,
            0x4a7484aa, 0x5cb0a9dc, 0x76f988da, 0x983e5152, 0xa831c66d, 0xb00327c8, 0xbf597fc7,
            0xc6e00bf3, 0xd5a79147, 0x06ca6351, 0x14292967, 0x27b70a85, 0x2e1b2138, 0x4d2c6dfc,
            0x53380d13, 0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85, 0xa2bfe8a1, 0xa81a664b,
            0xc24b8b70, 0xc76c51a3, 0xd192e819, 0xd6990624, 0xf40e3585, 0x106aa070, 0x19a4c116,
            0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a, 0x5b9cca4f, 0x682e6ff3,
            0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208, 0x90befffa, 0xa4506ceb, 0xbef9a3f7,
            0xc67178f2};
        std::uint32_t h[8] = {0x6a09e667, 0xbb67ae85, 0x3c6ef372, 0xa54ff53a,
                              0x510e527f, 0x9b05688c, 0x1f83d9ab, 0x5be0cd19};
        std::string msg = data;
        const std::uint64_t bits = static_cast<std::uint64_t>(data.size()) * 8;
        msg.push_back(static_cast<char>(0x80));
        while (msg.size() % 64 != 56) msg.push_back('\0');
        for (int i = 7; i >= 0; --i) msg.push_back(static_cast<char>((bits >> (8 * i)) & 0xff));
        auto rotr = [](std::uint32_t x, int n) { return (x >> n) | (x << (32 - n)); };
        for (size_t off = 0; off < msg.size(); off += 64) {
            std::uint32_t w[64];
            for (int t = 0; t < 16; ++t)
                w[t] = (static_cast<std::uint32_t>(static_cast<unsigned char>(msg[off + 4 * t])) << 24) |
                       (static_cast<std::uint32_t>(static_cast<unsigned char>(msg[off + 4 * t + 1])) << 16) |
                       (static_cast<std::uint32_t>(static_cast<unsigned char>(msg[off + 4 * t + 2])) << 8) |
                       static_cast<std::uint32_t>(static_cast<unsigned char>(msg[off + 4 * t + 3]));
            for (int t = 16; t < 64; ++t) {
                const std::uint32_t s0 = rotr(w[t - 15], 7) ^ rotr(w[t - 15], 18) ^ (w[t - 15] >> 3);
                const std::uint32_t s1 = rotr(w[t - 2], 17) ^ rotr(w[t - 2], 19) ^ (w[t - 2] >> 10);
                w[t] = w[t - 16] + s0 + w[t - 7] + s1;
            }
            std::uint32_t a = h[0], b = h[1], c = h[2], d = h[3], e = h[4], f = h[5], g = h[6],
                          hh = h[7];
            for (int t = 0; t < 64; ++t) {
                const std::uint32_t s1 = rotr(e, 6) ^ rotr(e, 11) ^ rotr(e, 25);
                const std::uint32_t ch = (e & f) ^ (~e & g);
                const std::uint32_t t1 = hh + s1 + ch + k[t] + w[t];
                const std::uint32_t s0 = rotr(a, 2) ^ rotr(a, 13) ^ rotr(a, 22);
                const std::uint32_t maj = (a & b) ^ (a & c) ^ (b & c);
                const std::uint32_t t2 = s0 + maj;
                hh = g;
                g = f;
                f = e;
                e = d + t1;
                d = c;
                c = b;
                b = a;
                a = t1 + t2;
            }
            h[0] += a;
            h[1] += b;
            h[2] += c;
            h[3] += d;
            h[4] += e;
            h[5] += f;
            h[6] += g;
            h[7] += hh;
        }
        std::ostringstream os;
        for (std::uint32_t v : h) {
            char buf[9];
            std::snprintf(buf, sizeof buf, "%08x", v);
            os << buf;
        }
        return os.str();
    }
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

struct GridArg {
    double lo = -10.0, hi = 10.0;
    int points = 2001;
};

GridArg parse_grid(const std::string& text) {
    GridArg g;
    const size_t c1 = text.find(':');
    const size_t c2 = text.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw Error("grid must be lo:hi:points");
    try {
        g.lo = std::stod(text.substr(0, c1));
        g.hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
        g.points = std::stoi(text.substr(c2 + 1));
    } catch (const std::exception&) {
        throw Error("grid must be lo:hi:points");
    }
    if (!(g.lo < g.hi) || g.points < 2) throw Error("grid must satisfy lo < hi, points >= 2");
    return g;
}

std::vector<double> parse_mu_list(const std::string& text) {
    // single value, comma list, or lo:hi:n
    if (text.find(':') != std::string::npos) {
        GridArg g = parse_grid(text);
        std::vector<double> out(g.points);
        for (int i = 0; i < g.points; ++i)
            out[i] = g.lo + (g.hi - g.lo) * i / (g.points - 1);
        return out;
    }
    std::vector<double> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw Error("bad value in mu list: " + tok);
        }
    }
    if (out.empty()) throw Error("empty mu list");
    return out;
}

void emit(const std::string& payload, const std::string& command,
          const std::vector<std::string>& args, std::optional<std::uint64_t> seed) {
    std::cout << payload;
    std::cout.flush();
    nlohmann::json manifest;
    manifest["schema"] = "run-manifest/v1";
    manifest["command"] = command;
    manifest["arguments"] = args;
    if (seed) manifest["seed"] = *seed;
    manifest["version"] = heis::kVersion;
    const auto now = std::chrono::system_clock::now();
    manifest["timestamp_unix_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count();
    manifest["output"] = {{"bytes", payload.size()}, {"sha256", Sha256::hex(payload)}};
    std::cerr << manifest.dump() << "\n";
}

heis::ChargeBackend parse_backend(const std::string& name) {
    if (name == "auto") return heis::ChargeBackend::kAuto;
    if (name == "exact") return heis::ChargeBackend::kExact;
    if (name == "numeric") return heis::ChargeBackend::kNumeric;
    throw Error("backend must be auto, exact or numeric");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Conserved charges X_jj(mu) of periodic product states of the "
                 "Heisenberg spin-1/2 chain"};
    app.require_subcommand(1);
    std::vector<std::string> raw_args(argv + 1, argv + argc);

    // ---- charge ----
    auto* charge = app.add_subcommand("charge", "exact or numeric charge of one substate");
    std::string ch_psi, ch_mu = "0", ch_out = "json";
    int ch_jj = 1, ch_cap = 600;
    bool ch_exact = false, ch_numeric = false;
    charge->add_option("--psi", ch_psi, "substate as a string over {1,2}")->required();
    charge->add_option("--jj", ch_jj, "representation index")->required();
    charge->add_flag("--exact", ch_exact, "exact rational output (default)");
    charge->add_flag("--numeric", ch_numeric, "numeric evaluation at --mu points");
    charge->add_option("--mu", ch_mu, "mu list: value, comma list, or lo:hi:n");
    charge->add_option("--degree-cap", ch_cap, "polynomial degree cap for the exact backend");
    charge->add_option("--out", ch_out, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    // ---- poles ----
    auto* poles = app.add_subcommand("poles", "poles of the exact charge");
    std::string po_psi, po_out = "csv";
    int po_jj = 1;
    poles->add_option("--psi", po_psi)->required();
    poles->add_option("--jj", po_jj)->required();
    poles->add_option("--out", po_out)->check(CLI::IsMember({"json", "csv"}));

    // ---- deviation ----
    auto* dev = app.add_subcommand("deviation", "sup-deviation from the conjectured form");
    std::string dv_psi, dv_grid = "-10:10:2001", dv_backend = "auto", dv_out = "json";
    int dv_jj = 1;
    dev->add_option("--psi", dv_psi)->required();
    dev->add_option("--jj", dv_jj)->required();
    dev->add_option("--grid", dv_grid, "lo:hi:points");
    dev->add_option("--backend", dv_backend)->check(CLI::IsMember({"auto", "exact", "numeric"}));
    dev->add_option("--out", dv_out)->check(CLI::IsMember({"json", "csv"}));

    // ---- ensemble ----
    auto* ens = app.add_subcommand("ensemble", "seeded random-state deviation statistics");
    int en_m = 20, en_jj = 1, en_count = 100, en_par = 0;
    std::uint64_t en_seed = 0;
    std::string en_grid = "-10:10:2001", en_backend = "auto", en_out = "json";
    ens->add_option("--M", en_m, "substate length")->required();
    ens->add_option("--jj", en_jj)->required();
    ens->add_option("--count", en_count)->required();
    ens->add_option("--seed", en_seed, "ensemble seed (required for reproducibility)")->required();
    ens->add_option("--grid", en_grid);
    ens->add_option("--backend", en_backend)->check(CLI::IsMember({"auto", "exact", "numeric"}));
    ens->add_option("--parallelism", en_par, "worker threads (0 = hardware)");
    ens->add_option("--out", en_out, "json report or csv histogram")
        ->check(CLI::IsMember({"json", "csv"}));

    // ---- gibbs ----
    auto* gibbs = app.add_subcommand("gibbs", "infinite-temperature Gibbs average");
    int gb_jj = 1;
    std::string gb_mu = "0", gb_out = "csv";
    gibbs->add_option("--jj", gb_jj)->required();
    gibbs->add_option("--mu-grid", gb_mu, "value, comma list, or lo:hi:n");
    gibbs->add_option("--out", gb_out)->check(CLI::IsMember({"json", "csv"}));

    // ---- densities ----
    auto* dens = app.add_subcommand("densities", "string and hole densities");
    int de_jj = 1;
    std::string de_mu = "-10:10:401";
    dens->add_option("--jj", de_jj)->required();
    dens->add_option("--mu-grid", de_mu);

    // ---- curve ----
    auto* curve = app.add_subcommand("curve", "solutions of the pole-locus equation");
    int cu_m = 2;
    curve->add_option("--M", cu_m)->required();

    // ---- decay ----
    auto* decay = app.add_subcommand("decay", "repeated mixed-block norms for a state pair");
    std::string dc_m, dc_n;
    int dc_jj = 1, dc_reps = 10;
    double dc_mu = 1.0;
    decay->add_option("--psi-m", dc_m)->required();
    decay->add_option("--psi-n", dc_n)->required();
    decay->add_option("--jj", dc_jj)->required();
    decay->add_option("--repeats", dc_reps);
    decay->add_option("--mu", dc_mu);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    // Phase 1: validate/convert inputs (failures exit 2).
    struct Job {
        std::string command;
        std::function<std::string()> run;
        std::optional<std::uint64_t> seed;
    };
    Job job;
    try {
        if (charge->parsed()) {
            if (ch_exact && ch_numeric) throw Error("choose one of --exact / --numeric");
            const heis::SpinState psi = heis::SpinState::parse(ch_psi);
            const heis::RepIndex jj(ch_jj);
            const bool numeric = ch_numeric;
            const std::vector<double> mus = parse_mu_list(ch_mu);
            const std::string out = ch_out;
            const int cap = ch_cap;
            job = {"charge", [=] {
                       if (!numeric) return heis::charge_exact(psi, jj, cap).to_json() + "\n";
                       std::ostringstream os;
                       if (out == "csv") {
                           os << "mu,x_re,x_im\n";
                           for (double mu : mus) {
                               const heis::Complex x = heis::charge_numeric(psi, jj, mu);
                               os << fmt(mu) << "," << fmt(x.real()) << "," << fmt(x.imag())
                                  << "\n";
                           }
                       } else {
                           nlohmann::json j;
                           j["schema"] = "charge-numeric/v1";
                           j["jj"] = jj.jj;
                           j["psi"] = psi.to_string();
                           nlohmann::json pts = nlohmann::json::array();
                           for (double mu : mus) {
                               const heis::Complex x = heis::charge_numeric(psi, jj, mu);
                               pts.push_back({{"mu", fmt(mu)},
                                              {"x_re", fmt(x.real())},
                                              {"x_im", fmt(x.imag())}});
                           }
                           j["points"] = std::move(pts);
                           os << j.dump() << "\n";
                       }
                       return os.str();
                   },
                   std::nullopt};
        } else if (poles->parsed()) {
            const heis::SpinState psi = heis::SpinState::parse(po_psi);
            const heis::RepIndex jj(po_jj);
            const std::string out = po_out;
            job = {"poles", [=] {
                       const heis::RationalCharge rc = heis::charge_exact(psi, jj);
                       const heis::PoleSet ps = heis::find_poles(rc);
                       const heis::PhysicalStripReport strip = heis::classify_physical_strip(ps);
                       std::ostringstream os;
                       if (out == "csv") {
                           os << "re_mu,im_mu,multiplicity,on_hyperbola_residual\n";
                           for (size_t i = 0; i < ps.roots.size(); ++i) {
                               const heis::Complex r = ps.roots[i];
                               const double res =
                                   std::abs(r.imag() * r.imag() - r.real() * r.real() - 0.5);
                               os << fmt(r.real()) << "," << fmt(r.imag()) << ","
                                  << ps.multiplicities[i] << "," << fmt(res) << "\n";
                           }
                       } else {
                           nlohmann::json j;
                           j["schema"] = "pole-set/v1";
                           j["jj"] = ps.jj;
                           j["m"] = ps.psi_len;
                           j["residual"] = fmt(ps.residual);
                           nlohmann::json roots = nlohmann::json::array();
                           for (size_t i = 0; i < ps.roots.size(); ++i)
                               roots.push_back({{"re", fmt(ps.roots[i].real())},
                                                {"im", fmt(ps.roots[i].imag())},
                                                {"multiplicity", ps.multiplicities[i]}});
                           j["roots"] = std::move(roots);
                           j["physical_strip"] = {{"inside_count", strip.inside.size()},
                                                  {"min_imag_abs", fmt(strip.min_imag_abs)}};
                           os << j.dump() << "\n";
                       }
                       return os.str();
                   },
                   std::nullopt};
        } else if (dev->parsed()) {
            const heis::SpinState psi = heis::SpinState::parse(dv_psi);
            const heis::RepIndex jj(dv_jj);
            const GridArg g = parse_grid(dv_grid);
            const heis::GridSpec grid{g.lo, g.hi, g.points, 10};
            const heis::ChargeBackend backend = parse_backend(dv_backend);
            const std::string out = dv_out;
            job = {"deviation", [=] {
                       std::ostringstream os;
                       if (out == "csv") {
                           os << "mu,X_exact,X_tilde,X_infinity,rel_deviation\n";
                           for (const heis::CurvePoint& p :
                                heis::deviation_curve(psi, jj, grid, backend))
                               os << fmt(p.mu) << "," << fmt(p.x) << "," << fmt(p.x_tilde) << ","
                                  << fmt(p.x_infinity) << "," << fmt(p.rel_deviation) << "\n";
                       } else {
                           const heis::DeviationReport rep =
                               heis::deviation(psi, jj, grid, backend);
                           nlohmann::json j;
                           j["schema"] = "deviation/v1";
                           j["jj"] = jj.jj;
                           j["psi"] = psi.to_string();
                           j["delta"] = fmt(rep.delta);
                           j["argmax_mu"] = fmt(rep.argmax_mu);
                           nlohmann::json ex = nlohmann::json::array();
                           for (double v : rep.excluded) ex.push_back(fmt(v));
                           j["excluded_points"] = std::move(ex);
                           os << j.dump() << "\n";
                       }
                       return os.str();
                   },
                   std::nullopt};
        } else if (ens->parsed()) {
            heis::EnsembleConfig cfg;
            cfg.m = en_m;
            cfg.jj = en_jj;
            cfg.count = en_count;
            cfg.seed = en_seed;
            const GridArg g = parse_grid(en_grid);
            cfg.grid = heis::GridSpec{g.lo, g.hi, g.points, 10};
            cfg.backend = parse_backend(en_backend);
            cfg.parallelism = en_par;
            const std::string out = en_out;
            job = {"ensemble", [=] {
                       const heis::EnsembleReport rep = heis::run_ensemble(
                           cfg, [](int done, int total) {
                               const int stride = std::max(1, total / 20);
                               if (done % stride == 0 || done == total)
                                   std::cerr << "ensemble: " << done << "/" << total << "\n";
                           });
                       if (out == "json") return rep.to_json() + "\n";
                       std::ostringstream os;
                       os << "bin_lo,bin_hi,count\n";
                       for (size_t i = 0; i < rep.histogram.size(); ++i)
                           os << fmt(i * rep.bin_width) << "," << fmt((i + 1) * rep.bin_width)
                              << "," << rep.histogram[i] << "\n";
                       return os.str();
                   },
                   en_seed};
        } else if (gibbs->parsed()) {
            const heis::RepIndex jj(gb_jj);
            const std::vector<double> mus = parse_mu_list(gb_mu);
            const std::string out = gb_out;
            job = {"gibbs", [=] {
                       std::ostringstream os;
                       if (out == "csv") {
                           os << "mu,gibbs_average\n";
                           for (double mu : mus)
                               os << fmt(mu) << "," << fmt(heis::gibbs_average(jj, mu)) << "\n";
                       } else {
                           nlohmann::json pts = nlohmann::json::array();
                           for (double mu : mus)
                               pts.push_back(
                                   {{"mu", fmt(mu)}, {"value", fmt(heis::gibbs_average(jj, mu))}});
                           nlohmann::json j{{"schema", "gibbs/v1"}, {"jj", jj.jj},
                                            {"points", std::move(pts)}};
                           os << j.dump() << "\n";
                       }
                       return os.str();
                   },
                   std::nullopt};
        } else if (dens->parsed()) {
            const heis::RepIndex jj(de_jj);
            const std::vector<double> mus = parse_mu_list(de_mu);
            job = {"densities", [=] {
                       std::ostringstream os;
                       os << "mu,rho,rho_bar,eta\n";
                       for (double mu : mus) {
                           const heis::DensityPair d = heis::string_densities(jj, mu);
                           os << fmt(mu) << "," << fmt(d.rho) << "," << fmt(d.rho_bar) << ","
                              << fmt(d.eta) << "\n";
                       }
                       return os.str();
                   },
                   std::nullopt};
        } else if (curve->parsed()) {
            const int m = cu_m;
            if (m < 2) throw Error("curve: --M must be >= 2");
            job = {"curve", [=] {
                       const heis::CurveSolutions cs = heis::curve_solutions(m);
                       std::ostringstream os;
                       os << "k,re_mu_sq,im_mu_sq,re_mu,im_mu\n";
                       for (size_t i = 0; i < cs.k.size(); ++i)
                           os << cs.k[i] << "," << fmt(cs.mu_sq[i].real()) << ","
                              << fmt(cs.mu_sq[i].imag()) << "," << fmt(cs.mu[i].real()) << ","
                              << fmt(cs.mu[i].imag()) << "\n";
                       return os.str();
                   },
                   std::nullopt};
        } else if (decay->parsed()) {
            const heis::GeneralStatePair pair(heis::SpinState::parse(dc_m),
                                              heis::SpinState::parse(dc_n));
            const heis::RepIndex jj(dc_jj);
            if (dc_reps < 1) throw Error("decay: --repeats must be >= 1");
            const int reps = dc_reps;
            const double mu = dc_mu;
            job = {"decay", [=] {
                       std::ostringstream os;
                       os << "repeat,norm\n";
                       const auto norms = heis::offdiagonal_decay(pair, jj, mu, reps);
                       for (size_t i = 0; i < norms.size(); ++i)
                           os << (i + 1) << "," << fmt(norms[i]) << "\n";
                       return os.str();
                   },
                   std::nullopt};
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    // Phase 2: compute (failures exit 3).
    try {
        const std::string payload = job.run();
        emit(payload, job.command, raw_args, job.seed);
    } catch (const Error& e) {
        std::cerr << "math error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "math error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
