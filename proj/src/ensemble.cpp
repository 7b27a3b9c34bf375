#include "heis/ensemble.hpp"

#include "heis/errors.hpp"

#include <json.hpp>

#include <Eigen/SVD>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

namespace heis {

std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t ensemble_subseed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64_at(seed ^ 0xD1B54A32D192ED03ull, index);
}

SpinState random_state(int m, std::uint64_t seed) {
    if (m < 1) throw Error("random_state: M must be >= 1");
    std::vector<int> sites(m);
    for (int i = 0; i < m; ++i)
        sites[i] = 1 + static_cast<int>(splitmix64_at(seed, static_cast<std::uint64_t>(i)) & 1u);
    return SpinState(std::move(sites));
}

NonGenericity is_nongeneric(const SpinState& psi) {
    const int p = psi.period();
    return NonGenericity{p < psi.length(), p};
}

namespace {

std::string format_double(double v) {
    std::ostringstream os;
    os.precision(15);
    os << v;
    return os.str();
}

double quantile(const std::vector<double>& sorted, double p) {
    if (sorted.empty()) return 0.0;
    const double pos = p * (static_cast<double>(sorted.size()) - 1.0);
    const size_t lo = static_cast<size_t>(pos);
    const double frac = pos - static_cast<double>(lo);
    if (lo + 1 >= sorted.size()) return sorted.back();
    return sorted[lo] * (1.0 - frac) + sorted[lo + 1] * frac;
}

}  // namespace

EnsembleReport run_ensemble(const EnsembleConfig& cfg, const ProgressFn& progress) {
    if (cfg.count < 1) throw Error("run_ensemble: count must be >= 1");
    EnsembleReport rep;
    rep.config = cfg;
    rep.per_state.resize(cfg.count);

    std::atomic<int> next{0};
    std::atomic<int> done{0};
    const int workers = cfg.parallelism > 0
                            ? cfg.parallelism
                            : std::max(1u, std::thread::hardware_concurrency());

    auto work = [&] {
        for (;;) {
            const int idx = next.fetch_add(1);
            if (idx >= cfg.count) return;
            StateResult& out = rep.per_state[idx];
            const SpinState psi =
                random_state(cfg.m, ensemble_subseed(cfg.seed, static_cast<std::uint64_t>(idx)));
            out.psi = psi.to_string();
            const NonGenericity ng = is_nongeneric(psi);
            out.nongeneric = ng.periodic;
            out.period = ng.period;
            try {
                DeviationReport dev = deviation(psi, RepIndex(cfg.jj), cfg.grid, cfg.backend);
                out.delta = dev.delta;
                out.excluded_points = std::move(dev.excluded);
            } catch (const Error& e) {
                out.failed = true;
                out.error = e.what();
            }
            const int d = done.fetch_add(1) + 1;
            if (progress) progress(d, cfg.count);
        }
    };

    if (workers <= 1 || cfg.count == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    std::vector<double> deltas;
    deltas.reserve(cfg.count);
    for (const StateResult& s : rep.per_state) {
        if (s.failed)
            ++rep.failed_count;
        else
            deltas.push_back(s.delta);
    }
    rep.valid_count = static_cast<int>(deltas.size());
    std::sort(deltas.begin(), deltas.end());
    if (!deltas.empty()) {
        rep.min = deltas.front();
        rep.max = deltas.back();
        rep.q25 = quantile(deltas, 0.25);
        rep.median = quantile(deltas, 0.5);
        rep.q75 = quantile(deltas, 0.75);
    }
    rep.histogram.assign(rep.histogram_bins, 0);
    rep.bin_width = rep.max > 0.0 ? rep.max / rep.histogram_bins : 1.0;
    for (double d : deltas) {
        int bin = static_cast<int>(d / rep.bin_width);
        bin = std::min(bin, rep.histogram_bins - 1);
        ++rep.histogram[bin];
    }
    return rep;
}

std::string EnsembleReport::to_json() const {
    nlohmann::json out;
    out["schema"] = "ensemble-report/v1";
    out["prng"] = "splitmix64-counter/v1";
    out["config"] = {{"m", config.m},
                     {"jj", config.jj},
                     {"count", config.count},
                     {"seed", config.seed},
                     {"grid", {{"lo", config.grid.lo},
                               {"hi", config.grid.hi},
                               {"points", config.grid.points},
                               {"refinement", config.grid.refinement}}},
                     {"backend", config.backend == ChargeBackend::kAuto
                                     ? "auto"
                                     : (config.backend == ChargeBackend::kExact ? "exact"
                                                                                : "numeric")}};
    out["valid_count"] = valid_count;
    out["failed_count"] = failed_count;
    out["quantiles"] = {{"min", format_double(min)},
                        {"q25", format_double(q25)},
                        {"median", format_double(median)},
                        {"q75", format_double(q75)},
                        {"max", format_double(max)}};
    out["histogram_bins"] = histogram_bins;
    out["bin_width"] = format_double(bin_width);
    out["histogram"] = histogram;
    nlohmann::json states = nlohmann::json::array();
    for (const StateResult& s : per_state) {
        nlohmann::json js = {{"psi", s.psi},
                             {"delta", format_double(s.delta)},
                             {"nongeneric", s.nongeneric},
                             {"period", s.period},
                             {"failed", s.failed}};
        if (s.failed) js["error"] = s.error;
        if (!s.excluded_points.empty()) {
            nlohmann::json ex = nlohmann::json::array();
            for (double v : s.excluded_points) ex.push_back(format_double(v));
            js["excluded_points"] = ex;
        }
        states.push_back(std::move(js));
    }
    out["per_state"] = std::move(states);
    return out.dump();
}

GeneralStatePair::GeneralStatePair(SpinState m, SpinState n)
    : psi_m(std::move(m)), psi_n(std::move(n)) {
    if (psi_m.length() != psi_n.length())
        throw Error("GeneralStatePair: states must have equal length");
    if (psi_m == psi_n) throw Error("GeneralStatePair: states must differ in at least one site");
}

std::vector<double> offdiagonal_decay(const GeneralStatePair& pair, RepIndex jj, double mu,
                                      int repeats) {
    if (repeats < 1) throw Error("offdiagonal_decay: repeats must be >= 1");
    if (mu == 0.0) throw Error("offdiagonal_decay: mu must be nonzero");
    const LaxBlocks lb = lax_blocks(jj, SpectralPoint(Complex(mu, 0.0)));
    const int full = jj.dim() * jj.dim();
    Eigen::MatrixXcd period = Eigen::MatrixXcd::Identity(full, full);
    for (int i = 0; i < pair.psi_m.length(); ++i)
        period = lb.block(pair.psi_m.sites[i], pair.psi_n.sites[i]) * period;

    const auto idx = top_sector(jj).flat_indices();
    std::vector<double> norms;
    norms.reserve(repeats);
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(full, full);
    for (int k = 1; k <= repeats; ++k) {
        acc = period * acc;
        Eigen::MatrixXcd restricted(full, static_cast<int>(idx.size()));
        for (size_t c = 0; c < idx.size(); ++c) restricted.col(c) = acc.col(idx[c]);
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(restricted);
        norms.push_back(svd.singularValues()(0));
    }
    return norms;
}

double contraction_bound(RepIndex jj, double mu, double x) {
    const LaxBlocks lb = lax_blocks(jj, SpectralPoint(Complex(mu, 0.0), Complex(x, 0.0)));
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(lb.b12);
    return svd.singularValues()(0);
}

} // namespace heis
