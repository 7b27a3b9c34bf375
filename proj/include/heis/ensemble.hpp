#pragma once

#include "heis/conjecture.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace heis {

/// Counter-mode SplitMix64: value i of the stream with the given seed.
/// All randomness in the library flows through this generator so that any
/// implementation can reproduce the streams from the documented constants.
std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t counter);

/// Deterministic sub-seed for member `index` of an ensemble.
std::uint64_t ensemble_subseed(std::uint64_t seed, std::uint64_t index);

/// i.i.d. uniform sites over {1,2}; identical (m, seed) gives identical states.
SpinState random_state(int m, std::uint64_t seed);

struct NonGenericity {
    bool periodic;
    int period;
};

/// True when psi is a proper repetition (period < length).
NonGenericity is_nongeneric(const SpinState& psi);

struct EnsembleConfig {
    int m = 20;
    int jj = 1;
    int count = 100;
    std::uint64_t seed = 0;
    GridSpec grid;
    ChargeBackend backend = ChargeBackend::kAuto;
    int parallelism = 0;  // 0 = hardware concurrency; does not affect results
};

struct StateResult {
    std::string psi;
    double delta = 0.0;
    bool nongeneric = false;
    int period = 0;
    bool failed = false;
    std::string error;
    std::vector<double> excluded_points;
};

struct EnsembleReport {
    EnsembleConfig config;
    std::vector<StateResult> per_state;
    int valid_count = 0;
    int failed_count = 0;
    double min = 0.0, q25 = 0.0, median = 0.0, q75 = 0.0, max = 0.0;
    int histogram_bins = 25;
    double bin_width = 0.0;
    std::vector<long> histogram;  // fixed width over [0, max]; sums to valid_count

    /// Deterministic JSON (parallelism intentionally not echoed).
    std::string to_json() const;
};

using ProgressFn = std::function<void(int done, int total)>;

EnsembleReport run_ensemble(const EnsembleConfig& cfg, const ProgressFn& progress = {});

/// Two distinct simple substates of equal length (off-diagonal matrix element).
struct GeneralStatePair {
    SpinState psi_m, psi_n;
    GeneralStatePair(SpinState m, SpinState n);
};

/// 2-norm of the repeated mixed-block product restricted to the top sector,
/// for 1..repeats repetitions of the pair.
std::vector<double> offdiagonal_decay(const GeneralStatePair& pair, RepIndex jj, double mu,
                                      int repeats);

/// Largest singular value of the full-space off-diagonal block b12(mu, x).
double contraction_bound(RepIndex jj, double mu, double x);

} // namespace heis
