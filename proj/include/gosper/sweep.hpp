#pragma once

// Seeded random sweep of verify_theorem over (a, c, l).

#include "gosper/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <random>
#include <thread>
#include <vector>

namespace gosper {

struct SweepTrial {
    Rational a;
    Rational c;
    unsigned ell = 1;
};

/// Numerators in [-20, 20], denominators in [1, 20]; integer c is redrawn.
inline std::vector<SweepTrial> draw_trials(std::size_t n, unsigned ell_max, std::uint64_t seed) {
    if (ell_max < 1) {
        throw ParameterError("ell-max must be at least 1");
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 20);
    std::uniform_int_distribution<unsigned> ell(1, ell_max);
    std::vector<SweepTrial> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        SweepTrial t;
        t.a = make_rational(num(rng), den(rng));
        do {
            t.c = make_rational(num(rng), den(rng));
        } while (is_integer(t.c));
        t.ell = ell(rng);
        out.push_back(std::move(t));
    }
    return out;
}

struct SweepOutcome {
    SweepTrial trial;
    std::optional<VerifyReport> report;
    /// Set when verify_theorem threw.
    std::optional<std::string> error;
    bool passed = false;
};

struct SweepSummary {
    std::vector<SweepOutcome> outcomes;
    std::size_t roots = 0;
    std::size_t skipped_roots = 0;

    std::size_t failures() const {
        return static_cast<std::size_t>(
            std::count_if(outcomes.begin(), outcomes.end(), [](const SweepOutcome& o) { return !o.passed; }));
    }
    double skip_rate() const { return roots == 0 ? 0.0 : static_cast<double>(skipped_roots) / roots; }
};

/// Trials run on `threads` workers; outcomes stay in draw order.
inline SweepSummary run_sweep(const std::vector<SweepTrial>& trials, Precision prec, const Real& tolerance,
                              unsigned threads = 0) {
    SweepSummary s;
    s.outcomes.resize(trials.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < trials.size(); i = next++) {
            SweepOutcome& o = s.outcomes[i];
            o.trial = trials[i];
            try {
                o.report = verify_theorem(o.trial.a, o.trial.c, ContigOrder(o.trial.ell), prec);
                o.passed = o.report->passed(tolerance);
            } catch (const std::exception& e) {
                o.error = e.what();
            }
        }
    };
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, trials.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
        t.join();
    }
    for (const auto& o : s.outcomes) {
        if (o.report) {
            s.roots += o.report->records.size();
            s.skipped_roots += o.report->skipped();
        }
    }
    return s;
}

}  // namespace gosper
