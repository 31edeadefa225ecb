#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "projmotif/errors.hpp"
#include "projmotif/oracle.hpp"
#include "projmotif/planted.hpp"
#include "projmotif/projection.hpp"
#include "projmotif/refine.hpp"
#include "projmotif/rng.hpp"
#include "projmotif/scoring.hpp"
#include "projmotif/sequence.hpp"

namespace projmotif {

struct RunConfig {
    int l = 0;
    int d = 0;
    std::optional<int> k;           // default: optimal_k(l, d)
    std::optional<int> s;           // default: bucket threshold formula
    std::optional<std::int64_t> m;  // default: num_trials(q, t_hat, p_hat, s)
    double q = 0.95;
    std::uint64_t seed = 0;
    int workers = 1;
    HashBackend backend = HashBackend::automatic;
    int max_em_iters = 5;
    double em_tol = 1e-6;
    int s_floor = 3;
    std::uint64_t dense_table_cap = 65536;
    bool early_stop = true;
    std::optional<int> t_hat;  // default: t
    // Pins every trial to this projection instead of sampling one; used to
    // replay a known plan (then m defaults to 1 unless overridden).
    std::optional<std::vector<int>> forced_kept_positions;
};

struct RunResult {
    RefinedCandidate best;
    std::int64_t best_trial = 0;
    TrialParams params;
    std::uint64_t seed = 0;
    std::int64_t trials_run = 0;
    std::int64_t buckets_enriched = 0;
    double wall_ms = 0.0;
};

/// Fills in k, s, and m that were not overridden, per the parameter rules.
inline TrialParams resolve_params(const RunConfig& config, const SequenceSet& seqs) {
    const int t = seqs.count();
    if (config.l < 1) {
        throw InvalidParamsError("motif length l must be positive");
    }
    if (config.d < 0 || config.d >= config.l) {
        throw InvalidParamsError("need 0 <= d < l, got d=" + std::to_string(config.d) + ", l=" +
                                 std::to_string(config.l));
    }
    const std::uint64_t windows = seqs.total_lmers(config.l);  // also validates n_i >= l

    TrialParams params;
    params.l = config.l;
    params.d = config.d;
    params.t_hat = config.t_hat.value_or(t);
    if (params.t_hat < 1 || params.t_hat > t) {
        throw InvalidParamsError("t_hat must lie in [1, t]");
    }
    if (!(config.q > 0.0 && config.q < 1.0)) {
        throw InvalidParamsError("q must lie strictly between 0 and 1");
    }
    params.q = config.q;

    if (config.forced_kept_positions) {
        const ProjectionPlan plan(config.l, *config.forced_kept_positions);  // validates
        params.k = plan.k();
        if (config.k && *config.k != params.k) {
            throw InvalidParamsError("k override conflicts with the forced projection plan");
        }
    } else if (config.k) {
        if (*config.k < 1 || *config.k > config.l) {
            throw InvalidParamsError("k override must lie in [1, l]");
        }
        params.k = *config.k;
    } else {
        params.k = optimal_k(config.l, config.d);
    }

    if (config.s) {
        if (*config.s < 1) {
            throw InvalidParamsError("s override must be at least 1");
        }
        params.s = *config.s;
    } else {
        if (config.s_floor < 1) {
            throw InvalidParamsError("s floor must be at least 1");
        }
        params.s = bucket_threshold_for_windows(windows, params.k, config.s_floor, seqs.alphabet());
    }

    if (config.m) {
        if (*config.m < 1) {
            throw InvalidParamsError("m override must be at least 1");
        }
        params.m = *config.m;
    } else if (config.forced_kept_positions) {
        params.m = 1;  // a pinned plan makes repeated trials identical
    } else {
        try {
            params.m = num_trials(params.q, params.t_hat, p_hat(params.l, params.d, params.k), params.s);
        } catch (const UnreachableError& e) {
            throw UnreachableError(std::string(e.what()) + "; lower s or k, or pass an explicit m");
        }
    }
    return params;
}

namespace detail {

/// Candidate ordering for the final report: higher score, then higher
/// expectation, then smaller bucket key. Trial order breaks remaining ties
/// because the reduction scans trials in ascending index order.
inline bool candidate_improves(const RefinedCandidate& challenger, const RefinedCandidate& incumbent) {
    if (challenger.score != incumbent.score) {
        return challenger.score > incumbent.score;
    }
    if (challenger.expectation != incumbent.expectation) {
        return challenger.expectation > incumbent.expectation;
    }
    return challenger.source_bucket < incumbent.source_bucket;
}

}  // namespace detail

/// Runs m projection trials and refines every enriched bucket. Trials are
/// processed in blocks of `workers`; the reduction consumes trial outcomes
/// in ascending index order, so the result is identical for any worker
/// count. With early_stop, the run ends at the first trial whose best
/// candidate reaches the l*t score bound; outcomes of later trials in the
/// same block are discarded as if never run.
inline RunResult run(const RunConfig& config, const SequenceSet& seqs) {
    const auto started = std::chrono::steady_clock::now();
    const TrialParams params = resolve_params(config, seqs);
    const int workers = std::max(1, config.workers);
    const int inner_workers = params.m == 1 ? workers : 1;
    const int perfect_score = params.l * seqs.count();
    const int r_cap = seqs.count() * params.s;

    std::optional<ProjectionPlan> forced_plan;
    if (config.forced_kept_positions) {
        forced_plan.emplace(config.l, *config.forced_kept_positions);
    }

    struct TrialOutcome {
        std::int64_t buckets = 0;
        std::optional<RefinedCandidate> best;
    };

    auto run_trial = [&](std::int64_t trial) {
        Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(trial)));
        const ProjectionPlan plan = forced_plan ? *forced_plan : sample_plan(params.l, params.k, rng);
        const BucketGrouping grouping =
            hash_trial(seqs, params.l, plan, config.backend, inner_workers, config.dense_table_cap);
        TrialOutcome outcome;
        for (const EnrichedBucket& bucket : enriched_buckets(grouping, params.s, r_cap)) {
            ++outcome.buckets;
            RefinedCandidate cand = refine(bucket, seqs, params.l, config.max_em_iters, config.em_tol);
            if (!outcome.best || detail::candidate_improves(cand, *outcome.best)) {
                outcome.best = std::move(cand);
            }
        }
        return outcome;
    };

    RunResult result;
    result.params = params;
    result.seed = config.seed;
    std::optional<RefinedCandidate> best;
    std::int64_t best_trial = 0;
    bool stop = false;

    for (std::int64_t block_start = 1; block_start <= params.m && !stop; block_start += workers) {
        const std::int64_t block_end = std::min<std::int64_t>(params.m, block_start + workers - 1);
        const std::int64_t block_size = block_end - block_start + 1;
        std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(block_size));
        parallel_for(block_size, workers, [&](std::int64_t begin, std::int64_t end) {
            for (std::int64_t i = begin; i < end; ++i) {
                outcomes[static_cast<std::size_t>(i)] = run_trial(block_start + i);
            }
        });
        for (std::int64_t i = 0; i < block_size; ++i) {
            const std::int64_t trial = block_start + i;
            TrialOutcome& outcome = outcomes[static_cast<std::size_t>(i)];
            result.trials_run = trial;
            result.buckets_enriched += outcome.buckets;
            if (outcome.best && (!best || detail::candidate_improves(*outcome.best, *best))) {
                best = std::move(outcome.best);
                best_trial = trial;
            }
            if (config.early_stop && best && best->score == perfect_score) {
                stop = true;
                break;
            }
        }
    }

    if (!best) {
        throw NoEnrichedBucketsError("no bucket reached s=" + std::to_string(params.s) + " in " +
                                     std::to_string(result.trials_run) + " trials; lower s or raise m");
    }
    result.best = std::move(*best);
    result.best_trial = best_trial;
    result.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    return result;
}

struct BenchConfig {
    int instances = 20;
    int t = 3;
    int n = 10;
    int l = 3;
    int d = 1;
    std::uint64_t seed = 1;
    RunConfig run;  // l, d, and seed are overwritten per instance
    std::uint64_t naive_limit = 100000000ULL;
    std::uint64_t median_limit = 16777216ULL;
};

namespace detail {

inline std::string format_ms(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", ms);
    return buf;
}

template <typename F>
inline double timed_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace detail

/// Runs the projection pipeline against both exact oracles on generated
/// instances. Returns a TSV report: one row per instance plus a summary row.
inline std::string benchmark(const BenchConfig& config) {
    if (config.instances < 1) {
        throw InvalidParamsError("benchmark needs at least one instance");
    }
    std::string out =
        "instance\tseed\trun_score\toracle_score\tmedian_distance\tagree\trun_ms\tnaive_ms\tmedian_ms\n";
    int agree_count = 0;
    double total_run_ms = 0.0;
    double total_naive_ms = 0.0;
    double total_median_ms = 0.0;

    for (int i = 1; i <= config.instances; ++i) {
        const std::uint64_t inst_seed = derive_seed(config.seed, static_cast<std::uint64_t>(i));
        const PlantedInstance inst = generate_planted(config.t, config.n, config.l, config.d, inst_seed);

        RunConfig rc = config.run;
        rc.l = config.l;
        rc.d = config.d;
        rc.seed = inst_seed;
        int run_score = -1;  // kept when no bucket is ever enriched
        const double run_ms = detail::timed_ms([&] {
            try {
                run_score = run(rc, inst.sequences).best.score;
            } catch (const NoEnrichedBucketsError&) {
            }
        });

        NaiveMfpResult naive;
        const double naive_ms = detail::timed_ms([&] { naive = naive_mfp(inst.sequences, config.l, config.naive_limit); });
        MedianStringResult median;
        const double median_ms =
            detail::timed_ms([&] { median = median_string(inst.sequences, config.l, config.median_limit); });

        const bool agree = run_score == naive.score;
        agree_count += agree ? 1 : 0;
        total_run_ms += run_ms;
        total_naive_ms += naive_ms;
        total_median_ms += median_ms;

        out += std::to_string(i) + "\t" + std::to_string(inst_seed) + "\t" + std::to_string(run_score) + "\t" +
               std::to_string(naive.score) + "\t" + std::to_string(median.total_distance) + "\t" +
               (agree ? "true" : "false") + "\t" + detail::format_ms(run_ms) + "\t" + detail::format_ms(naive_ms) +
               "\t" + detail::format_ms(median_ms) + "\n";
    }

    out += "summary\t-\t-\t-\t-\t" + std::to_string(agree_count) + "/" + std::to_string(config.instances) + "\t" +
           detail::format_ms(total_run_ms) + "\t" + detail::format_ms(total_naive_ms) + "\t" +
           detail::format_ms(total_median_ms) + "\n";
    return out;
}

}  // namespace projmotif
