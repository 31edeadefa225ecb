#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "support.hpp"

using namespace projmotif;

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        lines.push_back(line);
    }
    return lines;
}

}  // namespace

TEST_CASE("resolve_params fills k, s, m from the formulas", "[driver]") {
    // 20 sequences of length 600 to match the challenge-scale example
    std::vector<std::string> strings(20, std::string(600, 'A'));
    const SequenceSet seqs = support::make_seqs(std::move(strings));
    RunConfig config;
    config.l = 15;
    config.d = 4;
    const TrialParams params = resolve_params(config, seqs);
    CHECK(params.k == 10);
    CHECK(params.s == 3);
    CHECK(params.t_hat == 20);
    // m must satisfy the tail bound it was derived from
    const double b = binomial_lt(params.t_hat, p_hat(15, 4, 10), params.s);
    CHECK(params.m == trials_for_tail(params.q, b));
    CHECK(params.m >= 1);
}

TEST_CASE("resolve_params passes overrides through", "[driver]") {
    const SequenceSet seqs = support::example_sequences();
    RunConfig config;
    config.l = 8;
    config.d = 1;
    config.k = 5;
    config.s = 4;
    config.m = 9;
    const TrialParams params = resolve_params(config, seqs);
    CHECK(params.k == 5);
    CHECK(params.s == 4);
    CHECK(params.m == 9);
}

TEST_CASE("resolve_params rejects degenerate shapes", "[driver]") {
    const SequenceSet seqs = support::example_sequences();
    RunConfig config;
    config.l = 5;
    config.d = 4;
    CHECK_THROWS_AS(resolve_params(config, seqs), InvalidParamsError);  // k would be 0

    RunConfig bad_q;
    bad_q.l = 8;
    bad_q.d = 1;
    bad_q.q = 1.0;
    CHECK_THROWS_AS(resolve_params(bad_q, seqs), InvalidParamsError);

    RunConfig bad_d;
    bad_d.l = 8;
    bad_d.d = 8;
    CHECK_THROWS_AS(resolve_params(bad_d, seqs), InvalidParamsError);

    RunConfig too_long;
    too_long.l = 41;
    too_long.d = 1;
    CHECK_THROWS_AS(resolve_params(too_long, seqs), InvalidParamsError);

    // s floor 3 with t_hat 7 pushes the miss probability to 1 for tiny p_hat
    RunConfig unreachable;
    unreachable.l = 8;
    unreachable.d = 6;
    unreachable.k = 1;
    unreachable.s = 1000;
    CHECK_THROWS_AS(resolve_params(unreachable, seqs), UnreachableError);
}

TEST_CASE("run replays the worked example with a forced plan", "[driver]") {
    const SequenceSet seqs = support::example_sequences();
    RunConfig config;
    config.l = 8;
    config.d = 1;
    config.s = 4;
    config.forced_kept_positions = std::vector<int>{1, 2, 3, 6, 7};
    const RunResult result = run(config, seqs);
    CHECK(result.params.m == 1);
    CHECK(result.best.consensus == support::kExampleConsensus);
    CHECK(result.best.score == support::kExampleScore);
    CHECK(result.best.positions == support::example_starts());
    CHECK(result.best.source_bucket == encode_kmer("ATGAC", seqs.alphabet()));
    CHECK(result.best_trial == 1);
    CHECK(result.trials_run == 1);
    CHECK(result.buckets_enriched >= 1);
}

TEST_CASE("run finds an exact plant and stops early", "[driver]") {
    const PlantedInstance inst = generate_planted(5, 50, 10, 0, 77);
    RunConfig config;
    config.l = 10;
    config.d = 0;
    config.seed = 5;
    config.m = 10;  // any projection keeps a d=0 plant intact, so trial 1 is perfect
    const RunResult result = run(config, inst.sequences);
    CHECK(result.best.score == 10 * 5);
    CHECK(result.best.consensus == inst.motif);
    CHECK(result.best_trial == 1);
    CHECK(result.trials_run == 1);

    RunConfig full = config;
    full.early_stop = false;
    const RunResult all_trials = run(full, inst.sequences);
    CHECK(all_trials.trials_run == 10);
    CHECK(all_trials.best.score == 10 * 5);
}

TEST_CASE("run output is identical across worker counts and backends", "[driver]") {
    const PlantedInstance inst = generate_planted(8, 60, 9, 2, 1234);
    RunConfig config;
    config.l = 9;
    config.d = 2;
    config.seed = 42;

    std::vector<RunResult> results;
    for (const int workers : {1, 4}) {
        for (const HashBackend backend : {HashBackend::dense, HashBackend::grouped, HashBackend::automatic}) {
            RunConfig variant = config;
            variant.workers = workers;
            variant.backend = backend;
            results.push_back(run(variant, inst.sequences));
        }
    }
    const RunResult& first = results.front();
    for (const RunResult& other : results) {
        CHECK(other.best.consensus == first.best.consensus);
        CHECK(other.best.positions == first.best.positions);
        CHECK(other.best.score == first.best.score);
        CHECK(other.best.expectation == first.best.expectation);
        CHECK(other.best.source_bucket == first.best.source_bucket);
        CHECK(other.best_trial == first.best_trial);
        CHECK(other.trials_run == first.trials_run);
        CHECK(other.buckets_enriched == first.buckets_enriched);
    }
}

TEST_CASE("run reports when no bucket is ever enriched", "[driver]") {
    const PlantedInstance inst = generate_planted(4, 30, 8, 2, 3);
    RunConfig config;
    config.l = 8;
    config.d = 2;
    config.s = 30;  // unattainable: more members than l-mers per bucket
    config.m = 2;
    CHECK_THROWS_AS(run(config, inst.sequences), NoEnrichedBucketsError);
}

TEST_CASE("json report carries the full schema", "[driver]") {
    const SequenceSet seqs = support::example_sequences();
    RunConfig config;
    config.l = 8;
    config.d = 1;
    config.s = 4;
    config.forced_kept_positions = std::vector<int>{1, 2, 3, 6, 7};
    config.seed = 9;
    const RunResult result = run(config, seqs);
    const std::string text = render_result_json(result);

    const nlohmann::json doc = nlohmann::json::parse(text);
    CHECK(doc.at("version") == 1);
    CHECK(doc.at("params").at("l") == 8);
    CHECK(doc.at("params").at("d") == 1);
    CHECK(doc.at("params").at("k") == 5);
    CHECK(doc.at("params").at("s") == 4);
    CHECK(doc.at("params").at("m") == 1);
    CHECK(doc.at("params").at("q") == 0.95);
    CHECK(doc.at("params").at("seed") == 9);
    CHECK(doc.at("best").at("motif") == support::kExampleConsensus);
    CHECK(doc.at("best").at("score") == support::kExampleScore);
    CHECK(doc.at("best").at("positions") == nlohmann::json(support::example_starts()));
    CHECK(doc.at("best").at("trial") == 1);
    CHECK(doc.at("best").contains("expectation"));
    CHECK(doc.at("best").contains("source_bucket"));
    CHECK(doc.at("stats").at("trials_run") == 1);
    CHECK(doc.at("stats").contains("buckets_enriched"));
    CHECK(doc.at("stats").contains("wall_ms"));
}

TEST_CASE("tsv report has a header and one data row", "[driver]") {
    const SequenceSet seqs = support::example_sequences();
    RunConfig config;
    config.l = 8;
    config.d = 1;
    config.s = 4;
    config.forced_kept_positions = std::vector<int>{1, 2, 3, 6, 7};
    const RunResult result = run(config, seqs);
    const std::vector<std::string> lines = split_lines(render_result_tsv(result));
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] ==
          "motif\tscore\texpectation\tpositions\tsource_bucket\ttrial\ttrials_run\tbuckets_enriched\twall_ms");
    CHECK(lines[1].starts_with("ATGCAACT\t53\t"));
    CHECK(lines[1].find("8,19,3,5,31,27,15") != std::string::npos);
}

TEST_CASE("truth sidecar serializes the planted ground truth", "[driver]") {
    const PlantedInstance inst = generate_planted(3, 20, 5, 1, 44);
    const nlohmann::json doc = nlohmann::json::parse(truth_json(inst));
    CHECK(doc.at("motif") == inst.motif);
    CHECK(doc.at("positions") == nlohmann::json(inst.positions));
    CHECK(doc.at("d") == 1);
    CHECK(doc.at("l") == 5);
    CHECK(doc.at("seed") == 44);
}

TEST_CASE("benchmark emits one row per instance plus a summary", "[driver]") {
    BenchConfig config;
    config.instances = 5;
    config.t = 3;
    config.n = 10;
    config.l = 3;
    config.d = 1;
    config.seed = 21;
    config.run.s = 3;
    const std::string tsv = benchmark(config);
    const std::vector<std::string> lines = split_lines(tsv);
    REQUIRE(lines.size() == 1 + 5 + 1);
    CHECK(lines[0].starts_with("instance\tseed\trun_score\toracle_score"));
    CHECK(lines.back().starts_with("summary\t"));

    // oracle score is never smaller than the pipeline's, and the duality
    // with the median column holds on every row
    for (std::size_t row = 1; row <= 5; ++row) {
        std::istringstream in(lines[row]);
        std::string instance, seed;
        int run_score = 0;
        int oracle_score = 0;
        int median_distance = 0;
        std::string agree;
        in >> instance >> seed >> run_score >> oracle_score >> median_distance >> agree;
        CHECK(oracle_score >= run_score);
        CHECK(oracle_score == 3 * 3 - median_distance);
        CHECK((agree == "true") == (run_score == oracle_score));
    }
}

TEST_CASE("benchmark on exact plants agrees with the oracle everywhere", "[driver]") {
    BenchConfig config;
    config.instances = 5;
    config.t = 3;
    config.n = 12;
    config.l = 4;
    config.d = 0;
    config.seed = 8;
    config.run.s = 3;
    const std::string tsv = benchmark(config);
    const std::vector<std::string> lines = split_lines(tsv);
    CHECK(lines.back().find("\t5/5\t") != std::string::npos);
}
