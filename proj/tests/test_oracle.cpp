#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "support.hpp"

using namespace projmotif;

TEST_CASE("naive_mfp on identical sequences takes the smallest start vector", "[oracle]") {
    const SequenceSet seqs = support::make_seqs({"ACGTACGT", "ACGTACGT", "ACGTACGT"});
    const NaiveMfpResult res = naive_mfp(seqs, 4);
    CHECK(res.score == 4 * 3);
    CHECK(res.positions == StartVector{1, 1, 1});
    CHECK(res.consensus == "ACGT");
}

TEST_CASE("naive_mfp matches an independent re-enumeration", "[oracle]") {
    std::mt19937 gen(31);
    for (int round = 0; round < 25; ++round) {
        const SequenceSet seqs = support::random_seqs(3, 8, gen);
        const NaiveMfpResult res = naive_mfp(seqs, 3);
        CHECK(res.score == support::brute_best_score(seqs, 3));
        // the reported positions actually attain the reported score
        CHECK(score(seqs, res.positions, 3) == res.score);
    }
}

TEST_CASE("naive_mfp recovers an exact plant", "[oracle]") {
    const PlantedInstance inst = generate_planted(3, 12, 4, 0, 55);
    const NaiveMfpResult res = naive_mfp(inst.sequences, 4);
    CHECK(res.score == 4 * 3);
    for (int i = 1; i <= 3; ++i) {
        CHECK(inst.sequences.lmer_at(i, res.positions[static_cast<std::size_t>(i - 1)], 4) == res.consensus);
    }
}

TEST_CASE("naive_mfp tie-break is the first maximum in odometer order", "[oracle]") {
    // Two sequences of all-As: every configuration scores 2*l, so the
    // lexicographically smallest start vector must win.
    const SequenceSet seqs = support::make_seqs({"AAAAA", "AAAAA"});
    const NaiveMfpResult res = naive_mfp(seqs, 3);
    CHECK(res.positions == StartVector{1, 1});
}

TEST_CASE("naive_mfp guards the configuration blow-up", "[oracle]") {
    const SequenceSet seqs = support::make_seqs(
        {"ACGTACGTACGT", "ACGTACGTACGT", "ACGTACGTACGT", "ACGTACGTACGT", "ACGTACGTACGT"});
    CHECK_THROWS_AS(naive_mfp(seqs, 3, 100), SearchSpaceTooLargeError);
}

TEST_CASE("median_string on identical sequences returns them at distance 0", "[oracle]") {
    const SequenceSet seqs = support::make_seqs({"ACGTT", "ACGTT", "ACGTT"});
    const MedianStringResult res = median_string(seqs, 5);
    CHECK(res.median == "ACGTT");
    CHECK(res.total_distance == 0);
}

TEST_CASE("median_string single sequence picks the smallest-code l-mer", "[oracle]") {
    const SequenceSet seqs = support::make_seqs({"TGCA"});
    const MedianStringResult res = median_string(seqs, 2);
    CHECK(res.total_distance == 0);
    // "TG", "GC", "CA" all attain 0; "CA" has the smallest code
    CHECK(res.median == "CA");
}

TEST_CASE("median_string guards the candidate blow-up", "[oracle]") {
    const SequenceSet seqs = support::make_seqs({"ACGTACGTACGTACGT"});
    CHECK_THROWS_AS(median_string(seqs, 13), SearchSpaceTooLargeError);
}

TEST_CASE("duality: best score equals l*t minus median total distance", "[oracle]") {
    std::mt19937 gen(77);
    for (int round = 0; round < 120; ++round) {
        const int t = std::uniform_int_distribution<int>(2, 4)(gen);
        const int n = std::uniform_int_distribution<int>(5, 10)(gen);
        const SequenceSet seqs = support::random_seqs(t, n, gen);
        const NaiveMfpResult best = naive_mfp(seqs, 3);
        const MedianStringResult median = median_string(seqs, 3);
        CHECK(best.score == 3 * t - median.total_distance);
    }
}
