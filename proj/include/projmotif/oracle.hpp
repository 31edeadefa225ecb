#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "projmotif/errors.hpp"
#include "projmotif/kmer.hpp"
#include "projmotif/scoring.hpp"
#include "projmotif/sequence.hpp"

namespace projmotif {

struct NaiveMfpResult {
    StartVector positions;
    int score = 0;
    std::string consensus;
};

struct MedianStringResult {
    std::string median;
    int total_distance = 0;
};

namespace detail {

/// Product of per-sequence window counts, saturating once past `limit`.
inline std::uint64_t configuration_count(const SequenceSet& seqs, int l, std::uint64_t limit) {
    std::uint64_t product = 1;
    for (int i = 1; i <= seqs.count(); ++i) {
        const std::uint64_t w = static_cast<std::uint64_t>(seqs.window_count(i, l));
        if (w == 0 || product > limit / w) {
            return limit + 1;
        }
        product *= w;
    }
    return product;
}

}  // namespace detail

/// Exhaustive motif finding: scores every start-vector configuration and
/// keeps the first maximum, which under this odometer enumeration is the
/// lexicographically smallest maximizer.
inline NaiveMfpResult naive_mfp(const SequenceSet& seqs, int l, std::uint64_t limit = 100000000ULL) {
    const int t = seqs.count();
    const std::uint64_t configs = detail::configuration_count(seqs, l, limit);
    if (configs > limit) {
        throw SearchSpaceTooLargeError("naive search needs more than " + std::to_string(limit) +
                                       " configurations; lower t, n, or raise the limit");
    }

    const Alphabet& alphabet = seqs.alphabet();
    StartVector pos(static_cast<std::size_t>(t), 1);
    ProfileMatrix prof(alphabet.size(), l);
    for (int i = 1; i <= t; ++i) {
        std::string_view row = seqs.lmer_view(i, 1, l);
        for (int c = 1; c <= l; ++c) {
            ++prof.at(alphabet.rank(row[static_cast<std::size_t>(c - 1)]), c);
        }
    }

    // Moves sequence i's profile contribution from start j to start j2.
    auto move_row = [&](int i, int j, int j2) {
        std::string_view old_row = seqs.lmer_view(i, j, l);
        std::string_view new_row = seqs.lmer_view(i, j2, l);
        for (int c = 1; c <= l; ++c) {
            --prof.at(alphabet.rank(old_row[static_cast<std::size_t>(c - 1)]), c);
            ++prof.at(alphabet.rank(new_row[static_cast<std::size_t>(c - 1)]), c);
        }
    };

    NaiveMfpResult best;
    best.score = -1;
    while (true) {
        const int sc = score_profile(prof);
        if (sc > best.score) {
            best.score = sc;
            best.positions = pos;
        }
        // Odometer step: rightmost index first, so enumeration is
        // lexicographic and "first maximum" means smallest start vector.
        int i = t;
        while (i >= 1 && pos[static_cast<std::size_t>(i - 1)] == seqs.window_count(i, l)) {
            move_row(i, pos[static_cast<std::size_t>(i - 1)], 1);
            pos[static_cast<std::size_t>(i - 1)] = 1;
            --i;
        }
        if (i < 1) {
            break;
        }
        move_row(i, pos[static_cast<std::size_t>(i - 1)], pos[static_cast<std::size_t>(i - 1)] + 1);
        ++pos[static_cast<std::size_t>(i - 1)];
    }

    best.consensus = consensus(seqs, best.positions, l);
    return best;
}

/// TotalDistance(v) = Σ_i min_j hamming(v, S_ij).
inline int total_distance(const std::string& candidate, const SequenceSet& seqs) {
    const int l = static_cast<int>(candidate.size());
    int total = 0;
    for (int i = 1; i <= seqs.count(); ++i) {
        int best = l + 1;
        for (int j = 1; j <= seqs.window_count(i, l); ++j) {
            best = std::min(best, hamming(candidate, seqs.lmer_view(i, j, l)));
            if (best == 0) {
                break;
            }
        }
        total += best;
    }
    return total;
}

/// Exhaustive median string: enumerates all |Σ|^l candidates in ascending
/// code order and keeps the first minimizer of TotalDistance, i.e. the one
/// with the smallest code.
inline MedianStringResult median_string(const SequenceSet& seqs, int l, std::uint64_t limit = 16777216ULL) {
    const Alphabet& alphabet = seqs.alphabet();
    if (l < 1 || l > max_kmer_length(alphabet)) {
        throw InvalidParamsError("median string needs 1 <= l <= " + std::to_string(max_kmer_length(alphabet)));
    }
    for (int i = 1; i <= seqs.count(); ++i) {
        seqs.window_count(i, l);  // validates n_i >= l
    }
    const std::uint64_t candidates = detail::pow_sigma(alphabet.size(), l);
    if (candidates > limit) {
        throw SearchSpaceTooLargeError("median search needs " + std::to_string(candidates) +
                                       " candidates, above the limit of " + std::to_string(limit));
    }

    MedianStringResult best;
    best.total_distance = l * seqs.count() + 1;
    std::string candidate;
    for (std::uint64_t code = 0; code < candidates; ++code) {
        detail::decode_into(code, l, alphabet, candidate);
        const int dist = total_distance(candidate, seqs);
        if (dist < best.total_distance) {
            best.total_distance = dist;
            best.median = candidate;
            if (dist == 0) {
                break;
            }
        }
    }
    return best;
}

}  // namespace projmotif
