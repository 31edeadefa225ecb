#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "projmotif/alphabet.hpp"
#include "projmotif/errors.hpp"
#include "projmotif/rng.hpp"
#include "projmotif/sequence.hpp"

namespace projmotif {

/// A synthetic (l,d) instance together with its ground truth.
struct PlantedInstance {
    SequenceSet sequences;
    std::string motif;      // the unmutated planted motif M
    StartVector positions;  // 1-based start of the occurrence in each sequence
    // Per sequence: the d mutated offsets within the occurrence, sorted,
    // each in [1, l].
    std::vector<std::vector<int>> mutation_sets;
    int l = 0;
    int d = 0;
    std::uint64_t seed = 0;
};

/// Generates t length-n sequences, each carrying one occurrence of a random
/// length-l motif mutated at exactly d distinct positions (OOPS model).
///
/// Draw order is part of the contract so instances are byte-reproducible:
/// first the l motif symbols, then per sequence in index order: n background
/// symbols, the start position, the d mutated offsets (distinct, in draw
/// order), and one replacement symbol per mutated offset. Replacements come
/// from uniform_below(|Σ|-1) and skip the original symbol, so every mutation
/// really changes the character.
inline PlantedInstance generate_planted(int t, int n, int l, int d, std::uint64_t seed,
                                        const Alphabet& alphabet = Alphabet::dna()) {
    if (t < 1) {
        throw InvalidParamsError("need at least one sequence, got t=" + std::to_string(t));
    }
    if (l < 1 || l > n) {
        throw InvalidParamsError("need 1 <= l <= n, got l=" + std::to_string(l) + ", n=" + std::to_string(n));
    }
    if (d < 0 || d >= l) {
        throw InvalidParamsError("need 0 <= d < l, got d=" + std::to_string(d) + ", l=" + std::to_string(l));
    }
    if (d > 0 && alphabet.size() < 2) {
        throw InvalidParamsError("cannot mutate symbols over a single-letter alphabet");
    }

    const int sigma = alphabet.size();
    Rng rng(seed);

    std::string motif(static_cast<std::size_t>(l), '\0');
    for (int j = 0; j < l; ++j) {
        motif[static_cast<std::size_t>(j)] = alphabet.symbol(static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(sigma))));
    }

    std::vector<std::string> seqs;
    seqs.reserve(static_cast<std::size_t>(t));
    StartVector positions(static_cast<std::size_t>(t), 0);
    std::vector<std::vector<int>> mutation_sets;
    mutation_sets.reserve(static_cast<std::size_t>(t));

    for (int i = 0; i < t; ++i) {
        std::string s(static_cast<std::size_t>(n), '\0');
        for (int p = 0; p < n; ++p) {
            s[static_cast<std::size_t>(p)] = alphabet.symbol(static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(sigma))));
        }
        const int start = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n - l + 1))) + 1;

        std::string occurrence = motif;
        const std::vector<int> mutated = detail::sample_distinct(l, d, rng);
        for (int offset : mutated) {
            const int old_rank = alphabet.rank(occurrence[static_cast<std::size_t>(offset - 1)]);
            int repl = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(sigma - 1)));
            if (repl >= old_rank) {
                ++repl;  // skip the original symbol
            }
            occurrence[static_cast<std::size_t>(offset - 1)] = alphabet.symbol(repl);
        }

        s.replace(static_cast<std::size_t>(start - 1), static_cast<std::size_t>(l), occurrence);
        seqs.push_back(std::move(s));
        positions[static_cast<std::size_t>(i)] = start;
        std::vector<int> sorted_mutations = mutated;
        std::sort(sorted_mutations.begin(), sorted_mutations.end());
        mutation_sets.push_back(std::move(sorted_mutations));
    }

    PlantedInstance inst{SequenceSet(std::move(seqs), alphabet),
                         std::move(motif),
                         std::move(positions),
                         std::move(mutation_sets),
                         l,
                         d,
                         seed};
    return inst;
}

}  // namespace projmotif
