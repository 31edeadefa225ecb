#pragma once

// Shared golden data and independently written oracles for the test suite.
// The oracles deliberately avoid the library's own algorithms (positional
// power sums instead of Horner, Pascal's triangle instead of product forms,
// exhaustive enumeration instead of closed forms).

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <projmotif/projmotif.hpp>

namespace support {

// Seven 40nt sequences carrying ATGCAACT occurrences with up to one
// substitution each, at starts (8,19,3,5,31,27,15).
inline const std::vector<std::string>& example_strings() {
    static const std::vector<std::string> seqs = {
        "CGGGGCTATGGAACTGGGTCGTCACATTCCCCTTTCGATA",
        "TTTGAGGGTGCCCAATAAATGCCACTCCAAAGCGGACAAA",
        "GGATGCAACTGATGCCGTTTGACGACCTAAATCAACGGCC",
        "AAGGATGCAACTCCAGGAGCGCCTTTGCTGGTTCTACCTG",
        "AATTTTCTAAAAAGATTATAATGTCGGTCCATGCAACTTC",
        "CTGCTGTACAACTGAGATCATGCTGCATGCAACTTTCAAC",
        "TACATGATCTTTTGATGCAACGTGGATGAGGGAATGATGC",
    };
    return seqs;
}

inline projmotif::SequenceSet example_sequences() {
    return projmotif::SequenceSet(example_strings(), projmotif::Alphabet::dna());
}

inline projmotif::StartVector example_starts() { return {8, 19, 3, 5, 31, 27, 15}; }

inline constexpr std::array<int, 8> kExampleColumnMaxima = {7, 7, 7, 6, 6, 7, 7, 6};
inline constexpr int kExampleScore = 53;
inline constexpr const char* kExampleConsensus = "ATGCAACT";

// theta0 of the worked EM example, rows in DNA rank order A,C,T,G and
// columns 1..8 (background column 0 is data-dependent, see init_model).
// Entries are the exact sevenths the example rounds to two decimals.
inline const std::array<std::array<double, 8>, 4>& example_theta0_columns() {
    static const std::array<std::array<double, 8>, 4> theta = {{
        {7.0 / 7, 0.0, 0.0, 0.0, 6.0 / 7, 7.0 / 7, 0.0, 0.0},  // A
        {0.0, 0.0, 0.0, 6.0 / 7, 1.0 / 7, 0.0, 7.0 / 7, 0.0},  // C
        {0.0, 7.0 / 7, 0.0, 0.0, 0.0, 0.0, 0.0, 6.0 / 7},      // T
        {0.0, 0.0, 7.0 / 7, 1.0 / 7, 0.0, 0.0, 0.0, 1.0 / 7},  // G
    }};
    return theta;
}

inline projmotif::SequenceSet make_seqs(std::vector<std::string> strings) {
    return projmotif::SequenceSet(std::move(strings), projmotif::Alphabet::dna());
}

// Positional power sum: rank(c_0)*sigma^(k-1) + ... + rank(c_{k-1})*sigma^0.
inline std::uint64_t oracle_encode(const std::string& kmer, const projmotif::Alphabet& a) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < kmer.size(); ++i) {
        std::uint64_t power = 1;
        for (std::size_t j = i + 1; j < kmer.size(); ++j) {
            power *= static_cast<std::uint64_t>(a.size());
        }
        total += static_cast<std::uint64_t>(a.rank(kmer[i])) * power;
    }
    return total;
}

// C(n, k) by Pascal's triangle, addition only.
inline std::uint64_t pascal_binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    std::vector<std::uint64_t> row(static_cast<std::size_t>(n) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j >= 1; --j) {
            row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
        }
    }
    return row[static_cast<std::size_t>(k)];
}

inline double oracle_p_hat(int l, int d, int k) {
    if (k > l - d) {
        return 0.0;
    }
    return static_cast<double>(pascal_binomial(l - d, k)) / static_cast<double>(pascal_binomial(l, k));
}

// P(X < s) by enumerating all 2^trials Bernoulli outcomes. Usable for
// trials <= ~20.
inline double oracle_binomial_lt(int trials, double p, int s) {
    double sum = 0.0;
    for (std::uint32_t mask = 0; mask < (1u << trials); ++mask) {
        int ones = 0;
        double prob = 1.0;
        for (int i = 0; i < trials; ++i) {
            if (mask & (1u << i)) {
                ++ones;
                prob *= p;
            } else {
                prob *= 1.0 - p;
            }
        }
        if (ones < s) {
            sum += prob;
        }
    }
    return sum;
}

// Best score over every start vector, by plain recursion over sequences.
// Written apart from the library's odometer loop on purpose.
inline int brute_best_score(const projmotif::SequenceSet& seqs, int l) {
    projmotif::StartVector starts(static_cast<std::size_t>(seqs.count()), 1);
    int best = -1;
    const auto walk = [&](auto&& self, int i) -> void {
        if (i > seqs.count()) {
            best = std::max(best, projmotif::score(seqs, starts, l));
            return;
        }
        for (int j = 1; j <= seqs.window_count(i, l); ++j) {
            starts[static_cast<std::size_t>(i - 1)] = j;
            self(self, i + 1);
        }
    };
    walk(walk, 1);
    return best;
}

// Uniform random DNA instance from a std::mt19937 (independent of the
// library's own generator).
inline projmotif::SequenceSet random_seqs(int t, int n, std::mt19937& gen) {
    static const char bases[] = {'A', 'C', 'G', 'T'};
    std::uniform_int_distribution<int> pick(0, 3);
    std::vector<std::string> strings;
    strings.reserve(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) {
        std::string s(static_cast<std::size_t>(n), '\0');
        for (char& c : s) {
            c = bases[pick(gen)];
        }
        strings.push_back(std::move(s));
    }
    return make_seqs(std::move(strings));
}

}  // namespace support
