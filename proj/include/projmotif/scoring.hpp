#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "projmotif/alphabet.hpp"
#include "projmotif/errors.hpp"
#include "projmotif/sequence.hpp"

namespace projmotif {

/// Rows of the alignment A(s): one l-mer per sequence.
using AlignmentMatrix = std::vector<std::string>;

/// Per-column symbol counts of an alignment, |Σ| rows by l columns.
/// Every column sums to the number of alignment rows.
class ProfileMatrix {
public:
    ProfileMatrix(int sigma, int l) : sigma_(sigma), l_(l), counts_(static_cast<std::size_t>(sigma) * static_cast<std::size_t>(l), 0) {
        if (sigma < 1 || l < 1) {
            throw InvalidParamsError("profile dimensions must be positive");
        }
    }

    int sigma() const { return sigma_; }
    int columns() const { return l_; }

    // rank is 0-based, column is 1-based like every other public position
    int& at(int rank, int column) { return counts_[index(rank, column)]; }
    int at(int rank, int column) const { return counts_[index(rank, column)]; }

    /// Largest count in a column, M_{P(s)}(column).
    int column_max(int column) const {
        int best = 0;
        for (int r = 0; r < sigma_; ++r) {
            best = std::max(best, at(r, column));
        }
        return best;
    }

    /// Rank achieving the column maximum; ties go to the lowest rank.
    int column_argmax(int column) const {
        int best_rank = 0;
        for (int r = 1; r < sigma_; ++r) {
            if (at(r, column) > at(best_rank, column)) {
                best_rank = r;
            }
        }
        return best_rank;
    }

    bool operator==(const ProfileMatrix& other) const = default;

private:
    std::size_t index(int rank, int column) const {
        if (rank < 0 || rank >= sigma_ || column < 1 || column > l_) {
            throw IndexOutOfRangeError("profile cell (" + std::to_string(rank) + "," + std::to_string(column) +
                                       ") outside " + std::to_string(sigma_) + "x" + std::to_string(l_));
        }
        return static_cast<std::size_t>(rank) * static_cast<std::size_t>(l_) + static_cast<std::size_t>(column - 1);
    }

    int sigma_;
    int l_;
    std::vector<int> counts_;
};

/// A(s): row i is the l-mer of sequence i starting at s[i] (1-based).
inline AlignmentMatrix alignment(const SequenceSet& seqs, const StartVector& starts, int l) {
    if (static_cast<int>(starts.size()) != seqs.count()) {
        throw LengthMismatchError("expected " + std::to_string(seqs.count()) + " start positions, got " +
                                  std::to_string(starts.size()));
    }
    AlignmentMatrix rows;
    rows.reserve(starts.size());
    for (int i = 1; i <= seqs.count(); ++i) {
        rows.push_back(seqs.lmer_at(i, starts[static_cast<std::size_t>(i - 1)], l));
    }
    return rows;
}

/// P(s): counts[σ][c] = number of rows whose column c holds σ.
inline ProfileMatrix profile(const AlignmentMatrix& rows, const Alphabet& alphabet = Alphabet::dna()) {
    if (rows.empty()) {
        throw EmptyInputError("cannot profile an empty alignment");
    }
    const int l = static_cast<int>(rows.front().size());
    ProfileMatrix p(alphabet.size(), l);
    for (const std::string& row : rows) {
        if (static_cast<int>(row.size()) != l) {
            throw LengthMismatchError("ragged alignment: row length " + std::to_string(row.size()) +
                                      " versus " + std::to_string(l));
        }
        for (int c = 1; c <= l; ++c) {
            ++p.at(alphabet.rank(row[static_cast<std::size_t>(c - 1)]), c);
        }
    }
    return p;
}

/// Score(s, DNA): the sum of column maxima of P(s).
inline int score_profile(const ProfileMatrix& p) {
    int total = 0;
    for (int c = 1; c <= p.columns(); ++c) {
        total += p.column_max(c);
    }
    return total;
}

inline int score(const SequenceSet& seqs, const StartVector& starts, int l) {
    return score_profile(profile(alignment(seqs, starts, l), seqs.alphabet()));
}

/// Per-column argmax symbols; ties broken toward the lowest alphabet rank.
inline std::string consensus(const ProfileMatrix& p, const Alphabet& alphabet = Alphabet::dna()) {
    if (p.sigma() != alphabet.size()) {
        throw LengthMismatchError("profile has " + std::to_string(p.sigma()) + " symbol rows, alphabet has " +
                                  std::to_string(alphabet.size()));
    }
    std::string out(static_cast<std::size_t>(p.columns()), '\0');
    for (int c = 1; c <= p.columns(); ++c) {
        out[static_cast<std::size_t>(c - 1)] = alphabet.symbol(p.column_argmax(c));
    }
    return out;
}

inline std::string consensus(const SequenceSet& seqs, const StartVector& starts, int l) {
    return consensus(profile(alignment(seqs, starts, l), seqs.alphabet()), seqs.alphabet());
}

}  // namespace projmotif
