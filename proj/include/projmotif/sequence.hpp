#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "projmotif/alphabet.hpp"
#include "projmotif/errors.hpp"

namespace projmotif {

/// One motif start position per sequence, 1-based.
using StartVector = std::vector<int>;

/// Coordinates of one l-mer: sequence index and offset are 1-based.
struct LmerRef {
    int seq_index;
    int offset;
    int length;

    friend auto operator<=>(const LmerRef&, const LmerRef&) = default;
};

/// Substitution-only distance between equal-length strings.
inline int hamming(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) {
        throw LengthMismatchError("hamming distance needs equal lengths, got " + std::to_string(a.size()) +
                                  " and " + std::to_string(b.size()));
    }
    int distance = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        distance += (a[i] != b[i]) ? 1 : 0;
    }
    return distance;
}

/// An immutable list of t sequences over a shared alphabet. All indices on
/// the public surface are 1-based.
class SequenceSet {
public:
    SequenceSet(std::vector<std::string> sequences, Alphabet alphabet, std::vector<std::string> names = {})
        : seqs_(std::move(sequences)), names_(std::move(names)), alphabet_(std::move(alphabet)) {
        if (seqs_.empty()) {
            throw InvalidParamsError("a sequence set needs at least one sequence");
        }
        if (!names_.empty() && names_.size() != seqs_.size()) {
            throw InvalidParamsError("sequence names must match the sequence count");
        }
        if (names_.empty()) {
            names_.reserve(seqs_.size());
            for (std::size_t i = 0; i < seqs_.size(); ++i) {
                names_.push_back("seq" + std::to_string(i + 1));
            }
        }
        for (std::size_t i = 0; i < seqs_.size(); ++i) {
            if (seqs_[i].empty()) {
                throw InvalidParamsError("sequence '" + names_[i] + "' is empty");
            }
            for (char c : seqs_[i]) {
                if (!alphabet_.contains(c)) {
                    throw UnknownSymbolError(std::string("symbol '") + c + "' in sequence '" + names_[i] +
                                             "' is not in alphabet \"" + alphabet_.symbols() + "\"");
                }
            }
        }
    }

    int count() const { return static_cast<int>(seqs_.size()); }

    const Alphabet& alphabet() const { return alphabet_; }

    int length(int i) const { return static_cast<int>(at(i).size()); }

    const std::string& sequence(int i) const { return at(i); }

    const std::string& name(int i) const {
        check_seq_index(i);
        return names_[static_cast<std::size_t>(i - 1)];
    }

    /// View over S_i[j .. j+l-1] without copying.
    std::string_view lmer_view(int i, int j, int l) const {
        const std::string& s = at(i);
        if (l < 1 || j < 1 || j + l - 1 > static_cast<int>(s.size())) {
            throw IndexOutOfRangeError("l-mer (i=" + std::to_string(i) + ", j=" + std::to_string(j) +
                                       ", l=" + std::to_string(l) + ") is out of range for length " +
                                       std::to_string(s.size()));
        }
        return std::string_view(s).substr(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(l));
    }

    /// The substring S_i[j .. j+l-1], 1-based.
    std::string lmer_at(int i, int j, int l) const { return std::string(lmer_view(i, j, l)); }

    std::string_view lmer_view(const LmerRef& ref) const {
        return lmer_view(ref.seq_index, ref.offset, ref.length);
    }

    /// Number of l-mer start positions in sequence i: n_i - l + 1.
    int window_count(int i, int l) const {
        const int w = length(i) - l + 1;
        if (l < 1 || w < 1) {
            throw InvalidParamsError("sequence '" + name(i) + "' of length " + std::to_string(length(i)) +
                                     " has no l-mer of length " + std::to_string(l));
        }
        return w;
    }

    /// Total l-mer count x across all sequences.
    std::uint64_t total_lmers(int l) const {
        std::uint64_t x = 0;
        for (int i = 1; i <= count(); ++i) {
            x += static_cast<std::uint64_t>(window_count(i, l));
        }
        return x;
    }

    /// All l-mer coordinates in (seq_index, offset) order.
    std::vector<LmerRef> lmer_refs(int l) const {
        std::vector<LmerRef> refs;
        refs.reserve(total_lmers(l));
        for (int i = 1; i <= count(); ++i) {
            const int w = window_count(i, l);
            for (int j = 1; j <= w; ++j) {
                refs.push_back(LmerRef{i, j, l});
            }
        }
        return refs;
    }

    bool operator==(const SequenceSet& other) const {
        return seqs_ == other.seqs_ && names_ == other.names_ && alphabet_ == other.alphabet_;
    }

private:
    const std::string& at(int i) const {
        check_seq_index(i);
        return seqs_[static_cast<std::size_t>(i - 1)];
    }

    void check_seq_index(int i) const {
        if (i < 1 || i > count()) {
            throw IndexOutOfRangeError("sequence index " + std::to_string(i) + " outside 1.." +
                                       std::to_string(count()));
        }
    }

    std::vector<std::string> seqs_;
    std::vector<std::string> names_;
    Alphabet alphabet_;
};

}  // namespace projmotif
