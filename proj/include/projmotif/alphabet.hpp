#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "projmotif/errors.hpp"

namespace projmotif {

/// An ordered symbol set with a bijective symbol -> rank mapping.
/// The default DNA alphabet is "ACTG", i.e. A:0, C:1, T:2, G:3.
class Alphabet {
public:
    explicit Alphabet(std::string_view symbols) : symbols_(symbols) {
        if (symbols_.empty()) {
            throw InvalidParamsError("alphabet must contain at least one symbol");
        }
        if (symbols_.size() > 127) {
            throw InvalidParamsError("alphabet larger than 127 symbols is not supported");
        }
        ranks_.fill(-1);
        for (std::size_t r = 0; r < symbols_.size(); ++r) {
            const auto idx = static_cast<unsigned char>(symbols_[r]);
            if (ranks_[idx] != -1) {
                throw InvalidParamsError(std::string("duplicate alphabet symbol '") + symbols_[r] + "'");
            }
            ranks_[idx] = static_cast<std::int8_t>(r);
        }
    }

    static const Alphabet& dna() {
        static const Alphabet a("ACTG");
        return a;
    }

    int size() const { return static_cast<int>(symbols_.size()); }

    const std::string& symbols() const { return symbols_; }

    char symbol(int rank) const {
        if (rank < 0 || rank >= size()) {
            throw IndexOutOfRangeError("symbol rank " + std::to_string(rank) + " outside alphabet of size " +
                                       std::to_string(size()));
        }
        return symbols_[static_cast<std::size_t>(rank)];
    }

    /// Rank of `c`, or -1 if `c` is not in the alphabet.
    int rank_or_negative(char c) const noexcept { return ranks_[static_cast<unsigned char>(c)]; }

    bool contains(char c) const noexcept { return rank_or_negative(c) >= 0; }

    int rank(char c) const {
        const int r = rank_or_negative(c);
        if (r < 0) {
            throw UnknownSymbolError(std::string("symbol '") + c + "' is not in alphabet \"" + symbols_ + "\"");
        }
        return r;
    }

    bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

private:
    std::string symbols_;
    std::array<std::int8_t, 256> ranks_{};
};

}  // namespace projmotif
