#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "projmotif/alphabet.hpp"
#include "projmotif/errors.hpp"

namespace projmotif {

/// Largest k such that every k-length string over `a` has a code
/// representable in an unsigned 64-bit integer (31 for DNA, 14 for a
/// 20-symbol alphabet).
inline int max_kmer_length(const Alphabet& a) {
    const auto sigma = static_cast<std::uint64_t>(a.size());
    if (sigma < 2) {
        return std::numeric_limits<int>::max();  // single-symbol alphabet: every code is 0
    }
    int len = 0;
    std::uint64_t value = 1;
    while (value <= std::numeric_limits<std::uint64_t>::max() / sigma) {
        value *= sigma;
        ++len;
    }
    return len;
}

namespace detail {

/// |Sigma|^k, valid for k <= max_kmer_length.
inline std::uint64_t pow_sigma(int sigma, int k) {
    std::uint64_t v = 1;
    for (int i = 0; i < k; ++i) {
        v *= static_cast<std::uint64_t>(sigma);
    }
    return v;
}

/// Decodes `code` into `out` (resized to k) without reallocating when
/// `out` already has capacity. Assumes code < sigma^k.
inline void decode_into(std::uint64_t code, int k, const Alphabet& a, std::string& out) {
    out.resize(static_cast<std::size_t>(k));
    const auto sigma = static_cast<std::uint64_t>(a.size());
    for (int p = k - 1; p >= 0; --p) {
        out[static_cast<std::size_t>(p)] = a.symbol(static_cast<int>(code % sigma));
        code /= sigma;
    }
}

}  // namespace detail

/// Base-|Sigma| integer code of `kmer`: sum of rank(kmer[p]) * |Sigma|^(len-1-p).
/// Injective for a fixed length and strictly monotone in lexicographic order
/// under the rank ordering.
inline std::uint64_t encode_kmer(std::string_view kmer, const Alphabet& a) {
    const int max_len = max_kmer_length(a);
    if (static_cast<int>(kmer.size()) > max_len) {
        throw KmerTooLongError("k-mer of length " + std::to_string(kmer.size()) +
                               " exceeds the encodable maximum of " + std::to_string(max_len));
    }
    const auto sigma = static_cast<std::uint64_t>(a.size());
    std::uint64_t code = 0;
    for (char c : kmer) {
        code = code * sigma + static_cast<std::uint64_t>(a.rank(c));
    }
    return code;
}

/// Inverse of encode_kmer for length-k strings.
inline std::string decode_kmer(std::uint64_t code, int k, const Alphabet& a) {
    if (k < 0) {
        throw InvalidParamsError("k-mer length must be non-negative");
    }
    const int max_len = max_kmer_length(a);
    if (k > max_len) {
        throw KmerTooLongError("k-mer of length " + std::to_string(k) +
                               " exceeds the encodable maximum of " + std::to_string(max_len));
    }
    if (a.size() >= 2) {
        const std::uint64_t bound = detail::pow_sigma(a.size(), k);
        if (code >= bound) {
            throw CodeOutOfRangeError("code " + std::to_string(code) + " is not a length-" + std::to_string(k) +
                                      " k-mer code (bound " + std::to_string(bound) + ")");
        }
    }
    std::string out;
    detail::decode_into(code, k, a, out);
    return out;
}

}  // namespace projmotif
