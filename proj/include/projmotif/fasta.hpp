#pragma once

#include <cctype>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "projmotif/alphabet.hpp"
#include "projmotif/errors.hpp"
#include "projmotif/sequence.hpp"

namespace projmotif {

/// Parses FASTA text: '>' header lines followed by sequence lines.
/// Sequence characters are uppercased; inner whitespace is tolerated.
inline SequenceSet parse_fasta(std::string_view text, const Alphabet& alphabet = Alphabet::dna()) {
    std::vector<std::string> names;
    std::vector<std::string> seqs;
    int line_no = 0;
    std::size_t pos = 0;
    bool in_record = false;

    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, (eol == std::string_view::npos ? text.size() : eol) - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
            line.remove_suffix(1);
        }
        if (line.empty()) {
            continue;
        }
        if (line.front() == '>') {
            if (in_record && seqs.back().empty()) {
                throw RecordWithoutSequenceError("record '" + names.back() + "' has no sequence data");
            }
            std::string_view header = line.substr(1);
            while (!header.empty() && (header.front() == ' ' || header.front() == '\t')) {
                header.remove_prefix(1);
            }
            names.emplace_back(header);
            seqs.emplace_back();
            in_record = true;
            continue;
        }
        if (!in_record) {
            throw FastaFormatError("sequence data before the first '>' header at line " + std::to_string(line_no));
        }
        for (char raw : line) {
            if (raw == ' ' || raw == '\t') {
                continue;
            }
            const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(raw)));
            if (!alphabet.contains(c)) {
                throw UnknownSymbolError(std::string("unknown symbol '") + raw + "' in record '" + names.back() +
                                         "' at line " + std::to_string(line_no));
            }
            seqs.back().push_back(c);
        }
    }

    if (seqs.empty()) {
        throw EmptyInputError("FASTA input contains no records");
    }
    if (in_record && seqs.back().empty()) {
        throw RecordWithoutSequenceError("record '" + names.back() + "' has no sequence data");
    }
    return SequenceSet(std::move(seqs), alphabet, std::move(names));
}

inline SequenceSet parse_fasta(std::istream& in, const Alphabet& alphabet = Alphabet::dna()) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_fasta(std::string_view(buffer.view()), alphabet);
}

/// Inverse of parse_fasta: one record per sequence, wrapped at `line_width`.
inline std::string serialize_fasta(const SequenceSet& seqs, int line_width = 60) {
    if (line_width < 1) {
        throw InvalidParamsError("FASTA line width must be positive");
    }
    std::string out;
    for (int i = 1; i <= seqs.count(); ++i) {
        out += '>';
        out += seqs.name(i);
        out += '\n';
        const std::string& s = seqs.sequence(i);
        for (std::size_t start = 0; start < s.size(); start += static_cast<std::size_t>(line_width)) {
            out += s.substr(start, static_cast<std::size_t>(line_width));
            out += '\n';
        }
    }
    return out;
}

}  // namespace projmotif
