#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dsalign/dstring.hpp"

namespace dsalign {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

/// Read a .dst file: one D-string record in bracket notation.
inline DString read_dstring_file(const std::string& path, std::string_view alphabet = kDnaAlphabet) {
    return parse_dstring(read_file(path), alphabet);
}

inline void write_dstring_file(const std::string& path, const DString& ds) {
    write_file(path, format_dstring(ds) + "\n");
}

/// Read a pattern from a raw text file or FASTA (first record, header
/// ignored). Whitespace is stripped.
inline std::string read_pattern_file(const std::string& path) {
    std::string raw = read_file(path);
    std::string out;
    std::size_t i = 0;
    if (!raw.empty() && raw[0] == '>') {
        while (i < raw.size() && raw[i] != '\n') ++i;  // skip the header line
    }
    for (; i < raw.size(); ++i) {
        const char c = raw[i];
        if (c == '>') break;  // only the first FASTA record
        if (c == '\n' || c == '\r' || c == ' ' || c == '\t') continue;
        out.push_back(c);
    }
    if (out.empty()) throw std::runtime_error("no sequence found in " + path);
    return out;
}

/// FNV-1a 64-bit content digest, hex-encoded.
inline std::string fnv1a_digest(std::string_view content) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : content) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace dsalign
