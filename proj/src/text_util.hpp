#pragma once

// Internal text helpers shared by the parsers; not part of the public API.

#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "stablelattice/errors.hpp"

namespace stablelattice::detail {

// Input lines with blank lines and '#' comments removed.
inline std::vector<std::string> effective_lines(std::string_view text) {
    std::vector<std::string> out;
    std::string line;
    std::istringstream in{std::string(text)};
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        out.push_back(line);
    }
    return out;
}

inline std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

// Agent tokens are 1-based numbers or single letters a..z (case-insensitive).
// Returns the 0-based index.
inline int parse_agent_token(const std::string& tok, int n, const std::string& where) {
    if (tok.size() == 1 && std::isalpha(static_cast<unsigned char>(tok[0]))) {
        int idx = std::tolower(static_cast<unsigned char>(tok[0])) - 'a';
        if (idx >= n) throw ParseError(where + ": index out of range: '" + tok + "'");
        return idx;
    }
    if (!tok.empty() &&
        std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); })) {
        long v = std::stol(tok);
        if (v < 1 || v > n) throw ParseError(where + ": index out of range: '" + tok + "'");
        return static_cast<int>(v - 1);
    }
    throw ParseError(where + ": bad agent token: '" + tok + "'");
}

// A full preference line: exactly n distinct agent tokens.
inline std::vector<int> parse_pref_tokens(const std::vector<std::string>& toks, int n,
                                          const std::string& where) {
    if (static_cast<int>(toks.size()) != n)
        throw ParseError(where + ": expected " + std::to_string(n) + " entries, got " +
                         std::to_string(toks.size()));
    std::vector<int> list;
    std::vector<char> seen(n, 0);
    list.reserve(n);
    for (const auto& t : toks) {
        int idx = parse_agent_token(t, n, where);
        if (seen[idx]) throw ParseError(where + ": duplicate entry '" + t + "' (not a permutation)");
        seen[idx] = 1;
        list.push_back(idx);
    }
    return list;
}

}  // namespace stablelattice::detail
