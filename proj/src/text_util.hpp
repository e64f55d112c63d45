// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "locapprox/error.hpp"

namespace locapprox::detail {

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

inline std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

/// Calls fn(lineno, tokens) for each non-blank line with `#` comments stripped.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t lineno = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++lineno;
        std::string_view line = text.substr(start, end - start);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto tok = tokenize(line);
        if (!tok.empty()) fn(lineno, tok);
        if (end == text.size()) break;
        start = end + 1;
    }
}

template <typename Int = int>
Int parse_int(std::string_view s, std::size_t lineno) {
    Int v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError(lineno, "expected integer, got '" + std::string(s) + "'");
    return v;
}

inline std::map<std::string, std::string, std::less<>> parse_kv(const std::vector<std::string_view>& tok,
                                                                 std::size_t from, std::size_t lineno) {
    std::map<std::string, std::string, std::less<>> kv;
    for (std::size_t i = from; i < tok.size(); ++i) {
        auto eq = tok[i].find('=');
        if (eq == std::string_view::npos) throw ParseError(lineno, "expected key=value, got '" + std::string(tok[i]) + "'");
        kv.emplace(std::string(tok[i].substr(0, eq)), std::string(tok[i].substr(eq + 1)));
    }
    return kv;
}

inline int require_int(const std::map<std::string, std::string, std::less<>>& kv, std::string_view key,
                       std::size_t lineno) {
    auto it = kv.find(key);
    if (it == kv.end()) throw ParseError(lineno, "missing '" + std::string(key) + "='");
    return parse_int(it->second, lineno);
}

inline std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void spit(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write '" + path.string() + "'");
    out << text;
}

}  // namespace locapprox::detail
