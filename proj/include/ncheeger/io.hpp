#pragma once

#include <cctype>
#include <cstdio>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ncheeger/reflection.hpp"

namespace ncheeger {

// Fixed 17-significant-digit rendering so that serialized floats round-trip
// and identical runs produce identical bytes.
inline std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

// Drops everything from '#', plus a trailing '\r'.
inline std::string_view strip_comment(std::string_view line) {
    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return line;
}

inline bool blank(std::string_view s) {
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace detail

// Edge-list format: one edge per line as `u<TAB>v<TAB>weight`, where the
// weight token is an integer, a fraction p/q, or a finite decimal — all read
// exactly. '#' starts a comment, blank lines are ignored.
inline std::vector<WeightedEdge> parse_edge_list(std::string_view text) {
    std::vector<WeightedEdge> edges;
    const auto lines = detail::split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const int line_no = static_cast<int>(i) + 1;
        const std::string_view line = detail::strip_comment(lines[i]);
        if (detail::blank(line)) continue;

        std::vector<std::string_view> fields;
        std::size_t start = 0;
        while (true) {
            const std::size_t tab = line.find('\t', start);
            if (tab == std::string_view::npos) {
                fields.push_back(line.substr(start));
                break;
            }
            fields.push_back(line.substr(start, tab - start));
            start = tab + 1;
        }
        if (fields.size() != 3) {
            throw ParseError(line_no, "expected `u<TAB>v<TAB>weight`");
        }
        for (int f = 0; f < 2; ++f) {
            if (fields[static_cast<std::size_t>(f)].empty()) {
                throw ParseError(line_no, "empty vertex identifier");
            }
            for (char c : fields[static_cast<std::size_t>(f)]) {
                if (std::isspace(static_cast<unsigned char>(c))) {
                    throw ParseError(line_no, "vertex identifiers must not contain whitespace");
                }
            }
        }
        const std::string_view weight_token = detail::trim(fields[2]);
        try {
            edges.push_back({std::string(fields[0]), std::string(fields[1]),
                             parse_rational(weight_token)});
        } catch (const Error& e) {
            throw ParseError(line_no, e.what());
        }
    }
    return edges;
}

inline WeightedGraph parse_graph_file(std::string_view text) {
    return build_graph(parse_edge_list(text));
}

// One vertex identifier per line; '#' comments; duplicates rejected.
inline std::set<std::string> parse_omega_file(std::string_view text) {
    std::set<std::string> omega;
    const auto lines = detail::split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const int line_no = static_cast<int>(i) + 1;
        const std::string_view token = detail::trim(detail::strip_comment(lines[i]));
        if (token.empty()) continue;
        for (char c : token) {
            if (std::isspace(static_cast<unsigned char>(c))) {
                throw ParseError(line_no, "expected a single vertex identifier");
            }
        }
        if (!omega.insert(std::string(token)).second) {
            throw DuplicateVertexError("line " + std::to_string(line_no) + ": duplicate vertex '" +
                                       std::string(token) + "'");
        }
    }
    return omega;
}

// Deterministic inverse of parse_graph_file: edges in index order, exact
// rational weights.
inline std::string render_graph_file(const WeightedGraph& g) {
    std::string out;
    for (const auto& e : g.edges()) {
        out += g.name(e.a);
        out += '\t';
        out += g.name(e.b);
        out += '\t';
        out += render_rational(e.weight);
        out += '\n';
    }
    return out;
}

// Modified weights in the same edge-list format, round-trippable through
// parse_graph_file.
inline std::string render_modified_graph_file(const ModifiedGraph& mg) {
    std::string out;
    for (int a = 0; a < mg.size(); ++a) {
        for (int b = a; b < mg.size(); ++b) {
            if (mg.weight(a, b) > 0) {
                out += mg.name(a);
                out += '\t';
                out += mg.name(b);
                out += '\t';
                out += render_rational(mg.weight(a, b));
                out += '\n';
            }
        }
    }
    return out;
}

// Minimal JSON emitter with caller-controlled key order. Rationals are
// rendered as strings "p/q", doubles with 17 significant digits.
class JsonWriter {
public:
    JsonWriter& begin_object() { return open('{'); }
    JsonWriter& end_object() { return close('}'); }
    JsonWriter& begin_array() { return open('['); }
    JsonWriter& end_array() { return close(']'); }

    JsonWriter& key(std::string_view k) {
        comma();
        quote(k);
        buf_ += ':';
        buf_ += ' ';
        pending_value_ = true;
        return *this;
    }

    JsonWriter& value(std::string_view s) {
        comma();
        quote(s);
        return *this;
    }
    JsonWriter& value(const char* s) { return value(std::string_view(s)); }
    JsonWriter& value(const std::string& s) { return value(std::string_view(s)); }
    JsonWriter& value(const Rational& q) { return value(render_rational(q)); }
    JsonWriter& value(double x) {
        comma();
        buf_ += format_double(x);
        return *this;
    }
    JsonWriter& value(bool b) {
        comma();
        buf_ += b ? "true" : "false";
        return *this;
    }
    JsonWriter& value(std::int64_t n) {
        comma();
        buf_ += std::to_string(n);
        return *this;
    }
    JsonWriter& value(int n) { return value(static_cast<std::int64_t>(n)); }
    JsonWriter& value(std::uint64_t n) {
        comma();
        buf_ += std::to_string(n);
        return *this;
    }

    const std::string& str() const { return buf_; }

private:
    JsonWriter& open(char c) {
        comma();
        buf_ += c;
        depth_has_item_.push_back(false);
        return *this;
    }
    JsonWriter& close(char c) {
        depth_has_item_.pop_back();
        buf_ += c;
        return *this;
    }
    void comma() {
        if (pending_value_) {
            pending_value_ = false;
            return;
        }
        if (!depth_has_item_.empty()) {
            if (depth_has_item_.back()) buf_ += ", ";
            depth_has_item_.back() = true;
        }
    }
    void quote(std::string_view s) {
        buf_ += '"';
        for (char c : s) {
            switch (c) {
                case '"': buf_ += "\\\""; break;
                case '\\': buf_ += "\\\\"; break;
                case '\n': buf_ += "\\n"; break;
                case '\t': buf_ += "\\t"; break;
                case '\r': buf_ += "\\r"; break;
                default:
                    if (static_cast<unsigned char>(c) < 0x20) {
                        char esc[8];
                        std::snprintf(esc, sizeof(esc), "\\u%04x", c);
                        buf_ += esc;
                    } else {
                        buf_ += c;
                    }
            }
        }
        buf_ += '"';
    }

    std::string buf_;
    std::vector<bool> depth_has_item_;
    bool pending_value_ = false;
};

}  // namespace ncheeger
