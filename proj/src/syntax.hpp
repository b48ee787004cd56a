#pragma once

// Shared lexing helpers for the walk, factorization and expression syntaxes.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "quiverfact/error.hpp"
#include "quiverfact/quiver.hpp"

namespace qf::detail {

inline bool is_name_char(char c) noexcept {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

inline bool is_space(char c) noexcept { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_ws() noexcept {
        while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
    }
    bool eof() const noexcept { return pos_ >= text_.size(); }
    char peek() const noexcept { return eof() ? '\0' : text_[pos_]; }
    bool starts_with(std::string_view s) const noexcept { return text_.substr(pos_).starts_with(s); }
    void advance(std::size_t n = 1) noexcept { pos_ += n; }
    std::size_t pos() const noexcept { return pos_; }
    std::string_view text() const noexcept { return text_; }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }
    [[noreturn]] void fail_at(std::size_t at, const std::string& what) const { throw ParseError(at, what); }

    void expect(std::string_view s) {
        skip_ws();
        if (!starts_with(s)) fail("expected '" + std::string(s) + "'");
        advance(s.size());
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

/// If the cursor sits on '(' whose matching ')' encloses only names and
/// whitespace, returns the offset just past that ')'. Otherwise npos.
inline std::size_t spaced_walk_end(const Cursor& c) noexcept {
    const std::string_view t = c.text();
    std::size_t i = c.pos();
    if (i >= t.size() || t[i] != '(') return std::string_view::npos;
    bool any_name = false;
    for (++i; i < t.size(); ++i) {
        if (t[i] == ')') return any_name ? i + 1 : std::string_view::npos;
        if (is_name_char(t[i])) {
            any_name = true;
        } else if (!is_space(t[i])) {
            return std::string_view::npos;
        }
    }
    return std::string_view::npos;
}

/// Reads a walk token at the cursor (bare `1331` or parenthesized
/// `(1 3 3 1)`) and resolves names against `q`. Returns the id sequence.
inline std::vector<VertexId> read_walk_token(Cursor& c, const Quiver& q) {
    c.skip_ws();
    const std::size_t start = c.pos();
    const bool compact = q.single_char_names();
    std::vector<std::pair<std::string, std::size_t>> names;  // name, offset

    auto resolve = [&](std::vector<std::pair<std::string, std::size_t>> items) {
        std::vector<VertexId> ids;
        ids.reserve(items.size());
        for (const auto& [name, at] : items) {
            auto v = q.find(name);
            if (!v) c.fail_at(at, "unknown vertex '" + name + "'");
            ids.push_back(*v);
        }
        return ids;
    };

    if (c.peek() == '(') {
        const std::size_t end = spaced_walk_end(c);
        if (end == std::string_view::npos) c.fail("expected a walk");
        c.advance();
        std::vector<std::pair<std::string, std::size_t>> tokens;
        while (c.pos() < end - 1) {
            c.skip_ws();
            if (c.pos() >= end - 1) break;
            const std::size_t at = c.pos();
            std::string tok;
            while (is_name_char(c.peek())) {
                tok += c.peek();
                c.advance();
            }
            tokens.emplace_back(std::move(tok), at);
        }
        c.advance();  // ')'
        if (tokens.size() == 1 && compact) {
            const auto& [tok, at] = tokens.front();
            for (std::size_t i = 0; i < tok.size(); ++i) names.emplace_back(std::string(1, tok[i]), at + i);
        } else {
            names = std::move(tokens);
        }
        return resolve(std::move(names));
    }

    if (!is_name_char(c.peek())) c.fail("expected a walk");
    std::string tok;
    while (is_name_char(c.peek())) {
        tok += c.peek();
        c.advance();
    }
    if (compact) {
        for (std::size_t i = 0; i < tok.size(); ++i) names.emplace_back(std::string(1, tok[i]), start + i);
    } else {
        names.emplace_back(tok, start);
    }
    return resolve(std::move(names));
}

}  // namespace qf::detail
