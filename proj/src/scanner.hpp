#pragma once
// Character-level scanner shared by the Turtle and query parsers.

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "ltqp/errors.hpp"

namespace ltqp::detail {

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    bool eof() const { return pos_ >= text_.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }

    char get() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_ws() {
        while (!eof()) {
            char c = peek();
            if (c == '#') {
                while (!eof() && peek() != '\n') get();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                get();
            } else {
                break;
            }
        }
    }

    bool accept(char c) {
        skip_ws();
        if (peek() == c && !eof()) {
            get();
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    /// Case-insensitive keyword followed by a non-name character.
    bool accept_keyword(std::string_view kw) {
        skip_ws();
        if (pos_ + kw.size() > text_.size()) return false;
        for (std::size_t i = 0; i < kw.size(); ++i) {
            if (std::tolower(static_cast<unsigned char>(text_[pos_ + i])) !=
                std::tolower(static_cast<unsigned char>(kw[i])))
                return false;
        }
        char after = pos_ + kw.size() < text_.size() ? text_[pos_ + kw.size()] : '\0';
        if (is_name_char(after) || after == ':') return false;
        for (std::size_t i = 0; i < kw.size(); ++i) get();
        return true;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw SyntaxError(message, line_, col_);
    }

    /// `<...>` without resolution.
    std::string read_iriref() {
        skip_ws();
        if (peek() != '<') fail("expected IRI");
        get();
        std::string out;
        while (true) {
            if (eof()) fail("unterminated IRI");
            char c = get();
            if (c == '>') break;
            if (c == '\\') {
                char e = eof() ? '\0' : get();
                if (e == 'u') append_utf8(out, read_hex(4));
                else if (e == 'U') append_utf8(out, read_hex(8));
                else fail("bad escape in IRI");
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(c)) || c == '<' || c == '"' || c == '{' ||
                c == '}' || c == '|' || c == '^' || c == '`')
                fail("illegal character in IRI");
            out.push_back(c);
        }
        return out;
    }

    bool at_pname() const {
        char c = peek();
        return c == ':' || std::isalpha(static_cast<unsigned char>(c)) ||
               static_cast<unsigned char>(c) >= 0x80;
    }

    /// `prefix:local`; returns {prefix, local}.
    std::pair<std::string, std::string> read_pname() {
        skip_ws();
        std::string prefix;
        while (!eof() && peek() != ':') {
            char c = peek();
            if (!is_name_char(c) && c != '.') fail("expected prefixed name");
            prefix.push_back(get());
        }
        if (eof() || (!prefix.empty() && prefix.back() == '.')) fail("expected ':' in prefixed name");
        get();  // ':'
        std::string local;
        while (!eof()) {
            char c = peek();
            if (is_name_char(c) || c == ':' || c == '%') {
                local.push_back(get());
            } else if (c == '.' && is_name_char(peek(1))) {
                local.push_back(get());
            } else if (c == '\\' && peek(1) != '\0') {
                get();
                local.push_back(get());
            } else {
                break;
            }
        }
        return {std::move(prefix), std::move(local)};
    }

    std::string read_name() {
        std::string out;
        while (!eof() && is_name_char(peek())) out.push_back(get());
        return out;
    }

    /// Single-line "..." or '...' string with ECHAR/UCHAR escapes.
    std::string read_string() {
        skip_ws();
        char quote = peek();
        if (quote != '"' && quote != '\'') fail("expected string literal");
        get();
        if (peek() == quote && peek(1) == quote) fail("long strings are not supported");
        std::string out;
        while (true) {
            if (eof()) fail("unterminated string literal");
            char c = get();
            if (c == quote) break;
            if (c == '\n' || c == '\r') fail("newline in string literal");
            if (c == '\\') {
                if (eof()) fail("unterminated escape");
                char e = get();
                switch (e) {
                    case 't': out.push_back('\t'); break;
                    case 'b': out.push_back('\b'); break;
                    case 'n': out.push_back('\n'); break;
                    case 'r': out.push_back('\r'); break;
                    case 'f': out.push_back('\f'); break;
                    case '"': out.push_back('"'); break;
                    case '\'': out.push_back('\''); break;
                    case '\\': out.push_back('\\'); break;
                    case 'u': append_utf8(out, read_hex(4)); break;
                    case 'U': append_utf8(out, read_hex(8)); break;
                    default: fail("bad string escape");
                }
                continue;
            }
            out.push_back(c);
        }
        return out;
    }

    std::string read_langtag() {
        std::string tag;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-'))
            tag.push_back(get());
        if (tag.empty()) fail("empty language tag");
        return tag;
    }

    bool at_number() const {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return true;
        if (c == '+' || c == '-' || c == '.')
            return std::isdigit(static_cast<unsigned char>(peek(1))) != 0;
        return false;
    }

    /// Integer or decimal; returns {lexical, is_decimal}.
    std::pair<std::string, bool> read_number() {
        std::string out;
        if (peek() == '+' || peek() == '-') out.push_back(get());
        while (std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(get());
        bool decimal = false;
        if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
            decimal = true;
            out.push_back(get());
            while (std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(get());
        }
        if (peek() == 'e' || peek() == 'E') fail("numeric exponents are not supported");
        return {std::move(out), decimal};
    }

    static bool is_name_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
               static_cast<unsigned char>(c) >= 0x80;
    }

private:
    std::uint32_t read_hex(int digits) {
        std::uint32_t v = 0;
        for (int i = 0; i < digits; ++i) {
            if (eof() || !std::isxdigit(static_cast<unsigned char>(peek()))) fail("bad hex escape");
            char c = get();
            v = v * 16 + static_cast<std::uint32_t>(std::isdigit(static_cast<unsigned char>(c))
                                                        ? c - '0'
                                                        : std::tolower(c) - 'a' + 10);
        }
        return v;
    }

    static void append_utf8(std::string& out, std::uint32_t cp) {
        if (cp < 0x80) {
            out.push_back(static_cast<char>(cp));
        } else if (cp < 0x800) {
            out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else if (cp < 0x10000) {
            out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else {
            out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

}  // namespace ltqp::detail
