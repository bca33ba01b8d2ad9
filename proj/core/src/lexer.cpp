// SPDX-License-Identifier: MIT
#include "lexer.hpp"

#include <cctype>

namespace lprl::detail {

namespace {

bool ident_start(char ch) { return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_'; }
bool ident_char(char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; }

}  // namespace

std::vector<Token> tokenize(std::string_view text)
{
    std::vector<Token> out;
    std::size_t i = 0;
    auto push = [&](Tok k, std::size_t len) {
        out.push_back({k, std::string(text.substr(i, len)), i});
        i += len;
    };
    while (i < text.size()) {
        char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        if (ch == '#') {
            while (i < text.size() && text[i] != '\n')
                ++i;
            continue;
        }
        if (ident_start(ch)) {
            std::size_t j = i;
            while (j < text.size() && ident_char(text[j]))
                ++j;
            push(Tok::Ident, j - i);
            continue;
        }
        std::string_view rest = text.substr(i);
        if (rest.starts_with("<!=>")) {
            push(Tok::NotIff, 4);
        } else if (rest.starts_with("<=>")) {
            push(Tok::Iff, 3);
        } else if (rest.starts_with("->")) {
            push(Tok::Arrow, 2);
        } else if (rest.starts_with("!=")) {
            push(Tok::NotEq, 2);
        } else {
            switch (ch) {
            case '{': push(Tok::LBrace, 1); break;
            case '}': push(Tok::RBrace, 1); break;
            case '(': push(Tok::LParen, 1); break;
            case ')': push(Tok::RParen, 1); break;
            case '[': push(Tok::LBrack, 1); break;
            case ']': push(Tok::RBrack, 1); break;
            case ',': push(Tok::Comma, 1); break;
            case ';': push(Tok::Semi, 1); break;
            case ':': push(Tok::Colon, 1); break;
            case '.': push(Tok::Dot, 1); break;
            case '!': push(Tok::Bang, 1); break;
            case '&': push(Tok::Amp, 1); break;
            case '|': push(Tok::Bar, 1); break;
            case '=': push(Tok::Eq, 1); break;
            default:
                throw ParseError(std::string("unexpected character '") + ch + "'", i);
            }
        }
    }
    out.push_back({Tok::End, "", text.size()});
    return out;
}

const Token& Cursor::expect(Tok k, const char* what)
{
    if (!at(k))
        fail(std::string("expected ") + what +
             (peek().kind == Tok::End ? std::string(", found end of input")
                                      : ", found '" + peek().text + "'"));
    return next();
}

Letter parse_letter(Cursor& c, const Alphabet& alpha)
{
    c.expect(Tok::LBrace, "'{'");
    Letter a = 0;
    if (c.accept(Tok::RBrace))
        return a;
    for (;;) {
        const Token& t = c.expect(Tok::Ident, "proposition name");
        int p = alpha.prop_index(t.text);
        if (p < 0)
            throw ParseError("unknown proposition '" + t.text + "'", t.offset);
        a |= Letter{1} << p;
        if (c.accept(Tok::RBrace))
            return a;
        c.expect(Tok::Comma, "',' or '}'");
    }
}

LetterSet parse_letter_list(Cursor& c, const Alphabet& alpha)
{
    LetterSet s;
    s.insert(parse_letter(c, alpha));
    while (c.accept(Tok::Comma))
        s.insert(parse_letter(c, alpha));
    return s;
}

}  // namespace lprl::detail
