// SPDX-License-Identifier: MIT
// Tokenizer and cursor shared by the LTL, sentence and lasso front ends.
#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lprl/alphabet.hpp"
#include "lprl/error.hpp"

namespace lprl::detail {

enum class Tok {
    Ident,
    LBrace,
    RBrace,
    LParen,
    RParen,
    LBrack,
    RBrack,
    Comma,
    Semi,
    Colon,
    Dot,
    Bang,
    Amp,
    Bar,
    Arrow,
    Iff,
    NotIff,
    Eq,
    NotEq,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t offset;
};

std::vector<Token> tokenize(std::string_view text);

class Cursor {
public:
    explicit Cursor(std::vector<Token> toks) : toks_(std::move(toks)) {}

    const Token& peek(std::size_t ahead = 0) const
    {
        std::size_t i = pos_ + ahead;
        return i < toks_.size() ? toks_[i] : toks_.back();
    }
    bool at(Tok k) const { return peek().kind == k; }
    bool at_ident(std::string_view word) const { return at(Tok::Ident) && peek().text == word; }
    const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    bool accept(Tok k)
    {
        if (!at(k))
            return false;
        next();
        return true;
    }
    const Token& expect(Tok k, const char* what);
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().offset); }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

/// `{p,q}` or `{}`; the opening brace is expected at the cursor.
Letter parse_letter(Cursor& c, const Alphabet& alpha);
/// A comma-separated list of letters (without the outer braces).
LetterSet parse_letter_list(Cursor& c, const Alphabet& alpha);

}  // namespace lprl::detail
