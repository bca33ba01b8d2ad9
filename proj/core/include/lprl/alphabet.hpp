// SPDX-License-Identifier: MIT
#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lprl {

/// A letter is a subset of AP, encoded as a bitmask over proposition indices.
using Letter = std::uint32_t;

/// A set of letters, one bit per letter. Supports |AP| <= 6.
class LetterSet {
public:
    constexpr LetterSet() = default;
    constexpr explicit LetterSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr LetterSet single(Letter a) { return LetterSet(std::uint64_t{1} << a); }

    constexpr bool contains(Letter a) const { return (bits_ >> a) & 1U; }
    constexpr bool empty() const { return bits_ == 0; }
    int size() const { return std::popcount(bits_); }
    constexpr std::uint64_t bits() const { return bits_; }

    /// Smallest letter in the set; the set must be non-empty.
    Letter first() const { return static_cast<Letter>(std::countr_zero(bits_)); }

    constexpr void insert(Letter a) { bits_ |= std::uint64_t{1} << a; }

    constexpr LetterSet operator&(LetterSet o) const { return LetterSet(bits_ & o.bits_); }
    constexpr LetterSet operator|(LetterSet o) const { return LetterSet(bits_ | o.bits_); }
    constexpr LetterSet minus(LetterSet o) const { return LetterSet(bits_ & ~o.bits_); }
    constexpr bool subset_of(LetterSet o) const { return (bits_ & ~o.bits_) == 0; }

    friend constexpr bool operator==(LetterSet, LetterSet) = default;
    friend constexpr auto operator<=>(LetterSet, LetterSet) = default;

    /// Letters in increasing order.
    std::vector<Letter> letters() const;

private:
    std::uint64_t bits_ = 0;
};

class Alphabet {
public:
    static constexpr std::size_t kMaxProps = 6;

    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> props);

    const std::vector<std::string>& props() const { return props_; }
    std::size_t num_props() const { return props_.size(); }
    std::size_t num_letters() const { return std::size_t{1} << props_.size(); }

    /// Sigma, every letter.
    LetterSet all() const;
    LetterSet complement(LetterSet s) const { return all().minus(s); }

    /// Index of a proposition, or -1.
    int prop_index(std::string_view name) const;
    /// All letters containing proposition `p`.
    LetterSet with_prop(int p) const;

    /// `{p,q}`; the empty letter prints as `{}`.
    std::string format_letter(Letter a) const;
    /// `{{p},{}}`.
    std::string format_set(LetterSet s) const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<std::string> props_;
};

}  // namespace lprl
