// SPDX-License-Identifier: MIT
#include "lprl/alphabet.hpp"

#include <algorithm>
#include <set>

#include "lprl/error.hpp"

namespace lprl {

std::vector<Letter> LetterSet::letters() const
{
    std::vector<Letter> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
        out.push_back(static_cast<Letter>(std::countr_zero(b)));
    return out;
}

Alphabet::Alphabet(std::vector<std::string> props) : props_(std::move(props))
{
    if (props_.size() > kMaxProps)
        throw Error("at most " + std::to_string(kMaxProps) + " propositions are supported");
    std::set<std::string> seen(props_.begin(), props_.end());
    if (seen.size() != props_.size())
        throw Error("duplicate proposition in alphabet");
}

LetterSet Alphabet::all() const
{
    const std::size_t n = num_letters();
    return LetterSet(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

int Alphabet::prop_index(std::string_view name) const
{
    auto it = std::find(props_.begin(), props_.end(), name);
    return it == props_.end() ? -1 : static_cast<int>(it - props_.begin());
}

LetterSet Alphabet::with_prop(int p) const
{
    LetterSet s;
    for (Letter a = 0; a < num_letters(); ++a)
        if ((a >> p) & 1U)
            s.insert(a);
    return s;
}

std::string Alphabet::format_letter(Letter a) const
{
    std::string out = "{";
    bool first = true;
    for (std::size_t p = 0; p < props_.size(); ++p) {
        if (!((a >> p) & 1U))
            continue;
        if (!first)
            out += ',';
        out += props_[p];
        first = false;
    }
    return out + "}";
}

std::string Alphabet::format_set(LetterSet s) const
{
    std::string out = "{";
    bool first = true;
    for (Letter a : s.letters()) {
        if (!first)
            out += ',';
        out += format_letter(a);
        first = false;
    }
    return out + "}";
}

}  // namespace lprl
