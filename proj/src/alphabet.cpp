#include "cftree/alphabet.hpp"

#include <cctype>
#include <set>

#include "cftree/error.hpp"

namespace cftree {

std::string formal_inverse_name(std::string_view letter)
{
    if (letter.size() > kFormalInverseSuffix.size() && letter.ends_with(kFormalInverseSuffix))
        return std::string(letter.substr(0, letter.size() - kFormalInverseSuffix.size()));
    return std::string(letter) + std::string(kFormalInverseSuffix);
}

InvolutiveAlphabet InvolutiveAlphabet::from_involution(std::span<const std::string> letters,
                                                       const std::map<std::string, std::string>& inverse)
{
    InvolutiveAlphabet result;
    for (const auto& name : letters) {
        if (result.index_.contains(name))
            throw Error(ErrorCode::DuplicateLetter, "duplicate letter '" + name + "'");
        result.index_.emplace(name, static_cast<LetterId>(result.names_.size()));
        result.names_.push_back(name);
    }
    result.inverse_.resize(result.names_.size());
    for (LetterId a = 0; a < result.names_.size(); ++a) {
        auto it = inverse.find(result.names_[a]);
        if (it == inverse.end())
            throw Error(ErrorCode::InvolutionConflict, "letter '" + result.names_[a] + "' has no inverse");
        auto image = result.find(it->second);
        if (!image)
            throw Error(ErrorCode::UnknownLetter,
                        "inverse of '" + result.names_[a] + "' is unknown letter '" + it->second + "'");
        result.inverse_[a] = *image;
    }
    for (const auto& [from, to] : inverse)
        if (!result.index_.contains(from))
            throw Error(ErrorCode::UnknownLetter, "inverse given for unknown letter '" + from + "'");
    for (LetterId a = 0; a < result.names_.size(); ++a)
        if (result.inverse_[result.inverse_[a]] != a)
            throw Error(ErrorCode::InvolutionConflict,
                        "inverse is not an involution at letter '" + result.names_[a] + "'");
    return result;
}

std::optional<LetterId> InvolutiveAlphabet::find(std::string_view name) const
{
    auto it = index_.find(name);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

InvolutiveAlphabet InvolutiveAlphabet::with_pair(const std::string& letter, const std::string& inv) const
{
    if (contains(letter))
        throw Error(ErrorCode::DuplicateLetter, "letter '" + letter + "' already present");
    if (contains(inv))
        throw Error(ErrorCode::DuplicateLetter, "letter '" + inv + "' already present");
    InvolutiveAlphabet result = *this;
    auto a = static_cast<LetterId>(result.names_.size());
    result.names_.push_back(letter);
    result.index_.emplace(letter, a);
    if (inv == letter) {
        result.inverse_.push_back(a);
    } else {
        result.names_.push_back(inv);
        result.index_.emplace(inv, a + 1);
        result.inverse_.push_back(a + 1);
        result.inverse_.push_back(a);
    }
    return result;
}

InvolutiveAlphabet involutive_closure(std::span<const std::string> base)
{
    if (base.empty())
        throw Error(ErrorCode::InvalidArgument, "involutive closure of an empty letter set");
    std::set<std::string_view> seen;
    for (const auto& name : base) {
        if (name.empty())
            throw Error(ErrorCode::InvalidArgument, "empty letter name");
        if (!seen.insert(name).second)
            throw Error(ErrorCode::DuplicateLetter, "duplicate letter '" + name + "'");
        if (name.ends_with(kFormalInverseSuffix))
            throw Error(ErrorCode::InvalidArgument, "letter '" + name + "' is already a formal inverse");
    }
    std::vector<std::string> letters(base.begin(), base.end());
    std::map<std::string, std::string> inverse;
    for (const auto& name : base) {
        auto inv = formal_inverse_name(name);
        inverse[name] = inv;
        inverse[inv] = name;
        letters.push_back(std::move(inv));
    }
    return InvolutiveAlphabet::from_involution(letters, inverse);
}

InvolutiveAlphabet involutive_closure(std::initializer_list<std::string> base)
{
    std::vector<std::string> v(base);
    return involutive_closure(std::span<const std::string>(v));
}

InvolutiveAlphabet merge_alphabets(const InvolutiveAlphabet& x, const InvolutiveAlphabet& y)
{
    std::vector<std::string> letters = x.names();
    std::map<std::string, std::string> inverse;
    for (LetterId a = 0; a < x.size(); ++a)
        inverse[x.name(a)] = x.name(x.inverse(a));
    for (LetterId a = 0; a < y.size(); ++a) {
        const auto& name = y.name(a);
        const auto& inv = y.name(y.inverse(a));
        if (auto known = x.find(name)) {
            if (x.name(x.inverse(*known)) != inv)
                throw Error(ErrorCode::InvolutionConflict,
                            "letter '" + name + "' has inverse '" + x.name(x.inverse(*known)) + "' and '" + inv + "'");
            continue;
        }
        if (auto known = x.find(inv))
            throw Error(ErrorCode::InvolutionConflict,
                        "letter '" + inv + "' is inverse of '" + x.name(x.inverse(*known)) + "' and '" + name + "'");
        letters.push_back(name);
        inverse[name] = inv;
    }
    return InvolutiveAlphabet::from_involution(letters, inverse);
}

std::vector<LetterId> letter_translation(const InvolutiveAlphabet& from, const InvolutiveAlphabet& into)
{
    std::vector<LetterId> map(from.size());
    for (LetterId a = 0; a < from.size(); ++a) {
        auto target = into.find(from.name(a));
        if (!target)
            throw Error(ErrorCode::UnknownLetter, "letter '" + from.name(a) + "' missing in target alphabet");
        map[a] = *target;
    }
    return map;
}

Word inverse_word(const InvolutiveAlphabet& alphabet, const Word& w)
{
    Word result(w.rbegin(), w.rend());
    for (auto& a : result)
        a = alphabet.inverse(a);
    return result;
}

std::string format_word(const InvolutiveAlphabet& alphabet, const Word& w, std::string_view sep)
{
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            out += sep;
        out += alphabet.name(w[i]);
    }
    return out;
}

Word parse_word(const InvolutiveAlphabet& alphabet, std::string_view text)
{
    // Letters are separated by commas and/or whitespace.
    auto separator = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
    Word w;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && separator(text[i]))
            ++i;
        auto start = i;
        while (i < text.size() && !separator(text[i]))
            ++i;
        if (start == i)
            break;
        auto token = text.substr(start, i - start);
        auto a = alphabet.find(token);
        if (!a)
            throw Error(ErrorCode::UnknownLetter, "unknown letter '" + std::string(token) + "' in word");
        w.push_back(*a);
    }
    return w;
}

} // namespace cftree
