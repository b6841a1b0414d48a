#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cftree {

using LetterId = std::uint32_t;
using Word = std::vector<LetterId>;

inline constexpr std::string_view kFormalInverseSuffix = "^-1";

/// Name of the formal inverse of a letter: "x" <-> "x^-1".
std::string formal_inverse_name(std::string_view letter);

/// Finite letter set with an explicit involution. Self-inverse letters are
/// allowed. Letter ids are dense indices in insertion order.
class InvolutiveAlphabet {
public:
    InvolutiveAlphabet() = default;

    /// Builds an alphabet from letter names and a name -> name involution.
    /// Throws DuplicateLetter, UnknownLetter (image outside the letter set)
    /// or InvolutionConflict (missing image, or inverse(inverse(a)) != a).
    static InvolutiveAlphabet from_involution(std::span<const std::string> letters,
                                              const std::map<std::string, std::string>& inverse);

    std::size_t size() const noexcept { return names_.size(); }
    bool empty() const noexcept { return names_.empty(); }

    const std::string& name(LetterId a) const { return names_.at(a); }
    LetterId inverse(LetterId a) const { return inverse_.at(a); }
    std::optional<LetterId> find(std::string_view name) const;
    bool contains(std::string_view name) const { return find(name).has_value(); }

    const std::vector<std::string>& names() const noexcept { return names_; }

    /// Copy with an extra pair (letter, inv) appended; `inv == letter` adds a
    /// self-inverse letter. Throws DuplicateLetter if either name exists.
    InvolutiveAlphabet with_pair(const std::string& letter, const std::string& inv) const;

    friend bool operator==(const InvolutiveAlphabet& x, const InvolutiveAlphabet& y)
    {
        return x.names_ == y.names_ && x.inverse_ == y.inverse_;
    }

private:
    std::vector<std::string> names_;
    std::vector<LetterId> inverse_;
    std::map<std::string, LetterId, std::less<>> index_;
};

/// A^{±1}: base letters in order, followed by their formal inverses.
InvolutiveAlphabet involutive_closure(std::span<const std::string> base);
InvolutiveAlphabet involutive_closure(std::initializer_list<std::string> base);

/// Union of two alphabets. Letters of `x` keep their ids; letters only in `y`
/// are appended in `y`'s order. Throws InvolutionConflict if a shared letter
/// has different images.
InvolutiveAlphabet merge_alphabets(const InvolutiveAlphabet& x, const InvolutiveAlphabet& y);

/// Per-letter id translation from `from` into `into` (by name). Throws
/// UnknownLetter when a letter of `from` is missing in `into`.
std::vector<LetterId> letter_translation(const InvolutiveAlphabet& from, const InvolutiveAlphabet& into);

Word inverse_word(const InvolutiveAlphabet& alphabet, const Word& w);

/// Words are written as comma separated letter names; the empty string is ε.
/// Parsing also accepts whitespace as a separator.
std::string format_word(const InvolutiveAlphabet& alphabet, const Word& w, std::string_view sep = ",");
Word parse_word(const InvolutiveAlphabet& alphabet, std::string_view text);

} // namespace cftree
