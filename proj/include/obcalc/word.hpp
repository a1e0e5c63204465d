#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace obcalc {

// Letters: a lowercase ASCII letter is a generator, the corresponding
// uppercase letter is its inverse. "1" denotes the empty word.

inline bool is_word_letter(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

inline char letter_base(char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

inline bool is_inverse_letter(char c) { return c >= 'A' && c <= 'Z'; }

inline char invert_letter(char c) {
    return is_inverse_letter(c) ? static_cast<char>(c - 'A' + 'a')
                                : static_cast<char>(c - 'a' + 'A');
}

// Shortlex letter rank: a < A < b < B < ...
inline int letter_rank(char c) {
    return 2 * (letter_base(c) - 'a') + (is_inverse_letter(c) ? 1 : 0);
}

/// Ordered set of generators (lowercase letters, unique).
class Alphabet {
  public:
    Alphabet() = default;
    explicit Alphabet(std::string gens);

    const std::string& gens() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    bool empty() const { return gens_.empty(); }
    bool contains(char base) const { return gens_.find(base) != std::string::npos; }
    /// Index of a generator; throws on unknown letters.
    std::size_t index(char base) const;
    /// Checks that every letter of `letters` (case-folded) is a generator.
    void check_word(std::string_view letters) const;

    bool operator==(const Alphabet&) const = default;

  private:
    std::string gens_;
};

/// A freely reduced word in a free group. Immutable after construction.
class Word {
  public:
    Word() = default;

    /// Parses a word literal ("1" or "" is the identity) and freely reduces it.
    static Word parse(std::string_view raw);

    const std::string& letters() const { return s_; }
    bool empty() const { return s_.empty(); }
    std::size_t size() const { return s_.size(); }

    /// Renders the word; the identity prints as "1".
    std::string str() const { return s_.empty() ? "1" : s_; }

    Word inverse() const;

    /// Splits into (core, conjugator) with *this == conj * core * conj^-1
    /// and core cyclically reduced.
    std::pair<Word, Word> cyclic_reduce() const;

    /// Signed letter counts per generator of `alpha`.
    std::vector<long long> exponent_sums(const Alphabet& alpha) const;

    bool operator==(const Word&) const = default;

    friend Word operator*(const Word& u, const Word& v);

  private:
    std::string s_;  // always freely reduced
};

/// Free reduction of a raw signed-letter sequence.
Word reduce(std::string_view raw);

/// Shortlex order with letter ranks a < A < b < B < ...
bool shortlex_less(const std::string& u, const std::string& v);
inline bool shortlex_less(const Word& u, const Word& v) {
    return shortlex_less(u.letters(), v.letters());
}

/// Endomorphism of a free group, given by one image word per generator.
class Endomorphism {
  public:
    Endomorphism() = default;
    Endomorphism(Alphabet alpha, std::vector<Word> images);

    static Endomorphism identity(const Alphabet& alpha);

    const Alphabet& alphabet() const { return alpha_; }
    const std::vector<Word>& images() const { return images_; }
    const Word& image(char gen) const { return images_[alpha_.index(gen)]; }

    /// Substitutes images for letters and reduces; a group homomorphism.
    Word apply(const Word& w) const;

    /// Composition (f.compose(g))(x) = f(g(x)); the right factor acts first.
    Endomorphism compose(const Endomorphism& g) const;

    bool is_identity() const;

    bool operator==(const Endomorphism&) const = default;

  private:
    Alphabet alpha_;
    std::vector<Word> images_;
};

/// x |-> u x u^-1 as an endomorphism over `alpha`.
Endomorphism conjugation_by(const Alphabet& alpha, const Word& u);

/// Endomorphism text format: one `x -> word` line per generator.
Endomorphism parse_endomorphism(const std::string& text);
std::string format_endomorphism(const Endomorphism& f);

}  // namespace obcalc
