#include "obcalc/word.hpp"

#include <algorithm>

namespace obcalc {

Alphabet::Alphabet(std::string gens) : gens_(std::move(gens)) {
    for (char c : gens_) {
        if (c < 'a' || c > 'z')
            throw std::invalid_argument("alphabet letters must be a-z, got '" +
                                        std::string(1, c) + "'");
        if (std::count(gens_.begin(), gens_.end(), c) != 1)
            throw std::invalid_argument("duplicate generator '" + std::string(1, c) + "'");
    }
}

std::size_t Alphabet::index(char base) const {
    auto pos = gens_.find(letter_base(base));
    if (pos == std::string::npos)
        throw std::invalid_argument("letter '" + std::string(1, base) +
                                    "' is not in alphabet [" + gens_ + "]");
    return pos;
}

void Alphabet::check_word(std::string_view letters) const {
    for (char c : letters) index(c);
}

namespace {

void push_reduced(std::string& out, char c) {
    if (!out.empty() && out.back() != c && letter_base(out.back()) == letter_base(c))
        out.pop_back();
    else
        out.push_back(c);
}

}  // namespace

Word Word::parse(std::string_view raw) {
    Word w;
    for (char c : raw) {
        if (c == '1' || c == ' ') continue;
        if (!is_word_letter(c))
            throw std::invalid_argument("bad word letter '" + std::string(1, c) + "'");
        push_reduced(w.s_, c);
    }
    return w;
}

Word reduce(std::string_view raw) { return Word::parse(raw); }

Word Word::inverse() const {
    Word w;
    w.s_.reserve(s_.size());
    for (auto it = s_.rbegin(); it != s_.rend(); ++it) w.s_.push_back(invert_letter(*it));
    return w;
}

Word operator*(const Word& u, const Word& v) {
    Word w;
    w.s_ = u.s_;
    for (char c : v.s_) push_reduced(w.s_, c);
    return w;
}

std::pair<Word, Word> Word::cyclic_reduce() const {
    std::string core = s_;
    std::string conj;
    while (core.size() >= 2 && core.front() != core.back() &&
           letter_base(core.front()) == letter_base(core.back())) {
        conj.push_back(core.front());
        core = core.substr(1, core.size() - 2);
    }
    Word c, u;
    c.s_ = std::move(core);
    u.s_ = std::move(conj);
    return {c, u};
}

std::vector<long long> Word::exponent_sums(const Alphabet& alpha) const {
    std::vector<long long> sums(alpha.size(), 0);
    for (char c : s_) sums[alpha.index(c)] += is_inverse_letter(c) ? -1 : 1;
    return sums;
}

bool shortlex_less(const std::string& u, const std::string& v) {
    if (u.size() != v.size()) return u.size() < v.size();
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] != v[i]) return letter_rank(u[i]) < letter_rank(v[i]);
    return false;
}

Endomorphism::Endomorphism(Alphabet alpha, std::vector<Word> images)
    : alpha_(std::move(alpha)), images_(std::move(images)) {
    if (images_.size() != alpha_.size())
        throw std::invalid_argument("endomorphism needs one image per generator");
    for (const Word& w : images_) alpha_.check_word(w.letters());
}

Endomorphism Endomorphism::identity(const Alphabet& alpha) {
    std::vector<Word> images;
    for (char g : alpha.gens()) images.push_back(Word::parse(std::string(1, g)));
    return Endomorphism(alpha, std::move(images));
}

Word Endomorphism::apply(const Word& w) const {
    Word out;
    for (char c : w.letters()) {
        const Word& img = images_[alpha_.index(c)];
        out = out * (is_inverse_letter(c) ? img.inverse() : img);
    }
    return out;
}

Endomorphism Endomorphism::compose(const Endomorphism& g) const {
    if (g.alpha_ != alpha_) throw std::invalid_argument("endomorphism alphabet mismatch");
    std::vector<Word> images;
    images.reserve(alpha_.size());
    for (const Word& w : g.images_) images.push_back(apply(w));
    return Endomorphism(alpha_, std::move(images));
}

bool Endomorphism::is_identity() const {
    for (std::size_t i = 0; i < alpha_.size(); ++i) {
        if (images_[i].letters() != std::string(1, alpha_.gens()[i])) return false;
    }
    return true;
}

Endomorphism conjugation_by(const Alphabet& alpha, const Word& u) {
    std::vector<Word> images;
    Word ui = u.inverse();
    for (char g : alpha.gens()) images.push_back(u * Word::parse(std::string(1, g)) * ui);
    return Endomorphism(alpha, std::move(images));
}

Endomorphism parse_endomorphism(const std::string& text) {
    std::string gens;
    std::vector<Word> images;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string::npos) end = text.size();
        std::string line = text.substr(pos, end - pos);
        pos = end + 1;
        if (line.empty() || line[0] == '#') continue;
        std::size_t arrow = line.find("->");
        if (arrow == std::string::npos || arrow < 1)
            throw std::invalid_argument("bad endomorphism line: " + line);
        std::string lhs = line.substr(0, arrow);
        lhs.erase(std::remove(lhs.begin(), lhs.end(), ' '), lhs.end());
        if (lhs.size() != 1)
            throw std::invalid_argument("endomorphism lines map single generators");
        gens.push_back(lhs[0]);
        images.push_back(Word::parse(line.substr(arrow + 2)));
    }
    return Endomorphism(Alphabet(gens), std::move(images));
}

std::string format_endomorphism(const Endomorphism& f) {
    std::string out;
    for (std::size_t i = 0; i < f.alphabet().size(); ++i) {
        out += f.alphabet().gens()[i];
        out += " -> " + f.images()[i].str() + "\n";
    }
    return out;
}

}  // namespace obcalc
