#pragma once

#include <random>
#include <string>

#include "obcalc/word.hpp"

namespace obcalc::testutil {

// Random raw letter sequence (not necessarily reduced) over an alphabet.
inline std::string random_raw(std::mt19937& rng, const std::string& gens, int max_len) {
    std::uniform_int_distribution<int> len_dist(0, max_len);
    std::uniform_int_distribution<std::size_t> gen_dist(0, gens.size() - 1);
    std::bernoulli_distribution flip;
    std::string out;
    int len = len_dist(rng);
    for (int i = 0; i < len; ++i) {
        char c = gens[gen_dist(rng)];
        out.push_back(flip(rng) ? invert_letter(c) : c);
    }
    return out;
}

inline Word random_word(std::mt19937& rng, const std::string& gens, int max_len) {
    return Word::parse(random_raw(rng, gens, max_len));
}

}  // namespace obcalc::testutil
