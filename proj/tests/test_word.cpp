#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "obcalc/word.hpp"
#include "test_util.hpp"

using namespace obcalc;
using testutil::random_raw;
using testutil::random_word;

TEST_CASE("free reduction") {
    CHECK(reduce("aA").str() == "1");
    CHECK(reduce("baAb").str() == "bb");
    CHECK(reduce("1").str() == "1");
    CHECK_THROWS(reduce("a-b"));

    std::mt19937 rng(7);
    for (int i = 0; i < 1000; ++i) {
        Word w = random_word(rng, "abc", 20);
        CHECK((w * w.inverse()).str() == "1");
    }
}

TEST_CASE("free reduction is confluent") {
    // Oracle: cancel random adjacent inverse pairs until none remain.
    std::mt19937 rng(11);
    auto reduce_random_order = [&](std::string s) {
        for (;;) {
            std::vector<std::size_t> cancellable;
            for (std::size_t i = 0; i + 1 < s.size(); ++i)
                if (s[i] != s[i + 1] && letter_base(s[i]) == letter_base(s[i + 1]))
                    cancellable.push_back(i);
            if (cancellable.empty()) return s;
            std::uniform_int_distribution<std::size_t> pick(0, cancellable.size() - 1);
            s.erase(cancellable[pick(rng)], 2);
        }
    };
    for (int i = 0; i < 10000; ++i) {
        std::string raw = random_raw(rng, "ab", 14);
        CHECK(Word::parse(raw).letters() == reduce_random_order(raw));
    }
}

TEST_CASE("invert") {
    CHECK(Word::parse("ab").inverse().str() == "BA");
    CHECK(Word().inverse().str() == "1");
    Word w = Word::parse("bab");
    CHECK(w.inverse().str() == "BAB");
    CHECK((w * w.inverse()).empty());
    CHECK(w.inverse().inverse() == w);
}

TEST_CASE("concat and group axioms") {
    CHECK((Word::parse("ab") * Word::parse("BA")).str() == "1");
    CHECK((Word::parse("bab") * Word::parse("B")).str() == "ba");

    std::mt19937 rng(13);
    for (int i = 0; i < 10000; ++i) {
        Word u = random_word(rng, "ab", 8), v = random_word(rng, "ab", 8),
             w = random_word(rng, "ab", 8);
        CHECK((u * v) * w == u * (v * w));
        CHECK(u * Word() == u);
        CHECK((u * u.inverse()).empty());
    }
}

TEST_CASE("cyclic reduce") {
    auto [core, conj] = Word::parse("Aba").cyclic_reduce();
    CHECK(core.str() == "b");
    CHECK(conj.str() == "A");
    auto [core2, conj2] = Word::parse("ab").cyclic_reduce();
    CHECK(core2.str() == "ab");
    CHECK(conj2.str() == "1");

    std::mt19937 rng(17);
    for (int i = 0; i < 1000; ++i) {
        Word w = random_word(rng, "ab", 12);
        auto [c, u] = w.cyclic_reduce();
        CHECK(u * c * u.inverse() == w);
        if (!c.empty())
            CHECK(!(c.letters().front() != c.letters().back() &&
                    letter_base(c.letters().front()) == letter_base(c.letters().back())));
    }
}

TEST_CASE("exponent sums") {
    Alphabet abc("abc");
    CHECK(Word::parse("aabbc").exponent_sums(abc) == std::vector<long long>{2, 2, 1});
    CHECK(Word().exponent_sums(abc) == std::vector<long long>{0, 0, 0});
    Alphabet ab("ab");
    CHECK(Word::parse("baB").exponent_sums(ab) == std::vector<long long>{1, 0});

    std::mt19937 rng(19);
    for (int i = 0; i < 500; ++i) {
        Word u = random_word(rng, "ab", 10), v = random_word(rng, "ab", 10);
        auto su = u.exponent_sums(ab), sv = v.exponent_sums(ab), sw = (u * v).exponent_sums(ab);
        CHECK(sw[0] == su[0] + sv[0]);
        CHECK(sw[1] == su[1] + sv[1]);
    }
}

TEST_CASE("endomorphisms") {
    Alphabet ab("ab");
    Endomorphism y(ab, {Word::parse("baB"), Word::parse("baBAB")});
    CHECK(y.apply(Word::parse("a")).str() == "baB");
    CHECK(y.apply(Word::parse("aA")).str() == "1");

    Endomorphism id = Endomorphism::identity(ab);
    CHECK(id.is_identity());
    CHECK(y.compose(id) == y);
    CHECK(id.compose(y) == y);

    // Images equal after reduction compare equal.
    Endomorphism y2(ab, {Word::parse("ba B"), Word::parse("baBAB")});
    CHECK(y == y2);

    std::mt19937 rng(23);
    Endomorphism f(ab, {Word::parse("ab"), Word::parse("b")});
    for (int i = 0; i < 1000; ++i) {
        Word u = random_word(rng, "ab", 8), v = random_word(rng, "ab", 8);
        CHECK(y.apply(u * v) == y.apply(u) * y.apply(v));  // homomorphism
        CHECK(f.compose(y).apply(u) == f.apply(y.apply(u)));
    }

    // Composition is associative.
    Endomorphism g(ab, {Word::parse("A"), Word::parse("ba")});
    CHECK(f.compose(g).compose(y) == f.compose(g.compose(y)));

    CHECK_THROWS(y.apply(Word::parse("c")));
}

TEST_CASE("endomorphism file lines") {
    Endomorphism f = parse_endomorphism("a -> baB\nb -> bABaB\n");
    CHECK(f.alphabet().gens() == "ab");
    CHECK(f.image('a').str() == "baB");
    CHECK(f.image('b').str() == "bABaB");
    CHECK(parse_endomorphism(format_endomorphism(f)) == f);
    CHECK_THROWS(parse_endomorphism("ab -> b\n"));
    CHECK_THROWS(parse_endomorphism("a = b\n"));
}

TEST_CASE("shortlex order") {
    CHECK(shortlex_less(Word::parse("a"), Word::parse("A")));
    CHECK(shortlex_less(Word::parse("A"), Word::parse("b")));
    CHECK(shortlex_less(Word::parse("b"), Word::parse("B")));
    CHECK(shortlex_less(Word::parse("B"), Word::parse("aa")));
    CHECK(!shortlex_less(Word::parse("ab"), Word::parse("ab")));
}
