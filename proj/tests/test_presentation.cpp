#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "obcalc/presentation.hpp"
#include "test_util.hpp"

using namespace obcalc;
using testutil::random_word;

namespace {

GroupPresentation pres(const std::string& gens, std::vector<std::string> rels) {
    std::vector<Word> words;
    for (const auto& r : rels) words.push_back(Word::parse(r));
    return GroupPresentation(Alphabet(gens), std::move(words));
}

// Determinant-divisor oracle: the product d1...dk equals the gcd of all k x k
// minors. Entries are small, so the minors fit comfortably in mpz.
mpz_class minor_gcd(const IntegerMatrix& m, std::size_t k);

mpz_class det_recursive(const IntegerMatrix& m, std::vector<std::size_t> rows,
                        std::vector<std::size_t> cols) {
    if (rows.size() == 1) return m.at(rows[0], cols[0]);
    mpz_class det = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::vector<std::size_t> rest_rows(rows.begin() + 1, rows.end());
        std::vector<std::size_t> rest_cols;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != i) rest_cols.push_back(cols[j]);
        mpz_class cofactor = m.at(rows[0], cols[i]) * det_recursive(m, rest_rows, rest_cols);
        det += (i % 2 == 0) ? cofactor : -cofactor;
    }
    return det;
}

void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> go = [&](std::size_t start) {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            go(i + 1);
            cur.pop_back();
        }
    };
    go(0);
}

mpz_class minor_gcd(const IntegerMatrix& m, std::size_t k) {
    std::vector<std::vector<std::size_t>> row_sets, col_sets;
    subsets(m.rows, k, row_sets);
    subsets(m.cols, k, col_sets);
    mpz_class g = 0;
    for (const auto& rs : row_sets)
        for (const auto& cs : col_sets) g = gcd(g, det_recursive(m, rs, cs));
    return abs(g);
}

}  // namespace

TEST_CASE("smith normal form basics") {
    IntegerMatrix id2(2, 2);
    id2.at(0, 0) = 1;
    id2.at(1, 1) = 1;
    CHECK(smith_normal_form(id2) == std::vector<mpz_class>{1, 1});

    IntegerMatrix m(2, 2);
    m.at(0, 0) = 2;
    CHECK(smith_normal_form(m) == std::vector<mpz_class>{2});

    CHECK(smith_normal_form(IntegerMatrix(0, 0)).empty());
}

TEST_CASE("smith normal form vs gcd-of-minors oracle") {
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (int trial = 0; trial < 100; ++trial) {
        IntegerMatrix m(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = entry(rng);
        auto diag = smith_normal_form(m);
        mpz_class product = 1;
        for (std::size_t k = 0; k < diag.size(); ++k) {
            product *= diag[k];
            CHECK(product == minor_gcd(m, k + 1));
            if (k > 0) CHECK(diag[k] % diag[k - 1] == 0);
        }
        for (std::size_t k = diag.size(); k < 4; ++k) CHECK(minor_gcd(m, k + 1) == 0);
    }
}

TEST_CASE("smith normal form invariant under permutations") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int trial = 0; trial < 50; ++trial) {
        IntegerMatrix m(3, 4);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = entry(rng);
        auto base = smith_normal_form(m);
        IntegerMatrix p(3, 4);
        std::vector<std::size_t> rp{2, 0, 1}, cp{3, 1, 0, 2};
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 4; ++j) p.at(i, j) = m.at(rp[i], cp[j]);
        CHECK(smith_normal_form(p) == base);
    }
}

TEST_CASE("abelianize") {
    // <a,b | aBAb, b = h b^-1 h^-1 with h = ba>  ->  Z + Z2
    CHECK(abelianize(pres("ab", {"aBAb", "bbabAB"})) == AbelianInvariants{1, {2}});
    CHECK(abelianize(pres("a", {})) == AbelianInvariants{1, {}});
    // <a,b,c | aabbc>: eliminate c by hand -> free of rank 2
    CHECK(abelianize(pres("abc", {"aabbc"})) == AbelianInvariants{2, {}});
}

TEST_CASE("tietze simplification") {
    // Single-occurrence elimination removes c.
    auto r1 = tietze_simplify(pres("abc", {"aabbc", "aBAb"}));
    CHECK(r1.complete);
    CHECK(r1.presentation.alphabet.gens() == "ab");
    REQUIRE(r1.presentation.relators.size() == 1);
    CHECK(cyclic_canonical(r1.presentation.relators[0]) ==
          cyclic_canonical(Word::parse("aBAb")));

    // Already minimal.
    auto r2 = tietze_simplify(pres("ab", {"aBAb", "bb"}));
    CHECK(r2.complete);
    CHECK(r2.presentation.relators.size() == 2);
    CHECK(r2.presentation.alphabet.gens() == "ab");

    // The total-space presentation for monodromy y with h = ba: the long
    // relator rewrites to b^2 against the commutator.
    auto r3 = tietze_simplify(pres("abc", {"aabbc", "abAB", "bbabAB"}));
    CHECK(r3.complete);
    CHECK(r3.presentation.alphabet.gens() == "ab");
    REQUIRE(r3.presentation.relators.size() == 2);
    CHECK(cyclic_canonical(r3.presentation.relators[0]) == cyclic_canonical(Word::parse("bb")));
    CHECK(cyclic_canonical(r3.presentation.relators[1]) ==
          cyclic_canonical(Word::parse("abAB")));

    // Budget exhaustion is reported, not thrown.
    auto r4 = tietze_simplify(pres("abc", {"aabbc", "aBAb"}), 0);
    CHECK(!r4.complete);
}

TEST_CASE("tietze preserves H1") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Word> rels;
        std::uniform_int_distribution<int> nrel(0, 3);
        int n = nrel(rng);
        for (int i = 0; i < n; ++i) rels.push_back(random_word(rng, "abc", 8));
        GroupPresentation p(Alphabet("abc"), rels);
        auto simplified = tietze_simplify(p);
        if (simplified.complete)
            CHECK(abelianize(simplified.presentation) == abelianize(p));
    }
}

TEST_CASE("catalog recognition") {
    CHECK(match_catalog(pres("ab", {"aBAb", "bb"})).tag == CatalogTag::ZxZ2);
    CHECK(match_catalog(pres("a", {})).tag == CatalogTag::Z);
    CHECK(match_catalog(pres("ab", {"abab"})).tag == CatalogTag::Unknown);
    CHECK(match_catalog(pres("", {})).tag == CatalogTag::Trivial);
    CHECK(match_catalog(pres("a", {"a"})).tag == CatalogTag::Trivial);
    CHECK(match_catalog(pres("abc", {})).is_free_of_rank(3));
    auto zn = match_catalog(pres("a", {"aaaa"}));
    CHECK(zn.tag == CatalogTag::Zn);
    CHECK(zn.param == 4);
    auto zzn = match_catalog(pres("ab", {"baBA", "aaa"}));
    CHECK(zzn.tag == CatalogTag::ZplusZn);
    CHECK(zzn.param == 3);
    // Commutator accepted in either letter order and any rotation.
    CHECK(match_catalog(pres("ab", {"BabA", "bb"})).tag == CatalogTag::ZxZ2);
    // Abelian-certified: relators force b^2 a^2 = 1 with commuting generators.
    CHECK(match_catalog(pres("ab", {"abAB", "bbaa"})).tag == CatalogTag::ZxZ2);
}

TEST_CASE("recognition is consistent with abelianization") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Word> rels;
        std::uniform_int_distribution<int> nrel(0, 3);
        int n = nrel(rng);
        for (int i = 0; i < n; ++i) rels.push_back(random_word(rng, "ab", 6));
        GroupPresentation p(Alphabet("ab"), rels);
        Recognition rec = match_catalog(p);
        if (auto h1 = rec.implied_h1()) CHECK(*h1 == abelianize(p));
    }
}

TEST_CASE("presentation text format round trip") {
    GroupPresentation p = pres("ab", {"abAB", "bb"});
    GroupPresentation q = GroupPresentation::parse(p.format());
    CHECK(q.alphabet == p.alphabet);
    CHECK(q.relators == p.relators);
    CHECK_THROWS(GroupPresentation::parse("relator: ab\n"));
}
