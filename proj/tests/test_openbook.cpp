#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "obcalc/openbook.hpp"
#include "test_util.hpp"

using namespace obcalc;
using testutil::random_word;

namespace {

MonodromySpec spec_k(const std::string& word) {
    return MonodromySpec::from_catalog(parse_mcg(word), default_catalog());
}

ManifoldExpression expr(const std::string& s) { return ManifoldExpression::parse(s); }

}  // namespace

TEST_CASE("mapping torus presentation") {
    MonodromySpec spec = spec_k("y");
    GroupPresentation p = mapping_torus_presentation(spec);
    CHECK(p.alphabet.gens() == "abcd");  // a, b crosscaps; c boundary; d = mu

    // Surface relator and the mu-conjugation relator for a.
    bool surface = false, mu_a = false;
    const auto& cat = default_catalog();
    Word target = Word::parse("daD") * cat.y_star.image('a').inverse();
    for (const Word& r : p.relators) {
        surface = surface || cyclic_canonical(r) == cyclic_canonical(Word::parse("aabbc"));
        mu_a = mu_a || cyclic_canonical(r) == cyclic_canonical(target);
    }
    CHECK(surface);
    CHECK(mu_a);

    // Identity monodromy: direct product with Z.
    for (int g = 1; g <= 3; ++g)
        for (int k = 1; k <= 2; ++k) {
            MonodromySpec id = MonodromySpec::identity(PageDescriptor(g, k, false));
            GroupPresentation torus = mapping_torus_presentation(id);
            AbelianInvariants h1 = abelianize(torus);
            // H1(page) + Z when the monodromy acts trivially on H1.
            AbelianInvariants page_h1 =
                abelianize(total_space_presentation(id));  // free of rank g+k-1
            CHECK(h1 == AbelianInvariants{page_h1.rank + 1, page_h1.torsion});
        }
}

TEST_CASE("total space presentation of (K, y)") {
    GroupPresentation p = total_space_presentation(spec_k("y"));
    CHECK(p.alphabet.gens() == "abc");
    AbelianInvariants h1 = abelianize(p);
    CHECK(h1 == AbelianInvariants{1, {2}});

    // Simplifies to the two-generator commutator + b^2 form.
    GroupPresentation s = tietze_simplify(p).presentation;
    CHECK(s.alphabet.gens() == "ab");
    REQUIRE(s.relators.size() == 2);
    CHECK(cyclic_canonical(s.relators[0]) == cyclic_canonical(Word::parse("bb")));
    CHECK(cyclic_canonical(s.relators[1]) == cyclic_canonical(Word::parse("abAB")));
}

TEST_CASE("total space presentations for small pages") {
    // Moebius band, identity: <a, c | a^2 c> = Z.
    MonodromySpec mob = MonodromySpec::identity(PageDescriptor::moebius_band());
    GroupPresentation p = total_space_presentation(mob);
    REQUIRE(p.relators.size() == 1);
    CHECK(cyclic_canonical(p.relators[0]) == cyclic_canonical(Word::parse("aab")));
    CHECK(match_catalog(p).tag == CatalogTag::Z);

    // N_{g,k} identity: free of rank g+k-1 after eliminating one boundary loop.
    for (int g = 1; g <= 3; ++g)
        for (int k = 1; k <= 3; ++k) {
            MonodromySpec id = MonodromySpec::identity(PageDescriptor(g, k, false));
            Recognition rec = match_catalog(total_space_presentation(id));
            CHECK(rec.is_free_of_rank(g + k - 1));
        }
}

TEST_CASE("boundary relation flag does not change H1") {
    std::mt19937 rng(89);
    for (int i = 0; i < 40; ++i) {
        std::uniform_int_distribution<long long> d(-3, 3);
        MonodromySpec spec = spec_k([&] {
            std::string s;
            for (long long j = d(rng); j > 0; --j) s += 't';
            for (long long j = d(rng); j > 0; --j) s += 'y';
            return s;
        }());
        CHECK(abelianize(total_space_presentation(spec, true)) ==
              abelianize(total_space_presentation(spec, false)));
    }
}

TEST_CASE("h1 of open books over K") {
    CHECK(h1_open_book(spec_k("y")) == AbelianInvariants{1, {2}});
    CHECK(h1_open_book(spec_k("Ty")) == AbelianInvariants{1, {}});
    for (long long n = 2; n <= 6; ++n) {
        std::string word(static_cast<std::size_t>(n), 't');
        CHECK(h1_open_book(spec_k(word)) == AbelianInvariants{1, {n}});
        std::string inv(static_cast<std::size_t>(n), 'T');
        CHECK(h1_open_book(spec_k(inv)) == AbelianInvariants{1, {n}});
    }
    CHECK(h1_open_book(spec_k("t")) == AbelianInvariants{1, {}});
}

TEST_CASE("heegaard genus") {
    CHECK(heegaard_genus(PageDescriptor::klein_bottle_with_hole()) == 2);
    CHECK(heegaard_genus(PageDescriptor::moebius_band()) == 1);
    CHECK(heegaard_genus(PageDescriptor(1, 2, false)) == 2);
    CHECK_THROWS(heegaard_genus(PageDescriptor::annulus()));
}

TEST_CASE("identification pipeline") {
    IdentifyResult y = identify_total_space(spec_k("y"));
    CHECK(y.recognition.tag == CatalogTag::ZxZ2);
    CHECK(y.manifold == expr("P2xS1"));
    CHECK(!y.downgraded);

    IdentifyResult u = identify_total_space(spec_k("Ty"));
    CHECK(u.recognition.tag == CatalogTag::Z);
    CHECK(u.manifold == expr("S2x~S1"));

    for (int m = -3; m <= 3; ++m) {
        std::string even(static_cast<std::size_t>(std::abs(2 * m)), m > 0 ? 't' : 'T');
        IdentifyResult r = identify_total_space(spec_k(even + "y"));
        CHECK(r.recognition.tag == CatalogTag::ZxZ2);
        CHECK(r.manifold == expr("P2xS1"));
        CHECK(!r.downgraded);

        std::string odd(static_cast<std::size_t>(std::abs(2 * m + 1)),
                        2 * m + 1 > 0 ? 't' : 'T');
        IdentifyResult r2 = identify_total_space(spec_k(odd + "y"));
        CHECK(r2.recognition.tag == CatalogTag::Z);
        CHECK(r2.manifold == expr("S2x~S1"));
        CHECK(!r2.downgraded);
    }

    // Twist powers have free-product fundamental groups: honest Unknown.
    IdentifyResult t3 = identify_total_space(spec_k("ttt"));
    CHECK(t3.recognition.tag == CatalogTag::Unknown);
    CHECK(!t3.manifold.has_value());
    CHECK(t3.h1 == AbelianInvariants{1, {3}});

    // Starving the rewriting stage downgrades to an H1-only report.
    RewriteLimits tiny;
    tiny.max_iterations = 1;
    IdentifyResult starved = identify_total_space(spec_k("ttt"), tiny);
    CHECK(starved.downgraded);
    CHECK(starved.h1 == AbelianInvariants{1, {3}});
    CHECK(!starved.manifold.has_value());

    // Identity monodromy goes through the plumbing rule.
    IdentifyResult id_k = identify_total_space(spec_k(""));
    CHECK(id_k.manifold == expr("S2x~S1 + S2x~S1"));
    CHECK(id_k.recognition.is_free_of_rank(2));
    IdentifyResult id_mob =
        identify_total_space(MonodromySpec::identity(PageDescriptor::moebius_band()));
    CHECK(id_mob.manifold == expr("S2x~S1"));
    CHECK(id_mob.recognition.is_free_of_rank(1));
}

TEST_CASE("h-independence of the y presentation") {
    std::mt19937 rng(97);
    const Alphabet ab("ab");
    for (int trial = 0; trial < 20; ++trial) {
        Word h = random_word(rng, "ab", 6);
        Endomorphism action(ab, {Word::parse("baB"),
                                 h * Word::parse("B") * h.inverse()});
        MonodromySpec spec = MonodromySpec::from_k_action(action);
        CHECK(h1_open_book(spec) == AbelianInvariants{1, {2}});
        IdentifyResult res = identify_total_space(spec);
        CHECK(res.recognition.tag == CatalogTag::ZxZ2);
        CHECK(res.manifold == expr("P2xS1"));
    }
}

TEST_CASE("conjugation invariance of H1") {
    std::mt19937 rng(101);
    std::uniform_int_distribution<long long> d(-3, 3);
    for (int i = 0; i < 30; ++i) {
        MCGElement g{d(rng), d(rng)}, c{d(rng), d(rng)};
        MCGElement conj = mcg_mul(mcg_mul(c, g), mcg_inv(c));
        CHECK(h1_open_book(MonodromySpec::from_catalog(g, default_catalog())) ==
              h1_open_book(MonodromySpec::from_catalog(conj, default_catalog())));
    }
}

TEST_CASE("monodromy spec files") {
    // Identity on N_{2,2}, written out and reparsed.
    MonodromySpec id = MonodromySpec::identity(PageDescriptor(2, 2, false));
    MonodromySpec back = MonodromySpec::parse(id.format());
    CHECK(back.page == id.page);
    CHECK(back.crosscap_images == id.crosscap_images);

    std::string text =
        "page: genus=2 boundary=1\n"
        "a1 -> baB\n"
        "a2 -> bABaB\n"
        "c1 -> c\n";
    CHECK_THROWS(MonodromySpec::parse(text));  // surface relation not preserved

    // Moebius band page: the crosscap letter is a, the boundary loop is b.
    std::string bad_c =
        "page: genus=1 boundary=1\n"
        "a1 -> a\n"
        "c1 -> aba\n";
    CHECK_THROWS(MonodromySpec::parse(bad_c));  // c1 must be fixed

    std::string ok =
        "page: genus=1 boundary=1\n"
        "a1 -> a\n"
        "c1 -> b\n";
    MonodromySpec ok_spec = MonodromySpec::parse(ok);
    CHECK(ok_spec.is_identity());
}

TEST_CASE("delta loops enter the total space presentation only") {
    // Page N_{1,2}: crosscap a, boundary loops b and c.
    MonodromySpec spec = MonodromySpec::identity(PageDescriptor(1, 2, false));
    spec.delta_loops[1] = Word::parse("aa");
    Word target = cyclic_canonical(Word::parse("aa"));
    bool in_total = false;
    for (const Word& r : total_space_presentation(spec).relators)
        in_total = in_total || cyclic_canonical(r) == target;
    CHECK(in_total);
    bool in_torus = false;
    for (const Word& r : mapping_torus_presentation(spec).relators)
        in_torus = in_torus || cyclic_canonical(r) == target;
    CHECK(!in_torus);
}

TEST_CASE("obstructions") {
    MonodromyClass y = MCGElement{0, 1};
    MonodromyClass u = MCGElement{-1, 1};
    MonodromyClass id = MCGElement{0, 0};
    MonodromyClass tag = TwistProductTag{};
    CHECK(stable_equivalence_obstruction(y, tag) == StableVerdict::Distinct);
    CHECK(stable_equivalence_obstruction(u, id) == StableVerdict::Distinct);
    CHECK(stable_equivalence_obstruction(MCGElement{1, 0}, MCGElement{0, 2}) ==
          StableVerdict::Inconclusive);
    CHECK(stable_equivalence_obstruction(tag, tag) == StableVerdict::Inconclusive);

    PageDescriptor K = PageDescriptor::klein_bottle_with_hole();
    CHECK(destabilization_obstruction(K, {0, 1}) == DestabVerdict::Blocked);
    CHECK(destabilization_obstruction(K, {-1, 1}) == DestabVerdict::Blocked);
    CHECK(destabilization_obstruction(K, {1, 0}) == DestabVerdict::Inconclusive);
    CHECK_THROWS(destabilization_obstruction(PageDescriptor::moebius_band(), {0, 1}));
}
