#include "obcalc/verify.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "obcalc/klassen.hpp"
#include "obcalc/mcg.hpp"
#include "obcalc/murasugi.hpp"
#include "obcalc/openbook.hpp"
#include "obcalc/presentation.hpp"
#include "obcalc/rewrite.hpp"

namespace obcalc {

namespace {

struct Check {
    std::ostringstream why;
    bool ok = true;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            if (!ok) why << "; ";
            why << what;
            ok = false;
        }
    }
};

ManifoldExpression expr(const std::string& s) { return ManifoldExpression::parse(s); }

MonodromySpec spec_k(const std::string& mcg_word) {
    return MonodromySpec::from_catalog(parse_mcg(mcg_word), default_catalog());
}

std::string claim_y_squared(Check& c) {
    const auto& cat = default_catalog();
    Word w = cat.boundary_word;
    Word we = cat.epsilon == 1 ? w : w.inverse();
    c.require(cat.y_star.compose(cat.y_star) == conjugation_by(Alphabet("ab"), we),
              "y^2 is not the boundary twist on pi1");
    c.require(parse_mcg("yy") == MCGElement{0, 2}, "yy != t_d");
    for (long long m = -3; m <= 3; ++m)
        for (long long n = -3; n <= 3; ++n)
            c.require(mcg_mul({0, 2}, {m, n}) == mcg_mul({m, n}, {0, 2}),
                      "t_d is not central");
    return "y^2 = t_d; boundary twist acts as conjugation by w^" +
           std::string(cat.epsilon == 1 ? "+1" : "-1");
}

std::string claim_catalog(Check& c) {
    const auto& cat = default_catalog();
    try {
        cat.verify();
    } catch (const std::exception& e) {
        c.require(false, e.what());
    }
    c.require(cat.y_star.image('a') == Word::parse("baB"), "y a != bab^-1");
    c.require(cat.y_star.image('b') == cat.h * Word::parse("B") * cat.h.inverse(),
              "y b != h b^-1 h^-1");
    auto sums_a = cat.t_star.image('a').exponent_sums(Alphabet("ab"));
    auto sums_b = cat.t_star.image('b').exponent_sums(Alphabet("ab"));
    long long det = sums_a[0] * sums_b[1] - sums_a[1] * sums_b[0];
    c.require(det == 1 || det == -1, "abelianized t is not unimodular");
    return "constraints C1-C5 hold; w = " + cat.boundary_word.str() + ", h = " +
           cat.h.str() + ", det t_* = " + std::to_string(det);
}

std::string claim_mapping_torus(Check& c) {
    GroupPresentation p = mapping_torus_presentation(spec_k("y"));
    c.require(p.alphabet.gens() == "abcd", "expected generators a b c mu");
    const auto& cat = default_catalog();
    Word target = Word::parse("daD") * cat.y_star.image('a').inverse();
    bool found = false;
    for (const Word& r : p.relators)
        found = found || cyclic_canonical(r) == cyclic_canonical(target);
    c.require(found, "missing relator mu a mu^-1 (y a)^-1");
    AbelianInvariants h1 = abelianize(p);
    c.require(h1 == AbelianInvariants{2, {2}}, "H1 of the mapping torus is not Z^2 + Z2");
    return "pi1(K_y) = <a,b,c,mu | a2b2c, mu x mu^-1 = y x>; H1 = " + h1.str();
}

std::string claim_obky(Check& c) {
    IdentifyResult res = identify_total_space(spec_k("y"));
    c.require(res.recognition.tag == CatalogTag::ZxZ2, "pi1 not recognized as Z x Z2");
    c.require(res.h1 == AbelianInvariants{1, {2}}, "H1 != Z + Z2");
    c.require(res.manifold == expr("P2xS1"), "total space not P2xS1");
    c.require(heegaard_genus(PageDescriptor::klein_bottle_with_hole()) == 2,
              "page K does not give a genus-two splitting");
    return "OB(K, y) = P2xS1 via pi1 = Z x Z2 and the genus-two splitting";
}

std::string claim_word_problem(Check& c) {
    GroupPresentation p = tietze_simplify(total_space_presentation(spec_k("y"))).presentation;
    RewriteSystem rs = knuth_bendix(p);
    c.require(rs.confluent, "completion did not converge");
    c.require(prove_trivial(rs, Word::parse("bb")), "b^2 != 1 in pi1(OB(K,y))");
    c.require(prove_trivial(rs, Word::parse("abAB")), "group not abelian");
    c.require(!prove_trivial(rs, Word::parse("b")), "b collapsed to 1");
    c.require(!prove_trivial(rs, Word::parse("a")), "a collapsed to 1");
    return "confluent system certifies b^2 = 1, [a,b] = 1, a and b nontrivial";
}

std::string claim_obngk(Check& c) {
    for (int g = 1; g <= 3; ++g)
        for (int k = 1; k <= 3; ++k) {
            MonodromySpec id = MonodromySpec::identity(PageDescriptor(g, k, false));
            IdentifyResult res = identify_total_space(id);
            long long rank = g + k - 1;
            c.require(res.recognition.is_free_of_rank(rank),
                      "pi1 not free of rank g+k-1 at g=" + std::to_string(g) +
                          " k=" + std::to_string(k));
            c.require(res.h1 == AbelianInvariants{rank, {}}, "H1 != Z^(g+k-1)");
            c.require(res.manifold == ob_identity_monodromy(g, k),
                      "expression rule disagrees");
        }
    c.require(ob_identity_monodromy(1, 1) == expr("S2x~S1"), "OB(Moebius, id)");
    c.require(ob_identity_monodromy(2, 1) == expr("S2x~S1 + S2x~S1"), "OB(K, id)");
    return "OB(N_{g,k}, id) = #_{g+k-1} S2x~S1 for g,k in [1,3]";
}

std::string claim_lens(Check& c) {
    for (long long n = -6; n <= 6; ++n) {
        if (n == 0) continue;
        AbelianInvariants lhs = h1_open_book(spec_k(std::string(
            static_cast<std::size_t>(std::llabs(n)), n > 0 ? 't' : 'T')));
        ManifoldExpression e = connected_sum(
            ManifoldExpression::prime(PrimeKind::Lens, std::llabs(n)),
            ManifoldExpression::prime(PrimeKind::S2xTwistedS1));
        c.require(lhs == h1_expression(e),
                  "H1 mismatch at n=" + std::to_string(n));
        AbelianInvariants want{1, std::llabs(n) >= 2
                                      ? std::vector<long long>{std::llabs(n)}
                                      : std::vector<long long>{}};
        c.require(lhs == want, "H1 value wrong at n=" + std::to_string(n));
        c.require(classify_total_space({n, 0}) == e, "classification table at n");
    }
    c.require(classify_total_space({0, 0}) == expr("S2x~S1 + S2x~S1"),
              "OB(K, id) != #2 S2x~S1");
    c.require(classify_total_space({1, 0}) == expr("S2x~S1"), "OB(K, t) != S2x~S1");
    c.require(classify_total_space({-1, 0}) == expr("S2x~S1"), "OB(K, t^-1) != S2x~S1");
    return "OB(K, t^n) = L(|n|,1) # S2x~S1 cross-checked through H1 for n in [-6,6]";
}

std::string claim_murasugi(Check& c) {
    PageDescriptor k1 = plumb_pages(PageDescriptor::annulus(),
                                    PageDescriptor::moebius_band(), 1);
    c.require(k1 == PageDescriptor::klein_bottle_with_hole(), "A * M != K");
    PageDescriptor k2 = plumb_pages(PageDescriptor::moebius_band(),
                                    PageDescriptor::moebius_band(), 1);
    c.require(k2 == PageDescriptor::klein_bottle_with_hole(), "M * M != K");
    OpenBookExpr lens{PageDescriptor::annulus(), expr("L(3)")};
    OpenBookExpr mob{PageDescriptor::moebius_band(), expr("S2x~S1")};
    OpenBookExpr sum = ob_murasugi(lens, mob, 1);
    c.require(sum.page == PageDescriptor::klein_bottle_with_hole() &&
                  sum.total_space == expr("L(3) + S2x~S1"),
              "OB(A, t^3) * OB(M, id) != (K, L(3) # S2x~S1)");
    c.require(connected_sum(expr("S2xS1"), expr("S2x~S1")) == expr("S2x~S1 + S2x~S1"),
              "S2xS1 # S2x~S1 != #2 S2x~S1");
    return "plumbing bookkeeping reproduces K = A * M and the lens-space sums";
}

std::string claim_stukow(Check& c) {
    c.require(parse_mcg("tyt") == parse_mcg("y"), "t y t != y");
    c.require(parse_mcg("tyt") == MCGElement{0, 1}, "normal form of tyt");
    const auto& cat = default_catalog();
    c.require(cat.t_star.compose(cat.y_star).compose(cat.t_star) == cat.y_star,
              "relation fails in Aut(F2)");
    return "t y t = y holds in the normal form and exactly on pi1";
}

std::string claim_crosscap(Check& c) {
    c.require(parse_mcg("Ty") == MCGElement{-1, 1}, "u != t^-1 y");
    IdentifyResult res = identify_total_space(spec_k("Ty"));
    c.require(res.recognition.tag == CatalogTag::Z, "pi1(OB(K,u)) not recognized as Z");
    c.require(res.h1 == AbelianInvariants{1, {}}, "H1 != Z");
    c.require(res.manifold == expr("S2x~S1"), "OB(K, u) != S2x~S1");
    return "OB(K, u) = S2x~S1 via pi1 = Z and the genus-two splitting";
}

std::string claim_conjugacy(Check& c) {
    for (long long m = -5; m <= 5; ++m)
        for (long long n = -5; n <= 5; ++n) {
            c.require(is_conjugate({2 * m, 2 * n + 1}, {0, 2 * n + 1}),
                      "t^2m y^odd not conjugate to y^odd");
            MCGElement uy2n = mcg_mul(parse_mcg("Ty"), {0, 2 * n});
            c.require(is_conjugate({2 * m + 1, 2 * n + 1}, uy2n),
                      "t^(2m+1) y^odd not conjugate to u y^2n");
        }
    return "t^2m y^(2n+1) ~ y^(2n+1) and t^(2m+1) y^(2n+1) ~ u y^2n";
}

std::string claim_infinitely_many(Check& c) {
    for (long long m = -3; m <= 3; ++m) {
        std::string even(static_cast<std::size_t>(std::llabs(2 * m)), m > 0 ? 't' : 'T');
        IdentifyResult res = identify_total_space(spec_k(even + "y"));
        c.require(res.manifold == expr("P2xS1"),
                  "OB(K, t^" + std::to_string(2 * m) + " y) != P2xS1");
        std::string odd(static_cast<std::size_t>(std::llabs(2 * m + 1)),
                        2 * m + 1 > 0 ? 't' : 'T');
        IdentifyResult res2 = identify_total_space(spec_k(odd + "y"));
        c.require(res2.manifold == expr("S2x~S1"),
                  "OB(K, t^" + std::to_string(2 * m + 1) + " y) != S2x~S1");
        if (m != 0)
            c.require(!(MCGElement{2 * m, 1} == MCGElement{0, 1}),
                      "monodromies must be distinct");
    }
    return "the monodromies t^2m y (resp. t^(2m+1) y) are pairwise distinct "
           "with the same total space, m in [-3,3]";
}

std::string claim_seifert(Check& c) {
    c.require(classify_total_space({0, 2}) == expr("KBx~S1"), "OB(K, t_d) != KBx~S1");
    c.require(classify_total_space({0, -2}) == expr("KBx~S1"), "OB(K, t_d^-1) != KBx~S1");
    for (long long k = 2; k <= 5; ++k) {
        auto want = ManifoldExpression::prime(PrimeKind::SFSOverKB, k);
        c.require(classify_total_space({0, 2 * k}) == want, "SFS name at +k");
        c.require(classify_total_space({0, -2 * k}) == want, "SFS name at -k");
    }
    return "OB(K, t_d^n) named Seifert fibered over the Klein bottle, "
           "KBx~S1 at |n| = 1";
}

std::string claim_stable(Check& c) {
    MonodromyClass y = MCGElement{0, 1};
    MonodromyClass u = MCGElement{-1, 1};
    MonodromyClass id = MCGElement{0, 0};
    MonodromyClass twists = TwistProductTag{};
    c.require(stable_equivalence_obstruction(y, twists) == StableVerdict::Distinct,
              "y vs twist product");
    c.require(stable_equivalence_obstruction(u, id) == StableVerdict::Distinct,
              "u vs identity");
    c.require(stable_equivalence_obstruction(MCGElement{1, 0}, MCGElement{0, 2}) ==
                  StableVerdict::Inconclusive,
              "t vs t_d should be inconclusive");
    c.require(twist_parity({0, 1}) == 1, "y is not a product of Dehn twists");
    return "twist parity separates the genus-two open books from twist-product "
           "open books under stabilization";
}

std::string claim_destab(Check& c) {
    PageDescriptor K = PageDescriptor::klein_bottle_with_hole();
    c.require(destabilization_obstruction(K, {0, 1}) == DestabVerdict::Blocked,
              "OB(K, y) should be blocked");
    c.require(destabilization_obstruction(K, {-1, 1}) == DestabVerdict::Blocked,
              "OB(K, u) should be blocked");
    c.require(destabilization_obstruction(K, {1, 0}) == DestabVerdict::Inconclusive,
              "OB(K, t) should be inconclusive");
    return "odd twist parity blocks destabilization to genus one";
}

std::string claim_klassen(Check& c) {
    using namespace klassen;
    c.require(component_count(0.25, 256) == 1, "count at t=1/4");
    c.require(component_count(0.5, 256) == 2, "count at t=1/2");
    c.require(component_count(0.75, 256) == 1, "count at t=3/4");
    c.require(component_count(0.0, 256) == 1, "count at t=0");
    for (double t : {0.0, 0.25, 0.5, 0.75}) {
        SliceReport rep = cross_section(t, 256);
        c.require(!rep.points.empty() && rep.max_residual < 1e-9,
                  "residuals at t=" + std::to_string(t));
    }
    SliceReport t0 = cross_section(0.0, 256);
    for (const auto& p : t0.points)
        c.require(std::abs(p.y) < 1e-9 && std::abs(p.x) > 0.5 && std::abs(p.x) <= 1 + 1e-9,
                  "t=0 slice off the real intervals");
    double worst = 0;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            worst = std::max(worst, translation_check(i / 8.0, j / 8.0, 96));
    c.require(worst < 2 * (2.0 * 3.14159265 / 96), "translation property");
    std::ostringstream out;
    out << "components 1/2/1 at t=1/4,1/2,3/4; residuals < 1e-9; translation "
           "deviation "
        << worst;
    return out.str();
}

}  // namespace

bool VerificationReport::all_passed() const {
    for (const Claim& c : claims)
        if (!c.passed && !c.skipped) return false;
    return true;
}

std::string VerificationReport::table() const {
    std::ostringstream out;
    for (const Claim& c : claims) {
        out << (c.skipped ? "[skip] " : c.passed ? "[pass] " : "[FAIL] ") << c.location
            << "  " << c.id;
        if (!c.details.empty()) out << "  --  " << c.details;
        out << '\n';
    }
    out << (all_passed() ? "all claims passed" : "SOME CLAIMS FAILED") << '\n';
    return out.str();
}

std::string VerificationReport::json() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < claims.size(); ++i) {
        const Claim& c = claims[i];
        out << (i ? "," : "") << "\n  {\"id\": \"" << c.id << "\", \"location\": \""
            << c.location << "\", \"status\": \""
            << (c.skipped ? "skipped" : c.passed ? "pass" : "fail")
            << "\", \"details\": \"" << c.details << "\"}";
    }
    out << "\n]\n";
    return out.str();
}

VerificationReport verify_paper(const std::string& only) {
    using ClaimFn = std::function<std::string(Check&)>;
    const std::vector<std::tuple<std::string, std::string, ClaimFn>> defs = {
        {"y-squared-is-boundary-twist", "S2", claim_y_squared},
        {"automorphism-catalog", "S2", claim_catalog},
        {"mapping-torus-presentation", "S4", claim_mapping_torus},
        {"total-space-of-y", "S4", claim_obky},
        {"word-problem-certificate", "S4", claim_word_problem},
        {"identity-monodromy-pages", "S6", claim_obngk},
        {"twist-powers-are-lens-sums", "S6", claim_lens},
        {"murasugi-plumbing", "S6", claim_murasugi},
        {"stukow-relation", "S7", claim_stukow},
        {"crosscap-transposition", "S7", claim_crosscap},
        {"conjugacy-classes", "S7", claim_conjugacy},
        {"infinitely-many-open-books", "S7", claim_infinitely_many},
        {"boundary-twist-powers", "S7", claim_seifert},
        {"stable-equivalence", "S8", claim_stable},
        {"destabilization", "S8", claim_destab},
        {"explicit-page-numerics", "S3", claim_klassen},
    };

    // Accept "S7", "7", or a section-sign prefix for the filter.
    std::string want = only;
    if (want.rfind("\xc2\xa7", 0) == 0) want = "S" + want.substr(2);

    VerificationReport report;
    for (const auto& [id, loc, fn] : defs) {
        Claim claim;
        claim.id = id;
        claim.location = loc;
        if (!want.empty() && loc.find(want) == std::string::npos &&
            ("S" + want != loc) && (want != loc)) {
            claim.skipped = true;
            report.claims.push_back(claim);
            continue;
        }
        Check check;
        try {
            std::string details = fn(check);
            claim.passed = check.ok;
            claim.details = check.ok ? details : check.why.str();
        } catch (const std::exception& e) {
            claim.passed = false;
            claim.details = e.what();
        }
        report.claims.push_back(claim);
    }
    return report;
}

}  // namespace obcalc
