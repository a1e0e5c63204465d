#pragma once

#include <optional>
#include <string>

#include "obcalc/murasugi.hpp"
#include "obcalc/word.hpp"

namespace obcalc {

/// Element of Map(K) for K the Klein bottle with one hole, in the normal
/// form t^m y^n (t the Dehn twist along the two-sided curve, y the
/// Y-homeomorphism). The single defining relation t y t = y forces
/// y t = t^-1 y, a semidirect product law.
struct MCGElement {
    long long m = 0;
    long long n = 0;
    bool operator==(const MCGElement&) const = default;
    std::string str() const {
        return "t^" + std::to_string(m) + " y^" + std::to_string(n);
    }
};

MCGElement mcg_mul(MCGElement g1, MCGElement g2);
MCGElement mcg_inv(MCGElement g);

/// Parses a word over {t, T, y, Y} (uppercase = inverse) by left-folding mul.
MCGElement parse_mcg(const std::string& s);

/// Canonical conjugacy class representative: (|m|, n) for even n,
/// (m mod 2, n) for odd n.
MCGElement conjugacy_representative(MCGElement g);
bool is_conjugate(MCGElement g1, MCGElement g2);

/// n mod 2. Zero iff g is a product of Dehn twists along two-sided curves
/// (the subgroup generated by t and the boundary twist y^2).
int twist_parity(MCGElement g);

/// The actions of t and y on pi1(K) = F(a, b), pinned by constraint search:
///   C1: t(w) = w            C2: y(w) = w       (w the boundary word)
///   C3: y(a) = baB, y(b) = h B h^-1
///   C4: y o y = conjugation by w^epsilon       (y^2 is the boundary twist)
///   C5: t o y o t = y                          (the Map(K) relation)
/// all exact in Aut(F(a,b)).
struct AutomorphismCatalog {
    Endomorphism t_star, y_star;
    Endomorphism t_star_inv, y_star_inv;
    Word h, boundary_word;
    int epsilon = 1;

    /// Rechecks C1-C5 and the cached inverses; throws naming the first
    /// violated constraint.
    void verify() const;

    std::string format() const;
    static AutomorphismCatalog parse(const std::string& text);
};

struct CatalogNotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bounded search for the catalog: boundary-word candidates from the
/// automorphism orbit of aabb, then h and the t-images in shortlex order,
/// image lengths <= bound. Returns the first (hence shortlex-least) solution.
AutomorphismCatalog derive_catalog(int bound = 8);

/// Cached catalog: $OBCALC_FIXTURE_DIR/catalog.txt ("fixtures/catalog.txt"
/// as fallback) when present, else a fresh derivation.
const AutomorphismCatalog& default_catalog();

/// Action of t^m y^n on pi1(K), composed from the catalog.
Endomorphism induced_automorphism(MCGElement g, const AutomorphismCatalog& cat);

/// Total-space table on the conjugacy representative; nullopt where the
/// classification is not known.
std::optional<ManifoldExpression> classify_total_space(MCGElement g);

}  // namespace obcalc
