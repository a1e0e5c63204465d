#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "obcalc/mcg.hpp"
#include "obcalc/murasugi.hpp"
#include "obcalc/presentation.hpp"
#include "obcalc/rewrite.hpp"
#include "obcalc/word.hpp"

namespace obcalc {

/// Monodromy data for a nonorientable page of genus k with r boundary
/// components. pi1 of the page is presented on crosscap generators
/// a_1..a_k (letters 'a', 'b', ...) and boundary loops c_1..c_r (the next r
/// letters) with the surface relation a_1^2...a_k^2 c_1...c_r = 1.
///
/// delta_loops[j] holds the based loop delta_j * phi(delta_j)^-1 for the arc
/// delta_j from the basepoint to the j-th boundary component (trivial for
/// j = 1 and for any monodromy fixing the arcs).
struct MonodromySpec {
    PageDescriptor page;
    std::vector<Word> crosscap_images;
    std::vector<Word> boundary_images;
    std::vector<Word> delta_loops;

    Alphabet page_alphabet() const;
    char mu_letter() const;
    Word surface_word() const;
    Endomorphism endo() const;
    bool is_identity() const;

    /// Strict checks for user-supplied data: delta_1 trivial, c_1 fixed, and
    /// the surface word mapped to a cyclic rotation of itself.
    void validate() const;

    /// File format: `page: genus=K boundary=R`, then `a1 -> w`, `c1 -> w`,
    /// `delta2 -> w` lines. Validates.
    static MonodromySpec parse(const std::string& text);
    std::string format() const;

    static MonodromySpec identity(const PageDescriptor& page);

    /// Page K with the monodromy t^m y^n resolved through the catalog. The
    /// c_1 image is derived from the surface relation (c_1 = (a^2 b^2)^-1),
    /// so no validation applies.
    static MonodromySpec from_catalog(MCGElement g, const AutomorphismCatalog& cat);

    /// Page K with an explicit action on pi1(K) = F(a, b); c_1 image derived
    /// as above. Used for monodromy-like substitutions (e.g. varying h).
    static MonodromySpec from_k_action(const Endomorphism& action);
};

/// pi1 of the mapping torus: generators a_i, c_j and mu_1, relators the
/// surface word plus mu x mu^-1 (phi x)^-1 per page generator.
GroupPresentation mapping_torus_presentation(const MonodromySpec& spec);

/// pi1 of the open book total space: kill mu_1; relators are the surface
/// word, a_i (phi a_i)^-1, the delta loops for j >= 2, and (flag, default
/// on) c_j (phi c_j)^-1.
GroupPresentation total_space_presentation(const MonodromySpec& spec,
                                           bool boundary_relations = true);

AbelianInvariants h1_open_book(const MonodromySpec& spec);

/// Handlebody rank 1 - chi of the Heegaard splitting the open book induces.
/// Defined here for nonorientable pages only.
int heegaard_genus(const PageDescriptor& page);

struct IdentifyResult {
    Recognition recognition;
    std::optional<ManifoldExpression> manifold;
    AbelianInvariants h1;
    bool downgraded = false;  // Knuth-Bendix hit its limits
};

/// Pipeline: presentation -> Tietze -> (if needed) Knuth-Bendix harvested
/// relators -> catalog match; the manifold is named only for identity
/// monodromy (plumbing rule) or through the genus-two + pi1 table
/// (Z x Z2 -> P2xS1, Z -> S2x~S1). Anything else stays Unknown.
IdentifyResult identify_total_space(const MonodromySpec& spec,
                                    const RewriteLimits& limits = {});

/// Abstract monodromy classes compared by twist parity.
struct TwistProductTag {};  // a product of Dehn twists along two-sided curves
using MonodromyClass = std::variant<MCGElement, TwistProductTag>;

enum class StableVerdict { Distinct, Inconclusive };

/// Twist parity separates stable equivalence classes: stabilization composes
/// with Dehn twists and cannot change it. Equal parity decides nothing.
StableVerdict stable_equivalence_obstruction(const MonodromyClass& g1,
                                             const MonodromyClass& g2);

enum class DestabVerdict { Blocked, Inconclusive };

/// Odd twist parity forces a crosscap slide, which needs genus >= 2: such a
/// page-K open book cannot destabilize to genus one.
DestabVerdict destabilization_obstruction(const PageDescriptor& page, MCGElement g);

}  // namespace obcalc
