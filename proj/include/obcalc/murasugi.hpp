#pragma once

#include <string>
#include <vector>

#include "obcalc/presentation.hpp"

namespace obcalc {

/// Compact surface with boundary. `genus` is the nonorientable genus
/// (number of crosscaps) unless `orientable` is set.
struct PageDescriptor {
    int genus = 0;
    int boundary = 1;
    bool orientable = false;

    PageDescriptor() = default;
    PageDescriptor(int g, int r, bool orient = false);

    int euler_characteristic() const {
        return orientable ? 2 - 2 * genus - boundary : 2 - genus - boundary;
    }
    bool operator==(const PageDescriptor&) const = default;

    static PageDescriptor klein_bottle_with_hole() { return {2, 1, false}; }
    static PageDescriptor moebius_band() { return {1, 1, false}; }
    static PageDescriptor annulus() { return {0, 2, true}; }
};

enum class PrimeKind { S2xS1, S2xTwistedS1, Lens, P2xS1, KBTwistedS1, SFSOverKB };

struct Prime {
    PrimeKind kind;
    long long param = 0;  // n for Lens(n), k for SFSOverKB(k)

    auto operator<=>(const Prime&) const = default;
    std::string str() const;
};

/// Formal connected sum of catalog primes; the empty sum is S^3.
/// Kept normalized: no Lens(0)/Lens(1) summands, and S2xS1 is rewritten to
/// S2xTwistedS1 whenever a nonorientable prime is present. Lens spaces are
/// stored unoriented: L(n) stands for L(n, 1) up to a homeomorphism that may
/// reverse orientation (the ambient sums here are nonorientable).
class ManifoldExpression {
  public:
    ManifoldExpression() = default;
    explicit ManifoldExpression(std::vector<Prime> primes);

    static ManifoldExpression s3() { return {}; }
    static ManifoldExpression prime(PrimeKind kind, long long param = 0) {
        return ManifoldExpression({Prime{kind, param}});
    }

    const std::vector<Prime>& primes() const { return primes_; }
    bool is_s3() const { return primes_.empty(); }

    /// Literal syntax `S2xS1 + S2x~S1 + L(3) + P2xS1`; "S3" is the empty sum.
    static ManifoldExpression parse(const std::string& text);
    std::string str() const;

    bool operator==(const ManifoldExpression&) const = default;

  private:
    std::vector<Prime> primes_;  // sorted, normalized
};

ManifoldExpression connected_sum(const ManifoldExpression& e1, const ManifoldExpression& e2);
ManifoldExpression normalize_expression(const ManifoldExpression& e);

/// H1 by prime-wise direct sum; Seifert-type primes have no table entry and
/// raise an error.
AbelianInvariants h1_expression(const ManifoldExpression& e);

/// Murasugi sum of two pages along two-sided arcs, with caller-supplied
/// resulting boundary count r. chi = chi1 + chi2 - 1; only nonorientable
/// results are representable.
PageDescriptor plumb_pages(const PageDescriptor& p1, const PageDescriptor& p2, int r);

struct OpenBookExpr {
    PageDescriptor page;
    ManifoldExpression total_space;
};

/// Page-level plumbing with the connected-sum rule for the total spaces.
OpenBookExpr ob_murasugi(const OpenBookExpr& ob1, const OpenBookExpr& ob2, int r);

/// OB(N_{g,k}, id) = #_{g+k-1} S2x~S1 for a nonorientable page.
ManifoldExpression ob_identity_monodromy(int g, int k);

}  // namespace obcalc
