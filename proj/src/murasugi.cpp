#include "obcalc/murasugi.hpp"

#include <algorithm>
#include <sstream>

namespace obcalc {

PageDescriptor::PageDescriptor(int g, int r, bool orient)
    : genus(g), boundary(r), orientable(orient) {
    if (r < 1) throw std::invalid_argument("page needs at least one boundary component");
    if (g < 0) throw std::invalid_argument("negative genus");
    if (!orient && g == 0)
        throw std::invalid_argument("nonorientable page needs genus >= 1");
}

std::string Prime::str() const {
    switch (kind) {
        case PrimeKind::S2xS1: return "S2xS1";
        case PrimeKind::S2xTwistedS1: return "S2x~S1";
        case PrimeKind::Lens: return "L(" + std::to_string(param) + ")";
        case PrimeKind::P2xS1: return "P2xS1";
        case PrimeKind::KBTwistedS1: return "KBx~S1";
        case PrimeKind::SFSOverKB: return "SFS-KB(" + std::to_string(param) + ")";
    }
    return "?";
}

namespace {

std::vector<Prime> normalize_primes(std::vector<Prime> primes) {
    std::vector<Prime> out;
    bool nonorientable = false;
    for (Prime p : primes) {
        if (p.kind == PrimeKind::Lens) {
            if (p.param < 0) p.param = -p.param;
            if (p.param == 1) continue;       // L(1,1) = S^3
            if (p.param == 0) p = Prime{PrimeKind::S2xS1, 0};  // L(0,1) = S^2 x S^1
        }
        if (p.kind == PrimeKind::SFSOverKB && p.param < 2)
            throw std::invalid_argument("SFS-KB(k) needs k >= 2");
        nonorientable = nonorientable || p.kind == PrimeKind::S2xTwistedS1 ||
                        p.kind == PrimeKind::P2xS1 || p.kind == PrimeKind::KBTwistedS1 ||
                        p.kind == PrimeKind::SFSOverKB;
        out.push_back(p);
    }
    if (nonorientable)
        for (Prime& p : out)
            if (p.kind == PrimeKind::S2xS1) p.kind = PrimeKind::S2xTwistedS1;
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

ManifoldExpression::ManifoldExpression(std::vector<Prime> primes)
    : primes_(normalize_primes(std::move(primes))) {}

ManifoldExpression ManifoldExpression::parse(const std::string& text) {
    std::vector<Prime> primes;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, '+')) {
        auto first = tok.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        auto last = tok.find_last_not_of(" \t");
        tok = tok.substr(first, last - first + 1);
        if (tok == "S3") continue;
        if (tok == "S2xS1") primes.push_back({PrimeKind::S2xS1, 0});
        else if (tok == "S2x~S1") primes.push_back({PrimeKind::S2xTwistedS1, 0});
        else if (tok == "P2xS1") primes.push_back({PrimeKind::P2xS1, 0});
        else if (tok == "KBx~S1") primes.push_back({PrimeKind::KBTwistedS1, 0});
        else if (tok.rfind("L(", 0) == 0 && tok.back() == ')')
            primes.push_back({PrimeKind::Lens, std::stoll(tok.substr(2, tok.size() - 3))});
        else if (tok.rfind("SFS-KB(", 0) == 0 && tok.back() == ')')
            primes.push_back({PrimeKind::SFSOverKB, std::stoll(tok.substr(7, tok.size() - 8))});
        else
            throw std::invalid_argument("bad manifold term '" + tok + "'");
    }
    return ManifoldExpression(std::move(primes));
}

std::string ManifoldExpression::str() const {
    if (primes_.empty()) return "S3";
    std::ostringstream out;
    for (std::size_t i = 0; i < primes_.size(); ++i)
        out << (i ? " + " : "") << primes_[i].str();
    return out.str();
}

ManifoldExpression connected_sum(const ManifoldExpression& e1, const ManifoldExpression& e2) {
    std::vector<Prime> primes = e1.primes();
    primes.insert(primes.end(), e2.primes().begin(), e2.primes().end());
    return ManifoldExpression(std::move(primes));
}

ManifoldExpression normalize_expression(const ManifoldExpression& e) {
    return ManifoldExpression(e.primes());
}

AbelianInvariants h1_expression(const ManifoldExpression& e) {
    long long rank = 0;
    std::vector<long long> torsion;
    for (const Prime& p : e.primes()) {
        switch (p.kind) {
            case PrimeKind::S2xS1:
            case PrimeKind::S2xTwistedS1: rank += 1; break;
            case PrimeKind::Lens: torsion.push_back(p.param); break;
            case PrimeKind::P2xS1:
                rank += 1;
                torsion.push_back(2);
                break;
            case PrimeKind::KBTwistedS1:
            case PrimeKind::SFSOverKB:
                throw std::invalid_argument("no H1 table entry for " + p.str());
        }
    }
    return canonical_invariants(rank, torsion);
}

PageDescriptor plumb_pages(const PageDescriptor& p1, const PageDescriptor& p2, int r) {
    if (r < 1 || r > p1.boundary + p2.boundary)
        throw std::invalid_argument("plumbing boundary count out of range");
    if (p1.orientable && p2.orientable)
        throw std::invalid_argument("orientable plumbing result is not representable here");
    int chi = p1.euler_characteristic() + p2.euler_characteristic() - 1;
    int genus = 2 - chi - r;
    if (genus < 1) throw std::invalid_argument("plumbing does not yield a valid page");
    return PageDescriptor(genus, r, false);
}

OpenBookExpr ob_murasugi(const OpenBookExpr& ob1, const OpenBookExpr& ob2, int r) {
    return {plumb_pages(ob1.page, ob2.page, r),
            connected_sum(ob1.total_space, ob2.total_space)};
}

ManifoldExpression ob_identity_monodromy(int g, int k) {
    if (g < 1) throw std::invalid_argument("page must be nonorientable (genus >= 1)");
    if (k < 1) throw std::invalid_argument("page needs k >= 1 boundary components");
    std::vector<Prime> primes(static_cast<std::size_t>(g + k - 1),
                              Prime{PrimeKind::S2xTwistedS1, 0});
    return ManifoldExpression(std::move(primes));
}

}  // namespace obcalc
