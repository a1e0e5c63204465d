#include "obcalc/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace obcalc {

namespace {

// Cyclically reduce, drop identity relators, dedupe up to rotation/inversion.
std::vector<Word> normalize_relators(const Alphabet& alpha, std::vector<Word> rels) {
    std::vector<Word> out;
    std::set<std::string> seen;
    for (const Word& r : rels) {
        alpha.check_word(r.letters());
        Word core = r.cyclic_reduce().first;
        if (core.empty()) continue;
        Word canon = cyclic_canonical(core);
        if (seen.insert(canon.letters()).second) out.push_back(core);
    }
    std::sort(out.begin(), out.end(), [](const Word& u, const Word& v) {
        return shortlex_less(u, v);
    });
    return out;
}

}  // namespace

GroupPresentation::GroupPresentation(Alphabet alpha, std::vector<Word> rels)
    : alphabet(std::move(alpha)), relators(normalize_relators(alphabet, std::move(rels))) {}

GroupPresentation GroupPresentation::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Alphabet alpha;
    std::vector<Word> rels;
    bool saw_generators = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "generators:") {
            std::string gens, tok;
            while (ls >> tok) gens += tok;
            alpha = Alphabet(gens);
            saw_generators = true;
        } else if (key == "relator:") {
            std::string w;
            ls >> w;
            rels.push_back(Word::parse(w));
        } else {
            throw std::invalid_argument("bad presentation line: " + line);
        }
    }
    if (!saw_generators) throw std::invalid_argument("presentation missing generators: line");
    return GroupPresentation(std::move(alpha), std::move(rels));
}

std::string GroupPresentation::format() const {
    std::ostringstream out;
    out << "generators:";
    for (char g : alphabet.gens()) out << ' ' << g;
    out << '\n';
    for (const Word& r : relators) out << "relator: " << r.str() << '\n';
    return out.str();
}

Word cyclic_canonical(const Word& w) {
    Word core = w.cyclic_reduce().first;
    if (core.empty()) return core;
    const Word inv = core.inverse();
    std::string best;
    for (const std::string* s : {&core.letters(), &inv.letters()}) {
        std::string rot = *s;
        for (std::size_t i = 0; i < rot.size(); ++i) {
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
            if (best.empty() || shortlex_less(rot, best)) best = rot;
        }
    }
    return Word::parse(best);
}

std::string AbelianInvariants::json() const {
    std::ostringstream out;
    out << "{\"rank\": " << rank << ", \"torsion\": [";
    for (std::size_t i = 0; i < torsion.size(); ++i) out << (i ? ", " : "") << torsion[i];
    out << "]}";
    return out.str();
}

std::string AbelianInvariants::str() const {
    std::ostringstream out;
    bool first = true;
    for (long long i = 0; i < rank; ++i) {
        out << (first ? "" : " + ") << "Z";
        first = false;
    }
    for (long long t : torsion) {
        out << (first ? "" : " + ") << "Z" << t;
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

IntegerMatrix exponent_matrix(const GroupPresentation& p) {
    IntegerMatrix m(p.relators.size(), p.alphabet.size());
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        auto sums = p.relators[i].exponent_sums(p.alphabet);
        for (std::size_t j = 0; j < sums.size(); ++j) m.at(i, j) = static_cast<long>(sums[j]);
    }
    return m;
}

std::vector<mpz_class> smith_normal_form(IntegerMatrix m) {
    std::vector<mpz_class> diag;
    const std::size_t n = std::min(m.rows, m.cols);
    for (std::size_t t = 0; t < n; ++t) {
        // Pick the nonzero entry of least absolute value in the submatrix.
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < m.rows; ++i)
            for (std::size_t j = t; j < m.cols; ++j) {
                if (m.at(i, j) == 0) continue;
                if (!found || cmp(abs(m.at(i, j)), abs(m.at(pi, pj))) < 0) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(t, j), m.at(pi, j));
        for (std::size_t i = 0; i < m.rows; ++i) std::swap(m.at(i, t), m.at(i, pj));

        for (;;) {
            // Clear column t, keeping the pivot as the running gcd.
            bool dirty = false;
            for (std::size_t i = t + 1; i < m.rows; ++i) {
                if (m.at(i, t) == 0) continue;
                mpz_class q = m.at(i, t) / m.at(t, t);
                for (std::size_t j = t; j < m.cols; ++j) m.at(i, j) -= q * m.at(t, j);
                if (m.at(i, t) != 0) {
                    for (std::size_t j = t; j < m.cols; ++j) std::swap(m.at(i, j), m.at(t, j));
                    dirty = true;
                }
            }
            if (dirty) continue;
            for (std::size_t j = t + 1; j < m.cols; ++j) {
                if (m.at(t, j) == 0) continue;
                mpz_class q = m.at(t, j) / m.at(t, t);
                for (std::size_t i = t; i < m.rows; ++i) m.at(i, j) -= q * m.at(i, t);
                if (m.at(t, j) != 0) {
                    for (std::size_t i = t; i < m.rows; ++i) std::swap(m.at(i, j), m.at(i, t));
                    dirty = true;
                }
            }
            if (dirty) continue;
            // Pivot must divide the rest of the submatrix.
            bool fixed = true;
            for (std::size_t i = t + 1; i < m.rows && fixed; ++i)
                for (std::size_t j = t + 1; j < m.cols && fixed; ++j)
                    if (m.at(i, j) % m.at(t, t) != 0) {
                        for (std::size_t k = t; k < m.cols; ++k) m.at(t, k) += m.at(i, k);
                        fixed = false;
                    }
            if (fixed) break;
        }
        diag.push_back(abs(m.at(t, t)));
    }
    // Enforce the divisibility chain.
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i + 1 < diag.size(); ++i)
            for (std::size_t j = i + 1; j < diag.size(); ++j)
                if (diag[j] % diag[i] != 0) {
                    mpz_class g = gcd(diag[i], diag[j]);
                    diag[j] = diag[i] / g * diag[j];
                    diag[i] = g;
                    changed = true;
                }
    }
    return diag;
}

AbelianInvariants abelianize(const GroupPresentation& p) {
    auto diag = smith_normal_form(exponent_matrix(p));
    AbelianInvariants inv;
    inv.rank = static_cast<long long>(p.alphabet.size()) - static_cast<long long>(diag.size());
    for (const mpz_class& d : diag)
        if (d > 1) {
            if (!d.fits_slong_p()) throw std::overflow_error("torsion coefficient overflow");
            inv.torsion.push_back(d.get_si());
        }
    return inv;
}

AbelianInvariants canonical_invariants(long long rank, const std::vector<long long>& torsion) {
    IntegerMatrix m(torsion.size(), torsion.size());
    for (std::size_t i = 0; i < torsion.size(); ++i) m.at(i, i) = static_cast<long>(torsion[i]);
    auto diag = smith_normal_form(std::move(m));
    AbelianInvariants inv;
    inv.rank = rank;
    for (const mpz_class& d : diag)
        if (d > 1) inv.torsion.push_back(d.get_si());
    // A zero torsion entry denotes a free factor.
    for (long long t : torsion)
        if (t == 0) inv.rank++;
    return inv;
}

namespace {

struct Rewrite {
    std::string lhs;
    std::string rhs;  // lhs = rhs in the group, |lhs| > |rhs|
};

// Length-reducing rewrites derived from a relator: every rotation of r and
// r^-1 split as lhs * v with |lhs| > |v| gives lhs -> v^-1.
void collect_rewrites(const Word& relator, std::vector<Rewrite>& out) {
    const Word inv = relator.inverse();
    for (const std::string* s : {&relator.letters(), &inv.letters()}) {
        std::string rot = *s;
        for (std::size_t i = 0; i < rot.size(); ++i) {
            for (std::size_t ul = rot.size(); 2 * ul > rot.size(); --ul) {
                std::string u = rot.substr(0, ul);
                std::string v = rot.substr(ul);
                out.push_back({u, Word::parse(v).inverse().letters()});
            }
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        }
    }
}

void sort_rewrites(std::vector<Rewrite>& rules) {
    std::sort(rules.begin(), rules.end(), [](const Rewrite& a, const Rewrite& b) {
        if (a.lhs.size() != b.lhs.size()) return a.lhs.size() > b.lhs.size();
        if (a.lhs != b.lhs) return shortlex_less(a.lhs, b.lhs);
        return shortlex_less(a.rhs, b.rhs);
    });
    rules.erase(std::unique(rules.begin(), rules.end(),
                            [](const Rewrite& a, const Rewrite& b) {
                                return a.lhs == b.lhs && a.rhs == b.rhs;
                            }),
                rules.end());
}

// One length-reducing rewrite step on any rotation of `r`; returns the new
// relator on success. Deterministic: rotations in order, leftmost match,
// rules in sorted order.
std::optional<Word> rewrite_step(const Word& r, const std::vector<Rewrite>& rules) {
    std::string rot = r.letters();
    for (std::size_t k = 0; k < std::max<std::size_t>(rot.size(), 1); ++k) {
        for (std::size_t pos = 0; pos < rot.size(); ++pos) {
            for (const Rewrite& rule : rules) {
                if (rule.lhs.size() > rot.size() - pos) continue;
                if (rot.compare(pos, rule.lhs.size(), rule.lhs) != 0) continue;
                std::string next = rot.substr(0, pos) + rule.rhs + rot.substr(pos + rule.lhs.size());
                return Word::parse(next).cyclic_reduce().first;
            }
        }
        if (!rot.empty()) std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    }
    return std::nullopt;
}

// Eliminates generator `gen` using relator index `ri` where it occurs once.
GroupPresentation eliminate_generator(const GroupPresentation& p, std::size_t ri, char gen) {
    const std::string& r = p.relators[ri].letters();
    std::size_t pos = 0;
    while (letter_base(r[pos]) != gen) ++pos;
    // r = u x v = 1  =>  x = u^-1 v^-1 (or inverted when the letter is X).
    Word u = Word::parse(r.substr(0, pos));
    Word v = Word::parse(r.substr(pos + 1));
    Word image = u.inverse() * v.inverse();
    if (is_inverse_letter(r[pos])) image = image.inverse();

    std::string gens;
    for (char g : p.alphabet.gens())
        if (g != gen) gens.push_back(g);
    Alphabet alpha(gens);

    std::vector<Word> rels;
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        if (i == ri) continue;
        Word out;
        for (char c : p.relators[i].letters()) {
            if (letter_base(c) == gen)
                out = out * (is_inverse_letter(c) ? image.inverse() : image);
            else
                out = out * Word::parse(std::string(1, c));
        }
        rels.push_back(out);
    }
    return GroupPresentation(std::move(alpha), std::move(rels));
}

}  // namespace

SimplifyResult tietze_simplify(const GroupPresentation& p0, int budget) {
    if (budget < 0) throw std::invalid_argument("negative budget");
    GroupPresentation p = p0;  // constructor has normalized relators
    int steps = 0;
    for (;;) {
        if (steps >= budget) return {p, false};

        // Generator elimination on a letter occurring exactly once in some
        // relator (relators scanned shortest first, letters in alphabet order).
        bool eliminated = false;
        for (std::size_t ri = 0; ri < p.relators.size() && !eliminated; ++ri) {
            for (char gen : p.alphabet.gens()) {
                int count = 0;
                for (char c : p.relators[ri].letters()) count += letter_base(c) == gen;
                if (count == 1) {
                    p = eliminate_generator(p, ri, gen);
                    eliminated = true;
                    ++steps;
                    break;
                }
            }
        }
        if (eliminated) continue;

        // Rewrite relators by one another, longest first; relators that
        // reduce to the identity are dropped.
        bool changed = false;
        for (std::size_t k = p.relators.size(); k-- > 0 && !changed;) {
            std::size_t ri = k;  // relators are stored in shortlex order
            std::vector<Rewrite> rules;
            for (std::size_t rj = 0; rj < p.relators.size(); ++rj)
                if (rj != ri) collect_rewrites(p.relators[rj], rules);
            sort_rewrites(rules);
            if (auto next = rewrite_step(p.relators[ri], rules)) {
                std::vector<Word> rels = p.relators;
                rels[ri] = *next;
                p = GroupPresentation(p.alphabet, std::move(rels));
                changed = true;
                ++steps;
            }
        }
        if (!changed) break;
    }
    return {p, true};
}

std::string Recognition::name() const {
    switch (tag) {
        case CatalogTag::Trivial: return "trivial";
        case CatalogTag::FreeOfRank: return "free of rank " + std::to_string(param);
        case CatalogTag::Z: return "Z";
        case CatalogTag::ZxZ2: return "Z x Z2";
        case CatalogTag::Zn: return "Z" + std::to_string(param);
        case CatalogTag::ZplusZn: return "Z + Z" + std::to_string(param);
        case CatalogTag::Unknown: return "unknown";
    }
    return "unknown";
}

std::optional<AbelianInvariants> Recognition::implied_h1() const {
    switch (tag) {
        case CatalogTag::Trivial: return AbelianInvariants{0, {}};
        case CatalogTag::FreeOfRank: return AbelianInvariants{param, {}};
        case CatalogTag::Z: return AbelianInvariants{1, {}};
        case CatalogTag::ZxZ2: return AbelianInvariants{1, {2}};
        case CatalogTag::Zn: return AbelianInvariants{0, {param}};
        case CatalogTag::ZplusZn: return AbelianInvariants{1, {param}};
        case CatalogTag::Unknown: return std::nullopt;
    }
    return std::nullopt;
}

namespace {

// r is x^n or X^n for a single generator: returns n.
std::optional<long long> power_of_single_letter(const Word& r) {
    const std::string& s = r.letters();
    if (s.empty()) return std::nullopt;
    for (char c : s)
        if (c != s[0]) return std::nullopt;
    return static_cast<long long>(s.size());
}

bool is_commutator_of(const Word& r, char x, char y) {
    std::string comm{x, y, invert_letter(x), invert_letter(y)};
    return cyclic_canonical(r) == cyclic_canonical(Word::parse(comm));
}

}  // namespace

Recognition match_catalog(const GroupPresentation& p0) {
    auto [p, complete] = tietze_simplify(p0);
    Recognition rec;
    rec.witness = p;
    if (!complete) return rec;

    const std::size_t ngen = p.alphabet.size();
    const std::size_t nrel = p.relators.size();

    if (ngen == 0) {
        rec.tag = CatalogTag::Trivial;
        return rec;
    }
    if (nrel == 0) {
        rec.tag = ngen == 1 ? CatalogTag::Z : CatalogTag::FreeOfRank;
        rec.param = static_cast<long long>(ngen);
        return rec;
    }
    if (ngen == 1 && nrel == 1) {
        if (auto n = power_of_single_letter(p.relators[0]); n && *n >= 2) {
            rec.tag = CatalogTag::Zn;
            rec.param = *n;
            return rec;
        }
    }
    if (ngen == 2 && nrel == 2) {
        char x = p.alphabet.gens()[0], y = p.alphabet.gens()[1];
        for (int i = 0; i < 2; ++i) {
            const Word& comm = p.relators[i];
            const Word& pow = p.relators[1 - i];
            if (!is_commutator_of(comm, x, y)) continue;
            if (auto n = power_of_single_letter(pow); n && *n >= 2) {
                rec.tag = *n == 2 ? CatalogTag::ZxZ2 : CatalogTag::ZplusZn;
                rec.param = *n;
                return rec;
            }
        }
    }

    // Abelian-certified route: if a commutator relator is present for every
    // generator pair, the group equals its abelianization.
    bool abelian = ngen == 1;
    if (ngen >= 2) {
        abelian = true;
        for (std::size_t i = 0; i < ngen && abelian; ++i)
            for (std::size_t j = i + 1; j < ngen && abelian; ++j) {
                bool found = false;
                for (const Word& r : p.relators)
                    found = found || is_commutator_of(r, p.alphabet.gens()[i],
                                                      p.alphabet.gens()[j]);
                abelian = found;
            }
    }
    if (abelian) {
        AbelianInvariants h1 = abelianize(p);
        if (h1.rank == 0 && h1.torsion.empty()) rec.tag = CatalogTag::Trivial;
        else if (h1.rank == 1 && h1.torsion.empty()) rec.tag = CatalogTag::Z;
        else if (h1.rank == 0 && h1.torsion.size() == 1) {
            rec.tag = CatalogTag::Zn;
            rec.param = h1.torsion[0];
        } else if (h1.rank == 1 && h1.torsion.size() == 1) {
            rec.tag = h1.torsion[0] == 2 ? CatalogTag::ZxZ2 : CatalogTag::ZplusZn;
            rec.param = h1.torsion[0];
        }
        return rec;
    }
    return rec;
}

}  // namespace obcalc
