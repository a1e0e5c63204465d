#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "obcalc/word.hpp"

namespace obcalc {

/// Finite presentation <alphabet | relators>, each relator r meaning r = 1.
/// Relators are kept cyclically reduced and nonempty.
struct GroupPresentation {
    Alphabet alphabet;
    std::vector<Word> relators;

    GroupPresentation() = default;
    GroupPresentation(Alphabet alpha, std::vector<Word> rels);

    /// Text format: line `generators: a b c`, then `relator: <word>` lines.
    static GroupPresentation parse(const std::string& text);
    std::string format() const;
};

/// Least word among all cyclic rotations of w and of w^-1 (shortlex).
/// Two relators generate the same normal closure iff their canonical
/// forms agree.
Word cyclic_canonical(const Word& w);

/// H1 data: Z^rank + Z_d1 + Z_d2 + ... with d1 | d2 | ..., every di >= 2.
struct AbelianInvariants {
    long long rank = 0;
    std::vector<long long> torsion;

    bool operator==(const AbelianInvariants&) const = default;
    std::string json() const;
    std::string str() const;
};

/// Dense integer matrix; rows index relators, columns generators.
struct IntegerMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<mpz_class> e;  // row-major

    IntegerMatrix() = default;
    IntegerMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), e(r * c, 0) {}
    mpz_class& at(std::size_t i, std::size_t j) { return e[i * cols + j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const { return e[i * cols + j]; }
};

IntegerMatrix exponent_matrix(const GroupPresentation& p);

/// Nonzero invariant factors d1 | d2 | ... of the matrix (exact arithmetic).
std::vector<mpz_class> smith_normal_form(IntegerMatrix m);

AbelianInvariants abelianize(const GroupPresentation& p);

/// Canonical invariants of Z^rank + sum of Z_t for t in torsion (any order,
/// not necessarily a divisibility chain).
AbelianInvariants canonical_invariants(long long rank, const std::vector<long long>& torsion);

struct SimplifyResult {
    GroupPresentation presentation;
    bool complete = true;  // false when the step budget ran out
};

inline constexpr int kDefaultTietzeBudget = 1000;

/// Tietze simplification: free/cyclic reduction, elimination of generators
/// occurring exactly once in some relator, and length-reducing rewriting of
/// relators by one another (relators that reduce to 1 are dropped).
SimplifyResult tietze_simplify(const GroupPresentation& p, int budget = kDefaultTietzeBudget);

enum class CatalogTag { Trivial, FreeOfRank, Z, ZxZ2, Zn, ZplusZn, Unknown };

struct Recognition {
    CatalogTag tag = CatalogTag::Unknown;
    long long param = 0;  // rank for FreeOfRank, n for Zn / ZplusZn
    GroupPresentation witness;

    std::string name() const;
    bool is_free_of_rank(long long m) const {
        return (tag == CatalogTag::FreeOfRank && param == m) ||
               (tag == CatalogTag::Z && m == 1);
    }
    /// The abelianization the tag implies (Unknown has none).
    std::optional<AbelianInvariants> implied_h1() const;
};

/// Recognizes the group against a small catalog of canonical presentations
/// after re-simplifying. Never guesses: anything unrecognized is Unknown.
Recognition match_catalog(const GroupPresentation& p);

}  // namespace obcalc
