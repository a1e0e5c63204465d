#pragma once

#include <string>
#include <vector>

#include "obcalc/presentation.hpp"
#include "obcalc/word.hpp"

namespace obcalc {

struct RewriteLimits {
    int max_rules = 500;
    int max_rule_length = 20;
    long max_iterations = 100000;
};

struct RewriteRule {
    std::string lhs, rhs;  // lhs > rhs in shortlex
    bool operator==(const RewriteRule&) const = default;
};

/// String rewriting system over the extended alphabet {a, A, b, B, ...}
/// (formal inverses are distinct letters; free cancellation is part of the
/// rule set). When `confluent` is false the completion hit its limits and
/// the system is only a partial result.
struct RewriteSystem {
    std::string letters;  // extended alphabet in rank order
    std::vector<RewriteRule> rules;
    bool confluent = false;

    /// One rule per line, `lhs -> rhs`, in final (shortlex) order.
    std::string dump() const;
};

/// Shortlex Knuth-Bendix completion seeded from the relators plus the free
/// reduction rules. Deterministic; a limit hit returns the partial system
/// with confluent = false (never an exception).
RewriteSystem knuth_bendix(const GroupPresentation& p, const RewriteLimits& limits = {});

std::string normal_form(const RewriteSystem& s, const std::string& w);
Word normal_form(const RewriteSystem& s, const Word& w);

/// True iff w rewrites to the empty word. Requires a confluent system, for
/// which this decides the word problem.
bool prove_trivial(const RewriteSystem& s, const Word& w);

/// counts[L] = number of irreducible words of length L, L = 0..max_length.
/// Requires a confluent system.
std::vector<long long> count_normal_forms(const RewriteSystem& s, int max_length);

/// Group presentation whose relators are the non-free rules of `s` read as
/// relations lhs * rhs^-1 (same group as the presentation that produced s).
GroupPresentation harvest_presentation(const RewriteSystem& s, const Alphabet& alpha);

}  // namespace obcalc
