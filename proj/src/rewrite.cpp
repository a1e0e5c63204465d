#include "obcalc/rewrite.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace obcalc {

namespace {

struct ShortlexPair {
    bool operator()(const std::pair<std::string, std::string>& a,
                    const std::pair<std::string, std::string>& b) const {
        if (a.first != b.first) return shortlex_less(a.first, b.first);
        return shortlex_less(a.second, b.second);
    }
};

using EquationQueue = std::set<std::pair<std::string, std::string>, ShortlexPair>;

std::string rewrite_with(const std::vector<RewriteRule>& rules, std::string w) {
    std::size_t max_lhs = 1;
    for (const auto& r : rules) max_lhs = std::max(max_lhs, r.lhs.size());
    std::size_t pos = 0;
    while (pos < w.size()) {
        bool hit = false;
        for (const auto& r : rules) {
            if (r.lhs.size() > w.size() - pos) continue;
            if (w.compare(pos, r.lhs.size(), r.lhs) != 0) continue;
            w = w.substr(0, pos) + r.rhs + w.substr(pos + r.lhs.size());
            pos = pos > max_lhs ? pos - max_lhs : 0;
            hit = true;
            break;
        }
        if (!hit) ++pos;
    }
    return w;
}

void push_equation(EquationQueue& q, std::string u, std::string v) {
    if (u == v) return;
    if (shortlex_less(u, v)) std::swap(u, v);
    q.insert({std::move(u), std::move(v)});
}

}  // namespace

std::string RewriteSystem::dump() const {
    std::ostringstream out;
    for (const auto& r : rules)
        out << r.lhs << " -> " << (r.rhs.empty() ? "1" : r.rhs) << '\n';
    return out.str();
}

RewriteSystem knuth_bendix(const GroupPresentation& p, const RewriteLimits& limits) {
    RewriteSystem sys;
    for (char g : p.alphabet.gens()) {
        sys.letters.push_back(g);
        sys.letters.push_back(invert_letter(g));
    }

    EquationQueue pending;
    for (char g : p.alphabet.gens()) {
        push_equation(pending, std::string{g, invert_letter(g)}, "");
        push_equation(pending, std::string{invert_letter(g), g}, "");
    }
    for (const Word& r : p.relators) push_equation(pending, r.letters(), "");

    std::vector<RewriteRule>& rules = sys.rules;
    long iterations = 0;

    auto sorted_insert = [&rules](RewriteRule r) {
        auto it = std::lower_bound(rules.begin(), rules.end(), r,
                                   [](const RewriteRule& a, const RewriteRule& b) {
                                       if (a.lhs != b.lhs) return shortlex_less(a.lhs, b.lhs);
                                       return shortlex_less(a.rhs, b.rhs);
                                   });
        rules.insert(it, std::move(r));
    };

    while (!pending.empty()) {
        if (++iterations > limits.max_iterations) return sys;
        auto [u, v] = *pending.begin();
        pending.erase(pending.begin());
        u = rewrite_with(rules, u);
        v = rewrite_with(rules, v);
        if (u == v) continue;
        if (shortlex_less(u, v)) std::swap(u, v);
        if (static_cast<int>(u.size()) > limits.max_rule_length) return sys;

        // Interreduce: rules whose lhs the new rule touches go back to the
        // queue; reducible right-hand sides are normalized in place later.
        RewriteRule fresh{u, v};
        for (std::size_t i = 0; i < rules.size();) {
            if (rules[i].lhs.find(fresh.lhs) != std::string::npos) {
                push_equation(pending, rules[i].lhs, rules[i].rhs);
                rules.erase(rules.begin() + i);
            } else {
                ++i;
            }
        }
        sorted_insert(fresh);
        if (static_cast<int>(rules.size()) > limits.max_rules) return sys;
        for (auto& r : rules) r.rhs = rewrite_with(rules, r.rhs);

        // Critical pairs of the new rule against every active rule.
        for (const RewriteRule& other : rules) {
            const RewriteRule* ordered[2][2] = {{&fresh, &other}, {&other, &fresh}};
            for (const auto* pr : ordered) {
                const RewriteRule& a = *pr[0];
                const RewriteRule& b = *pr[1];
                std::size_t kmax = std::min(a.lhs.size(), b.lhs.size()) - 1;
                for (std::size_t k = 1; k <= kmax; ++k) {
                    if (a.lhs.compare(a.lhs.size() - k, k, b.lhs, 0, k) != 0) continue;
                    // Overlap word a.lhs + b.lhs[k:], reduced two ways.
                    std::string left = a.rhs + b.lhs.substr(k);
                    std::string right = a.lhs.substr(0, a.lhs.size() - k) + b.rhs;
                    push_equation(pending, std::move(left), std::move(right));
                }
            }
        }
    }
    sys.confluent = true;
    return sys;
}

std::string normal_form(const RewriteSystem& s, const std::string& w) {
    return rewrite_with(s.rules, w);
}

Word normal_form(const RewriteSystem& s, const Word& w) {
    return Word::parse(normal_form(s, w.letters()));
}

bool prove_trivial(const RewriteSystem& s, const Word& w) {
    if (!s.confluent) throw std::invalid_argument("rewrite system is not confluent");
    return normal_form(s, w.letters()).empty();
}

std::vector<long long> count_normal_forms(const RewriteSystem& s, int max_length) {
    if (!s.confluent) throw std::invalid_argument("rewrite system is not confluent");
    std::vector<long long> counts{1};
    std::vector<std::string> level{""};
    for (int len = 1; len <= max_length; ++len) {
        std::vector<std::string> next;
        for (const std::string& w : level) {
            for (char c : s.letters) {
                std::string cand = w + c;
                bool irreducible = true;
                for (const auto& r : s.rules) {
                    if (r.lhs.size() > cand.size()) continue;
                    if (cand.compare(cand.size() - r.lhs.size(), r.lhs.size(), r.lhs) == 0) {
                        irreducible = false;
                        break;
                    }
                }
                if (irreducible) next.push_back(std::move(cand));
            }
        }
        counts.push_back(static_cast<long long>(next.size()));
        level = std::move(next);
    }
    return counts;
}

GroupPresentation harvest_presentation(const RewriteSystem& s, const Alphabet& alpha) {
    std::vector<Word> rels;
    for (const auto& r : s.rules) {
        // Skip pure free-cancellation rules xX -> 1.
        if (r.rhs.empty() && r.lhs.size() == 2 &&
            letter_base(r.lhs[0]) == letter_base(r.lhs[1]) && r.lhs[0] != r.lhs[1])
            continue;
        rels.push_back(Word::parse(r.lhs) * Word::parse(r.rhs).inverse());
    }
    return GroupPresentation(alpha, std::move(rels));
}

}  // namespace obcalc
