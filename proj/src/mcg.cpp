#include "obcalc/mcg.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>

namespace obcalc {

MCGElement mcg_mul(MCGElement g1, MCGElement g2) {
    long long sign = (g1.n % 2 == 0) ? 1 : -1;
    return {g1.m + sign * g2.m, g1.n + g2.n};
}

MCGElement mcg_inv(MCGElement g) {
    long long sign = (g.n % 2 == 0) ? 1 : -1;
    return {-sign * g.m, -g.n};
}

MCGElement parse_mcg(const std::string& s) {
    MCGElement g;
    for (char c : s) {
        switch (c) {
            case 't': g = mcg_mul(g, {1, 0}); break;
            case 'T': g = mcg_mul(g, {-1, 0}); break;
            case 'y': g = mcg_mul(g, {0, 1}); break;
            case 'Y': g = mcg_mul(g, {0, -1}); break;
            case ' ': break;
            default:
                throw std::invalid_argument("mapping class words use letters t, T, y, Y");
        }
    }
    return g;
}

MCGElement conjugacy_representative(MCGElement g) {
    // Conjugation by t^u y^v sends m to u(1 - (-1)^n) + (-1)^v m.
    if (g.n % 2 == 0) return {std::llabs(g.m), g.n};
    return {((g.m % 2) + 2) % 2, g.n};
}

bool is_conjugate(MCGElement g1, MCGElement g2) {
    return conjugacy_representative(g1) == conjugacy_representative(g2);
}

int twist_parity(MCGElement g) { return static_cast<int>(((g.n % 2) + 2) % 2); }

namespace {

const Alphabet& kAB() {
    static const Alphabet a("ab");
    return a;
}

// Reduced words over {a, A, b, B} in shortlex order, shortest first.
class WordEnumerator {
  public:
    explicit WordEnumerator(int max_len) : max_len_(max_len) {}

    std::optional<Word> next() {
        if (!started_) {
            started_ = true;
            return Word();  // the identity
        }
        if (!advance()) return std::nullopt;
        return Word::parse(cur_);
    }

  private:
    static constexpr char kLetters[4] = {'a', 'A', 'b', 'B'};

    // Reduced iff no letter is followed by its inverse.
    static char smallest_following(char prev) {
        for (char c : kLetters)
            if (c != invert_letter(prev)) return c;
        return 'a';
    }

    bool advance() {
        if (cur_.empty()) {
            if (len_ + 1 > max_len_) return false;
            ++len_;
            for (int i = 0; i < len_; ++i)
                cur_.push_back(cur_.empty() ? 'a' : smallest_following(cur_.back()));
            return true;
        }
        // Odometer increment over letter ranks, keeping the word reduced.
        int pos = len_ - 1;
        while (pos >= 0) {
            int r = letter_rank(cur_[pos]);
            for (int nr = r + 1; nr < 4; ++nr) {
                char c = kLetters[nr];
                if (pos > 0 && c == invert_letter(cur_[pos - 1])) continue;
                cur_[pos] = c;
                for (int i = pos + 1; i < len_; ++i)
                    cur_[i] = smallest_following(cur_[i - 1]);
                return true;
            }
            --pos;
        }
        cur_.clear();
        return advance();
    }

    int max_len_;
    int len_ = 0;
    std::string cur_;
    bool started_ = false;
};

Endomorphism endo_ab(const Word& ia, const Word& ib) {
    return Endomorphism(kAB(), {ia, ib});
}

Word wparse(const std::string& s) { return Word::parse(s); }

// Candidate boundary words: the length-4 part of the automorphism orbit of
// aabb, closed under rotation and inversion.
std::vector<Word> boundary_candidates() {
    std::vector<Endomorphism> moves;
    moves.push_back(endo_ab(wparse("b"), wparse("a")));   // swap
    moves.push_back(endo_ab(wparse("A"), wparse("b")));   // invert a
    moves.push_back(endo_ab(wparse("a"), wparse("B")));   // invert b
    for (const char* img : {"ab", "ba", "aB", "Ba"}) moves.push_back(endo_ab(wparse(img), wparse("b")));
    for (const char* img : {"ba", "ab", "bA", "Ab"}) moves.push_back(endo_ab(wparse("a"), wparse(img)));

    std::set<std::string> seen;
    std::vector<std::string> queue{"aabb"};
    seen.insert("aabb");
    auto add = [&](const Word& w) {
        Word core = w.cyclic_reduce().first;
        if (core.size() != 4) return;
        std::string rot = core.letters();
        for (std::size_t i = 0; i < 4; ++i) {
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
            for (const std::string& s : {rot, Word::parse(rot).inverse().letters()})
                if (seen.insert(s).second) queue.push_back(s);
        }
    };
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Word w = wparse(queue[head]);
        for (const Endomorphism& f : moves) add(f.apply(w));
    }
    std::vector<Word> out;
    for (const std::string& s : seen) out.push_back(wparse(s));
    std::sort(out.begin(), out.end(),
              [](const Word& u, const Word& v) { return shortlex_less(u, v); });
    return out;
}

std::optional<Word> find_preimage(const Endomorphism& f, const Word& target, int bound) {
    WordEnumerator en(bound);
    while (auto w = en.next())
        if (f.apply(*w) == target) return w;
    return std::nullopt;
}

std::optional<Endomorphism> bounded_inverse(const Endomorphism& f, int bound) {
    auto pa = find_preimage(f, wparse("a"), bound);
    if (!pa) return std::nullopt;
    auto pb = find_preimage(f, wparse("b"), bound);
    if (!pb) return std::nullopt;
    return endo_ab(*pa, *pb);
}

}  // namespace

void AutomorphismCatalog::verify() const {
    const Word a = wparse("a"), b = wparse("b");
    const Word& w = boundary_word;
    if (t_star.apply(w) != w) throw std::runtime_error("catalog constraint C1 failed: t does not fix the boundary word");
    if (y_star.apply(w) != w) throw std::runtime_error("catalog constraint C2 failed: y does not fix the boundary word");
    if (y_star.apply(a) != wparse("baB") || y_star.apply(b) != (h * b.inverse() * h.inverse()))
        throw std::runtime_error("catalog constraint C3 failed: y images are not baB / hBh^-1");
    Word we = epsilon == 1 ? w : w.inverse();
    if (y_star.compose(y_star) != conjugation_by(kAB(), we))
        throw std::runtime_error("catalog constraint C4 failed: y^2 is not conjugation by w^epsilon");
    if (t_star.compose(y_star).compose(t_star) != y_star)
        throw std::runtime_error("catalog constraint C5 failed: t y t != y");
    if (t_star.compose(t_star_inv) != Endomorphism::identity(kAB()) ||
        t_star_inv.compose(t_star) != Endomorphism::identity(kAB()))
        throw std::runtime_error("catalog t inverse is wrong");
    if (y_star.compose(y_star_inv) != Endomorphism::identity(kAB()) ||
        y_star_inv.compose(y_star) != Endomorphism::identity(kAB()))
        throw std::runtime_error("catalog y inverse is wrong");
}

std::string AutomorphismCatalog::format() const {
    std::ostringstream out;
    out << "w = " << boundary_word.str() << '\n';
    out << "epsilon = " << (epsilon == 1 ? "+1" : "-1") << '\n';
    out << "t*: a -> " << t_star.image('a').str() << "; b -> " << t_star.image('b').str()
        << '\n';
    out << "y*: h = " << h.str() << '\n';
    return out.str();
}

AutomorphismCatalog AutomorphismCatalog::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::optional<Word> w, h, ta, tb;
    std::optional<int> eps;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "w") {
            std::string eq, val;
            ls >> eq >> val;
            w = wparse(val);
        } else if (key == "epsilon") {
            std::string eq, val;
            ls >> eq >> val;
            eps = (val == "-1") ? -1 : 1;
        } else if (key == "t*:") {
            std::string g, arrow, val;
            ls >> g >> arrow >> val;
            ta = wparse(val.substr(0, val.find(';')));
            ls >> g >> arrow >> val;
            tb = wparse(val);
        } else if (key == "y*:") {
            std::string hh, eq, val;
            ls >> hh >> eq >> val;
            h = wparse(val);
        } else {
            throw std::invalid_argument("bad catalog line: " + line);
        }
    }
    if (!w || !h || !ta || !tb || !eps)
        throw std::invalid_argument("catalog file is missing fields");
    AutomorphismCatalog cat;
    cat.boundary_word = *w;
    cat.h = *h;
    cat.epsilon = *eps;
    cat.t_star = endo_ab(*ta, *tb);
    cat.y_star = endo_ab(wparse("baB"), *h * wparse("B") * h->inverse());
    auto ti = bounded_inverse(cat.t_star, 8);
    auto yi = bounded_inverse(cat.y_star, 8);
    if (!ti || !yi) throw std::runtime_error("catalog inverse search failed");
    cat.t_star_inv = *ti;
    cat.y_star_inv = *yi;
    cat.verify();
    return cat;
}

AutomorphismCatalog derive_catalog(int bound) {
    if (bound < 4) throw std::invalid_argument("catalog search bound must be >= 4");
    const Word b = wparse("b");
    const Word ya = wparse("baB");

    for (const Word& w : boundary_candidates()) {
        auto wsums = w.exponent_sums(kAB());
        // y acts as diag(1, -1) on H1, so the boundary word needs zero
        // b-exponent; skip the rest without searching.
        if (wsums[1] != 0 || wsums[0] == 0) continue;

        WordEnumerator hen(bound);
        while (auto h = hen.next()) {
            Endomorphism y = endo_ab(ya, *h * b.inverse() * h->inverse());
            if (y.apply(w) != w) continue;
            Endomorphism yy = y.compose(y);
            int eps = 0;
            if (yy == conjugation_by(kAB(), w)) eps = 1;
            else if (yy == conjugation_by(kAB(), w.inverse())) eps = -1;
            if (eps == 0) continue;

            // t-search. On H1, fixing [w] = (s, 0) with s != 0 forces the
            // t-matrix columns to (1, 0) and (q, +-1).
            WordEnumerator taen(bound);
            while (auto ta = taen.next()) {
                if (ta->empty()) continue;
                auto tas = ta->exponent_sums(kAB());
                if (tas[0] != 1 || tas[1] != 0) continue;
                WordEnumerator tben(bound);
                while (auto tb = tben.next()) {
                    if (tb->empty()) continue;
                    auto tbs = tb->exponent_sums(kAB());
                    if (tbs[1] != 1 && tbs[1] != -1) continue;
                    if (tbs[1] == -1 && tbs[0] != 0) continue;
                    Endomorphism t = endo_ab(*ta, *tb);
                    if (t.is_identity()) continue;
                    if (t.apply(w) != w) continue;
                    if (t.compose(y).compose(t) != y) continue;
                    auto tinv = bounded_inverse(t, bound);
                    if (!tinv) continue;
                    auto yinv = bounded_inverse(y, bound);
                    if (!yinv) continue;

                    AutomorphismCatalog cat;
                    cat.t_star = t;
                    cat.y_star = y;
                    cat.t_star_inv = *tinv;
                    cat.y_star_inv = *yinv;
                    cat.h = *h;
                    cat.boundary_word = w;
                    cat.epsilon = eps;
                    cat.verify();
                    return cat;
                }
            }
        }
    }
    throw CatalogNotFound("no automorphism catalog within bound " + std::to_string(bound));
}

const AutomorphismCatalog& default_catalog() {
    static AutomorphismCatalog cat = [] {
        std::vector<std::string> paths;
        if (const char* dir = std::getenv("OBCALC_FIXTURE_DIR"))
            paths.push_back(std::string(dir) + "/catalog.txt");
        paths.push_back("fixtures/catalog.txt");
        for (const auto& path : paths) {
            std::ifstream in(path);
            if (!in) continue;
            std::stringstream buf;
            buf << in.rdbuf();
            return AutomorphismCatalog::parse(buf.str());
        }
        return derive_catalog();
    }();
    return cat;
}

Endomorphism induced_automorphism(MCGElement g, const AutomorphismCatalog& cat) {
    Endomorphism e = Endomorphism::identity(kAB());
    const Endomorphism& yf = g.n >= 0 ? cat.y_star : cat.y_star_inv;
    for (long long i = 0; i < std::llabs(g.n); ++i) e = yf.compose(e);
    const Endomorphism& tf = g.m >= 0 ? cat.t_star : cat.t_star_inv;
    for (long long i = 0; i < std::llabs(g.m); ++i) e = tf.compose(e);
    return e;
}

std::optional<ManifoldExpression> classify_total_space(MCGElement g) {
    MCGElement r = conjugacy_representative(g);
    if (r.n % 2 != 0)
        return ManifoldExpression::prime(r.m == 0 ? PrimeKind::P2xS1
                                                  : PrimeKind::S2xTwistedS1);
    if (r.n == 0)
        return connected_sum(ManifoldExpression::prime(PrimeKind::Lens, r.m),
                             ManifoldExpression::prime(PrimeKind::S2xTwistedS1));
    if (r.m == 0) {
        long long k = std::llabs(r.n) / 2;
        return k == 1 ? ManifoldExpression::prime(PrimeKind::KBTwistedS1)
                      : ManifoldExpression::prime(PrimeKind::SFSOverKB, k);
    }
    return std::nullopt;
}

}  // namespace obcalc
