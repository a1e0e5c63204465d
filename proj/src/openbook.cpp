#include "obcalc/openbook.hpp"

#include <algorithm>
#include <sstream>

namespace obcalc {

namespace {

Word single(char c) { return Word::parse(std::string(1, c)); }

}  // namespace

Alphabet MonodromySpec::page_alphabet() const {
    int n = page.genus + page.boundary;
    if (n + 1 > 26) throw std::invalid_argument("page needs more letters than available");
    std::string gens;
    for (int i = 0; i < n; ++i) gens.push_back(static_cast<char>('a' + i));
    return Alphabet(gens);
}

char MonodromySpec::mu_letter() const {
    return static_cast<char>('a' + page.genus + page.boundary);
}

Word MonodromySpec::surface_word() const {
    Word w;
    for (int i = 0; i < page.genus; ++i) {
        Word a = single(static_cast<char>('a' + i));
        w = w * a * a;
    }
    for (int j = 0; j < page.boundary; ++j)
        w = w * single(static_cast<char>('a' + page.genus + j));
    return w;
}

Endomorphism MonodromySpec::endo() const {
    std::vector<Word> images = crosscap_images;
    images.insert(images.end(), boundary_images.begin(), boundary_images.end());
    return Endomorphism(page_alphabet(), std::move(images));
}

bool MonodromySpec::is_identity() const {
    if (!endo().is_identity()) return false;
    for (const Word& d : delta_loops)
        if (!d.empty()) return false;
    return true;
}

void MonodromySpec::validate() const {
    if (page.orientable) throw std::invalid_argument("orientable pages are out of scope");
    if (static_cast<int>(crosscap_images.size()) != page.genus ||
        static_cast<int>(boundary_images.size()) != page.boundary ||
        static_cast<int>(delta_loops.size()) != page.boundary)
        throw std::invalid_argument("monodromy image counts do not match the page");
    if (!delta_loops[0].empty())
        throw std::invalid_argument("delta_1 is the constant path and must be trivial");
    Endomorphism phi = endo();
    char c1 = static_cast<char>('a' + page.genus);
    if (phi.apply(single(c1)) != single(c1))
        throw std::invalid_argument("monodromy must fix the boundary loop c1");
    Word s = surface_word();
    Word image = phi.apply(s);
    bool rotation = false;
    std::string rot = s.letters();
    for (std::size_t i = 0; i < rot.size() && !rotation; ++i) {
        rotation = image.letters() == rot;
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    }
    if (!rotation)
        throw std::invalid_argument(
            "monodromy must carry the surface relation to a cyclic rotation of itself");
}

MonodromySpec MonodromySpec::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    MonodromySpec spec;
    bool saw_page = false;
    std::vector<std::pair<std::string, Word>> entries;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "page:") {
            std::string kv;
            int genus = -1, boundary = -1;
            while (ls >> kv) {
                auto eq = kv.find('=');
                if (eq == std::string::npos) throw std::invalid_argument("bad page field " + kv);
                std::string name = kv.substr(0, eq);
                int value = std::stoi(kv.substr(eq + 1));
                if (name == "genus") genus = value;
                else if (name == "boundary") boundary = value;
                else throw std::invalid_argument("bad page field " + name);
            }
            spec.page = PageDescriptor(genus, boundary, false);
            saw_page = true;
        } else {
            std::string arrow, w;
            ls >> arrow >> w;
            if (arrow != "->") throw std::invalid_argument("bad monodromy line: " + line);
            entries.emplace_back(key, Word::parse(w));
        }
    }
    if (!saw_page) throw std::invalid_argument("monodromy file is missing the page: line");
    spec.crosscap_images.resize(static_cast<std::size_t>(spec.page.genus), Word());
    spec.boundary_images.resize(static_cast<std::size_t>(spec.page.boundary), Word());
    spec.delta_loops.resize(static_cast<std::size_t>(spec.page.boundary), Word());
    std::vector<bool> have_a(spec.page.genus, false), have_c(spec.page.boundary, false);
    for (auto& [name, w] : entries) {
        char kind = name[0];
        int idx = std::stoi(name.substr(kind == 'd' ? 5 : 1)) - 1;
        if (kind == 'a' && idx >= 0 && idx < spec.page.genus) {
            spec.crosscap_images[idx] = w;
            have_a[idx] = true;
        } else if (kind == 'c' && idx >= 0 && idx < spec.page.boundary) {
            spec.boundary_images[idx] = w;
            have_c[idx] = true;
        } else if (name.rfind("delta", 0) == 0 && idx >= 1 && idx < spec.page.boundary) {
            spec.delta_loops[idx] = w;
        } else {
            throw std::invalid_argument("bad monodromy entry " + name);
        }
    }
    for (int i = 0; i < spec.page.genus; ++i)
        if (!have_a[i]) throw std::invalid_argument("missing image for a" + std::to_string(i + 1));
    for (int j = 0; j < spec.page.boundary; ++j)
        if (!have_c[j]) throw std::invalid_argument("missing image for c" + std::to_string(j + 1));
    spec.validate();
    return spec;
}

std::string MonodromySpec::format() const {
    std::ostringstream out;
    out << "page: genus=" << page.genus << " boundary=" << page.boundary << '\n';
    for (int i = 0; i < page.genus; ++i)
        out << 'a' << i + 1 << " -> " << crosscap_images[i].str() << '\n';
    for (int j = 0; j < page.boundary; ++j)
        out << 'c' << j + 1 << " -> " << boundary_images[j].str() << '\n';
    for (int j = 1; j < page.boundary; ++j)
        out << "delta" << j + 1 << " -> " << delta_loops[j].str() << '\n';
    return out.str();
}

MonodromySpec MonodromySpec::identity(const PageDescriptor& page) {
    MonodromySpec spec;
    spec.page = page;
    for (int i = 0; i < page.genus; ++i)
        spec.crosscap_images.push_back(single(static_cast<char>('a' + i)));
    for (int j = 0; j < page.boundary; ++j)
        spec.boundary_images.push_back(single(static_cast<char>('a' + page.genus + j)));
    spec.delta_loops.assign(static_cast<std::size_t>(page.boundary), Word());
    return spec;
}

MonodromySpec MonodromySpec::from_k_action(const Endomorphism& action) {
    if (action.alphabet() != Alphabet("ab"))
        throw std::invalid_argument("page-K actions live on F(a, b)");
    if (action.is_identity())
        return identity(PageDescriptor::klein_bottle_with_hole());
    MonodromySpec spec;
    spec.page = PageDescriptor::klein_bottle_with_hole();
    spec.crosscap_images = {action.image('a'), action.image('b')};
    // c = (a^2 b^2)^-1 by the surface relation; its image follows.
    Word c_as_word = Word::parse("BBAA");
    spec.boundary_images = {action.apply(c_as_word)};
    spec.delta_loops = {Word()};
    return spec;
}

MonodromySpec MonodromySpec::from_catalog(MCGElement g, const AutomorphismCatalog& cat) {
    return from_k_action(induced_automorphism(g, cat));
}

GroupPresentation mapping_torus_presentation(const MonodromySpec& spec) {
    Alphabet page_alpha = spec.page_alphabet();
    Endomorphism phi = spec.endo();
    char mu = spec.mu_letter();
    Alphabet alpha(page_alpha.gens() + mu);

    std::vector<Word> rels{spec.surface_word()};
    Word mu_w = single(mu);
    for (char x : page_alpha.gens())
        rels.push_back(mu_w * single(x) * mu_w.inverse() * phi.apply(single(x)).inverse());
    return GroupPresentation(std::move(alpha), std::move(rels));
}

GroupPresentation total_space_presentation(const MonodromySpec& spec,
                                           bool boundary_relations) {
    Alphabet alpha = spec.page_alphabet();
    Endomorphism phi = spec.endo();

    std::vector<Word> rels{spec.surface_word()};
    for (int i = 0; i < spec.page.genus; ++i) {
        Word a = single(static_cast<char>('a' + i));
        rels.push_back(a * phi.apply(a).inverse());
    }
    for (int j = 1; j < spec.page.boundary; ++j) rels.push_back(spec.delta_loops[j]);
    if (boundary_relations)
        for (int j = 0; j < spec.page.boundary; ++j) {
            Word c = single(static_cast<char>('a' + spec.page.genus + j));
            rels.push_back(c * phi.apply(c).inverse());
        }
    return GroupPresentation(std::move(alpha), std::move(rels));
}

AbelianInvariants h1_open_book(const MonodromySpec& spec) {
    return abelianize(total_space_presentation(spec));
}

int heegaard_genus(const PageDescriptor& page) {
    if (page.orientable)
        throw std::invalid_argument("heegaard_genus is defined here for nonorientable pages");
    return 1 - page.euler_characteristic();
}

IdentifyResult identify_total_space(const MonodromySpec& spec, const RewriteLimits& limits) {
    GroupPresentation pres = total_space_presentation(spec);
    IdentifyResult result;
    result.h1 = abelianize(pres);
    result.recognition = match_catalog(pres);

    if (result.recognition.tag == CatalogTag::Unknown) {
        GroupPresentation simplified = tietze_simplify(pres).presentation;
        if (!simplified.alphabet.empty() && !simplified.relators.empty()) {
            RewriteSystem rs = knuth_bendix(simplified, limits);
            if (!rs.confluent) {
                result.downgraded = true;
            } else {
                Recognition again =
                    match_catalog(harvest_presentation(rs, simplified.alphabet));
                if (again.tag != CatalogTag::Unknown) result.recognition = again;
            }
        }
    }

    if (spec.is_identity()) {
        result.manifold = ob_identity_monodromy(spec.page.genus, spec.page.boundary);
    } else if (heegaard_genus(spec.page) == 2) {
        if (result.recognition.tag == CatalogTag::ZxZ2)
            result.manifold = ManifoldExpression::prime(PrimeKind::P2xS1);
        else if (result.recognition.tag == CatalogTag::Z)
            result.manifold = ManifoldExpression::prime(PrimeKind::S2xTwistedS1);
    }
    return result;
}

StableVerdict stable_equivalence_obstruction(const MonodromyClass& g1,
                                             const MonodromyClass& g2) {
    auto parity = [](const MonodromyClass& g) {
        if (std::holds_alternative<TwistProductTag>(g)) return 0;
        return twist_parity(std::get<MCGElement>(g));
    };
    return parity(g1) != parity(g2) ? StableVerdict::Distinct : StableVerdict::Inconclusive;
}

DestabVerdict destabilization_obstruction(const PageDescriptor& page, MCGElement g) {
    if (!(page == PageDescriptor::klein_bottle_with_hole()))
        throw std::invalid_argument("destabilization obstruction applies to page K");
    return twist_parity(g) == 1 ? DestabVerdict::Blocked : DestabVerdict::Inconclusive;
}

}  // namespace obcalc
