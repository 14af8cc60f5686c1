#include "unitforge/presentation.hpp"

#include <json.hpp>

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace unitforge {

using nlohmann::json;

void Word::append(int gen, long exp) {
    if (exp == 0) return;
    if (!syllables.empty() && syllables.back().first == gen) {
        syllables.back().second += exp;
        if (syllables.back().second == 0) syllables.pop_back();
        return;
    }
    syllables.emplace_back(gen, exp);
}

Word word_inverse(const Word& w) {
    Word r;
    for (auto it = w.syllables.rbegin(); it != w.syllables.rend(); ++it)
        r.append(it->first, -it->second);
    return r;
}

Word word_concat(const Word& a, const Word& b) {
    Word r = a;
    for (const auto& [g, e] : b.syllables) r.append(g, e);
    return r;
}

Word word_conjugate(const Word& w, const Word& c) {
    return word_concat(word_concat(word_inverse(c), w), c);
}

int Presentation::generator_index(const std::string& name) const {
    for (size_t i = 0; i < generators.size(); ++i)
        if (generators[i] == name) return static_cast<int>(i);
    return -1;
}

Word Presentation::parse_word(const std::string& text) const {
    Word w;
    size_t i = 0;
    const size_t n = text.size();
    while (i < n) {
        char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*') {
            ++i;
            continue;
        }
        if (ch == '1' && (i + 1 == n || !std::isalnum(static_cast<unsigned char>(text[i + 1])))) {
            ++i;  // identity literal
            continue;
        }
        if (!std::isalpha(static_cast<unsigned char>(ch)))
            throw std::invalid_argument("parse_word: unexpected character '" +
                                        std::string(1, ch) + "' in \"" + text + "\"");
        size_t j = i + 1;
        while (j < n && std::isalnum(static_cast<unsigned char>(text[j]))) ++j;
        std::string name = text.substr(i, j - i);
        int gen = generator_index(name);
        if (gen < 0)
            throw std::invalid_argument("parse_word: unknown generator \"" + name + "\"");
        i = j;
        long exp = 1;
        if (i < n && text[i] == '^') {
            ++i;
            bool neg = false;
            if (i < n && (text[i] == '-' || text[i] == '+')) {
                neg = text[i] == '-';
                ++i;
            }
            if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
                throw std::invalid_argument("parse_word: malformed exponent in \"" + text + "\"");
            long v = 0;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                ++i;
            }
            exp = neg ? -v : v;
        }
        w.append(gen, exp);
    }
    return w;
}

std::string Presentation::word_to_string(const Word& w) const {
    if (w.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, e] : w.syllables) {
        if (!first) os << "*";
        first = false;
        os << generators.at(g);
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

std::vector<long> Presentation::exponent_sums(const Word& w) const {
    std::vector<long> sums(generators.size(), 0);
    for (const auto& [g, e] : w.syllables) sums.at(g) += e;
    return sums;
}

Presentation assemble(const SemidirectData& sd) {
    const size_t nb = sd.base.generators.size();
    const size_t nf = sd.fiber_generators.size();
    if (sd.action.size() != nf)
        throw std::invalid_argument("assemble: action must cover every fiber generator");

    Presentation p;
    p.generators = sd.base.generators;
    p.generators.insert(p.generators.end(), sd.fiber_generators.begin(),
                        sd.fiber_generators.end());
    p.origin = sd.base.origin;

    auto shift_fiber = [&](const Word& w) {
        Word r;
        for (const auto& [g, e] : w.syllables) r.append(g + static_cast<int>(nb), e);
        return r;
    };

    p.relators = sd.base.relators;
    for (const Word& w : sd.fiber_relators) p.relators.push_back(shift_fiber(w));
    for (size_t x = 0; x < nf; ++x) {
        if (sd.action[x].size() != nb)
            throw std::invalid_argument("assemble: action row has wrong arity");
        for (size_t g = 0; g < nb; ++g) {
            if (!sd.action[x][g])
                throw std::invalid_argument("assemble: missing action entry for (" +
                                            sd.fiber_generators[x] + ", " +
                                            sd.base.generators[g] + ")");
            // g^-1 x g = w  becomes the relator  g^-1 x g w^-1.
            Word rel;
            rel.append(static_cast<int>(g), -1);
            rel.append(static_cast<int>(nb + x), 1);
            rel.append(static_cast<int>(g), 1);
            rel = word_concat(rel, word_inverse(shift_fiber(*sd.action[x][g])));
            p.relators.push_back(rel);
        }
    }
    return p;
}

KappaReport kappa_verify(const Presentation& p, const std::map<std::string, long>& weights) {
    std::vector<long> w(p.generators.size());
    for (size_t i = 0; i < p.generators.size(); ++i) {
        auto it = weights.find(p.generators[i]);
        if (it == weights.end())
            throw std::invalid_argument("kappa_verify: no weight for generator \"" +
                                        p.generators[i] + "\"");
        w[i] = it->second;
    }
    KappaReport rep;
    rep.is_homomorphism = true;
    for (size_t r = 0; r < p.relators.size(); ++r) {
        long s = 0;
        for (const auto& [g, e] : p.relators[r].syllables) s += w[g] * e;
        if (s != 0) {
            rep.is_homomorphism = false;
            rep.failing_relators.push_back(static_cast<int>(r));
        }
    }
    for (long wi : w)
        if (wi != 0) rep.nontrivial_image = true;
    return rep;
}

namespace {

json word_to_json(const Word& w, const std::vector<std::string>& gens) {
    json arr = json::array();
    for (const auto& [g, e] : w.syllables) arr.push_back(json::array({gens.at(g), e}));
    return arr;
}

Word word_from_json(const json& arr, const Presentation& p) {
    Word w;
    for (const auto& syl : arr) {
        if (!syl.is_array() || syl.size() != 2)
            throw std::invalid_argument("presentation json: bad syllable");
        int g = p.generator_index(syl.at(0).get<std::string>());
        if (g < 0)
            throw std::invalid_argument("presentation json: unknown generator \"" +
                                        syl.at(0).get<std::string>() + "\"");
        w.append(g, syl.at(1).get<long>());
    }
    return w;
}

}  // namespace

std::string presentation_to_json_text(const Presentation& p) {
    json j;
    j["generators"] = p.generators;
    json rels = json::array();
    for (const Word& w : p.relators) rels.push_back(word_to_json(w, p.generators));
    j["relators"] = rels;
    if (!p.origin.empty()) j["origin"] = p.origin;
    return j.dump(2);
}

Presentation presentation_from_json_text(const std::string& text) {
    json j = json::parse(text);
    Presentation p;
    p.generators = j.at("generators").get<std::vector<std::string>>();
    p.origin = j.value("origin", "");

    if (j.contains("fiber_generators")) {
        // Semidirect schema: base presentation plus fiber data.
        SemidirectData sd;
        sd.base = p;
        for (const auto& r : j.value("relators", json::array()))
            sd.base.relators.push_back(word_from_json(r, sd.base));
        sd.fiber_generators = j.at("fiber_generators").get<std::vector<std::string>>();

        Presentation fiber_scope;
        fiber_scope.generators = sd.fiber_generators;
        const json& act = j.at("action");
        sd.action.resize(sd.fiber_generators.size());
        for (size_t x = 0; x < sd.fiber_generators.size(); ++x) {
            sd.action[x].resize(sd.base.generators.size());
            const json& row = act.at(sd.fiber_generators[x]);
            for (size_t g = 0; g < sd.base.generators.size(); ++g) {
                if (row.contains(sd.base.generators[g]))
                    sd.action[x][g] = word_from_json(row.at(sd.base.generators[g]), fiber_scope);
            }
        }
        for (const auto& r : j.value("fiber_relators", json::array()))
            sd.fiber_relators.push_back(word_from_json(r, fiber_scope));
        Presentation out = assemble(sd);
        out.origin = p.origin;
        return out;
    }

    for (const auto& r : j.at("relators")) p.relators.push_back(word_from_json(r, p));
    return p;
}

}  // namespace unitforge
