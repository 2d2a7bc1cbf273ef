#include "serialize.hpp"

namespace neuralpol::io {

json document(const std::string& kind) { return json{{"schema", "neuralpol." + kind + "/1"}}; }

json to_json(const Pseudomonomial& f) {
    return {{"pos", indices_of(f.sigma())}, {"neg", indices_of(f.tau())}};
}

json to_json(const PsmPrime& p) {
    return {{"zero", indices_of(p.alpha().zeros())}, {"one", indices_of(p.alpha().ones())}};
}

json to_json(const Monomial& m) { return {{"x", indices_of(m.xs())}, {"y", indices_of(m.ys())}}; }

json to_json(const VariableSubset& w) {
    json j{{"vars", w.names()}};
    if (w.ring().polarized()) {
        j["xW"] = indices_of(w.x_only());
        j["yW"] = indices_of(w.y_only());
        j["bW"] = indices_of(w.both());
        j["nW"] = indices_of(w.neither());
    }
    return j;
}

json to_json(const SimplicialComplex& k) {
    json facets = json::array();
    for (auto f : k.facets()) facets.push_back(k.facet_names(f));
    return {{"vertices", k.vertices()}, {"facets", facets}};
}

json to_json(const FreeComplex& fc) {
    json diffs = json::array();
    for (const auto& m : fc.differentials) {
        json rows = json::array();
        for (const auto& row : m.to_dense()) {
            json r = json::array();
            for (const auto& p : row) r.push_back(p.to_string());
            rows.push_back(r);
        }
        diffs.push_back(rows);
    }
    return {{"ring", {{"n", fc.ring.n()}, {"polarized", fc.ring.polarized()}}},
            {"ranks", fc.ranks},
            {"differentials", diffs}};
}

json to_json(const Code& c) {
    std::vector<std::string> words;
    for (Word w : c.words()) words.push_back(format_word(w, c.n()));
    return {{"n", c.n()}, {"words", words}};
}

}  // namespace neuralpol::io
