#include "neuralpol/neural_ideal.hpp"

#include <algorithm>

namespace neuralpol {

namespace {

AmbientRing ring_of(const Code& c) {
    if (c.n() < 1) throw Error("neural ideals need at least one neuron");
    return AmbientRing::plain(c.n());
}

bool indices_less(IndexSet a, IndexSet b) {
    const auto ia = indices_of(a);
    const auto ib = indices_of(b);
    return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

}  // namespace

std::vector<Pseudomonomial> PsmPrime::generators() const {
    const AmbientRing ring = AmbientRing::plain(alpha_.n());
    std::vector<Pseudomonomial> gens;
    for (int i = 1; i <= alpha_.n(); ++i) {
        const IndexSet bit = 1u << (i - 1);
        if (alpha_.zeros() & bit) gens.emplace_back(ring, bit, 0);
        if (alpha_.ones() & bit) gens.emplace_back(ring, 0, bit);
    }
    return gens;
}

std::string PsmPrime::to_string() const {
    if (is_zero_ideal()) return "<0>";
    std::string out = "<";
    bool first = true;
    for (const auto& g : generators()) {
        if (!first) out += ", ";
        first = false;
        out += g.sigma() ? g.to_string() : "1-x" + std::to_string(indices_of(g.tau()).front());
    }
    return out + ">";
}

bool canonical_order(const Pseudomonomial& a, const Pseudomonomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.sigma() != b.sigma()) return indices_less(a.sigma(), b.sigma());
    return indices_less(a.tau(), b.tau());
}

Pseudomonomial indicator_generator(Word c, int n) {
    const AmbientRing ring = AmbientRing::plain(n);
    if ((c & ~all_indices(n)) != 0) throw Error("codeword longer than n");
    return {ring, c, all_indices(n) & ~c};
}

PsmIdeal neural_ideal_generators(const Code& c) {
    const AmbientRing ring = ring_of(c);
    PsmIdeal ideal{ring, {}, false};
    if (c.empty()) {
        ideal.generators.push_back(Pseudomonomial::one(ring));
        return ideal;
    }
    // Lexicographic order of the missing words.
    const Code complement = [&] {
        std::vector<Word> missing;
        for (Word w = 0; w <= all_indices(c.n()); ++w) {
            if (!c.contains(w)) missing.push_back(w);
        }
        return Code(c.n(), std::move(missing));
    }();
    for (Word w : complement.words()) ideal.generators.push_back(indicator_generator(w, c.n()));
    return ideal;
}

bool psm_in_ideal(const Pseudomonomial& f, const Code& c) {
    require_same_ring(f.ring(), ring_of(c));
    const IntervalSpec support(c.n(), f.tau(), f.sigma());
    return std::none_of(c.words().begin(), c.words().end(),
                        [&](Word w) { return support.contains(w); });
}

PsmIdeal canonical_form(const Code& c) {
    const AmbientRing ring = ring_of(c);
    const int n = c.n();
    const IndexSet all = all_indices(n);

    PsmIdeal ideal{ring, {}, true};
    // Enumerate disjoint pairs (sigma, tau): sigma ranges over subsets, tau over
    // subsets of the complement.
    for (IndexSet sigma = 0; sigma <= all; ++sigma) {
        const IndexSet rest = all & ~sigma;
        for (IndexSet tau = rest;; tau = (tau - 1) & rest) {
            const Pseudomonomial f(ring, sigma, tau);
            if (psm_in_ideal(f, c)) {
                // Membership is monotone under divisibility, so f is minimal
                // iff every divisor with one factor fewer falls outside.
                bool minimal = true;
                for (int i : indices_of(sigma | tau)) {
                    const IndexSet bit = 1u << (i - 1);
                    if (psm_in_ideal(Pseudomonomial(ring, sigma & ~bit, tau & ~bit), c)) {
                        minimal = false;
                        break;
                    }
                }
                if (minimal) ideal.generators.push_back(f);
            }
            if (tau == 0) break;
        }
    }
    std::sort(ideal.generators.begin(), ideal.generators.end(), canonical_order);
    return ideal;
}

std::vector<PsmPrime> primary_decomposition(const Code& c) {
    ring_of(c);
    std::vector<PsmPrime> primes;
    for (const auto& alpha : maximal_intervals(c)) primes.emplace_back(alpha);
    return primes;
}

bool ideal_in_prime(const PsmIdeal& ideal, const PsmPrime& p) {
    if (!ideal.canonical) throw Error("ideal_in_prime needs an ideal in canonical form");
    require_same_ring(ideal.ring, AmbientRing::plain(p.alpha().n()));
    const IntervalSpec& alpha = p.alpha();
    return std::all_of(ideal.generators.begin(), ideal.generators.end(), [&](const Pseudomonomial& f) {
        return (f.sigma() & alpha.zeros()) != 0 || (f.tau() & alpha.ones()) != 0;
    });
}

// ---------------------------------------------------------------------------

std::string ReceptiveFieldRelation::to_string() const {
    auto join = [](IndexSet s, const char* op) {
        std::string out;
        for (int i : indices_of(s)) {
            if (!out.empty()) out += op;
            out += "U" + std::to_string(i);
        }
        return out;
    };
    const std::string lhs = sigma ? join(sigma, " & ") : "X";
    const std::string rhs = tau ? join(tau, " | ") : "{}";
    return lhs + " <= " + rhs;
}

namespace {

bool cover_containment(const Cover& cover, IndexSet sigma, IndexSet tau) {
    for (const auto& p : cover.points) {
        bool in_all = true;
        bool in_any = false;
        for (int i = 1; i <= cover.n(); ++i) {
            const bool member = cover.sets[static_cast<std::size_t>(i - 1)].contains(p);
            if ((sigma & (1u << (i - 1))) && !member) in_all = false;
            if ((tau & (1u << (i - 1))) && member) in_any = true;
        }
        if (in_all && !in_any) return false;
    }
    return true;
}

}  // namespace

std::vector<ReceptiveFieldRelation> receptive_field_relations(const Cover& cover) {
    const Code code = code_of_cover(cover);
    std::vector<ReceptiveFieldRelation> out;
    for (const auto& f : canonical_form(code).generators) {
        ReceptiveFieldRelation rel;
        rel.sigma = f.sigma();
        rel.tau = f.tau();
        rel.containment_holds = cover_containment(cover, rel.sigma, rel.tau);
        rel.minimal = true;
        for (int i : indices_of(rel.sigma | rel.tau)) {
            const IndexSet bit = 1u << (i - 1);
            if (cover_containment(cover, rel.sigma & ~bit, rel.tau & ~bit)) rel.minimal = false;
        }
        out.push_back(rel);
    }
    return out;
}

}  // namespace neuralpol
