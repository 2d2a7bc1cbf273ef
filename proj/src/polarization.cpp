#include "neuralpol/polarization.hpp"

#include <algorithm>

namespace neuralpol {

std::vector<Polynomial> DepolarizationIdeal::generators() const {
    const AmbientRing ring = AmbientRing::polar(n);
    std::vector<Polynomial> gens;
    for (int i = 1; i <= n; ++i) {
        gens.push_back(Polynomial::from_terms(ring, {Monomial::variable(ring, ring.x_position(i)),
                                                     Monomial::variable(ring, ring.y_position(i)),
                                                     Monomial(ring)}));
    }
    return gens;
}

Monomial polarize(const Pseudomonomial& f) {
    return Monomial::squarefree(f.ring().polar_ring(), f.sigma(), f.tau());
}

SqfIdeal polarize(const PsmIdeal& ideal) {
    if (!ideal.canonical) throw Error("polarization is defined through the canonical form");
    SqfIdeal out{ideal.ring.polar_ring(), {}, true};
    for (const auto& f : ideal.generators) out.generators.push_back(polarize(f));
    return out;
}

SqfIdeal polarize_ideal(const Code& c) { return polarize(canonical_form(c)); }

VariableMask polarize(const PsmPrime& p) {
    const int n = p.alpha().n();
    return p.alpha().zeros() | (p.alpha().ones() << n);
}

Monomial polarized_boolean_relation(AmbientRing polar_ring, int i) {
    if (!polar_ring.polarized()) throw Error("x_i*y_i lives in the polarized ring");
    const IndexSet bit = 1u << (i - 1);
    return Monomial::squarefree(polar_ring, bit, bit);
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a > b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    for (const auto& g : gens) {
        const bool redundant =
            std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return divides(k, g); });
        if (!redundant) kept.push_back(g);
    }
    return kept;
}

SqfIdeal polarize_vanishing_ideal(const Code& c) {
    SqfIdeal polar = polarize_ideal(c);
    std::vector<Monomial> gens = polar.generators;
    for (int i = 1; i <= c.n(); ++i) gens.push_back(polarized_boolean_relation(polar.ring, i));
    return {polar.ring, minimalize(std::move(gens)), true};
}

Polynomial depolarize(const Polynomial& p) {
    const AmbientRing& polar = p.ring();
    if (!polar.polarized()) throw Error("depolarization expects a polynomial in the polarized ring");
    const AmbientRing plain = polar.plain_ring();
    const int n = polar.n();
    Polynomial out(plain);
    for (const Monomial& term : p.terms()) {
        Monomial x_part(plain);
        for (int i = 1; i <= n; ++i) {
            for (int e = 0; e < term.exponent(polar.x_position(i)); ++e) {
                x_part = x_part * Monomial::variable(plain, plain.x_position(i));
            }
        }
        Polynomial image(x_part);
        for (int i = 1; i <= n; ++i) {
            const int e = term.exponent(polar.y_position(i));
            if (e == 0) continue;
            const Polynomial one_minus_x = Polynomial::from_terms(
                plain, {Monomial(plain), Monomial::variable(plain, plain.x_position(i))});
            for (int k = 0; k < e; ++k) image = image * one_minus_x;
        }
        out += image;
    }
    return out;
}

bool polarized_membership(const Pseudomonomial& f, const Code& c) {
    return polarized_membership(f, polarize_ideal(c));
}

bool polarized_membership(const Pseudomonomial& f, const SqfIdeal& polar) {
    const Monomial target = polarize(f);
    return std::any_of(polar.generators.begin(), polar.generators.end(),
                       [&](const Monomial& g) { return divides(g, target); });
}

bool in_monomial_prime(const Polynomial& p, VariableMask prime) {
    return std::all_of(p.terms().begin(), p.terms().end(),
                       [&](const Monomial& t) { return (t.support() & prime) != 0; });
}

}  // namespace neuralpol
