#pragma once

// Neural ideals J_C: generators, canonical form, pseudomonomial membership,
// the pseudomonomial primary decomposition and receptive-field relations.

#include <vector>

#include "neuralpol/codes.hpp"
#include "neuralpol/core_algebra.hpp"

namespace neuralpol {

struct PsmIdeal {
    AmbientRing ring;
    std::vector<Pseudomonomial> generators;
    // True when `generators` is exactly the set of minimal pseudomonomials.
    bool canonical = false;

    bool is_zero() const { return generators.empty(); }
};

// The prime p_alpha: x_i for alpha_i = 0 and (1 - x_i) for alpha_i = 1.
class PsmPrime {
public:
    explicit PsmPrime(IntervalSpec alpha) : alpha_(alpha) {}

    const IntervalSpec& alpha() const { return alpha_; }
    bool is_zero_ideal() const { return alpha_.fixed_count() == 0; }
    std::vector<Pseudomonomial> generators() const;

    // "<x3>", "<x1, 1-x2, 1-x3>", "<0>"
    std::string to_string() const;

    friend bool operator==(const PsmPrime&, const PsmPrime&) = default;

private:
    IntervalSpec alpha_;
};

// Orders by degree, then sigma, then tau as ascending index lists.
bool canonical_order(const Pseudomonomial& a, const Pseudomonomial& b);

Pseudomonomial indicator_generator(Word c, int n);

// One indicator per non-codeword. The empty code gives the unit ideal <1>.
PsmIdeal neural_ideal_generators(const Code& c);

// f lies in J_C iff the interval where f = 1 misses the code.
bool psm_in_ideal(const Pseudomonomial& f, const Code& c);

PsmIdeal canonical_form(const Code& c);

// One prime per maximal interval; the full code gives the zero ideal, the empty
// code an empty intersection (the unit ideal).
std::vector<PsmPrime> primary_decomposition(const Code& c);

// Requires a canonical ideal.
bool ideal_in_prime(const PsmIdeal& ideal, const PsmPrime& p);

struct ReceptiveFieldRelation {
    IndexSet sigma = 0;
    IndexSet tau = 0;
    // intersection of U_i (i in sigma) is contained in the union of U_j (j in tau)
    bool containment_holds = false;
    // the containment fails once any single index is dropped from sigma or tau
    bool minimal = false;

    bool verified() const { return containment_holds && minimal; }
    // "U3 <= U1", "U1 & U2 <= {}", "X <= U1"
    std::string to_string() const;
};

// One relation per canonical-form element of the cover's code, each
// re-checked directly on the cover's points.
std::vector<ReceptiveFieldRelation> receptive_field_relations(const Cover& cover);

}  // namespace neuralpol
