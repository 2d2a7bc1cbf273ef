#pragma once

// Polarization: pseudomonomials become squarefree monomials in
// S = F2[x1..xn, y1..yn] by sending each factor (1 - x_j) to y_j. The
// depolarization map substitutes y_i -> 1 - x_i back.

#include <vector>

#include "neuralpol/core_algebra.hpp"
#include "neuralpol/neural_ideal.hpp"

namespace neuralpol {

struct SqfIdeal {
    AmbientRing ring;
    std::vector<Monomial> generators;
    // Generators pairwise non-dividing.
    bool minimal = false;
};

// D = <x_i + y_i - 1 : i in [n]>.
struct DepolarizationIdeal {
    int n = 1;
    std::vector<Polynomial> generators() const;
};

Monomial polarize(const Pseudomonomial& f);

// Requires a canonical ideal.
SqfIdeal polarize(const PsmIdeal& ideal);

// P(J_C), through the canonical form.
SqfIdeal polarize_ideal(const Code& c);

// The variable generators of P(p_alpha).
VariableMask polarize(const PsmPrime& p);

// x_i * y_i, the polarization of the Boolean relation x_i^2 - x_i. Used only
// for the polar complex.
Monomial polarized_boolean_relation(AmbientRing polar_ring, int i);

// <x_i y_i : i in [n]> + P(J_C), minimalized.
SqfIdeal polarize_vanishing_ideal(const Code& c);

// Substitutes y_i -> 1 + x_i (characteristic 2) and expands.
Polynomial depolarize(const Polynomial& p);

// Some generator of P(J_C) divides P(f).
bool polarized_membership(const Pseudomonomial& f, const Code& c);
bool polarized_membership(const Pseudomonomial& f, const SqfIdeal& polar);

// True iff every term of p is divisible by a variable of the prime q_W.
bool in_monomial_prime(const Polynomial& p, VariableMask prime);

// Drops generators divisible by another and sorts.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

}  // namespace neuralpol
