#pragma once

// Stanley-Reisner theory for the polarized neural ideal: minimal primes of
// squarefree ideals, the polar complex, the quotient-code interval criterion
// for monomial primes over P(J_C), F2 homology and Cohen-Macaulayness.

#include <set>
#include <string>
#include <vector>

#include "neuralpol/codes.hpp"
#include "neuralpol/core_algebra.hpp"

namespace neuralpol {

// A set W of ring variables, standing for the monomial prime q_W.
class VariableSubset {
public:
    VariableSubset(AmbientRing ring, VariableMask mask);

    const AmbientRing& ring() const { return ring_; }
    VariableMask mask() const { return mask_; }
    int size() const { return cardinality(mask_); }

    // Partition of [n] for the polarized ring: x_i only, y_i only, both, neither.
    IndexSet x_only() const;
    IndexSet y_only() const;
    IndexSet both() const;
    IndexSet neither() const;

    std::vector<std::string> names() const;
    std::string to_string() const;  // "<x1, y2, y3>"

    friend bool operator==(const VariableSubset&, const VariableSubset&) = default;

private:
    AmbientRing ring_;
    VariableMask mask_;
};

// By size, then lexicographic on variable positions.
bool subset_order(const VariableSubset& a, const VariableSubset& b);

// Minimal transversals of the generator supports, i.e. the minimal primes.
// No generators gives the single prime <0> (W empty); the generator 1 gives none.
std::vector<VariableSubset> minimal_primes(AmbientRing ring, std::span<const Monomial> gens);

// Pairs (i, j) such that primes[i] strictly contains primes[j].
std::vector<std::pair<std::size_t, std::size_t>> redundant_primes(std::span<const VariableSubset> primes);

class SimplicialComplex {
public:
    // Faces may be listed redundantly; only the inclusion-maximal ones are kept.
    // An empty face list is the void complex, {0} is the complex {empty set}.
    SimplicialComplex(std::vector<std::string> vertices, std::vector<VariableMask> faces);

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<VariableMask>& facets() const { return facets_; }
    bool is_void() const { return facets_.empty(); }
    // -1 for {empty set}, -2 for the void complex.
    int dimension() const;
    bool is_face(VariableMask f) const;

    // Every face, including the empty face unless void, ordered by size then mask.
    std::vector<VariableMask> faces() const;
    SimplicialComplex link(VariableMask face) const;
    SimplicialComplex cone(const std::string& apex) const;

    std::vector<std::string> facet_names(VariableMask facet) const;
    std::string to_string() const;

private:
    std::vector<std::string> vertices_;
    std::vector<VariableMask> facets_;
};

// F is a face iff no generator support lies inside F. The vertices are all
// ring variables.
SimplicialComplex stanley_reisner_complex(AmbientRing ring, std::span<const Monomial> gens);

// Stanley-Reisner complex of <x_i y_i> + P(J_C) on the 2n polarized variables.
SimplicialComplex polar_complex(const Code& c);

// The facet {x_i : c_i = 1} u {y_j : c_j = 0} of a codeword.
VariableMask codeword_facet(Word c, int n);

// V_W (0 on x(W), 1 on y(W), free on n(W)) lies in the quotient code C/b(W).
bool interval_of_subset(const VariableSubset& w, const Code& c);

// V_W over the coordinates of C/b(W), '-' marking deleted coordinates: "-1*".
std::string subset_interval_string(const VariableSubset& w);

// Every W with q_W containing P(J_C), by the quotient-code interval criterion.
std::vector<VariableSubset> primes_over_polar(const Code& c, bool minimal_only);

// Reduced homology over F2 from an explicit face list (empty face included
// unless the complex is void). Entry k holds degree k-1.
std::vector<std::size_t> reduced_homology_of_faces(std::span<const VariableMask> faces);

std::size_t reduced_homology(const SimplicialComplex& k, int degree);
// Degrees -1 .. dim; entry k holds degree k-1.
std::vector<std::size_t> reduced_homology_all(const SimplicialComplex& k);
// Alternating face count, empty face weighted -1.
long reduced_euler_characteristic(const SimplicialComplex& k);

// Reisner: every link has vanishing reduced homology below its dimension.
bool is_cohen_macaulay(const SimplicialComplex& k);

enum class Side { neural, polar };

// Neural: n - #fixed over maximal intervals. Polar: 2n - |W| over minimal
// primes of P(J_C).
std::set<int> krull_dimensions(const Code& c, Side side);

bool is_cm_polar(const Code& c);

enum class CmVerdict { cm, inconclusive };
const char* to_string(CmVerdict v);

// Cohen-Macaulayness of R/J_C is implied by a CM polarization or by dimension
// zero; nothing else is decided.
CmVerdict cm_report_neural(const Code& c);

// Each x_i + y_i - 1 has a constant term, so it avoids every minimal prime of
// P(J_C): the first step of the depolarization regular sequence.
bool depolarization_avoids_minimal_primes(const Code& c);

}  // namespace neuralpol
