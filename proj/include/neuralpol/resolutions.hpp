#pragma once

// Free complexes over R or S: the Taylor complex, unit-entry minimization,
// the canonical resolution of a neural ideal, Betti tables and the Hochster
// oracle for Betti numbers of squarefree quotients.

#include <map>
#include <span>
#include <vector>

#include "neuralpol/codes.hpp"
#include "neuralpol/core_algebra.hpp"

namespace neuralpol {

struct MatrixEntry {
    std::size_t row;
    Polynomial value;
};

// Column-major sparse matrix with nonzero entries only, rows ascending.
class SparseMatrix {
public:
    SparseMatrix(AmbientRing ring, std::size_t rows, std::size_t cols);
    static SparseMatrix from_dense(AmbientRing ring, const std::vector<std::vector<Polynomial>>& rows);

    const AmbientRing& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }

    const std::vector<MatrixEntry>& column(std::size_t c) const { return columns_[c]; }
    Polynomial at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, Polynomial value);

    bool is_zero() const;
    std::vector<std::vector<Polynomial>> to_dense() const;

private:
    AmbientRing ring_;
    std::size_t rows_;
    std::vector<std::vector<MatrixEntry>> columns_;
};

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);

struct FreeComplex {
    AmbientRing ring;
    // ranks[i] = rank of F_i.
    std::vector<std::size_t> ranks;
    // differentials[i-1] is d_i : F_i -> F_{i-1}, a ranks[i-1] x ranks[i] matrix.
    std::vector<SparseMatrix> differentials;
    // Multidegree of each basis element, per F_i; empty when not multigraded.
    std::vector<std::vector<Monomial>> degrees;
    // Taylor subsets H behind each basis element e_H; empty when unknown.
    std::vector<std::vector<std::uint32_t>> labels;

    int length() const { return static_cast<int>(ranks.size()) - 1; }
    const SparseMatrix& d(int i) const { return differentials.at(static_cast<std::size_t>(i - 1)); }
    bool multigraded() const { return !degrees.empty(); }

    // Per homological degree: rank and the rows of d_i as polynomial strings.
    std::string to_string() const;
};

// Subsets H of each size in colexicographic order; d_i(e_H) sums
// (M_H / M_{H-h}) e_{H-h}, the signs being 1 over F2.
FreeComplex taylor_complex(AmbientRing ring, std::span<const Monomial> gens);

// Taylor complex of P(J_C), depolarized; a resolution of R/J_C.
FreeComplex taylor_resolution(const Code& c);

// Cancels unit entries (lowest homological degree first, then row-major)
// until every entry lies in the irrelevant ideal.
FreeComplex minimize(const FreeComplex& complex);

// Minimized Taylor complex of P(J_C) over S.
FreeComplex minimal_polarized_resolution(const Code& c);

// Replaces y_i by 1 - x_i in every entry; ranks and labels are kept.
FreeComplex depolarize(const FreeComplex& complex);

// Depolarized minimal resolution of P(J_C).
FreeComplex canonical_resolution(const Code& c);

// d_i o d_{i+1} = 0 for all i. Throws on shape mismatch.
bool verify_complex(const FreeComplex& complex);

struct BettiTable {
    std::vector<std::size_t> ranks;
    // graded[i][m] = number of basis elements of F_i in multidegree m.
    std::vector<std::map<Monomial, std::size_t>> graded;

    friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

BettiTable betti_table(const FreeComplex& complex);

// Betti numbers of S/I for squarefree I by Hochster's formula:
// beta_{i,W} = dim H~_{|W|-i-1}(Delta_W; F2).
BettiTable hochster_betti(AmbientRing ring, std::span<const Monomial> gens);

}  // namespace neuralpol
