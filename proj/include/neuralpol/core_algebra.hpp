#pragma once

// Exact F2 arithmetic: monomials, sparse polynomials and pseudomonomials over
// R = F2[x1..xn] or its polarization S = F2[x1..xn, y1..yn].

#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace neuralpol {

inline constexpr int kMaxNeurons = 16;
inline constexpr int kMaxVariables = 2 * kMaxNeurons;

// Subset of [n] packed as a bitmask: bit i-1 holds index i.
using IndexSet = std::uint32_t;

// Mask over variable positions: x_i at bit i-1, y_i at bit n+i-1.
using VariableMask = std::uint32_t;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RingMismatch : public Error {
public:
    RingMismatch() : Error("operands live in different rings") {}
};

std::vector<int> indices_of(IndexSet s);
IndexSet index_set(std::span<const int> indices);
IndexSet index_set(std::initializer_list<int> indices);
inline int cardinality(std::uint32_t mask) { return __builtin_popcount(mask); }
inline IndexSet all_indices(int n) { return n >= 32 ? ~0u : ((1u << n) - 1u); }

// "{1, 3}"
std::string format_index_set(IndexSet s);

class AmbientRing {
public:
    static AmbientRing plain(int n) { return AmbientRing(n, false); }
    static AmbientRing polar(int n) { return AmbientRing(n, true); }

    int n() const { return n_; }
    bool polarized() const { return polarized_; }
    int num_variables() const { return polarized_ ? 2 * n_ : n_; }
    AmbientRing plain_ring() const { return AmbientRing(n_, false); }
    AmbientRing polar_ring() const { return AmbientRing(n_, true); }

    // x1..xn, then y1..yn. Positions are 0-based.
    std::string variable_name(int position) const;
    int x_position(int i) const { return i - 1; }
    int y_position(int i) const;

    friend bool operator==(const AmbientRing&, const AmbientRing&) = default;
    friend auto operator<=>(const AmbientRing&, const AmbientRing&) = default;

private:
    AmbientRing(int n, bool polarized);

    int n_;
    bool polarized_;
};

inline void require_same_ring(const AmbientRing& a, const AmbientRing& b) {
    if (a != b) throw RingMismatch();
}

class Monomial {
public:
    explicit Monomial(AmbientRing ring) : ring_(ring) {}

    static Monomial variable(AmbientRing ring, int position);
    // prod_{i in xs} x_i * prod_{j in ys} y_j; ys must be empty in the plain ring.
    static Monomial squarefree(AmbientRing ring, IndexSet xs, IndexSet ys = 0);
    static Monomial from_support(AmbientRing ring, VariableMask support);

    const AmbientRing& ring() const { return ring_; }
    int exponent(int position) const { return exps_[position]; }
    int degree() const;
    bool is_one() const;
    bool is_squarefree() const;

    VariableMask support() const;
    IndexSet xs() const;
    IndexSet ys() const;

    std::string to_string() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);

    // Lex order with x1 > x2 > ... > xn > y1 > ... > yn.
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.ring_ == b.ring_ && std::memcmp(a.exps_.data(), b.exps_.data(), kMaxVariables) == 0;
    }
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.ring_ <=> b.ring_; c != 0) return c;
        return std::memcmp(a.exps_.data(), b.exps_.data(), kMaxVariables) <=> 0;
    }

private:
    AmbientRing ring_;
    std::array<std::uint8_t, kMaxVariables> exps_{};

    friend Monomial lcm(const Monomial&, const Monomial&);
    friend Monomial quotient(const Monomial&, const Monomial&);
};

// m1 | m2, exponentwise.
bool divides(const Monomial& m1, const Monomial& m2);
Monomial lcm(const Monomial& m1, const Monomial& m2);
// num / den; throws unless den divides num.
Monomial quotient(const Monomial& num, const Monomial& den);

class Polynomial {
public:
    explicit Polynomial(AmbientRing ring) : ring_(ring) {}
    explicit Polynomial(const Monomial& m) : ring_(m.ring()), terms_{m} {}

    static Polynomial one(AmbientRing ring) { return Polynomial(Monomial(ring)); }
    // Equal monomials cancel in pairs.
    static Polynomial from_terms(AmbientRing ring, std::vector<Monomial> terms);

    const AmbientRing& ring() const { return ring_; }
    // Strictly descending in lex order.
    std::span<const Monomial> terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_.front().is_one(); }
    std::size_t size() const { return terms_.size(); }
    bool has_constant_term() const { return !terms_.empty() && terms_.back().is_one(); }

    // Value at a 0/1 point given as a variable mask.
    bool evaluate(VariableMask point) const;

    std::string to_string() const;

    Polynomial& operator+=(const Polynomial& other);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Monomial& m);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    AmbientRing ring_;
    std::vector<Monomial> terms_;
};

// prod_{i in sigma} x_i * prod_{j in tau} (1 - x_j), sigma and tau disjoint.
class Pseudomonomial {
public:
    Pseudomonomial(AmbientRing ring, IndexSet sigma, IndexSet tau);
    static Pseudomonomial one(AmbientRing ring) { return {ring, 0, 0}; }

    const AmbientRing& ring() const { return ring_; }
    IndexSet sigma() const { return sigma_; }
    IndexSet tau() const { return tau_; }
    int degree() const { return cardinality(sigma_) + cardinality(tau_); }
    bool is_one() const { return sigma_ == 0 && tau_ == 0; }

    // Value at a 0/1 word (bit i-1 = coordinate i).
    bool evaluate(IndexSet word) const {
        return (word & sigma_) == sigma_ && (word & tau_) == 0;
    }

    // "(1-x1)*x3"
    std::string to_string() const;

    friend bool operator==(const Pseudomonomial&, const Pseudomonomial&) = default;

private:
    AmbientRing ring_;
    IndexSet sigma_;
    IndexSet tau_;
};

bool divides(const Pseudomonomial& f, const Pseudomonomial& g);
Polynomial to_polynomial(const Pseudomonomial& f);

}  // namespace neuralpol
