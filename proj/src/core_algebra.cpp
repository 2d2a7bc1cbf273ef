#include "neuralpol/core_algebra.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace neuralpol {

std::vector<int> indices_of(IndexSet s) {
    std::vector<int> out;
    for (int i = 0; s != 0; ++i, s >>= 1) {
        if (s & 1u) out.push_back(i + 1);
    }
    return out;
}

IndexSet index_set(std::span<const int> indices) {
    IndexSet s = 0;
    for (int i : indices) {
        if (i < 1 || i > 32) throw Error("index out of range: " + std::to_string(i));
        s |= 1u << (i - 1);
    }
    return s;
}

IndexSet index_set(std::initializer_list<int> indices) {
    return index_set(std::span<const int>(indices.begin(), indices.size()));
}

std::string format_index_set(IndexSet s) {
    std::string out = "{";
    bool first = true;
    for (int i : indices_of(s)) {
        if (!first) out += ", ";
        out += std::to_string(i);
        first = false;
    }
    return out + "}";
}

AmbientRing::AmbientRing(int n, bool polarized) : n_(n), polarized_(polarized) {
    if (n < 1 || n > kMaxNeurons) {
        throw Error("neuron count must lie in [1, " + std::to_string(kMaxNeurons) + "], got " +
                    std::to_string(n));
    }
}

std::string AmbientRing::variable_name(int position) const {
    if (position < 0 || position >= num_variables()) throw Error("variable position out of range");
    if (position < n_) return "x" + std::to_string(position + 1);
    return "y" + std::to_string(position - n_ + 1);
}

int AmbientRing::y_position(int i) const {
    if (!polarized_) throw Error("y variables exist only in the polarized ring");
    return n_ + i - 1;
}

// ---------------------------------------------------------------------------

Monomial Monomial::variable(AmbientRing ring, int position) {
    if (position < 0 || position >= ring.num_variables()) {
        throw Error("variable position out of range");
    }
    Monomial m(ring);
    m.exps_[position] = 1;
    return m;
}

Monomial Monomial::squarefree(AmbientRing ring, IndexSet xs, IndexSet ys) {
    const IndexSet range = all_indices(ring.n());
    if ((xs & ~range) != 0 || (ys & ~range) != 0) throw Error("index out of range");
    if (ys != 0 && !ring.polarized()) throw Error("y variables exist only in the polarized ring");
    Monomial m(ring);
    for (int i : indices_of(xs)) m.exps_[ring.x_position(i)] = 1;
    for (int j : indices_of(ys)) m.exps_[ring.y_position(j)] = 1;
    return m;
}

Monomial Monomial::from_support(AmbientRing ring, VariableMask support) {
    if ((support & ~all_indices(ring.num_variables())) != 0) throw Error("variable out of range");
    Monomial m(ring);
    for (int v = 0; v < ring.num_variables(); ++v) {
        if (support & (1u << v)) m.exps_[v] = 1;
    }
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (auto e : exps_) d += e;
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
    return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e <= 1; });
}

VariableMask Monomial::support() const {
    VariableMask s = 0;
    for (int v = 0; v < ring_.num_variables(); ++v) {
        if (exps_[v] != 0) s |= 1u << v;
    }
    return s;
}

IndexSet Monomial::xs() const { return support() & all_indices(ring_.n()); }

IndexSet Monomial::ys() const {
    return ring_.polarized() ? (support() >> ring_.n()) & all_indices(ring_.n()) : 0;
}

std::string Monomial::to_string() const {
    std::string out;
    for (int v = 0; v < ring_.num_variables(); ++v) {
        if (exps_[v] == 0) continue;
        if (!out.empty()) out += '*';
        out += ring_.variable_name(v);
        if (exps_[v] > 1) out += '^' + std::to_string(exps_[v]);
    }
    return out.empty() ? "1" : out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    require_same_ring(a.ring_, b.ring_);
    Monomial m(a.ring_);
    for (int v = 0; v < a.ring_.num_variables(); ++v) {
        const int e = a.exps_[v] + b.exps_[v];
        if (e > 255) throw Error("exponent overflow");
        m.exps_[v] = static_cast<std::uint8_t>(e);
    }
    return m;
}

bool divides(const Monomial& m1, const Monomial& m2) {
    require_same_ring(m1.ring(), m2.ring());
    for (int v = 0; v < m1.ring().num_variables(); ++v) {
        if (m1.exponent(v) > m2.exponent(v)) return false;
    }
    return true;
}

Monomial lcm(const Monomial& m1, const Monomial& m2) {
    require_same_ring(m1.ring_, m2.ring_);
    Monomial m(m1.ring_);
    for (int v = 0; v < m1.ring_.num_variables(); ++v) m.exps_[v] = std::max(m1.exps_[v], m2.exps_[v]);
    return m;
}

Monomial quotient(const Monomial& num, const Monomial& den) {
    if (!divides(den, num)) throw Error(den.to_string() + " does not divide " + num.to_string());
    Monomial m(num.ring_);
    for (int v = 0; v < num.ring_.num_variables(); ++v) {
        m.exps_[v] = static_cast<std::uint8_t>(num.exps_[v] - den.exps_[v]);
    }
    return m;
}

// ---------------------------------------------------------------------------

namespace {

// Sorts descending and drops pairs of equal terms.
void normalize(std::vector<Monomial>& terms) {
    std::sort(terms.begin(), terms.end(), std::greater<>());
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i]) ++j;
        if ((j - i) % 2 == 1) terms[out++] = terms[i];
        i = j;
    }
    terms.erase(terms.begin() + static_cast<std::ptrdiff_t>(out), terms.end());
}

}  // namespace

Polynomial Polynomial::from_terms(AmbientRing ring, std::vector<Monomial> terms) {
    for (const auto& t : terms) require_same_ring(ring, t.ring());
    Polynomial p(ring);
    normalize(terms);
    p.terms_ = std::move(terms);
    return p;
}

bool Polynomial::evaluate(VariableMask point) const {
    bool value = false;
    for (const auto& t : terms_) {
        if ((t.support() & point) == t.support()) value = !value;
    }
    return value;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& t : terms_) {
        if (!out.empty()) out += " + ";
        out += t.to_string();
    }
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    require_same_ring(ring_, other.ring_);
    std::vector<Monomial> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() && b != other.terms_.end()) {
        if (*a == *b) {
            ++a;
            ++b;
        } else if (*a > *b) {
            merged.push_back(*a++);
        } else {
            merged.push_back(*b++);
        }
    }
    merged.insert(merged.end(), a, terms_.end());
    merged.insert(merged.end(), b, other.terms_.end());
    terms_ = std::move(merged);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_);
    if (b.terms_.size() == 1) return a * b.terms_.front();
    if (a.terms_.size() == 1) return b * a.terms_.front();
    std::vector<Monomial> products;
    products.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_) {
        for (const auto& t : b.terms_) products.push_back(s * t);
    }
    return Polynomial::from_terms(a.ring_, std::move(products));
}

Polynomial operator*(const Polynomial& a, const Monomial& m) {
    require_same_ring(a.ring_, m.ring());
    Polynomial p(a.ring_);
    p.terms_.reserve(a.terms_.size());
    // Multiplying by a monomial preserves lex order and distinctness.
    for (const auto& t : a.terms_) p.terms_.push_back(t * m);
    return p;
}

// ---------------------------------------------------------------------------

Pseudomonomial::Pseudomonomial(AmbientRing ring, IndexSet sigma, IndexSet tau)
    : ring_(ring), sigma_(sigma), tau_(tau) {
    if (ring.polarized()) throw Error("pseudomonomials live in the unpolarized ring");
    if ((sigma & tau) != 0) throw Error("sigma and tau must be disjoint");
    const IndexSet range = all_indices(ring.n());
    if ((sigma & ~range) != 0 || (tau & ~range) != 0) throw Error("index out of range");
}

std::string Pseudomonomial::to_string() const {
    std::string out;
    for (int i = 1; i <= ring_.n(); ++i) {
        const IndexSet bit = 1u << (i - 1);
        if (!(sigma_ & bit) && !(tau_ & bit)) continue;
        if (!out.empty()) out += '*';
        out += (sigma_ & bit) ? "x" + std::to_string(i) : "(1-x" + std::to_string(i) + ")";
    }
    return out.empty() ? "1" : out;
}

bool divides(const Pseudomonomial& f, const Pseudomonomial& g) {
    require_same_ring(f.ring(), g.ring());
    return (f.sigma() & ~g.sigma()) == 0 && (f.tau() & ~g.tau()) == 0;
}

Polynomial to_polynomial(const Pseudomonomial& f) {
    const AmbientRing& ring = f.ring();
    // Over F2, (1 - x_j) = 1 + x_j; expand over subsets of tau.
    std::vector<Monomial> terms;
    const IndexSet tau = f.tau();
    for (IndexSet sub = tau;; sub = (sub - 1) & tau) {
        terms.push_back(Monomial::squarefree(ring, f.sigma() | sub));
        if (sub == 0) break;
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace neuralpol
