#include "neuralpol/simplicial.hpp"

#include <algorithm>
#include <unordered_map>

#include "neuralpol/polarization.hpp"

namespace neuralpol {

VariableSubset::VariableSubset(AmbientRing ring, VariableMask mask) : ring_(ring), mask_(mask) {
    if ((mask & ~all_indices(ring.num_variables())) != 0) throw Error("variable out of range");
}

IndexSet VariableSubset::x_only() const {
    return ring_.polarized() ? mask_ & ~(mask_ >> ring_.n()) & all_indices(ring_.n()) : mask_;
}

IndexSet VariableSubset::y_only() const {
    if (!ring_.polarized()) return 0;
    return (mask_ >> ring_.n()) & ~mask_ & all_indices(ring_.n());
}

IndexSet VariableSubset::both() const {
    if (!ring_.polarized()) return 0;
    return (mask_ >> ring_.n()) & mask_ & all_indices(ring_.n());
}

IndexSet VariableSubset::neither() const {
    return all_indices(ring_.n()) & ~(x_only() | y_only() | both());
}

std::vector<std::string> VariableSubset::names() const {
    std::vector<std::string> out;
    for (int v = 0; v < ring_.num_variables(); ++v) {
        if (mask_ & (1u << v)) out.push_back(ring_.variable_name(v));
    }
    return out;
}

std::string VariableSubset::to_string() const {
    if (mask_ == 0) return "<0>";
    std::string out = "<";
    bool first = true;
    for (const auto& name : names()) {
        if (!first) out += ", ";
        first = false;
        out += name;
    }
    return out + ">";
}

namespace {

// Lexicographic comparison of the ascending position lists of two masks.
bool mask_lex_less(std::uint32_t a, std::uint32_t b) {
    while (a != 0 && b != 0) {
        const int la = __builtin_ctz(a);
        const int lb = __builtin_ctz(b);
        if (la != lb) return la < lb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

}  // namespace

bool subset_order(const VariableSubset& a, const VariableSubset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return mask_lex_less(a.mask(), b.mask());
}

namespace {

void transversal_search(VariableMask chosen, std::span<const VariableMask> supports,
                        std::vector<VariableMask>& found) {
    for (VariableMask m : found) {
        if ((m & chosen) == m) return;  // cannot lead to a new minimal transversal
    }
    auto unhit = std::find_if(supports.begin(), supports.end(),
                              [&](VariableMask s) { return (s & chosen) == 0; });
    if (unhit == supports.end()) {
        found.push_back(chosen);
        return;
    }
    for (VariableMask rest = *unhit; rest != 0; rest &= rest - 1) {
        transversal_search(chosen | (rest & -rest), supports, found);
    }
}

}  // namespace

std::vector<VariableSubset> minimal_primes(AmbientRing ring, std::span<const Monomial> gens) {
    std::vector<VariableMask> supports;
    for (const auto& g : gens) {
        require_same_ring(ring, g.ring());
        if (!g.is_squarefree()) throw Error("minimal_primes expects squarefree generators");
        if (g.is_one()) return {};
        supports.push_back(g.support());
    }
    // Small supports first keeps the branching narrow.
    std::sort(supports.begin(), supports.end(),
              [](VariableMask a, VariableMask b) { return cardinality(a) < cardinality(b); });

    std::vector<VariableMask> found;
    transversal_search(0, supports, found);

    auto hits_all = [&](VariableMask w) {
        return std::all_of(supports.begin(), supports.end(), [&](VariableMask s) { return (s & w) != 0; });
    };
    std::vector<VariableSubset> out;
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    for (VariableMask w : found) {
        bool minimal = true;
        for (VariableMask rest = w; rest != 0 && minimal; rest &= rest - 1) {
            if (hits_all(w & ~(rest & -rest))) minimal = false;
        }
        if (minimal) out.emplace_back(ring, w);
    }
    std::sort(out.begin(), out.end(), subset_order);
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> redundant_primes(std::span<const VariableSubset> primes) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        for (std::size_t j = 0; j < primes.size(); ++j) {
            const VariableMask a = primes[i].mask();
            const VariableMask b = primes[j].mask();
            if (a != b && (a & b) == b) out.emplace_back(i, j);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertices, std::vector<VariableMask> faces)
    : vertices_(std::move(vertices)) {
    if (vertices_.size() > 32) throw Error("at most 32 vertices are supported");
    const VariableMask range = all_indices(static_cast<int>(vertices_.size()));
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    for (VariableMask f : faces) {
        if ((f & ~range) != 0) throw Error("face uses an unknown vertex");
        const bool dominated = std::any_of(faces.begin(), faces.end(), [&](VariableMask g) {
            return g != f && (g & f) == f;
        });
        if (!dominated) facets_.push_back(f);
    }
    std::sort(facets_.begin(), facets_.end(), mask_lex_less);
}

int SimplicialComplex::dimension() const {
    if (facets_.empty()) return -2;
    int d = -1;
    for (VariableMask f : facets_) d = std::max(d, cardinality(f) - 1);
    return d;
}

bool SimplicialComplex::is_face(VariableMask f) const {
    return std::any_of(facets_.begin(), facets_.end(), [&](VariableMask g) { return (g & f) == f; });
}

std::vector<VariableMask> SimplicialComplex::faces() const {
    std::vector<VariableMask> out;
    for (VariableMask facet : facets_) {
        for (VariableMask sub = facet;; sub = (sub - 1) & facet) {
            out.push_back(sub);
            if (sub == 0) break;
        }
    }
    std::sort(out.begin(), out.end(), [](VariableMask a, VariableMask b) {
        if (cardinality(a) != cardinality(b)) return cardinality(a) < cardinality(b);
        return a < b;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SimplicialComplex SimplicialComplex::link(VariableMask face) const {
    std::vector<VariableMask> faces;
    for (VariableMask f : facets_) {
        if ((f & face) == face) faces.push_back(f & ~face);
    }
    return {vertices_, std::move(faces)};
}

SimplicialComplex SimplicialComplex::cone(const std::string& apex) const {
    auto vertices = vertices_;
    vertices.push_back(apex);
    const VariableMask apex_bit = 1u << (vertices.size() - 1);
    std::vector<VariableMask> faces;
    for (VariableMask f : facets_) faces.push_back(f | apex_bit);
    return {std::move(vertices), std::move(faces)};
}

std::vector<std::string> SimplicialComplex::facet_names(VariableMask facet) const {
    std::vector<std::string> out;
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
        if (facet & (1u << v)) out.push_back(vertices_[v]);
    }
    return out;
}

std::string SimplicialComplex::to_string() const {
    std::string out;
    for (VariableMask f : facets_) {
        out += "{";
        bool first = true;
        for (const auto& name : facet_names(f)) {
            if (!first) out += ", ";
            first = false;
            out += name;
        }
        out += "}\n";
    }
    return out;
}

SimplicialComplex stanley_reisner_complex(AmbientRing ring, std::span<const Monomial> gens) {
    std::vector<std::string> vertices;
    for (int v = 0; v < ring.num_variables(); ++v) vertices.push_back(ring.variable_name(v));
    const VariableMask all = all_indices(ring.num_variables());
    std::vector<VariableMask> facets;
    for (const auto& p : minimal_primes(ring, gens)) facets.push_back(all & ~p.mask());
    return {std::move(vertices), std::move(facets)};
}

SimplicialComplex polar_complex(const Code& c) {
    const SqfIdeal ideal = polarize_vanishing_ideal(c);
    return stanley_reisner_complex(ideal.ring, ideal.generators);
}

VariableMask codeword_facet(Word c, int n) {
    const IndexSet all = all_indices(n);
    return (c & all) | ((all & ~c) << n);
}

// ---------------------------------------------------------------------------

namespace {

// The interval V_W inside the quotient code's coordinates.
IntervalSpec quotient_interval(const VariableSubset& w, const QuotientCode& q) {
    IndexSet zeros = 0, ones = 0;
    for (std::size_t k = 0; k < q.kept.size(); ++k) {
        const IndexSet bit = 1u << (q.kept[k] - 1);
        if (w.x_only() & bit) zeros |= 1u << k;
        if (w.y_only() & bit) ones |= 1u << k;
    }
    return {q.code.n(), zeros, ones};
}

}  // namespace

bool interval_of_subset(const VariableSubset& w, const Code& c) {
    if (!w.ring().polarized() || w.ring().n() != c.n()) throw RingMismatch();
    const QuotientCode q = quotient_code(c, w.both());
    return interval_in_code(quotient_interval(w, q), q.code);
}

std::string subset_interval_string(const VariableSubset& w) {
    std::string s;
    for (int i = 1; i <= w.ring().n(); ++i) {
        const IndexSet bit = 1u << (i - 1);
        s += (w.both() & bit) ? '-' : (w.x_only() & bit) ? '0' : (w.y_only() & bit) ? '1' : '*';
    }
    return s;
}

std::vector<VariableSubset> primes_over_polar(const Code& c, bool minimal_only) {
    if (c.n() < 1) throw Error("polar primes need at least one neuron");
    const AmbientRing ring = AmbientRing::polar(c.n());
    const VariableMask all = all_indices(ring.num_variables());
    std::vector<bool> contains(std::size_t{all} + 1, false);
    for (VariableMask w = 0;; ++w) {
        contains[w] = interval_of_subset(VariableSubset(ring, w), c);
        if (w == all) break;
    }
    std::vector<VariableSubset> out;
    for (VariableMask w = 0;; ++w) {
        if (contains[w]) {
            bool keep = true;
            if (minimal_only) {
                for (VariableMask rest = w; rest != 0 && keep; rest &= rest - 1) {
                    if (contains[w & ~(rest & -rest)]) keep = false;
                }
            }
            if (keep) out.emplace_back(ring, w);
        }
        if (w == all) break;
    }
    std::sort(out.begin(), out.end(), subset_order);
    return out;
}

// ---------------------------------------------------------------------------

namespace {

using BitColumn = std::vector<std::uint64_t>;

int highest_bit(const BitColumn& col) {
    for (std::size_t w = col.size(); w-- > 0;) {
        if (col[w] != 0) return static_cast<int>(w * 64 + 63 - static_cast<std::size_t>(__builtin_clzll(col[w])));
    }
    return -1;
}

std::size_t f2_rank(std::vector<BitColumn> columns, std::size_t rows) {
    std::vector<int> pivot_owner(rows, -1);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        auto& col = columns[c];
        for (int p = highest_bit(col); p >= 0; p = highest_bit(col)) {
            const int owner = pivot_owner[static_cast<std::size_t>(p)];
            if (owner < 0) {
                pivot_owner[static_cast<std::size_t>(p)] = static_cast<int>(c);
                ++rank;
                break;
            }
            const auto& other = columns[static_cast<std::size_t>(owner)];
            for (std::size_t w = 0; w < col.size(); ++w) col[w] ^= other[w];
        }
    }
    return rank;
}

}  // namespace

std::vector<std::size_t> reduced_homology_of_faces(std::span<const VariableMask> faces) {
    if (faces.empty()) return {};
    int top = 0;
    for (VariableMask f : faces) top = std::max(top, cardinality(f));
    // by_size[s]: faces with s vertices.
    std::vector<std::vector<VariableMask>> by_size(static_cast<std::size_t>(top) + 1);
    for (VariableMask f : faces) by_size[static_cast<std::size_t>(cardinality(f))].push_back(f);

    // rank_of[s]: rank of the boundary from size-s faces to size-(s-1) faces.
    std::vector<std::size_t> rank_of(static_cast<std::size_t>(top) + 2, 0);
    for (int s = 1; s <= top; ++s) {
        const auto& lower = by_size[static_cast<std::size_t>(s - 1)];
        const auto& upper = by_size[static_cast<std::size_t>(s)];
        std::unordered_map<VariableMask, std::size_t> index;
        for (std::size_t k = 0; k < lower.size(); ++k) index.emplace(lower[k], k);
        const std::size_t words = (lower.size() + 63) / 64;
        std::vector<BitColumn> columns;
        columns.reserve(upper.size());
        for (VariableMask f : upper) {
            BitColumn col(words, 0);
            for (VariableMask rest = f; rest != 0; rest &= rest - 1) {
                auto it = index.find(f & ~(rest & -rest));
                if (it == index.end()) throw Error("face list is not closed under subsets");
                col[it->second / 64] ^= std::uint64_t{1} << (it->second % 64);
            }
            columns.push_back(std::move(col));
        }
        rank_of[static_cast<std::size_t>(s)] = f2_rank(std::move(columns), lower.size());
    }
    std::vector<std::size_t> dims;
    for (int s = 0; s <= top; ++s) {
        const std::size_t count = by_size[static_cast<std::size_t>(s)].size();
        dims.push_back(count - rank_of[static_cast<std::size_t>(s)] - rank_of[static_cast<std::size_t>(s) + 1]);
    }
    return dims;
}

std::vector<std::size_t> reduced_homology_all(const SimplicialComplex& k) {
    const auto faces = k.faces();
    return reduced_homology_of_faces(faces);
}

std::size_t reduced_homology(const SimplicialComplex& k, int degree) {
    const auto dims = reduced_homology_all(k);
    const auto idx = static_cast<std::size_t>(degree + 1);
    return degree >= -1 && idx < dims.size() ? dims[idx] : 0;
}

long reduced_euler_characteristic(const SimplicialComplex& k) {
    long chi = 0;
    for (VariableMask f : k.faces()) chi += (cardinality(f) % 2 == 1) ? 1 : -1;
    return chi;
}

bool is_cohen_macaulay(const SimplicialComplex& k) {
    for (VariableMask f : k.faces()) {
        const SimplicialComplex lk = k.link(f);
        const auto dims = reduced_homology_all(lk);
        // Degrees -1 .. dim(lk)-1 sit at indices 0 .. dim(lk).
        const int top = lk.dimension();
        for (int idx = 0; idx <= top && idx < static_cast<int>(dims.size()); ++idx) {
            if (dims[static_cast<std::size_t>(idx)] != 0) return false;
        }
    }
    return true;
}

std::set<int> krull_dimensions(const Code& c, Side side) {
    std::set<int> dims;
    if (side == Side::neural) {
        for (const auto& alpha : maximal_intervals(c)) dims.insert(c.n() - alpha.fixed_count());
    } else {
        const SqfIdeal ideal = polarize_ideal(c);
        for (const auto& p : minimal_primes(ideal.ring, ideal.generators)) dims.insert(2 * c.n() - p.size());
    }
    return dims;
}

bool is_cm_polar(const Code& c) {
    if (krull_dimensions(c, Side::polar).size() > 1) return false;
    const SqfIdeal ideal = polarize_ideal(c);
    return is_cohen_macaulay(stanley_reisner_complex(ideal.ring, ideal.generators));
}

const char* to_string(CmVerdict v) { return v == CmVerdict::cm ? "cm" : "inconclusive"; }

CmVerdict cm_report_neural(const Code& c) {
    if (krull_dimensions(c, Side::neural) == std::set<int>{0}) return CmVerdict::cm;
    return is_cm_polar(c) ? CmVerdict::cm : CmVerdict::inconclusive;
}

bool depolarization_avoids_minimal_primes(const Code& c) {
    const SqfIdeal ideal = polarize_ideal(c);
    const auto primes = minimal_primes(ideal.ring, ideal.generators);
    const auto depol = DepolarizationIdeal{c.n()}.generators();
    for (const auto& g : depol) {
        for (const auto& p : primes) {
            if (in_monomial_prime(g, p.mask())) return false;
        }
    }
    return true;
}

}  // namespace neuralpol
