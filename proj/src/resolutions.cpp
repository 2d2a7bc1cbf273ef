#include "neuralpol/resolutions.hpp"

#include <algorithm>

#include "neuralpol/polarization.hpp"
#include "neuralpol/simplicial.hpp"

namespace neuralpol {

namespace {

constexpr std::size_t kMaxTaylorGenerators = 20;

template <class Column>
auto find_row(Column& col, std::size_t r) {
    return std::lower_bound(col.begin(), col.end(), r,
                            [](const MatrixEntry& e, std::size_t row) { return e.row < row; });
}

// col += factor * pivot, both sorted by row.
void add_scaled(std::vector<MatrixEntry>& col, const std::vector<MatrixEntry>& pivot,
                const Polynomial& factor) {
    std::vector<MatrixEntry> merged;
    merged.reserve(col.size() + pivot.size());
    auto a = col.begin();
    auto b = pivot.begin();
    while (a != col.end() || b != pivot.end()) {
        if (b == pivot.end() || (a != col.end() && a->row < b->row)) {
            merged.push_back(std::move(*a++));
        } else if (a == col.end() || b->row < a->row) {
            merged.push_back({b->row, b->value * factor});
            ++b;
        } else {
            Polynomial sum = a->value + b->value * factor;
            if (!sum.is_zero()) merged.push_back({a->row, std::move(sum)});
            ++a;
            ++b;
        }
    }
    col = std::move(merged);
}

}  // namespace

SparseMatrix::SparseMatrix(AmbientRing ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), columns_(cols) {}

SparseMatrix SparseMatrix::from_dense(AmbientRing ring, const std::vector<std::vector<Polynomial>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    SparseMatrix m(ring, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw Error("ragged matrix");
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

Polynomial SparseMatrix::at(std::size_t r, std::size_t c) const {
    const auto& col = columns_.at(c);
    auto it = find_row(col, r);
    return (it != col.end() && it->row == r) ? it->value : Polynomial(ring_);
}

void SparseMatrix::set(std::size_t r, std::size_t c, Polynomial value) {
    if (r >= rows_ || c >= columns_.size()) throw Error("matrix index out of range");
    require_same_ring(ring_, value.ring());
    auto& col = columns_[c];
    auto it = find_row(col, r);
    const bool present = it != col.end() && it->row == r;
    if (value.is_zero()) {
        if (present) col.erase(it);
    } else if (present) {
        it->value = std::move(value);
    } else {
        col.insert(it, MatrixEntry{r, std::move(value)});
    }
}

bool SparseMatrix::is_zero() const {
    return std::all_of(columns_.begin(), columns_.end(), [](const auto& col) { return col.empty(); });
}

std::vector<std::vector<Polynomial>> SparseMatrix::to_dense() const {
    std::vector<std::vector<Polynomial>> out(rows_, std::vector<Polynomial>(cols(), Polynomial(ring_)));
    for (std::size_t c = 0; c < cols(); ++c) {
        for (const auto& e : columns_[c]) out[e.row][c] = e.value;
    }
    return out;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    require_same_ring(a.ring(), b.ring());
    if (a.cols() != b.rows()) throw Error("matrix shapes do not compose");
    SparseMatrix out(a.ring(), a.rows(), b.cols());
    for (std::size_t c = 0; c < b.cols(); ++c) {
        std::vector<MatrixEntry> acc;
        for (const auto& e : b.column(c)) add_scaled(acc, a.column(e.row), e.value);
        for (auto& e : acc) out.set(e.row, c, std::move(e.value));
    }
    return out;
}

// ---------------------------------------------------------------------------

std::string FreeComplex::to_string() const {
    std::string out = std::string("ring: ") + (ring.polarized() ? "S" : "R") + " (n=" +
                      std::to_string(ring.n()) + ")\nranks:";
    for (auto r : ranks) out += " " + std::to_string(r);
    out += "\n";
    for (int i = 1; i <= length(); ++i) {
        const auto& m = d(i);
        out += "d" + std::to_string(i) + ": " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + "\n";
        for (const auto& row : m.to_dense()) {
            out += "  [";
            for (std::size_t c = 0; c < row.size(); ++c) {
                out += (c ? ", " : "") + row[c].to_string();
            }
            out += "]\n";
        }
    }
    return out;
}

FreeComplex taylor_complex(AmbientRing ring, std::span<const Monomial> gens) {
    const std::size_t t = gens.size();
    if (t > kMaxTaylorGenerators) {
        throw Error("Taylor complex on " + std::to_string(t) + " generators exceeds the supported " +
                    std::to_string(kMaxTaylorGenerators));
    }
    for (std::size_t a = 0; a < t; ++a) {
        require_same_ring(ring, gens[a].ring());
        for (std::size_t b = a + 1; b < t; ++b) {
            if (gens[a] == gens[b]) throw Error("Taylor generators must be pairwise distinct");
        }
    }

    const std::uint32_t subsets = 1u << t;
    std::vector<Monomial> lcm_of(subsets, Monomial(ring));
    for (std::uint32_t h = 1; h < subsets; ++h) {
        const int low = __builtin_ctz(h);
        lcm_of[h] = lcm(lcm_of[h & (h - 1)], gens[static_cast<std::size_t>(low)]);
    }

    // Numeric order of masks restricted to one size is colexicographic order.
    std::vector<std::vector<std::uint32_t>> basis(t + 1);
    std::vector<std::size_t> position(subsets);
    for (std::uint32_t h = 0; h < subsets; ++h) {
        auto& level = basis[static_cast<std::size_t>(cardinality(h))];
        position[h] = level.size();
        level.push_back(h);
    }

    FreeComplex fc{ring, {}, {}, {}, {}};
    for (const auto& level : basis) {
        fc.ranks.push_back(level.size());
        std::vector<Monomial> degs;
        for (auto h : level) degs.push_back(lcm_of[h]);
        fc.degrees.push_back(std::move(degs));
        fc.labels.push_back(level);
    }
    for (std::size_t i = 1; i <= t; ++i) {
        SparseMatrix d(ring, basis[i - 1].size(), basis[i].size());
        for (std::size_t c = 0; c < basis[i].size(); ++c) {
            const std::uint32_t h = basis[i][c];
            for (std::uint32_t rest = h; rest != 0; rest &= rest - 1) {
                const std::uint32_t face = h & ~(rest & -rest);
                // epsilon(H, h) = +-1, which is 1 in characteristic 2.
                d.set(position[face], c, Polynomial(quotient(lcm_of[h], lcm_of[face])));
            }
        }
        fc.differentials.push_back(std::move(d));
    }
    return fc;
}

FreeComplex taylor_resolution(const Code& c) {
    const SqfIdeal ideal = polarize_ideal(c);
    return depolarize(taylor_complex(ideal.ring, ideal.generators));
}

FreeComplex depolarize(const FreeComplex& complex) {
    const AmbientRing plain = complex.ring.plain_ring();
    FreeComplex out{plain, complex.ranks, {}, {}, complex.labels};
    for (const auto& m : complex.differentials) {
        SparseMatrix d(plain, m.rows(), m.cols());
        for (std::size_t c = 0; c < m.cols(); ++c) {
            for (const auto& e : m.column(c)) d.set(e.row, c, neuralpol::depolarize(e.value));
        }
        out.differentials.push_back(std::move(d));
    }
    return out;
}

FreeComplex minimize(const FreeComplex& complex) {
    if (!complex.multigraded()) throw Error("minimization needs a multigraded complex");
    const std::size_t levels = complex.ranks.size();
    std::vector<std::vector<std::vector<MatrixEntry>>> cols(levels);
    for (std::size_t i = 1; i < levels; ++i) {
        const auto& m = complex.differentials[i - 1];
        for (std::size_t c = 0; c < m.cols(); ++c) {
            for (const auto& e : m.column(c)) {
                if (e.value.size() > 1) throw Error("minimization needs monomial entries");
            }
            cols[i].push_back(m.column(c));
        }
    }
    std::vector<std::vector<bool>> alive(levels);
    for (std::size_t i = 0; i < levels; ++i) alive[i].assign(complex.ranks[i], true);

    for (std::size_t i = 1; i < levels; ++i) {
        auto& di = cols[i];
        // Rows of d_i that died with pivots of d_{i-1} are dropped.
        for (auto& col : di) {
            std::erase_if(col, [&](const MatrixEntry& e) { return !alive[i - 1][e.row]; });
        }
        // Columns with an entry in each row; may hold stale references.
        std::vector<std::vector<std::size_t>> touching(complex.ranks[i - 1]);
        for (std::size_t c = 0; c < di.size(); ++c) {
            for (const auto& e : di[c]) touching[e.row].push_back(c);
        }
        auto entry_at = [&](std::size_t c, std::size_t r) -> const Polynomial* {
            auto it = find_row(di[c], r);
            return (it != di[c].end() && it->row == r) ? &it->value : nullptr;
        };
        for (std::size_t r = 0; r < complex.ranks[i - 1]; ++r) {
            if (!alive[i - 1][r]) continue;
            auto& candidates = touching[r];
            std::sort(candidates.begin(), candidates.end());
            candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
            std::size_t pivot = di.size();
            for (std::size_t c : candidates) {
                if (!alive[i][c]) continue;
                const Polynomial* v = entry_at(c, r);
                if (v && v->is_one()) {
                    pivot = c;
                    break;
                }
            }
            if (pivot == di.size()) continue;

            const std::vector<MatrixEntry> pivot_col = di[pivot];
            for (std::size_t c : candidates) {
                if (c == pivot || !alive[i][c]) continue;
                const Polynomial* v = entry_at(c, r);
                if (!v) continue;
                const Polynomial factor = *v;
                add_scaled(di[c], pivot_col, factor);
                for (const auto& e : pivot_col) {
                    if (e.row > r) touching[e.row].push_back(c);
                }
            }
            alive[i][pivot] = false;
            alive[i - 1][r] = false;
            di[pivot].clear();
        }
    }

    // Compact the surviving basis elements.
    std::vector<std::vector<std::size_t>> new_index(levels);
    FreeComplex out{complex.ring, {}, {}, {}, {}};
    for (std::size_t i = 0; i < levels; ++i) {
        new_index[i].assign(complex.ranks[i], 0);
        std::size_t k = 0;
        std::vector<Monomial> degs;
        std::vector<std::uint32_t> labs;
        for (std::size_t b = 0; b < complex.ranks[i]; ++b) {
            if (!alive[i][b]) continue;
            new_index[i][b] = k++;
            degs.push_back(complex.degrees[i][b]);
            if (!complex.labels.empty()) labs.push_back(complex.labels[i][b]);
        }
        out.ranks.push_back(k);
        out.degrees.push_back(std::move(degs));
        if (!complex.labels.empty()) out.labels.push_back(std::move(labs));
    }
    for (std::size_t i = 1; i < levels; ++i) {
        SparseMatrix d(complex.ring, out.ranks[i - 1], out.ranks[i]);
        for (std::size_t c = 0; c < complex.ranks[i]; ++c) {
            if (!alive[i][c]) continue;
            for (auto& e : cols[i][c]) {
                if (alive[i - 1][e.row]) d.set(new_index[i - 1][e.row], new_index[i][c], e.value);
            }
        }
        out.differentials.push_back(std::move(d));
    }
    while (out.ranks.size() > 1 && out.ranks.back() == 0) {
        out.ranks.pop_back();
        out.differentials.pop_back();
        out.degrees.pop_back();
        if (!out.labels.empty()) out.labels.pop_back();
    }
    return out;
}

FreeComplex minimal_polarized_resolution(const Code& c) {
    const SqfIdeal ideal = polarize_ideal(c);
    return minimize(taylor_complex(ideal.ring, ideal.generators));
}

FreeComplex canonical_resolution(const Code& c) { return depolarize(minimal_polarized_resolution(c)); }

bool verify_complex(const FreeComplex& complex) {
    if (complex.ranks.empty() || complex.differentials.size() + 1 != complex.ranks.size()) {
        throw Error("complex has " + std::to_string(complex.differentials.size()) + " differentials for " +
                    std::to_string(complex.ranks.size()) + " modules");
    }
    for (int i = 1; i <= complex.length(); ++i) {
        const auto& m = complex.d(i);
        if (m.rows() != complex.ranks[static_cast<std::size_t>(i - 1)] ||
            m.cols() != complex.ranks[static_cast<std::size_t>(i)]) {
            throw Error("d" + std::to_string(i) + " has the wrong shape");
        }
    }
    for (int i = 1; i < complex.length(); ++i) {
        if (!(complex.d(i) * complex.d(i + 1)).is_zero()) return false;
    }
    return true;
}

BettiTable betti_table(const FreeComplex& complex) {
    BettiTable table{complex.ranks, {}};
    if (complex.multigraded()) {
        for (const auto& level : complex.degrees) {
            std::map<Monomial, std::size_t> counts;
            for (const auto& m : level) ++counts[m];
            table.graded.push_back(std::move(counts));
        }
    }
    return table;
}

BettiTable hochster_betti(AmbientRing ring, std::span<const Monomial> gens) {
    VariableMask used = 0;
    std::vector<VariableMask> supports;
    for (const auto& g : gens) {
        require_same_ring(ring, g.ring());
        if (!g.is_squarefree()) throw Error("Hochster's formula needs squarefree generators");
        supports.push_back(g.support());
        used |= g.support();
    }
    const bool unit = std::any_of(supports.begin(), supports.end(), [](VariableMask s) { return s == 0; });
    if (unit) return {{0}, {{}}};

    std::vector<std::map<Monomial, std::size_t>> graded;
    // Variables outside every support are cone points of Delta_W and
    // contribute nothing, so W ranges over subsets of the used variables.
    for (VariableMask w = used;; w = (w - 1) & used) {
        std::vector<VariableMask> faces;
        for (VariableMask f = w;; f = (f - 1) & w) {
            const bool face = std::none_of(supports.begin(), supports.end(),
                                           [&](VariableMask s) { return (s & f) == s; });
            if (face) faces.push_back(f);
            if (f == 0) break;
        }
        const auto dims = reduced_homology_of_faces(faces);
        for (std::size_t k = 0; k < dims.size(); ++k) {
            if (dims[k] == 0) continue;
            // dims[k] is degree k-1 = |W| - i - 1.
            const auto i = static_cast<std::size_t>(cardinality(w)) - k;
            if (graded.size() <= i) graded.resize(i + 1);
            graded[i][Monomial::from_support(ring, w)] += dims[k];
        }
        if (w == 0) break;
    }
    BettiTable table;
    for (const auto& level : graded) {
        std::size_t total = 0;
        for (const auto& [deg, count] : level) total += count;
        table.ranks.push_back(total);
    }
    table.graded = std::move(graded);
    return table;
}

}  // namespace neuralpol
