#include "selfcheck.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "neuralpol/neural_ideal.hpp"
#include "neuralpol/polarization.hpp"
#include "neuralpol/resolutions.hpp"
#include "neuralpol/simplicial.hpp"

namespace neuralpol {

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "PASS";
        case CheckStatus::fail: return "FAIL";
        case CheckStatus::skip: return "SKIP";
    }
    return "?";
}

namespace {

std::vector<Pseudomonomial> all_pseudomonomials(int n) {
    const AmbientRing ring = AmbientRing::plain(n);
    const IndexSet all = all_indices(n);
    std::vector<Pseudomonomial> out;
    for (IndexSet sigma = 0; sigma <= all; ++sigma) {
        const IndexSet rest = all & ~sigma;
        for (IndexSet tau = rest;; tau = (tau - 1) & rest) {
            out.emplace_back(ring, sigma, tau);
            if (tau == 0) break;
        }
    }
    return out;
}

CheckResult verdict(std::string name, bool ok, std::string detail = {}) {
    return {std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)};
}

bool has_unit_entry(const FreeComplex& fc) {
    for (const auto& m : fc.differentials) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            for (const auto& e : m.column(c)) {
                if (e.value.has_constant_term()) return true;
            }
        }
    }
    return false;
}

}  // namespace

std::vector<CheckResult> run_selfcheck(const Code& c) {
    const int n = c.n();
    const AmbientRing ring = AmbientRing::plain(n);
    std::vector<CheckResult> results;

    {
        const PsmIdeal gens = neural_ideal_generators(c);
        std::vector<Polynomial> expanded;
        for (const auto& g : gens.generators) expanded.push_back(to_polynomial(g));
        bool ok = true;
        for (Word w = 0; w <= all_indices(n); ++w) {
            const bool vanishes = std::none_of(expanded.begin(), expanded.end(),
                                               [&](const Polynomial& p) { return p.evaluate(w); });
            if (vanishes != c.contains(w)) ok = false;
        }
        results.push_back(verdict("point-variety", ok));
    }

    const PsmIdeal cf = canonical_form(c);
    {
        bool ok = true;
        for (const auto& f : cf.generators) {
            for (Word w : c.words()) {
                if (to_polynomial(f).evaluate(w)) ok = false;
            }
            for (int i : indices_of(f.sigma() | f.tau())) {
                const IndexSet bit = 1u << (i - 1);
                if (psm_in_ideal(Pseudomonomial(ring, f.sigma() & ~bit, f.tau() & ~bit), c)) ok = false;
            }
        }
        results.push_back(verdict("canonical-form", ok));
    }

    const SqfIdeal polar = polarize(cf);
    const auto pseudomonomials = all_pseudomonomials(n);
    {
        std::size_t mismatches = 0;
        for (const auto& f : pseudomonomials) {
            if (psm_in_ideal(f, c) != polarized_membership(f, polar)) ++mismatches;
        }
        results.push_back(verdict("membership-transport", mismatches == 0,
                                  std::to_string(pseudomonomials.size()) + " pseudomonomials"));
    }

    {
        std::size_t mismatches = 0;
        std::size_t checked = 0;
        auto check_pair = [&](const Pseudomonomial& f, const Pseudomonomial& g) {
            ++checked;
            if (divides(f, g) != divides(polarize(f), polarize(g))) ++mismatches;
        };
        if (pseudomonomials.size() <= 243) {
            for (const auto& f : pseudomonomials) {
                for (const auto& g : pseudomonomials) check_pair(f, g);
            }
        } else {
            std::mt19937 rng(20240601u);
            std::uniform_int_distribution<std::size_t> pick(0, pseudomonomials.size() - 1);
            for (int k = 0; k < 20000; ++k) check_pair(pseudomonomials[pick(rng)], pseudomonomials[pick(rng)]);
        }
        results.push_back(verdict("divisibility-transport", mismatches == 0, std::to_string(checked) + " pairs"));
    }

    {
        bool ok = true;
        for (const auto& p : primary_decomposition(c)) {
            const VariableMask q = polarize(p);
            const bool polar_side = std::all_of(polar.generators.begin(), polar.generators.end(),
                                                [&](const Monomial& g) { return (g.support() & q) != 0; });
            if (ideal_in_prime(cf, p) != polar_side) ok = false;
        }
        // The same containment against the interval criterion, for every alpha.
        for (const auto& f : pseudomonomials) {
            const PsmPrime p(IntervalSpec(n, f.sigma(), f.tau()));
            if (ideal_in_prime(cf, p) != interval_in_code(p.alpha(), c)) ok = false;
        }
        results.push_back(verdict("prime-transport", ok));
    }

    const auto polar_primes = minimal_primes(polar.ring, polar.generators);
    {
        const auto by_intervals = primes_over_polar(c, true);
        results.push_back(verdict("minimal-primes-two-methods", by_intervals == polar_primes,
                                  std::to_string(polar_primes.size()) + " primes"));
    }

    {
        std::vector<IntervalSpec> from_polar;
        for (const auto& w : polar_primes) {
            if (w.both() == 0) from_polar.emplace_back(n, w.x_only(), w.y_only());
        }
        std::vector<IntervalSpec> decomposition;
        for (const auto& p : primary_decomposition(c)) decomposition.push_back(p.alpha());
        std::sort(from_polar.begin(), from_polar.end(), interval_order);
        results.push_back(verdict("depolarized-primes", from_polar == decomposition));
    }

    results.push_back(verdict("regular-sequence-first-step", depolarization_avoids_minimal_primes(c)));

    if (polar.generators.size() > kSelfcheckTaylorLimit) {
        const std::string why = std::to_string(polar.generators.size()) + " generators exceed " +
                                std::to_string(kSelfcheckTaylorLimit);
        results.push_back({"complexes", CheckStatus::skip, why});
        results.push_back({"betti-hochster", CheckStatus::skip, why});
    } else {
        const FreeComplex taylor = taylor_complex(polar.ring, polar.generators);
        const FreeComplex minimal = minimize(taylor);
        const bool ok = verify_complex(taylor) && verify_complex(minimal) && verify_complex(depolarize(taylor)) &&
                        verify_complex(depolarize(minimal)) && !has_unit_entry(minimal);
        results.push_back(verdict("complexes", ok));
        results.push_back(verdict("betti-hochster",
                                  betti_table(minimal) == hochster_betti(polar.ring, polar.generators)));
    }

    {
        const SimplicialComplex k = polar_complex(c);
        std::set<VariableMask> expected;
        for (Word w : c.words()) expected.insert(codeword_facet(w, n));
        const std::set<VariableMask> facets(k.facets().begin(), k.facets().end());
        const bool pure = std::all_of(k.facets().begin(), k.facets().end(),
                                      [&](VariableMask f) { return cardinality(f) == n; });
        results.push_back(verdict("polar-facets", facets == expected && pure,
                                  std::to_string(facets.size()) + " facets"));
    }
    return results;
}

}  // namespace neuralpol
