#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>

#include <CLI11.hpp>

#include "neuralpol/codes.hpp"
#include "neuralpol/neural_ideal.hpp"
#include "neuralpol/polarization.hpp"
#include "neuralpol/resolutions.hpp"
#include "neuralpol/simplicial.hpp"
#include "selfcheck.hpp"
#include "serialize.hpp"

namespace neuralpol::cli {

namespace {

using io::json;

struct Options {
    std::string input;
    bool json = false;
    bool witness = false;
    bool all = false;
    bool polarized = false;
    bool verbose = false;
};

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return in;
}

Code load_code(const Options& opt) {
    auto in = open_input(opt.input);
    try {
        return parse_code(in);
    } catch (const ParseError& e) {
        throw Error(opt.input + ": " + e.what());
    }
}

Cover load_cover(const Options& opt) {
    auto in = open_input(opt.input);
    try {
        return parse_cover(in);
    } catch (const ParseError& e) {
        throw Error(opt.input + ": " + e.what());
    }
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int cmd_ideal(const Options& opt, std::ostream& out, bool canonical) {
    const Code c = load_code(opt);
    const PsmIdeal ideal = canonical ? canonical_form(c) : neural_ideal_generators(c);
    if (opt.json) {
        json j = io::document("ideal");
        j["n"] = c.n();
        j["canonical"] = ideal.canonical;
        j["generators"] = json::array();
        for (const auto& f : ideal.generators) j["generators"].push_back(io::to_json(f));
        emit(out, j);
    } else {
        for (const auto& f : ideal.generators) out << f.to_string() << '\n';
    }
    return kExitOk;
}

int cmd_decompose(const Options& opt, std::ostream& out) {
    const Code c = load_code(opt);
    const auto primes = primary_decomposition(c);
    if (opt.json) {
        json j = io::document("decomposition");
        j["n"] = c.n();
        j["primes"] = json::array();
        for (const auto& p : primes) j["primes"].push_back(io::to_json(p));
        emit(out, j);
    } else {
        for (const auto& p : primes) out << p.alpha().to_string() << "  " << p.to_string() << '\n';
    }
    return kExitOk;
}

int cmd_polarize(const Options& opt, std::ostream& out) {
    const Code c = load_code(opt);
    const SqfIdeal ideal = polarize_ideal(c);
    if (opt.json) {
        json j = io::document("polar-ideal");
        j["n"] = c.n();
        j["generators"] = json::array();
        for (const auto& m : ideal.generators) j["generators"].push_back(io::to_json(m));
        emit(out, j);
    } else {
        for (const auto& m : ideal.generators) out << m.to_string() << '\n';
    }
    return kExitOk;
}

int cmd_polar_primes(const Options& opt, std::ostream& out) {
    const Code c = load_code(opt);
    const auto primes = primes_over_polar(c, !opt.all);
    if (opt.json) {
        json j = io::document("polar-primes");
        j["n"] = c.n();
        j["minimal_only"] = !opt.all;
        j["primes"] = json::array();
        for (const auto& w : primes) {
            json p = io::to_json(w);
            if (opt.witness) p["interval"] = subset_interval_string(w);
            j["primes"].push_back(p);
        }
        emit(out, j);
        return kExitOk;
    }
    for (const auto& w : primes) {
        out << w.to_string();
        if (opt.witness) {
            out << "  x(W)=" << format_index_set(w.x_only()) << " y(W)=" << format_index_set(w.y_only())
                << " b(W)=" << format_index_set(w.both()) << " n(W)=" << format_index_set(w.neither())
                << "  V_W=" << subset_interval_string(w) << " in C/" << format_index_set(w.both());
        }
        out << '\n';
    }
    return kExitOk;
}

int emit_complex(const Options& opt, std::ostream& out, const FreeComplex& fc) {
    if (opt.json) {
        json j = io::document("complex");
        j.update(io::to_json(fc));
        emit(out, j);
    } else {
        out << fc.to_string();
    }
    return kExitOk;
}

int cmd_betti(const Options& opt, std::ostream& out) {
    const Code c = load_code(opt);
    const BettiTable table = betti_table(minimal_polarized_resolution(c));
    if (opt.json) {
        json j = io::document("betti");
        j["ranks"] = table.ranks;
        emit(out, j);
        return kExitOk;
    }
    out << "ranks:";
    for (auto r : table.ranks) out << ' ' << r;
    out << '\n';
    for (std::size_t i = 0; i < table.graded.size(); ++i) {
        for (const auto& [deg, count] : table.graded[i]) {
            out << "  beta_" << i << " " << deg.to_string() << ": " << count << '\n';
        }
    }
    return kExitOk;
}

int cmd_polar_complex(const Options& opt, std::ostream& out) {
    const SimplicialComplex k = polar_complex(load_code(opt));
    if (opt.json) {
        json j = io::document("simplicial-complex");
        j.update(io::to_json(k));
        emit(out, j);
        return kExitOk;
    }
    out << "vertices:";
    for (const auto& v : k.vertices()) out << ' ' << v;
    out << '\n' << k.to_string();
    return kExitOk;
}

int cmd_cm(const Options& opt, std::ostream& out) {
    const Code c = load_code(opt);
    const auto polar_dims = krull_dimensions(c, Side::polar);
    const auto neural_dims = krull_dimensions(c, Side::neural);
    const bool polar_cm = is_cm_polar(c);
    const CmVerdict verdict = cm_report_neural(c);
    if (opt.json) {
        json j = io::document("cm");
        j["polar_dimensions"] = polar_dims;
        j["neural_dimensions"] = neural_dims;
        j["polar_cm"] = polar_cm;
        j["neural"] = to_string(verdict);
        emit(out, j);
        return kExitOk;
    }
    auto join = [](const std::set<int>& s) {
        std::string r;
        for (int d : s) r += (r.empty() ? "" : " ") + std::to_string(d);
        return r;
    };
    out << "polar-dimensions: " << join(polar_dims) << '\n'
        << "neural-dimensions: " << join(neural_dims) << '\n'
        << "polar: " << (polar_cm ? "cm" : "not-cm") << '\n'
        << "neural: " << to_string(verdict) << '\n';
    return kExitOk;
}

int cmd_from_cover(const Options& opt, std::ostream& out) {
    const Code c = code_of_cover(load_cover(opt));
    if (opt.json) {
        json j = io::document("code");
        j.update(io::to_json(c));
        emit(out, j);
    } else {
        out << c.to_string();
    }
    return kExitOk;
}

int cmd_rf(const Options& opt, std::ostream& out) {
    const auto relations = receptive_field_relations(load_cover(opt));
    if (opt.json) {
        json j = io::document("relations");
        j["relations"] = json::array();
        for (const auto& r : relations) {
            j["relations"].push_back({{"pos", indices_of(r.sigma)},
                                      {"neg", indices_of(r.tau)},
                                      {"containment", r.containment_holds},
                                      {"minimal", r.minimal}});
        }
        emit(out, j);
    } else {
        for (const auto& r : relations) {
            out << r.to_string() << "  " << (r.verified() ? "verified" : "MISMATCH") << '\n';
        }
    }
    const bool ok = std::all_of(relations.begin(), relations.end(), [](const auto& r) { return r.verified(); });
    return ok ? kExitOk : kExitDomainError;
}

int cmd_selfcheck(const Options& opt, std::ostream& out) {
    const auto results = run_selfcheck(load_code(opt));
    bool ok = true;
    if (opt.json) {
        json j = io::document("selfcheck");
        j["checks"] = json::array();
        for (const auto& r : results) {
            j["checks"].push_back({{"name", r.name}, {"status", to_string(r.status)}, {"detail", r.detail}});
        }
        emit(out, j);
    }
    for (const auto& r : results) {
        if (r.status == CheckStatus::fail) ok = false;
        if (!opt.json) {
            out << to_string(r.status) << ' ' << r.name;
            if (!r.detail.empty()) out << " (" << r.detail << ')';
            out << '\n';
        }
    }
    return ok ? kExitOk : kExitDomainError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Polarization toolkit for neural codes and their neural ideals", "neuralpol"};
    app.require_subcommand(1);

    Options opt;
    using Handler = std::function<int(std::ostream&)>;
    std::map<CLI::App*, Handler> handlers;

    auto add = [&](const std::string& name, const std::string& help, const std::string& input_help,
                   Handler handler) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("input", opt.input, input_help)->required();
        sub->add_flag("--json", opt.json, "Emit JSON");
        sub->add_flag("--verbose", opt.verbose, "Report timing on stderr");
        handlers[sub] = std::move(handler);
        return sub;
    };
    const std::string code_file = "Code file (one 0/1 word per line)";
    const std::string cover_file = "Cover JSON file";

    add("canon", "Canonical form of the neural ideal", code_file,
        [&](std::ostream& o) { return cmd_ideal(opt, o, true); });
    add("gens", "Indicator generators of the neural ideal", code_file,
        [&](std::ostream& o) { return cmd_ideal(opt, o, false); });
    add("decompose", "Pseudomonomial primary decomposition", code_file,
        [&](std::ostream& o) { return cmd_decompose(opt, o); });
    add("polarize", "Polarized neural ideal", code_file, [&](std::ostream& o) { return cmd_polarize(opt, o); });
    auto* primes = add("polar-primes", "Monomial primes over the polarized ideal", code_file,
                       [&](std::ostream& o) { return cmd_polar_primes(opt, o); });
    primes->add_flag("--witness", opt.witness, "Show the W partition and interval behind each prime");
    primes->add_flag("--all", opt.all, "List every containing prime, not just the minimal ones");
    auto* taylor = add("taylor", "Taylor resolution of the neural ideal", code_file, [&](std::ostream& o) {
        const Code c = load_code(opt);
        if (opt.polarized) {
            const SqfIdeal ideal = polarize_ideal(c);
            return emit_complex(opt, o, taylor_complex(ideal.ring, ideal.generators));
        }
        return emit_complex(opt, o, taylor_resolution(c));
    });
    taylor->add_flag("--polarized", opt.polarized, "Show the complex over the polarized ring");
    add("min-res", "Minimal resolution of the polarized ideal", code_file,
        [&](std::ostream& o) { return emit_complex(opt, o, minimal_polarized_resolution(load_code(opt))); });
    add("canonical-res", "Canonical resolution of the neural ideal", code_file,
        [&](std::ostream& o) { return emit_complex(opt, o, canonical_resolution(load_code(opt))); });
    add("betti", "Betti numbers of the polarized quotient", code_file,
        [&](std::ostream& o) { return cmd_betti(opt, o); });
    add("polar-complex", "Facets of the polar complex", code_file,
        [&](std::ostream& o) { return cmd_polar_complex(opt, o); });
    add("cm", "Cohen-Macaulay report", code_file, [&](std::ostream& o) { return cmd_cm(opt, o); });
    add("from-cover", "Code of a cover", cover_file, [&](std::ostream& o) { return cmd_from_cover(opt, o); });
    add("rf", "Receptive-field relations of a cover", cover_file,
        [&](std::ostream& o) { return cmd_rf(opt, o); });
    add("selfcheck", "Run the cross-oracle property suite on a code", code_file,
        [&](std::ostream& o) { return cmd_selfcheck(opt, o); });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    for (auto& [sub, handler] : handlers) {
        if (!sub->parsed()) continue;
        const auto start = std::chrono::steady_clock::now();
        try {
            const int code = handler(out);
            if (opt.verbose) {
                const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
                err << "elapsed: " << elapsed.count() << " s\n";
            }
            return code;
        } catch (const Error& e) {
            err << "error: " << e.what() << '\n';
            return kExitDomainError;
        }
    }
    err << app.help();
    return kExitUsage;
}

}  // namespace neuralpol::cli
