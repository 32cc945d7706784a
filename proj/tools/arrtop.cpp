#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "arrtop/arrangement.hpp"
#include "arrtop/arrangement_io.hpp"
#include "arrtop/errors.hpp"
#include "arrtop/generator.hpp"
#include "arrtop/homology.hpp"
#include "arrtop/morse.hpp"
#include "arrtop/verify.hpp"

namespace {

using nlohmann::json;

// Exit codes: 0 success, 1 invariant failure, 2 validation failure,
// 3 parse failure, 4 internal verification failure.
constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitValidation = 2;
constexpr int kExitParse = 3;
constexpr int kExitInternal = 4;

void enforce_size_guard(const arrtop::IntersectionLattice& l, long long cap) {
    const long long count = arrtop::count_vassiliev_simplices(l, cap);
    if (count > cap)
        throw arrtop::SizeGuardExceeded("Bd(N(L)) would exceed " + std::to_string(cap) +
                                        " simplices; raise --max-simplices to override");
}

std::string group_text(const arrtop::HomologyGroup& g) {
    std::string out;
    if (g.free_rank == 1)
        out = "Z";
    else if (g.free_rank > 1)
        out = "Z^" + std::to_string(g.free_rank);
    for (const arrtop::Integer& t : g.torsion) {
        if (!out.empty()) out += " + ";
        out += "Z/" + t.str();
    }
    return out.empty() ? "0" : out;
}

json profile_json(const arrtop::HomologyProfile& p) {
    json arr = json::array();
    for (const auto& [d, g] : p.groups()) {
        json tors = json::array();
        for (const arrtop::Integer& t : g.torsion) tors.push_back(t.convert_to<long long>());
        arr.push_back(json::array({d, g.free_rank, tors}));
    }
    return arr;
}

void print_profile(const arrtop::HomologyProfile& p, const std::string& prefix,
                   const std::string& suffix) {
    if (p.groups().empty()) {
        std::cout << "  trivial\n";
        return;
    }
    for (const auto& [d, g] : p.groups()) {
        std::cout << "  " << prefix << d << suffix << ": rank " << g.free_rank;
        if (!g.torsion.empty()) {
            std::cout << ", torsion ";
            for (std::size_t i = 0; i < g.torsion.size(); ++i) {
                if (i) std::cout << " + ";
                std::cout << "Z/" << g.torsion[i].str();
            }
        }
        std::cout << "  (" << group_text(g) << ")\n";
    }
}

int cmd_lattice(const std::string& file, bool as_json) {
    const arrtop::Arrangement a = arrtop::load_arrangement(file);
    const arrtop::IntersectionLattice l = arrtop::intersection_semilattice(a);
    const auto covers = l.poset.covering_pairs();
    if (as_json) {
        json elems = json::array();
        for (int x = 0; x < l.poset.size(); ++x) {
            json covered_by = json::array();
            for (const auto& [lo, hi] : covers)
                if (lo == x) covered_by.push_back(l.poset.label(hi));
            elems.push_back({{"label", l.poset.label(x)},
                             {"dimension", l.flats[x].dimension()},
                             {"atom", x < static_cast<int>(l.atoms.size())},
                             {"covered_by", covered_by}});
        }
        std::cout << json{{"lattice", elems}}.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << l.poset.size() << " elements, " << covers.size() << " covering relations, "
              << l.atoms.size() << " atoms\n";
    for (int x = 0; x < l.poset.size(); ++x) {
        std::cout << "  " << l.poset.label(x) << ": dim " << l.flats[x].dimension();
        if (x < static_cast<int>(l.atoms.size())) std::cout << " (atom)";
        std::cout << "\n";
    }
    if (!covers.empty()) {
        std::cout << "covers:\n";
        for (const auto& [lo, hi] : covers)
            std::cout << "  " << l.poset.label(lo) << " < " << l.poset.label(hi) << "\n";
    }
    return kExitOk;
}

json model_json(const arrtop::SimplicialComplex& k) {
    json fv = json::array();
    for (long long c : k.f_vector()) fv.push_back(c);
    return {{"f_vector", fv},
            {"simplices", k.simplex_count()},
            {"euler", k.euler_characteristic()}};
}

std::string f_vector_text(const arrtop::SimplicialComplex& k) {
    std::string out = "(";
    const auto fv = k.f_vector();
    for (std::size_t i = 0; i < fv.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(fv[i]);
    }
    return out + ")";
}

int cmd_models(const std::string& file, bool as_json, long long cap) {
    const arrtop::Arrangement a = arrtop::load_arrangement(file);
    const arrtop::IntersectionLattice l = arrtop::intersection_semilattice(a);
    enforce_size_guard(l, cap);
    const arrtop::SimplicialComplex bd = arrtop::vassiliev_skeleton(l);
    const arrtop::SimplicialComplex zz = arrtop::zz_skeleton(l);
    if (as_json) {
        std::cout << json{{"models", {{"vassiliev", model_json(bd)}, {"zz", model_json(zz)}}}}
                         .dump(2)
                  << "\n";
        return kExitOk;
    }
    std::cout << "Vassiliev: " << f_vector_text(bd) << "; ZZ: " << f_vector_text(zz) << "\n";
    std::cout << "Vassiliev model Bd(N(L)): " << bd.simplex_count()
              << " simplices, Euler characteristic " << bd.euler_characteristic() << "\n";
    std::cout << "ZZ model Δ(L): " << zz.simplex_count() << " simplices, Euler characteristic "
              << zz.euler_characteristic() << "\n";
    return kExitOk;
}

int cmd_collapse(const std::string& file, bool as_json, bool trace, long long cap) {
    const arrtop::Arrangement a = arrtop::load_arrangement(file);
    const arrtop::IntersectionLattice l = arrtop::intersection_semilattice(a);
    enforce_size_guard(l, cap);
    const arrtop::MorseMatching w = arrtop::build_matching(l);

    const bool acyclic = arrtop::verify_acyclic(w);
    const bool iota = arrtop::verify_iota_monotone(l, w);
    const arrtop::IdentityReport ident = arrtop::verify_identity_condition(l, w);
    const bool crit_ok = arrtop::critical_matches_zz(l, w);
    std::size_t ident_pass = 0;
    for (const arrtop::IdentityCheck& c : ident.checks)
        if (c.pass) ++ident_pass;

    std::vector<std::pair<int, int>> seq;
    std::string stuck;
    try {
        seq = arrtop::collapse_sequence(w);
    } catch (const arrtop::StuckCollapse& e) {
        stuck = e.what();
    }
    const std::size_t initial = w.complex.simplex_count();
    const std::size_t final_count = initial - 2 * seq.size();
    const bool ok =
        acyclic && iota && ident.all_pass && crit_ok && stuck.empty() &&
        seq.size() == w.pairs.size();

    const std::vector<std::string> lines = arrtop::collapse_trace(w.complex, seq);
    if (as_json) {
        json out = {{"pairs", w.pairs.size()},
                    {"initial", initial},
                    {"final", final_count},
                    {"acyclic", acyclic},
                    {"iota_monotone", iota},
                    {"identity_pass", ident_pass},
                    {"identity_total", ident.checks.size()},
                    {"critical_is_zz", crit_ok}};
        if (trace) out["trace"] = lines;
        std::cout << json{{"collapse", out}}.dump(2) << "\n";
    } else {
        std::cout << seq.size() << " collapses: " << initial << " → " << final_count
                  << " simplices; acyclic: " << (acyclic && iota ? "yes" : "NO")
                  << "; identity conditions: " << ident_pass << "/" << ident.checks.size()
                  << "\n";
        if (trace)
            for (const std::string& line : lines) std::cout << line << "\n";
    }
    if (!ok) {
        std::cerr << "internal verification failure:";
        if (!acyclic) std::cerr << " cycle-search certificate failed;";
        if (!iota) std::cerr << " ι-monotonicity certificate failed;";
        if (!ident.all_pass) std::cerr << " identity condition failed;";
        if (!crit_ok) std::cerr << " critical subcomplex differs from Δ(L);";
        if (!stuck.empty()) std::cerr << " " << stuck << ";";
        std::cerr << "\n";
        return kExitInternal;
    }
    return kExitOk;
}

int cmd_betti(const std::string& file, bool as_json) {
    const arrtop::Arrangement a = arrtop::load_arrangement(file);
    const arrtop::IntersectionLattice l = arrtop::intersection_semilattice(a);
    const arrtop::HomologyProfile comp = arrtop::complement_cohomology(l, l.ambient_dim);
    const arrtop::HomologyProfile hat = arrtop::compactified_union_homology(l);
    const arrtop::DualityVerdict v =
        arrtop::alexander_duality_verdict(comp, hat, l.ambient_dim);
    const std::string verdict = v == arrtop::DualityVerdict::pass   ? "pass"
                                : v == arrtop::DualityVerdict::warn ? "warn"
                                                                    : "fail";
    if (as_json) {
        std::cout << json{{"betti",
                           {{"complement", profile_json(comp)},
                            {"compactified", profile_json(hat)},
                            {"duality", verdict}}}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "complement cohomology:\n";
        print_profile(comp, "H̃^", "(M)");
        std::cout << "compactified union homology:\n";
        print_profile(hat, "H̃_", "(Û)");
        std::cout << "Alexander duality: " << verdict << "\n";
    }
    return v == arrtop::DualityVerdict::fail ? kExitInvariant : kExitOk;
}

int report_checks(const std::vector<arrtop::CheckResult>& checks, bool verbose) {
    int failures = 0;
    for (const arrtop::CheckResult& c : checks) {
        const bool failed = !c.skipped && !c.pass;
        if (failed) ++failures;
        if (verbose || failed) {
            const char* tag = c.skipped ? "[skip]" : c.pass ? "[pass]" : "[FAIL]";
            std::cout << tag << " " << c.name;
            if (!c.detail.empty()) std::cout << " -- " << c.detail;
            std::cout << "\n";
        }
    }
    return failures;
}

int cmd_verify(const std::string& file, const std::vector<std::string>& random_args,
               long long cap) {
    arrtop::VerifyOptions opt;
    opt.max_simplices = cap;
    if (!random_args.empty()) {
        const std::uint64_t seed = std::stoull(random_args.at(0));
        const long long count = std::stoll(random_args.at(1));
        if (count < 1) throw arrtop::ValidationError("--random count must be positive");
        arrtop::ArrangementGenerator gen(seed);
        int failures = 0;
        for (long long i = 0; i < count; ++i) {
            const arrtop::Arrangement a = gen.next();
            const auto checks = arrtop::verify_arrangement(a, opt);
            const int bad = report_checks(checks, /*verbose=*/false);
            failures += bad;
            std::cout << "arrangement " << (i + 1) << "/" << count << " (n=" << a.ambient_dim
                      << ", k=" << a.subspaces.size() << "): "
                      << (bad == 0 ? "all invariants hold" : std::to_string(bad) + " FAILED")
                      << "\n";
        }
        std::cout << (failures == 0 ? "verified: all invariants hold on the whole corpus"
                                    : "FAILED: " + std::to_string(failures) + " invariant(s)")
                  << "\n";
        return failures == 0 ? kExitOk : kExitInvariant;
    }
    const arrtop::Arrangement a = arrtop::load_arrangement(file);
    const auto checks = arrtop::verify_arrangement(a, opt);
    const int failures = report_checks(checks, /*verbose=*/true);
    std::cout << (failures == 0 ? "verified: all invariants hold"
                                : "FAILED: " + std::to_string(failures) + " invariant(s)")
              << "\n";
    return failures == 0 ? kExitOk : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorial topology of affine subspace arrangements"};
    app.require_subcommand(1);

    std::string file;
    bool as_json = false;
    bool trace = false;
    long long cap = 200000;
    std::vector<std::string> random_args;

    CLI::App* lattice = app.add_subcommand("lattice", "intersection semilattice report");
    lattice->add_option("file", file, "arrangement JSON file")->required();
    lattice->add_flag("--json", as_json, "machine-readable output");

    CLI::App* models = app.add_subcommand("models", "Vassiliev and ZZ model face counts");
    models->add_option("file", file, "arrangement JSON file")->required();
    models->add_flag("--json", as_json, "machine-readable output");
    models->add_option("--max-simplices", cap, "size guard for Bd(N(L))");

    CLI::App* collapse =
        app.add_subcommand("collapse", "discrete Morse matching and collapse sequence");
    collapse->add_option("file", file, "arrangement JSON file")->required();
    collapse->add_flag("--json", as_json, "machine-readable output");
    collapse->add_flag("--trace", trace, "print every elementary collapse");
    collapse->add_option("--max-simplices", cap, "size guard for Bd(N(L))");

    CLI::App* betti = app.add_subcommand("betti", "complement and compactified-union profiles");
    betti->add_option("file", file, "arrangement JSON file")->required();
    betti->add_flag("--json", as_json, "machine-readable output");

    CLI::App* verify = app.add_subcommand("verify", "run every module invariant");
    verify->add_option("file", file, "arrangement JSON file");
    verify->add_option("--random", random_args, "SEED COUNT: verify generated arrangements")
        ->expected(2);
    verify->add_option("--max-simplices", cap, "size guard for Bd(N(L))");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (lattice->parsed()) return cmd_lattice(file, as_json);
        if (models->parsed()) return cmd_models(file, as_json, cap);
        if (collapse->parsed()) return cmd_collapse(file, as_json, trace, cap);
        if (betti->parsed()) return cmd_betti(file, as_json);
        if (verify->parsed()) {
            if (random_args.empty() && file.empty()) {
                std::cerr << "verify needs a file or --random SEED COUNT\n";
                return kExitValidation;
            }
            return cmd_verify(file, random_args, cap);
        }
    } catch (const arrtop::SizeGuardExceeded& e) {
        std::cerr << "size guard: " << e.what() << "\n";
        return kExitValidation;
    } catch (const arrtop::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const arrtop::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const arrtop::StuckCollapse& e) {
        std::cerr << "internal verification failure: " << e.what() << "\n";
        return kExitInternal;
    } catch (const arrtop::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitOk;
}
