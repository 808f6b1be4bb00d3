#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "factorlens/family.hpp"
#include "factorlens/io.hpp"
#include "factorlens/krull.hpp"
#include "factorlens/monoid.hpp"
#include "factorlens/power.hpp"
#include "factorlens/relations.hpp"
#include "factorlens/suite.hpp"

namespace fl = factorlens;
using fl::Int;
using nlohmann::json;

namespace {

struct Options {
    std::string spec_path;
    std::string set_arg;       // for `realize`
    int k_max = 6;
    Int budget = 0;            // 0: resolve from env / default
    Int d = 2;
    Int n = 2;
    std::string format = "json";
    std::string out_path;
    int threads = 1;           // accepted for interface stability; all
                               // computations are deterministic and the
                               // modules are single-threaded
};

Int resolve_budget(const Options& opt) {
    if (opt.budget > 0) return opt.budget;
    if (const char* env = std::getenv("FACTORLENS_BUDGET")) {
        Int v = std::atoll(env);
        if (v > 0) return v;
    }
    return 20'000'000;
}

std::ostream& open_output(const Options& opt, std::ofstream& file) {
    if (opt.out_path.empty()) return std::cout;
    file.open(opt.out_path);
    if (!file) throw fl::SpecError("cannot open output path: " + opt.out_path);
    return file;
}

// Builds a family view with exactness horizon >= k_max from any spec kind.
fl::FamilyView make_view(const fl::ParsedSpec& spec, int k_max, Int budget) {
    switch (spec.kind) {
        case fl::ParsedSpec::Kind::family: {
            fl::FamilySpec fs = spec.family;
            fs.closure_depth = std::max(fs.closure_depth, k_max);
            return fl::FamilyView::from_spec(fs);
        }
        case fl::ParsedSpec::Kind::lattice: {
            std::set<fl::LengthSet> members;
            fl::UnionsResult ur = fl::unions(spec.lattice, k_max, budget);
            // unions() already walked every sum of <= k_max atoms; collect the
            // member sets the same way for the view.
            for (int k = 1; k <= k_max; ++k)
                fl::for_each_atom_sum(spec.lattice, k, [&](const fl::Vec& x) {
                    members.insert(fl::length_set(spec.lattice, x));
                });
            (void)ur;
            return fl::FamilyView::from_members({members.begin(), members.end()}, k_max);
        }
        case fl::ParsedSpec::Kind::power: {
            Int gmax = 1;
            for (const auto& g : spec.power_generators) gmax = std::max(gmax, g.max());
            // Exact up to k_max: k in L(X) forces max X <= k * gmax.
            fl::PowerSubmonoid store =
                fl::build_store(spec.power_generators, gmax * k_max);
            std::set<fl::LengthSet> members;
            for (const auto& x : store.elements)
                if (!(x == fl::LengthSet::of({0}))) members.insert(fl::pm_length_set(store, x));
            return fl::FamilyView::from_members({members.begin(), members.end()}, k_max);
        }
    }
    throw fl::SpecError("unreachable spec kind");
}

void emit(std::ostream& os, const std::string& format, const json& report,
          const std::vector<std::vector<std::string>>& csv_rows) {
    if (format == "json") {
        os << report.dump(2) << "\n";
    } else {
        for (const auto& row : csv_rows) os << fl::csv_row(row);
    }
}

int cmd_invariants(const Options& opt) {
    fl::ParsedSpec spec = fl::parse_spec_file(opt.spec_path);
    Int budget = resolve_budget(opt);
    json report;
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"key", "value"});
    auto put = [&](const std::string& key, const json& value) {
        report[key] = value;
        rows.push_back({key, value.is_string() ? value.get<std::string>() : value.dump()});
    };

    if (spec.kind == fl::ParsedSpec::Kind::lattice) {
        const auto& p = spec.lattice;
        fl::AtomCheck ac = fl::verify_atoms(p);
        put("atoms_verified", ac.ok);
        if (!ac.ok) put("decomposable_atom_index", ac.bad_index);
        fl::ElasticityWitness ew = fl::exact_elasticity(p);
        put("elasticity", fl::to_string(ew.rho));
        put("elasticity_exact", true);
        fl::FamilyView view = make_view(spec, opt.k_max, budget);
        auto dr = view.family_delta();
        put("delta", dr.delta.to_string());
        put("delta_exact", false);  // member sets are a budgeted window
        json omegas = json::array(), tames = json::array();
        Int cat = 0;
        for (std::size_t u = 0; u < p.atom_count(); ++u) {
            omegas.push_back(fl::omega(p, u));
            fl::TameResult t = fl::tame_degree(p, u, 3, budget);
            tames.push_back({{"value", t.value}, {"closed", t.closed}, {"ceiling", t.ceiling}});
        }
        cat = fl::catenary_degree_up_to(p, 3);
        put("omega_per_atom", omegas);
        put("catenary_sampled", cat);
        report["tame_per_atom"] = tames;
        rows.push_back({"tame_per_atom", tames.dump()});
    } else if (spec.kind == fl::ParsedSpec::Kind::power) {
        Int gmax = 1;
        for (const auto& g : spec.power_generators) gmax = std::max(gmax, g.max());
        fl::PowerSubmonoid store = fl::build_store(spec.power_generators, gmax * opt.k_max);
        json atoms = json::array();
        for (const auto& a : store.atoms) atoms.push_back(fl::to_json(a));
        put("atoms", atoms);
        fl::FamilyView view = make_view(spec, opt.k_max, budget);
        put("delta", view.family_delta().delta.to_string());
        put("fekete_elasticity_lower",
            fl::to_string(view.fekete_elasticity(opt.k_max).lower_bound));
    } else {
        fl::FamilyView view = make_view(spec, opt.k_max, budget);
        put("delta", view.family_delta().delta.to_string());
        put("delta_exact", view.family_delta().exact);
        put("gcd_law", view.gcd_min_delta_check());
        put("fekete_elasticity_lower",
            fl::to_string(view.fekete_elasticity(opt.k_max).lower_bound));
    }
    std::ofstream file;
    emit(open_output(opt, file), opt.format, report, rows);
    return 0;
}

void unions_rows(const fl::FamilyView& view, int k_max, json& report,
                 std::vector<std::vector<std::string>>& rows) {
    auto u = view.unions_up_to(k_max);
    fl::LengthSet delta = view.family_delta().delta;
    Int d = delta.empty() ? 1 : delta.min();
    rows.push_back({"k", "lambda_k", "rho_k", "size", "M_k", "U_k"});
    report["rows"] = json::array();
    for (int k = 1; k <= k_max; ++k) {
        Int lambda = u[k].empty() ? 0 : u[k].min();
        Int rho = u[k].empty() ? 0 : u[k].max();
        auto w = fl::minimal_aap_bound(u[k], d);
        Int m = w ? w->bound : -1;
        report["rows"].push_back({{"k", k},
                                  {"lambda", lambda},
                                  {"rho", rho},
                                  {"size", u[k].size()},
                                  {"M", m},
                                  {"U", fl::to_json(u[k])}});
        rows.push_back({std::to_string(k), std::to_string(lambda), std::to_string(rho),
                        std::to_string(u[k].size()), std::to_string(m), u[k].to_string()});
    }
}

int cmd_unions(const Options& opt) {
    fl::ParsedSpec spec = fl::parse_spec_file(opt.spec_path);
    fl::FamilyView view = make_view(spec, opt.k_max, resolve_budget(opt));
    json report;
    std::vector<std::vector<std::string>> rows;
    unions_rows(view, opt.k_max, report, rows);
    std::ofstream file;
    emit(open_output(opt, file), opt.format, report, rows);
    return 0;
}

int cmd_structure_check(const Options& opt) {
    fl::ParsedSpec spec = fl::parse_spec_file(opt.spec_path);
    fl::FamilyView view = make_view(spec, opt.k_max, resolve_budget(opt));
    auto r = view.structure_check(opt.k_max);
    json report = {{"applicable", r.applicable}, {"trivial", r.trivial},
                   {"delta_min", r.delta_min},  {"q", r.q},
                   {"l", r.l},                  {"aap_bounds", r.aap_bounds},
                   {"bounds_stabilized", r.bounds_stabilized},
                   {"windows_ok", r.windows_ok}, {"detail", r.detail}};
    std::vector<std::vector<std::string>> rows{
        {"applicable", "trivial", "delta_min", "q", "l", "stabilized", "windows_ok"},
        {r.applicable ? "1" : "0", r.trivial ? "1" : "0", std::to_string(r.delta_min),
         std::to_string(r.q), std::to_string(r.l), r.bounds_stabilized ? "1" : "0",
         r.windows_ok ? "1" : "0"}};
    std::ofstream file;
    emit(open_output(opt, file), opt.format, report, rows);
    return 0;
}

int cmd_realize(const Options& opt) {
    std::vector<Int> vals;
    std::stringstream ss(opt.set_arg);
    for (std::string tok; std::getline(ss, tok, ',');) {
        try {
            vals.push_back(std::stoll(tok));
        } catch (...) {
            throw fl::SpecError("realize: --set must be a comma list of integers");
        }
    }
    fl::LengthSet L = fl::LengthSet::from_values(std::move(vals));
    fl::RealizedKrull r = fl::realize(L);
    fl::VerifyReport vr = fl::verify_realization(r, 4);
    json report = {{"L", fl::to_json(L)},
                   {"m", r.m},
                   {"dim", r.pres.dim},
                   {"atom_count", r.pres.atom_count()},
                   {"grading", r.pres.grading},
                   {"verified", vr.ok}};
    if (!vr.ok) report["verify_detail"] = vr.detail;
    report["unions"] = json::array();
    std::vector<std::vector<std::string>> rows{{"k", "lambda_k", "rho_k", "size", "M_k", "U_k"}};
    for (int k = 1; k <= opt.k_max; ++k) {
        fl::LengthSet u = fl::krull_union(r, k);
        auto w = fl::minimal_aap_bound(u, 1);
        Int m = w ? w->bound : -1;
        report["unions"].push_back({{"k", k}, {"U", fl::to_json(u)}});
        rows.push_back({std::to_string(k), std::to_string(u.empty() ? 0 : u.min()),
                        std::to_string(u.empty() ? 0 : u.max()), std::to_string(u.size()),
                        std::to_string(m), u.to_string()});
    }
    std::ofstream file;
    emit(open_output(opt, file), opt.format, report, rows);
    return vr.ok ? 0 : 1;
}

int cmd_counterexample(const Options& opt) {
    fl::CounterexampleSpec spec = fl::admissible_instance(opt.d, opt.k_max);
    int bad = fl::validate_counterexample(spec);
    json report = {{"d", spec.d}, {"K", spec.K}, {"m", spec.m}, {"valid", bad == 0}};
    report["rows"] = json::array();
    std::vector<std::vector<std::string>> rows{{"k", "expected_Lk", "computed", "match"}};
    bool all_match = true;
    for (int k = 1; k <= spec.K; ++k) {
        fl::LengthSet expected = fl::counterexample_expected(spec, k);
        fl::LengthSet u = fl::counterexample_unions(spec, k);
        fl::LengthSet upper = u.intersect_interval(k, u.empty() ? k : u.max());
        bool match = upper == expected;
        all_match = all_match && match;
        report["rows"].push_back({{"k", k},
                                  {"expected", fl::to_json(expected)},
                                  {"computed", fl::to_json(upper)},
                                  {"match", match}});
        rows.push_back({std::to_string(k), expected.to_string(), upper.to_string(),
                        match ? "1" : "0"});
    }
    std::ofstream file;
    emit(open_output(opt, file), opt.format, report, rows);
    return (bad == 0 && all_match) ? 0 : 1;
}

int cmd_power_example(const Options& opt) {
    Int n = opt.n;
    if (n < 2) throw fl::SpecError("power-example: need n >= 2");
    json report = {{"n", n},
                   {"omega", fl::example_omega(n)},
                   {"atoms", {fl::to_json(fl::example_interval_gen()),
                              fl::to_json(fl::example_a_gen(n))}}};
    report["rows"] = json::array();
    std::vector<std::vector<std::string>> rows{{"k", "lambda_k", "rho_k", "size", "U_k"}};
    for (int k = 1; k <= opt.k_max; ++k) {
        fl::LengthSet u = fl::example_union(n, k);
        report["rows"].push_back({{"k", k}, {"U", fl::to_json(u)}});
        rows.push_back({std::to_string(k), std::to_string(u.min()), std::to_string(u.max()),
                        std::to_string(u.size()), u.to_string()});
    }
    std::ofstream file;
    emit(open_output(opt, file), opt.format, report, rows);
    return 0;
}

int cmd_paper_suite(const Options& opt) {
    auto results = fl::acceptance_suite(resolve_budget(opt));
    json report = json::array();
    std::vector<std::vector<std::string>> rows{{"id", "name", "pass", "detail"}};
    bool all = true;
    for (const auto& r : results) {
        all = all && r.pass;
        report.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        rows.push_back({std::to_string(r.id), r.name, r.pass ? "1" : "0", r.detail});
    }
    std::ofstream file;
    emit(open_output(opt, file), opt.format, report, rows);
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"factorlens: factorization-theoretic invariants of commutative monoids"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd, bool needs_spec) {
        if (needs_spec)
            cmd->add_option("--spec", opt.spec_path, "JSON spec file")->required();
        cmd->add_option("--k-max", opt.k_max, "horizon K")->check(CLI::PositiveNumber);
        cmd->add_option("--budget", opt.budget,
                        "enumeration budget (default: FACTORLENS_BUDGET or 20000000)");
        cmd->add_option("--format", opt.format, "json|csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--out", opt.out_path, "output path (default: stdout)");
        cmd->add_option("--threads", opt.threads,
                        "thread count (results are identical for any value)")
            ->check(CLI::PositiveNumber);
    };

    auto* inv = app.add_subcommand("invariants", "atoms, Delta, elasticity, omega/c/t report");
    add_common(inv, true);
    auto* uni = app.add_subcommand("unions", "rows (k, lambda_k, rho_k, |U_k|, M_k, U_k)");
    add_common(uni, true);
    auto* str = app.add_subcommand("structure-check",
                                   "finite-horizon structure theorem instance check");
    add_common(str, true);
    auto* rea = app.add_subcommand("realize", "realize a length set as a Krull monoid");
    rea->add_option("--set", opt.set_arg, "length set as comma list, e.g. 2,3")->required();
    add_common(rea, false);
    auto* cex = app.add_subcommand("counterexample", "the structure-theorem counterexample");
    cex->add_option("--d", opt.d, "distance parameter (>= 2)");
    add_common(cex, false);
    auto* pow = app.add_subcommand("power-example", "the power-monoid example H([[0,1]], A)");
    pow->add_option("--n", opt.n, "parameter n >= 2");
    add_common(pow, false);
    auto* sui = app.add_subcommand("paper-suite", "run all reproduction criteria");
    add_common(sui, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (inv->parsed()) return cmd_invariants(opt);
        if (uni->parsed()) return cmd_unions(opt);
        if (str->parsed()) return cmd_structure_check(opt);
        if (rea->parsed()) return cmd_realize(opt);
        if (cex->parsed()) return cmd_counterexample(opt);
        if (pow->parsed()) return cmd_power_example(opt);
        if (sui->parsed()) return cmd_paper_suite(opt);
    } catch (const fl::ResourceError& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 2;
    } catch (const fl::SpecError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
