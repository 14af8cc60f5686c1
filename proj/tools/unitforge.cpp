// unitforge: verification toolkit for unit groups of integral group rings.
#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "unitforge/catalog.hpp"
#include "unitforge/dihedral2p.hpp"
#include "unitforge/group_ring.hpp"
#include "unitforge/presentation.hpp"
#include "unitforge/rank.hpp"
#include "unitforge/report.hpp"
#include "unitforge/ring_checks.hpp"
#include "unitforge/snf.hpp"
#include "unitforge/units.hpp"

using namespace unitforge;
using nlohmann::json;

namespace {

constexpr std::uint64_t kDefaultSeed = 1729;

struct Options {
    bool json = false;
    std::uint64_t seed = kDefaultSeed;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

FiniteGroup load_group(const std::string& name_or_path) {
    if (is_catalog_name(name_or_path)) return builtin_group(name_or_path);
    std::ifstream probe(name_or_path);
    if (probe.good()) return FiniteGroup::from_json_text(read_file(name_or_path));
    throw std::invalid_argument("unknown group name \"" + name_or_path +
                                "\" (not in the catalog, not a readable file)");
}

json rank_report_json(const RankReport& r) {
    return {{"group", r.group},           {"n_conjugacy", r.n_conjugacy},
            {"n_real", r.n_real},         {"n_rational", r.n_rational},
            {"rank_center", r.rank_center}, {"is_cut", r.is_cut},
            {"exp_G", r.exp_g},           {"exp_G_ab", r.exp_g_ab}};
}

void print_rank_report(const RankReport& r) {
    std::cout << "group          " << r.group << "\n"
              << "conjugacy      " << r.n_conjugacy << "\n"
              << "real classes   " << r.n_real << "\n"
              << "rational       " << r.n_rational << "\n"
              << "rank Z(V)      " << r.rank_center << "\n"
              << "cut            " << (r.is_cut ? "yes" : "no") << "\n"
              << "exp G          " << r.exp_g << "\n"
              << "exp G/G'       " << r.exp_g_ab << "\n";
}

int finish(const Options& opt, RunReport& rep,
           std::chrono::steady_clock::time_point start,
           const std::string& human_summary = "") {
    if (opt.json) {
        std::cout << rep.to_json().dump(2) << "\n";
    } else {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        if (!human_summary.empty()) std::cout << human_summary << "\n";
        std::cout << "checked " << rep.checked << ", passed " << rep.passed << ", failed "
                  << rep.failed << " (" << ms << " ms)\n";
        for (const auto& f : rep.failures)
            std::cout << "  FAIL " << f.value("params", f.dump()) << "\n";
    }
    return rep.exit_code();
}

std::vector<std::string> groups_for_sweep(const std::string& group, bool all) {
    if (!group.empty()) return {group};
    if (all) return sweep_group_names(16);
    throw std::invalid_argument("pass --group <name> or --all");
}

int element_index(const FiniteGroup& g, const std::string& word, const char* what) {
    GroupRingElement e = parse_element(g, word);
    if (e.coeffs().size() != 1 || e.coeffs().begin()->second != 1)
        throw std::invalid_argument(std::string(what) + " must be a single group element");
    return e.coeffs().begin()->first;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification toolkit for unit groups of integral group rings"};
    app.require_subcommand(1);

    Options opt;
    if (const char* env = std::getenv("UNITFORGE_SEED"))
        opt.seed = std::strtoull(env, nullptr, 10);
    app.add_flag("--json", opt.json, "emit a JSON report instead of text");
    app.add_option("--seed", opt.seed, "seed for randomized sweeps (env UNITFORGE_SEED)");

    auto* groups_cmd = app.add_subcommand("groups", "catalog access");
    auto* groups_list = groups_cmd->add_subcommand("list", "list the group catalog");

    auto* group_cmd = app.add_subcommand("group", "single-group data");
    auto* group_info = group_cmd->add_subcommand("info", "order, classes and invariants");
    std::string info_name;
    group_info->add_option("name", info_name, "catalog name or JSON table file")->required();

    auto* invariants_cmd = app.add_subcommand("invariants", "class-counting rank report");
    std::string inv_name;
    invariants_cmd->add_option("group", inv_name, "catalog name or JSON table file")
        ->required();

    auto* units_cmd = app.add_subcommand("units", "construct generic units");
    auto* units_bicyclic = units_cmd->add_subcommand("bicyclic", "b(g,h) = 1 + (1-h)g h~");
    std::string ub_group, ub_g, ub_h;
    units_bicyclic->add_option("group", ub_group, "catalog group")->required();
    units_bicyclic->add_option("gelem", ub_g, "group element word, e.g. a or a^2*b")->required();
    units_bicyclic->add_option("helem", ub_h, "group element word")->required();
    auto* units_bass = units_cmd->add_subcommand("bass", "u_{k,m}(g)");
    std::string ubs_group, ubs_g;
    long ubs_k = 0;
    long ubs_m_raw = -1;
    units_bass->add_option("group", ubs_group, "catalog group")->required();
    units_bass->add_option("gelem", ubs_g, "group element word")->required();
    units_bass->add_option("kpar", ubs_k, "coprime to the order of g")->required();
    units_bass->add_option("mpar", ubs_m_raw, "defaults to Euler-phi of the order of g");

    auto* verify_cmd = app.add_subcommand("verify", "exact identity sweeps");
    std::string v_group;
    bool v_all = false;
    int v_rule = 0;
    auto* verify_eq = verify_cmd->add_subcommand("eq", "one of the eight unit rules");
    verify_eq->add_option("--rule", v_rule, "rule index 1..8")->required();
    auto* verify_prop31_cmd =
        verify_cmd->add_subcommand("prop31", "bicyclic commutator identity");
    auto* verify_l33 = verify_cmd->add_subcommand("lemma33", "Bass commutator identity");
    auto* verify_l34 = verify_cmd->add_subcommand("lemma34", "Bass conjugation identities");
    for (auto* sub : {verify_eq, verify_prop31_cmd, verify_l33, verify_l34}) {
        sub->add_option("--group", v_group, "catalog group to sweep");
        sub->add_flag("--all", v_all, "sweep every catalog group of order <= 16");
    }

    auto* abel_cmd = app.add_subcommand("abelianize", "Smith-normal-form abelianization");
    std::string abel_target;
    abel_cmd->add_option("target", abel_target, "presentation JSON file or catalog id")
        ->required();

    auto* catalog_cmd = app.add_subcommand("catalog", "recorded unit-group presentations");
    auto* catalog_verify = catalog_cmd->add_subcommand(
        "verify", "abelianizations, ring relations and weight homomorphisms");
    auto* catalog_list = catalog_cmd->add_subcommand("list", "list recorded presentations");

    auto* kappa_cmd = app.add_subcommand("kappa", "weighted homomorphism onto C-infinity");
    std::string kappa_id, kappa_weights_file;
    kappa_cmd->add_option("id", kappa_id, "catalog presentation id")->required();
    kappa_cmd->add_option("--weights", kappa_weights_file, "JSON file {generator: weight}");

    auto* dih_cmd = app.add_subcommand("dihedral2p", "matrix model of U(ZD_2p)");
    int dih_p = 5;
    int dih_trials = 100;
    std::string dih_mode = "verify";
    dih_cmd->add_option("--p", dih_p, "odd prime at most 31")->required();
    dih_cmd->add_option("--trials", dih_trials, "seeded random trials per class");
    dih_cmd->add_option("mode", dih_mode, "only 'verify' is supported");

    // Let the global --json / --seed flags appear after any subcommand.
    for (auto* sub : {groups_cmd, group_cmd, invariants_cmd, units_cmd, verify_cmd,
                      abel_cmd, catalog_cmd, kappa_cmd, dih_cmd}) {
        sub->fallthrough();
        for (auto* nested : sub->get_subcommands([](const CLI::App*) { return true; }))
            nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        if (*groups_list) {
            json list = json::array();
            for (const std::string& name : sweep_group_names(64)) {
                FiniteGroup g = builtin_group(name);
                list.push_back({{"name", name}, {"order", g.order()}});
            }
            if (opt.json) {
                json j{{"schema", "1"},
                       {"groups", list},
                       {"families",
                        json::array({"C<n> (n <= 64)", "D<2n> (order 2n <= 64)",
                                     "Dic<n> (order 4n <= 64)"})}};
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& e : list)
                    std::cout << e["name"].get<std::string>() << " (order "
                              << e["order"].get<int>() << ")\n";
                std::cout << "families: C<n>, D<2n>, Dic<n> up to order 64\n";
            }
            return 0;
        }

        if (*group_info || *invariants_cmd) {
            FiniteGroup g = load_group(*group_info ? info_name : inv_name);
            RankReport r = rank_center(g);
            if (opt.json) {
                json j = rank_report_json(r);
                j["schema"] = "1";
                j["order"] = g.order();
                j["abelian_quotient"] = abelian_quotient(g).to_string();
                j["center_size"] = static_cast<int>(center(g).size());
                std::cout << j.dump(2) << "\n";
            } else {
                print_rank_report(r);
                std::cout << "order          " << g.order() << "\n"
                          << "G/G'           " << abelian_quotient(g).to_string() << "\n"
                          << "center size    " << center(g).size() << "\n";
            }
            return 0;
        }

        if (*units_bicyclic) {
            FiniteGroup g = load_group(ub_group);
            BicyclicSpec spec{element_index(g, ub_g, "--g"), element_index(g, ub_h, "--h")};
            GroupRingElement b = bicyclic(g, spec);
            json j{{"schema", "1"},
                   {"element", b.to_string()},
                   {"augmentation", b.augmentation().get_str()},
                   {"trivial", bicyclic_is_trivial(g, spec)},
                   {"is_unit", is_unit(b)}};
            std::cout << (opt.json ? j.dump(2) : "b(g,h) = " + b.to_string()) << "\n";
            return 0;
        }

        if (*units_bass) {
            FiniteGroup g = load_group(ubs_group);
            std::optional<long> m;
            if (ubs_m_raw > 0) m = ubs_m_raw;
            BassSpec spec = make_bass_spec(g, element_index(g, ubs_g, "--g"), ubs_k, m);
            GroupRingElement u = bass(g, spec);
            json j{{"schema", "1"},
                   {"element", u.to_string()},
                   {"k", spec.k},
                   {"m", spec.m},
                   {"n", spec.n},
                   {"augmentation", u.augmentation().get_str()},
                   {"trivial", u.is_trivial_unit()},
                   {"is_unit", true}};
            std::cout << (opt.json ? j.dump(2)
                                   : "u_{" + std::to_string(spec.k) + "," +
                                         std::to_string(spec.m) + "}(g) = " + u.to_string())
                      << "\n";
            return 0;
        }

        if (*verify_eq || *verify_prop31_cmd || *verify_l33 || *verify_l34) {
            RunReport rep;
            for (const std::string& name :
                 groups_for_sweep(v_group, v_all || v_group.empty())) {
                FiniteGroup g = builtin_group(name);
                if (*verify_eq)
                    rep.absorb(sweep_bass_rule(g, v_rule));
                else if (*verify_prop31_cmd)
                    rep.absorb(sweep_prop31(g));
                else if (*verify_l33)
                    rep.absorb(sweep_lemma33(g));
                else
                    rep.absorb(sweep_lemma34(g));
            }
            if (*verify_eq)
                rep.command = "verify eq --rule " + std::to_string(v_rule);
            else if (*verify_prop31_cmd)
                rep.command = "verify prop31";
            else if (*verify_l33)
                rep.command = "verify lemma33";
            else
                rep.command = "verify lemma34";
            if (!v_group.empty()) rep.command += " --group " + v_group;
            return finish(opt, rep, start);
        }

        if (*abel_cmd) {
            Presentation p;
            json j{{"schema", "1"}};
            if (is_unit_presentation_id(abel_target)) {
                const UnitPresentationEntry& e = unit_presentation(abel_target);
                p = e.presentation();
                AbelianGroupType got = abelianization(p);
                j["recorded"] = e.expected.to_string();
                j["matches_recorded"] = got == e.expected;
            } else {
                p = presentation_from_json_text(read_file(abel_target));
            }
            AbelianGroupType a = abelianization(p);
            j["abelianization"] = a.to_string();
            j["free_rank"] = a.free_rank;
            json factors = json::array();
            for (const Int& d : a.invariant_factors) factors.push_back(d.get_str());
            j["invariant_factors"] = factors;
            std::cout << (opt.json ? j.dump(2) : abel_target + " -> " + a.to_string())
                      << "\n";
            return 0;
        }

        if (*catalog_list) {
            for (const auto& e : unit_presentation_catalog())
                std::cout << e.id << " (base " << e.group_name << ", recorded "
                          << e.expected.to_string() << ")\n";
            return 0;
        }

        if (*catalog_verify) {
            RunReport rep;
            rep.command = "catalog verify";
            for (const auto& e : unit_presentation_catalog()) {
                AbelianGroupType got = abelianization(e.presentation());
                bool ok = got == e.expected;
                rep.count(ok);
                if (!ok)
                    rep.failures.push_back(
                        {{"params", e.id + ": abelianization"},
                         {"lhs", got.to_string()},
                         {"rhs", e.expected.to_string()},
                         {"difference",
                          "computed value differs from the recorded one (see the catalog "
                          "entry notes)"}});
                FiniteGroup g = builtin_group(e.group_name);
                ExponentComparison cmp = exponent_compare(g, got);
                rep.count(cmp.e1);
                if (!cmp.e1)
                    rep.failures.push_back(
                        {{"params", e.id + ": exponent (E1)"},
                         {"lhs", got.torsion_exponent().get_str()},
                         {"rhs", abelian_quotient(g).torsion_exponent().get_str()},
                         {"difference", ""}});
                if (!e.kappa_weights.empty()) {
                    KappaReport k = kappa_verify(e.presentation(), e.kappa_weights);
                    rep.count(k.is_homomorphism && k.nontrivial_image);
                    if (!k.is_homomorphism)
                        rep.failures.push_back({{"params", e.id + ": kappa"},
                                                {"lhs", "weighted relator sums"},
                                                {"rhs", "0"},
                                                {"difference", ""}});
                }
                if (e.id == "V(ZS3)" || e.id == "V(ZD8)")
                    rep.absorb(verify_ring_presentation(e));
                if (e.id == "V(ZP)") {
                    GroupRingElement v9 = p_ninth_generator(g);
                    bool unit_ok = is_unit(v9) && (v9 * inverse(v9)).is_one();
                    rep.count(unit_ok);
                    if (!unit_ok)
                        rep.failures.push_back(
                            {{"params", "V(ZP): ninth generator unit check"},
                             {"lhs", v9.to_string()},
                             {"rhs", "a unit"},
                             {"difference", ""}});
                }
            }
            return finish(opt, rep, start);
        }

        if (*kappa_cmd) {
            const UnitPresentationEntry& e = unit_presentation(kappa_id);
            std::map<std::string, long> weights = e.kappa_weights;
            if (!kappa_weights_file.empty()) {
                weights.clear();
                json w = json::parse(read_file(kappa_weights_file));
                for (auto& [k, v] : w.items()) weights[k] = v.get<long>();
            }
            if (weights.empty())
                throw std::invalid_argument("no recorded weights for " + kappa_id +
                                            "; pass --weights <file>");
            KappaReport k = kappa_verify(e.presentation(), weights);
            RunReport rep;
            rep.command = "kappa " + kappa_id;
            rep.count(k.is_homomorphism);
            rep.payload = {{"is_homomorphism", k.is_homomorphism},
                           {"nontrivial_image", k.nontrivial_image},
                           {"failing_relators", k.failing_relators}};
            std::string summary =
                k.is_homomorphism
                    ? (k.nontrivial_image
                           ? "homomorphism with infinite image: the abelianization is infinite"
                           : "homomorphism with trivial image")
                    : "not a homomorphism";
            return finish(opt, rep, start, summary);
        }

        if (*dih_cmd) {
            if (dih_mode != "verify")
                throw std::invalid_argument("unknown mode " + dih_mode);
            DihedralTrialReport r = run_dihedral_trials(dih_p, dih_trials, opt.seed);
            RunReport rep;
            rep.command = "dihedral2p --p " + std::to_string(dih_p);
            rep.seed = opt.seed;
            rep.seed_used = true;
            rep.count(r.involution_passes == r.trials);
            rep.count(r.decompose_passes == r.trials);
            rep.count(r.closure_passes == r.trials);
            rep.count(r.residue.all_ok());
            rep.payload = {{"p", r.p},
                           {"trials", r.trials},
                           {"involution_passes", r.involution_passes},
                           {"involution_colsum_minus1", r.involution_e0},
                           {"involution_colsum_plus1", r.involution_e1},
                           {"decompose_roundtrips", r.decompose_passes},
                           {"closure_passes", r.closure_passes},
                           {"residue_group",
                            {{"order", r.residue.order},
                             {"closed", r.residue.closed},
                             {"cyclic", r.residue.cyclic},
                             {"t_has_order_p", r.residue.t_has_order_p},
                             {"swap_inverts", r.residue.swap_inverts}}}};
            return finish(opt, rep, start);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
