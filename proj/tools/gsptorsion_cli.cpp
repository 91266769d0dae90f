// Command-line front end. Every command prints one JSON document.
//
// Exit codes: 0 success, 2 invalid input, 3 verification failure,
// 4 enumeration budget exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "gsptorsion/exponents.hpp"
#include "gsptorsion/json_io.hpp"
#include "gsptorsion/lattice.hpp"
#include "gsptorsion/suites.hpp"
#include "gsptorsion/symplectic.hpp"
#include "gsptorsion/torsion.hpp"

using namespace gspt;

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitSuiteFailed = 3;
constexpr int kExitBudget = 4;

struct Globals {
    std::uint64_t seed = 1;
    int trials = 0;
    int budget_log2 = 34;
    int bound = 6;
    std::string json_path;
    std::string input = "-";
};

void emit(const Json& out, const Globals& g) {
    const std::string text = out.dump();
    if (g.json_path.empty()) {
        std::cout << text << '\n';
        return;
    }
    std::ofstream f(g.json_path);
    if (!f) throw InvalidArgument("cannot write '" + g.json_path + "'");
    f << text << '\n';
}

EnumerationOptions enum_opts(const Globals& g) {
    EnumerationOptions o;
    o.budget_log2 = g.budget_log2;
    return o;
}

GroupDescriptor descriptor(const std::string& family, int g, int g2, int r, int s) {
    switch (parse_family(family)) {
        case Family::Sp: return GroupDescriptor::sp(g);
        case Family::GSp: return GroupDescriptor::gsp(g);
        case Family::Pr: return GroupDescriptor::pr(g, r);
        case Family::Prs: return GroupDescriptor::prs(g, r, s);
        case Family::E: return GroupDescriptor::e(g, g2);
    }
    throw InvalidArgument("unknown family");
}

// "level:r:s,level:r:s,..."
std::vector<ChainStep> parse_chain(const std::string& text) {
    std::vector<ChainStep> steps;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        ChainStep st{};
        char c1 = 0, c2 = 0;
        std::stringstream is(item);
        if (!(is >> st.level >> c1 >> st.r >> c2 >> st.s) || c1 != ':' || c2 != ':' || !is.eof())
            throw InvalidArgument("chain step '" + item + "' is not level:r:s");
        steps.push_back(st);
    }
    if (steps.empty()) throw InvalidArgument("empty chain");
    return steps;
}

// "g=<int>,n=<int>"
ShapeFactor parse_factor(const std::string& text) {
    ShapeFactor f{0, 0};
    bool has_g = false, has_n = false;
    std::stringstream ss(text);
    std::string kv;
    while (std::getline(ss, kv, ',')) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw InvalidArgument("factor entry '" + kv + "' lacks '='");
        const std::string key = kv.substr(0, eq);
        int value = 0;
        try {
            std::size_t pos = 0;
            value = std::stoi(kv.substr(eq + 1), &pos);
            if (pos != kv.size() - eq - 1) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw InvalidArgument("factor value in '" + kv + "' is not an integer");
        }
        if (key == "g") {
            f.g = value;
            has_g = true;
        } else if (key == "n") {
            f.n = value;
            has_n = true;
        } else {
            throw InvalidArgument("unknown factor key '" + key + "'");
        }
    }
    if (!has_g || !has_n) throw InvalidArgument("factor needs g=<int>,n=<int>");
    return f;
}

Json pairing_json(const TorsionSubgroup& h, std::size_t i, std::size_t j) {
    if (i >= h.generators.size() || j >= h.generators.size())
        throw InvalidArgument("pairing needs generator indices inside the subgroup");
    PairingResult p = weil_pairing(h.ctx, h.generators[i], h.generators[j]);
    return Json{{"n", p.n}, {"k", p.k}};
}

Json predict_one(const TorsionSubgroup& h) {
    SubgroupType type = canonical_type(h);
    FlagChain chain = isotropy_chain(h);
    Json out{{"type", type_to_json(type)}, {"chain", chain_to_json(chain)}};
    if (type.t() == 0) {
        out["exponent"] = 0;
        out["ratio"] = nullptr;
        return out;
    }
    const int e = degree_exponent_prediction(h.genus(), type, chain);
    out["exponent"] = e;
    out["log_order"] = type.log_order();
    out["ratio"] = ExactRational(type.log_order(), e).to_string();
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    Globals glob;
    CLI::App app{"Exact computations with symplectic groups over Z/l^N and their torsion subgroups"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--seed", glob.seed, "Seed for the SplitMix64 generator");
    app.add_option("--trials", glob.trials, "Number of random trials (0 keeps the suite default)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--budget-log2", glob.budget_log2, "Enumeration cap as a power of two")->check(CLI::Range(1, 62));
    app.add_option("--json", glob.json_path, "Write the JSON result to this path instead of standard output");

    std::function<Json()> action;

    // gamma ------------------------------------------------------------------
    auto* gamma = app.add_subcommand("gamma", "Degree exponents of torsion subgroups");
    gamma->require_subcommand(1);
    {
        static int g = 1;
        auto* simple = gamma->add_subcommand("simple", "2g/(2g^2+g+1)");
        simple->add_option("--g", g)->required()->check(CLI::PositiveNumber);
        simple->callback([&] { action = [] { return Json{{"value", gamma_simple(g).to_string()}}; }; });

        static std::vector<std::string> factors;
        static std::string kind = "alpha";
        auto* product = gamma->add_subcommand("product", "Exponent of a product of abelian varieties");
        product->add_option("--factor", factors, "g=<int>,n=<int>")->required();
        product->add_option("--kind", kind, "alpha, rho0, rho0-rs or rho1")
            ->check(CLI::IsMember({"alpha", "rho0", "rho0-rs", "rho1"}));
        product->callback([&] {
            action = [] {
                ProductShape shape;
                for (const auto& f : factors) shape.push_back(parse_factor(f));
                if (kind == "rho0") return report_to_json(rho0(shape));
                if (kind == "rho0-rs") return report_to_json(rho0_rs(shape));
                if (kind == "rho1") return report_to_json(rho1(shape));
                return report_to_json(alpha_product(shape));
            };
        });

        static int sg = 1, max_t = 2, max_level = 3;
        auto* search = gamma->add_subcommand("search", "Maximize log|H| / predicted degree exponent");
        search->add_option("--g", sg)->required()->check(CLI::PositiveNumber);
        search->add_option("--max-t", max_t)->check(CLI::PositiveNumber);
        search->add_option("--max-level", max_level)->check(CLI::PositiveNumber);
        search->callback([&] { action = [] { return report_to_json(gamma_ratio_search(sg, max_t, max_level)); }; });
    }

    // exceptional ------------------------------------------------------------
    {
        static long g = 1;
        auto* exc = app.add_subcommand("exceptional", "Membership in the exceptional set of genera");
        exc->add_option("--g", g)->required()->check(CLI::PositiveNumber);
        exc->callback([&] {
            action = [] {
                auto [is, w] = is_exceptional(g);
                Json witness = nullptr;
                if (w.kind == ExceptionalWitness::Kind::Power)
                    witness = Json{{"kind", "power"}, {"k", w.k}, {"a", std::to_string(w.a)}};
                else if (w.kind == ExceptionalWitness::Kind::Binomial)
                    witness = Json{{"kind", "binomial"}, {"k", w.k}};
                return Json{{"exceptional", is}, {"witness", witness}};
            };
        });
    }

    // group ------------------------------------------------------------------
    auto* group = app.add_subcommand("group", "Symplectic group families over Z/l^m");
    group->require_subcommand(1);
    {
        static std::string family = "sp", method = "formula";
        static int g = 1, g2 = 1, r = 0, s = 0, level = 1;
        static std::uint64_t ell = 2;
        auto add_group_opts = [](CLI::App* c) {
            c->add_option("--family", family, "sp, gsp, pr, prs or e");
            c->add_option("--g", g)->required()->check(CLI::PositiveNumber);
            c->add_option("--g2", g2, "Second genus for family e")->check(CLI::PositiveNumber);
            c->add_option("--r", r)->check(CLI::NonNegativeNumber);
            c->add_option("--s", s)->check(CLI::NonNegativeNumber);
            c->add_option("--ell", ell)->required();
            c->add_option("--level", level)->check(CLI::PositiveNumber);
        };

        auto* order = group->add_subcommand("order", "Group order");
        add_group_opts(order);
        order->add_option("--method", method)->check(CLI::IsMember({"formula", "enumerate", "hensel"}));
        order->callback([&] {
            action = [&glob] {
                GroupDescriptor d = descriptor(family, g, g2, r, s);
                PrecisionContext check(ell, level);
                (void)check;
                mpz_class n;
                if (method == "enumerate") {
                    n = group_order_enumerate(d, ell, level, enum_opts(glob));
                } else if (method == "hensel") {
                    n = hensel_order(d, ell, level);
                } else if (d.family == Family::Sp) {
                    n = sp_order(g, ell, level);
                } else if (d.family == Family::GSp) {
                    n = gsp_order(g, ell, level);
                } else {
                    throw InvalidArgument("no closed formula for family " + family + "; use --method enumerate");
                }
                return Json{{"order", n.get_str()}};
            };
        });

        static bool count_only = false;
        auto* en = group->add_subcommand("enumerate", "List every element");
        add_group_opts(en);
        en->add_flag("--count-only", count_only, "Print only the number of elements");
        en->callback([&] {
            action = [&glob] {
                GroupDescriptor d = descriptor(family, g, g2, r, s);
                PrecisionContext ctx(ell, level);
                if (count_only) return Json{{"order", group_order_enumerate(d, ell, level, enum_opts(glob)).get_str()}};
                auto elems = enumerate_elements(d, ctx, enum_opts(glob));
                Json arr = Json::array();
                for (const auto& e : elems) arr.push_back(element_to_json(e));
                return Json{{"order", std::to_string(elems.size())}, {"elements", arr}};
            };
        });

        static int cg = 1, cr = 0, cs = -1;
        auto* codim = group->add_subcommand("codim", "Codimension of P_r or P_{r,s} in Sp_2g");
        codim->add_option("--g", cg)->required()->check(CLI::PositiveNumber);
        codim->add_option("--r", cr)->required()->check(CLI::NonNegativeNumber);
        codim->add_option("--s", cs, "Omit for P_r")->check(CLI::NonNegativeNumber);
        codim->callback([&] {
            action = [] { return Json{{"codim", cs < 0 ? codim_pr(cg, cr) : codim_prs(cg, cr, cs)}}; };
        });

        auto* fact = group->add_subcommand("factorize", "Write a GSp element as diag(I, lambda I) times an Sp element");
        fact->callback([&] {
            action = [&glob] {
                SymplecticElement m = element_from_json(read_json_input(glob.input));
                auto [scalar, sp] = sp_factorize(m);
                return Json{{"scalar_block", element_to_json(scalar)}, {"sp_part", element_to_json(sp)}};
            };
        });

        static std::string member_family = "gsp";
        static int mr = 0, ms = 0;
        auto* member = group->add_subcommand("member", "Membership test for a matrix");
        member->add_option("--family", member_family);
        member->add_option("--r", mr)->check(CLI::NonNegativeNumber);
        member->add_option("--s", ms)->check(CLI::NonNegativeNumber);
        member->callback([&] {
            action = [&glob] {
                ResidueMatrix m = matrix_from_json(read_json_input(glob.input));
                if (m.rows() != m.cols() || m.rows() % 2 != 0) throw DimensionMismatch("matrix must be square of even size");
                GroupDescriptor d = descriptor(member_family, static_cast<int>(m.rows() / 2), 1, mr, ms);
                Json out{{"member", is_member(m, d)}};
                try {
                    out["multiplier"] = to_decimal(multiplier(m).value());
                } catch (const NotSymplecticSimilitude&) {
                    out["multiplier"] = nullptr;
                }
                return out;
            };
        });

        static int ig = 1;
        static std::uint64_t iell = 2;
        static std::string chain;
        auto* index = group->add_subcommand("index", "Index of a congruence chain subgroup of Sp_2g");
        index->add_option("--g", ig)->required()->check(CLI::PositiveNumber);
        index->add_option("--ell", iell);
        index->add_option("--chain", chain, "level:r:s,... with increasing levels")->required();
        index->add_flag("--enumerate", count_only, "Also compute the exact index by enumeration");
        index->callback([&] {
            action = [&glob] {
                auto steps = parse_chain(chain);
                Json out{{"exponent", chain_index_exponent(ig, steps)}};
                if (count_only) {
                    PrecisionContext check(iell, 1);
                    (void)check;
                    out["index"] = chain_index_enumerate(ig, iell, steps, enum_opts(glob)).get_str();
                }
                return out;
            };
        });
    }

    // lattice ----------------------------------------------------------------
    auto* lattice = app.add_subcommand("lattice", "Lattices in (Z/l^N)^2g");
    lattice->require_subcommand(1);
    {
        lattice->add_subcommand("saturate", "Saturation of a lattice")->callback([&] {
            action = [&glob] { return lattice_to_json(saturate(lattice_from_json(read_json_input(glob.input)))); };
        });
        lattice->add_subcommand("complete", "Symplectic basis extending a maximal isotropic lattice")->callback([&] {
            action = [&glob] {
                SymplecticBasis b = symplectic_complete(lattice_from_json(read_json_input(glob.input)));
                return Json{{"g", b.g}, {"basis", matrix_to_json(b.vectors)}};
            };
        });
        static int target = 1;
        auto* lift = lattice->add_subcommand("lift", "Lift an isotropic subspace mod l to higher precision");
        lift->add_option("--precision", target)->required()->check(CLI::PositiveNumber);
        lift->callback([&] {
            action = [&glob] { return lattice_to_json(isotropic_lift(lattice_from_json(read_json_input(glob.input)), target)); };
        });
    }

    // torsion ----------------------------------------------------------------
    auto* torsion = app.add_subcommand("torsion", "Finite subgroups of the l-power torsion");
    torsion->require_subcommand(1);
    {
        auto read_subgroup = [&glob] { return subgroup_from_json(read_json_input(glob.input)); };
        torsion->add_subcommand("type", "Exponents and multiplicities of H")->callback([&, read_subgroup] {
            action = [read_subgroup] { return type_to_json(canonical_type(read_subgroup())); };
        });
        static std::size_t pi = 0, pj = 1;
        auto* pairing = torsion->add_subcommand("pairing", "Weil pairing exponent of two generators");
        pairing->add_option("--first", pi, "First generator index");
        pairing->add_option("--second", pj, "Second generator index");
        pairing->callback([&, read_subgroup] { action = [read_subgroup] { return pairing_json(read_subgroup(), pi, pj); }; });
        torsion->add_subcommand("m1", "Pairing invariants m and m1")->callback([&, read_subgroup] {
            action = [read_subgroup] {
                TorsionSubgroup h = read_subgroup();
                return Json{{"m", m_invariant(h)}, {"m1", m1_invariant(h)}};
            };
        });
        torsion->add_subcommand("chain", "Isotropy flag chain")->callback([&, read_subgroup] {
            action = [read_subgroup] {
                TorsionSubgroup h = read_subgroup();
                return Json{{"type", type_to_json(canonical_type(h))}, {"chain", chain_to_json(isotropy_chain(h))}};
            };
        });
        static std::string sfam = "sp";
        auto* stab = torsion->add_subcommand("stabilizer", "Stabilizer order and index at level m^1");
        stab->add_option("--family", sfam)->check(CLI::IsMember({"sp", "gsp"}));
        stab->callback([&, read_subgroup] {
            action = [read_subgroup, &glob] {
                auto r = stabilizer_enumerate(read_subgroup(), parse_family(sfam), enum_opts(glob));
                Json mult = Json::array();
                for (auto x : r.multipliers) mult.push_back(to_decimal(x));
                return Json{{"order", r.order.get_str()}, {"index", r.index.get_str()}, {"level", r.level},
                            {"multipliers", mult}};
            };
        });
        torsion->add_subcommand("delta", "Multiplier index of the GSp stabilizer")->callback([&, read_subgroup] {
            action = [read_subgroup, &glob] {
                TorsionSubgroup h = read_subgroup();
                return Json{{"delta", delta_estimate(h, enum_opts(glob)).get_str()}, {"m1", m1_invariant(h)}};
            };
        });
        torsion->add_subcommand("predict-degree", "Predicted degree exponent; accepts {\"factors\": [...]}")
            ->callback([&] {
                action = [&glob] {
                    Json in = read_json_input(glob.input);
                    if (!in.contains("factors")) return predict_one(subgroup_from_json(in));
                    std::vector<FactorPrediction> parts;
                    long log_order = 0;
                    for (const auto& f : in.at("factors")) {
                        TorsionSubgroup h = subgroup_from_json(f);
                        SubgroupType type = canonical_type(h);
                        log_order += type.log_order();
                        parts.push_back({h.genus(), type, isotropy_chain(h)});
                    }
                    auto [m, e] = product_degree_exponent(parts);
                    Json out{{"m", m}, {"exponent", e}, {"log_order", log_order}};
                    out["ratio"] = e > 0 ? Json(ExactRational(log_order, e).to_string()) : Json(nullptr);
                    return out;
                };
            });
    }

    // verify -----------------------------------------------------------------
    bool suite_failed = false;
    {
        static std::string suite;
        auto* verify = app.add_subcommand("verify", "Run a verification suite");
        verify->add_option("suite", suite, "Suite name")->required();
        verify->add_option("--bound", glob.bound, "Grid bound for the abel suite")->check(CLI::PositiveNumber);
        verify->callback([&] {
            action = [&glob, &suite_failed] {
                RunConfig cfg;
                cfg.seed = glob.seed;
                cfg.trials = glob.trials;
                cfg.budget_log2 = glob.budget_log2;
                cfg.bound = glob.bound;
                VerificationReport rep = run_suite(suite, cfg);
                suite_failed = !rep.passed();
                return rep.to_json();
            };
        });
    }

    // Options shared by every command that reads a JSON document.
    for (auto* parent : {group, lattice, torsion})
        for (auto* sub : parent->get_subcommands([](CLI::App*) { return true; }))
            if (sub->get_name() != "order" && sub->get_name() != "enumerate" && sub->get_name() != "codim" &&
                sub->get_name() != "index")
                sub->add_option("--input", glob.input, "JSON input path, or - for standard input");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }

    try {
        if (!action) throw InvalidArgument("no command given");
        emit(action(), glob);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return suite_failed ? kExitSuiteFailed : 0;
}
