// kirillov: exact orbit-method toolkit for nilpotent Lie algebras.
//
// Exit codes: 0 all assertions passed, 1 an assertion failed (witness on
// stderr), 2 usage or input-parse error.
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "kirillov/algebra_io.hpp"
#include "kirillov/characters.hpp"
#include "kirillov/format.hpp"
#include "kirillov/verify.hpp"

using ojson = nlohmann::ordered_json;
using namespace kirillov;

namespace {

struct CommonOpts {
    std::string algebra_path;
    std::string format = "text";
};

void add_algebra_options(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("algebra,--algebra", opts.algebra_path, "algebra description (JSON)");
    cmd->add_option("--format", opts.format, "text or json")
        ->check(CLI::IsMember({"text", "json", "csv"}));
}

std::string require_path(const CommonOpts& opts) {
    if (opts.algebra_path.empty())
        throw kirillov::ParseError("an algebra file is required (positional or --algebra)");
    return opts.algebra_path;
}

template <class F>
std::string field_name(const LieAlgebra<F>& g) {
    return g.field.name();
}

int cmd_validate(const CommonOpts& opts) {
    AnyAlgebra a = load_algebra(require_path(opts)); // construction validates
    with_algebra(a, [&](const auto& g) {
        if (opts.format == "json") {
            ojson j;
            j["schema"] = 1;
            j["command"] = "validate";
            j["name"] = g.name;
            j["field"] = field_name(g);
            j["dim"] = g.n;
            j["class"] = g.nclass;
            j["valid"] = true;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << g.name << ": dim " << g.n << ", class " << g.nclass << ", field "
                      << field_name(g) << ", valid\n";
        }
    });
    return 0;
}

int cmd_ch_eval(const CommonOpts& opts, const std::string& xs, const std::string& ys) {
    AnyAlgebra a = load_algebra(require_path(opts));
    with_algebra(a, [&](const auto& g) {
        auto x = parse_vector(g, xs);
        auto y = parse_vector(g, ys);
        auto layers = ch_components(g, x, y);
        auto z = ch_series(g, x, y);
        if (opts.format == "json") {
            ojson j;
            j["schema"] = 1;
            j["command"] = "ch-eval";
            j["z"] = vec_to_text(g, z);
            ojson comps = ojson::array();
            for (const auto& l : layers) comps.push_back(vec_to_text(g, l));
            j["components"] = comps;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "Z = " << vec_to_text(g, z) << "\n";
            for (std::size_t i = 0; i < layers.size(); ++i)
                std::cout << "Z_" << (i + 1) << " = " << vec_to_text(g, layers[i]) << "\n";
        }
    });
    return 0;
}

int cmd_polarize(const CommonOpts& opts, const std::string& fs) {
    AnyAlgebra a = load_algebra(require_path(opts));
    with_algebra(a, [&](const auto& g) {
        auto f = parse_functional(g, fs);
        auto pc = standard_polarization(g, f);
        bool dim_ok = is_polarizing(g, f, pc.r, PolarizingMode::dimension);
        if (opts.format == "json") {
            ojson j;
            j["schema"] = 1;
            j["command"] = "polarize";
            j["f"] = functional_to_text(g, f);
            j["grade"] = pc.grade;
            j["dim_r"] = static_cast<int>(pc.r.dim());
            ojson rb = ojson::array();
            for (const auto& row : pc.r.rows) rb.push_back(vec_to_text(g, row));
            j["r_basis"] = rb;
            ojson lv = ojson::array();
            for (const auto& level : pc.levels) {
                ojson l;
                l["dim_g"] = static_cast<int>(level.g.dim());
                l["dim_j"] = static_cast<int>(level.j.dim());
                ojson ab = ojson::array();
                for (const auto& row : level.a.rows) ab.push_back(vec_to_text(g, row));
                l["a_basis"] = ab;
                lv.push_back(l);
            }
            j["levels"] = lv;
            j["polarizing_by_dimension"] = dim_ok;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "f = " << functional_to_text(g, f) << "\n";
            std::cout << "grade " << pc.grade << ", dim r = " << pc.r.dim() << "\n";
            for (const auto& row : pc.r.rows)
                std::cout << "r: " << vec_to_text(g, row) << "\n";
            for (std::size_t i = 0; i < pc.levels.size(); ++i)
                std::cout << "level " << i << ": dim g = " << pc.levels[i].g.dim()
                          << ", dim j = " << pc.levels[i].j.dim()
                          << ", dim a = " << pc.levels[i].a.dim() << "\n";
            std::cout << "polarizing (dimension test): " << (dim_ok ? "yes" : "no") << "\n";
        }
        if (!dim_ok) throw IdentityViolation("r fails the dimension test 2 dim r = 2n - rank B_f");
    });
    return 0;
}

int cmd_orbits(const CommonOpts& opts, const std::string& fs, std::uint64_t bound) {
    AnyAlgebra a = load_algebra(require_path(opts));
    int rc = 0;
    with_algebra(a, [&](const auto& g) {
        using F = std::decay_t<decltype(g.field)>;
        if constexpr (F::finite) {
            if (!fs.empty()) {
                auto o = orbit(g, parse_functional(g, fs), bound);
                if (opts.format == "json") {
                    ojson j;
                    j["schema"] = 1;
                    j["command"] = "orbits";
                    j["representative"] = functional_to_text(g, o.representative);
                    j["size"] = o.points.size();
                    j["tangent_dim"] = o.tangent_dim;
                    ojson pts = ojson::array();
                    for (const auto& pt : o.points) pts.push_back(functional_to_text(g, pt));
                    j["points"] = pts;
                    std::cout << j.dump(2) << "\n";
                } else {
                    std::cout << "orbit size " << o.points.size() << ", tangent dim "
                              << o.tangent_dim << "\n";
                    for (const auto& pt : o.points)
                        std::cout << functional_to_text(g, pt) << "\n";
                }
            } else {
                auto orbits = orbit_partition(g, bound);
                if (opts.format == "json") {
                    ojson j;
                    j["schema"] = 1;
                    j["command"] = "orbits";
                    j["count"] = orbits.size();
                    ojson arr = ojson::array();
                    for (const auto& o : orbits) {
                        ojson e;
                        e["representative"] = functional_to_text(g, o.representative);
                        e["size"] = o.points.size();
                        arr.push_back(e);
                    }
                    j["orbits"] = arr;
                    std::cout << j.dump(2) << "\n";
                } else {
                    std::cout << orbits.size() << " coadjoint orbits\n";
                    for (const auto& o : orbits)
                        std::cout << "size " << o.points.size() << ", rep "
                                  << functional_to_text(g, o.representative) << "\n";
                }
            }
        } else {
            if (fs.empty())
                throw BackendUnsupported(
                    "orbit enumeration over Q needs --f; the partition is infinite");
            auto f = parse_functional(g, fs);
            auto o = orbit(g, f, bound);
            if (opts.format == "json") {
                ojson j;
                j["schema"] = 1;
                j["command"] = "orbits";
                j["representative"] = functional_to_text(g, o.representative);
                j["tangent_dim"] = o.tangent_dim;
                j["enumerated"] = false;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "representative " << functional_to_text(g, o.representative)
                          << ", tangent dim " << o.tangent_dim << " (orbit not enumerable over Q)\n";
            }
        }
    });
    return rc;
}

std::string class_label(const FiniteGroupTable& t, std::size_t cls) {
    Vec<Fp> v = t.log_of(t.representative(static_cast<std::uint32_t>(cls)));
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ";";
        s += std::to_string(v[i].r);
    }
    return s + ")";
}

int cmd_chartable(const CommonOpts& opts, std::uint64_t bound) {
    AnyAlgebra a = load_algebra(require_path(opts));
    int rc = 0;
    with_algebra(a, [&](const auto& g) {
        using F = std::decay_t<decltype(g.field)>;
        if constexpr (!F::finite) {
            throw BackendUnsupported("character tables need a finite backend");
        } else {
            FiniteGroupTable t = build_table(g, bound);
            CharacterTable ct = character_table(g, t, bound);
            if (opts.format == "json") {
                ojson j;
                j["schema"] = 1;
                j["command"] = "chartable";
                ojson cl = ojson::array();
                for (std::size_t c = 0; c < t.conjugacy_classes.size(); ++c)
                    cl.push_back(class_label(t, c));
                j["classes"] = cl;
                ojson chars = ojson::array();
                for (std::size_t k = 0; k < ct.chars.size(); ++k) {
                    ojson e;
                    e["name"] = "chi_" + std::to_string(k + 1);
                    e["degree"] = character_degree(ct.chars[k]);
                    e["orbit_rep"] = functional_to_text(g, ct.orbit_reps[k]);
                    ojson vals = ojson::array();
                    for (const auto& v : ct.chars[k].values) vals.push_back(v.to_string());
                    e["values"] = vals;
                    chars.push_back(e);
                }
                j["characters"] = chars;
                std::cout << j.dump(2) << "\n";
            } else {
                // CSV; cyclotomic entries use z for the primitive p-th root
                std::cout << "character,degree";
                for (std::size_t c = 0; c < t.conjugacy_classes.size(); ++c)
                    std::cout << "," << class_label(t, c);
                std::cout << "\n";
                for (std::size_t k = 0; k < ct.chars.size(); ++k) {
                    std::cout << "chi_" << (k + 1) << "," << character_degree(ct.chars[k]);
                    for (const auto& v : ct.chars[k].values) std::cout << "," << v.to_string();
                    std::cout << "\n";
                }
            }
        }
    });
    return rc;
}

int cmd_audit(const CommonOpts& opts, std::uint64_t bound) {
    AnyAlgebra a = load_algebra(require_path(opts));
    int rc = 0;
    with_algebra(a, [&](const auto& g) {
        using F = std::decay_t<decltype(g.field)>;
        if constexpr (!F::finite) {
            throw BackendUnsupported("the Kirillov audit needs a finite backend");
        } else {
            AuditReport rep = kirillov_audit(g, bound);
            if (opts.format == "json") {
                ojson j;
                j["schema"] = 1;
                j["command"] = "audit";
                j["algebra"] = rep.algebra;
                j["p"] = rep.p;
                j["orbits"] = rep.orbit_count;
                j["classes"] = rep.class_count;
                j["degrees"] = rep.degrees;
                ojson cl = ojson::array();
                for (const auto& c : rep.clauses) {
                    ojson e;
                    e["name"] = c.name;
                    e["pass"] = c.pass;
                    e["informational"] = c.informational;
                    e["detail"] = c.detail;
                    cl.push_back(e);
                }
                j["clauses"] = cl;
                j["pass"] = rep.pass;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << rep.algebra << ": " << rep.orbit_count << " orbits, "
                          << rep.class_count << " classes\n";
                for (const auto& c : rep.clauses)
                    std::cout << (c.informational ? "info " : "clause ") << c.name << ": "
                              << (c.pass ? "PASS" : "FAIL") << " (" << c.detail << ")\n";
                std::cout << (rep.pass ? "audit: PASS" : "audit: FAIL") << "\n";
            }
            if (!rep.pass) {
                require_audit_pass(rep); // throws with the first violated clause
            }
        }
    });
    return rc;
}

int cmd_verify_all(const Config& cfg, const std::string& format) {
    VerifyReport rep = run_verify_all(cfg);
    if (format == "json") {
        ojson j;
        j["schema"] = 1;
        j["command"] = "verify-all";
        j["seed"] = cfg.seed;
        j["samples"] = cfg.samples;
        j["bound"] = cfg.enumeration_bound;
        ojson checks = ojson::array();
        for (const auto& c : rep.checks) {
            ojson e;
            e["id"] = c.id;
            e["name"] = c.name;
            e["pass"] = c.pass;
            e["detail"] = c.detail;
            checks.push_back(e);
        }
        j["checks"] = checks;
        j["pass"] = rep.pass;
        std::cout << j.dump(2) << "\n";
    } else {
        render_verify_text(rep, std::cout);
    }
    return rep.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact CH group law, polarizations, coadjoint orbits and finite"
                 " Kirillov audits for nilpotent Lie algebras"};
    app.require_subcommand(1);

    CommonOpts vopt;
    CLI::App* validate = app.add_subcommand("validate", "load an algebra and check its axioms");
    add_algebra_options(validate, vopt);

    CommonOpts chopt;
    std::string xs, ys;
    CLI::App* cheval = app.add_subcommand("ch-eval", "evaluate the group law log(exp X exp Y)");
    add_algebra_options(cheval, chopt);
    cheval->add_option("--x", xs, "left factor (label or coordinates)")->required();
    cheval->add_option("--y", ys, "right factor (label or coordinates)")->required();

    CommonOpts popt;
    std::string pf;
    CLI::App* polarize = app.add_subcommand("polarize", "standard polarization for a functional");
    add_algebra_options(polarize, popt);
    polarize->add_option("--f", pf, "functional (starred label or coordinates)")->required();

    CommonOpts oopt;
    std::string of;
    std::uint64_t obound = 625;
    CLI::App* orbits = app.add_subcommand("orbits", "coadjoint orbits");
    add_algebra_options(orbits, oopt);
    orbits->add_option("--f", of, "functional; omit to partition all of g* (finite only)");
    orbits->add_option("--bound", obound, "largest group order to enumerate");

    CommonOpts topt;
    std::uint64_t tbound = 625;
    CLI::App* chartable = app.add_subcommand("chartable", "full character table (CSV)");
    add_algebra_options(chartable, topt);
    chartable->add_option("--bound", tbound, "largest group order to enumerate");
    topt.format = "csv";

    CommonOpts aopt;
    std::uint64_t abound = 625;
    CLI::App* audit = app.add_subcommand("audit", "orbit-method bijection audit");
    add_algebra_options(audit, aopt);
    audit->add_option("--bound", abound, "largest group order to enumerate");

    Config cfg;
    std::string vformat = "text";
    CLI::App* verify = app.add_subcommand("verify-all", "run the whole verification suite");
    verify->add_option("--corpus", cfg.corpus_dir, "directory with the bundled algebras");
    verify->add_option("--seed", cfg.seed, "seed for the randomized sweeps");
    verify->add_option("--samples", cfg.samples, "sample count per randomized sweep");
    verify->add_option("--bound", cfg.enumeration_bound, "largest group order to enumerate");
    verify->add_option("--format", vformat, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (validate->parsed()) return cmd_validate(vopt);
        if (cheval->parsed()) return cmd_ch_eval(chopt, xs, ys);
        if (polarize->parsed()) return cmd_polarize(popt, pf);
        if (orbits->parsed()) return cmd_orbits(oopt, of, obound);
        if (chartable->parsed()) return cmd_chartable(topt, tbound);
        if (audit->parsed()) return cmd_audit(aopt, abound);
        if (verify->parsed()) return cmd_verify_all(cfg, vformat);
    } catch (const kirillov::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const kirillov::Error& e) {
        std::cerr << "assertion failed: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
