#include "simplicial/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "simplicial/complex.hpp"
#include "simplicial/complex_io.hpp"
#include "simplicial/corpus.hpp"
#include "simplicial/counting.hpp"
#include "simplicial/error.hpp"
#include "simplicial/euler_check.hpp"
#include "simplicial/generators.hpp"
#include "simplicial/star_link.hpp"

namespace simplicial::cli {

namespace {

using nlohmann::json;

constexpr std::string_view kCorpusPrefix = "corpus:";

// FILE arguments accept a path or corpus:NAME.
Complex load(const std::string& source) {
    if (source.starts_with(kCorpusPrefix)) {
        return load_corpus(std::string_view(source).substr(kCorpusPrefix.size()));
    }
    return parse_file(source);
}

std::string f_vector_text(const FVector& f) {
    std::string out = "(";
    for (std::size_t i = 0; i < f.counts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(f.counts[i]);
    }
    return out + ")";
}

json labels_json(const Complex& X, const Simplex& s) { return X.labels_of(s); }

json lemma_json(const Complex& X, const LemmaReport& r) {
    json j{{"identity", to_string(r.identity)}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"holds", r.holds}};
    if (r.k) j["k"] = *r.k;
    if (r.l) j["l"] = *r.l;
    if (r.simplex) j["simplex"] = labels_json(X, *r.simplex);
    if (r.bijection) j["bijection"] = *r.bijection;
    return j;
}

struct Context {
    std::ostream& out;
    std::ostream& err;
    bool json_output = false;
};

int cmd_info(Context& ctx, const std::string& file) {
    const Complex X = load(file);
    const FVector f = X.f_vector();
    const std::int64_t chi = X.euler_characteristic();
    if (ctx.json_output) {
        ctx.out << json{{"dimension", X.dimension()},
                        {"pure", X.is_pure()},
                        {"f_vector", f.counts},
                        {"chi", chi}}
                       .dump()
                << '\n';
    } else {
        ctx.out << "dim " << X.dimension() << ", " << (X.is_pure() ? "pure" : "not pure")
                << ", f = " << f_vector_text(f) << ", chi = " << chi << '\n';
    }
    return kSuccess;
}

bool check_passed(const EulerReport& r) {
    if (!r.is_euler) return false;
    if (!r.theorem_applicable) return true;
    return r.theorem_holds.value_or(false) && r.summed_identity && r.summed_identity->holds;
}

int cmd_check(Context& ctx, const std::string& file, const EulerCheckOptions& options) {
    const Complex X = load(file);
    const EulerReport r = verify_theorem(X, options);
    const bool passed = check_passed(r);

    if (ctx.json_output) {
        json checks = json::array();
        for (const auto& c : r.checks) {
            checks.push_back({{"simplex", labels_json(X, c.simplex)},
                              {"link_dim", c.link_dim},
                              {"link_chi", c.link_chi},
                              {"expected_chi", c.expected_chi},
                              {"ok", c.ok}});
        }
        json j{{"pure", r.pure},
               {"dimension", r.dimension},
               {"chi", r.chi},
               {"is_euler", r.is_euler},
               {"theorem_applicable", r.theorem_applicable},
               {"theorem_holds", r.theorem_holds ? json(*r.theorem_holds) : json(nullptr)},
               {"simplices_checked", r.simplices_checked},
               {"failures", r.failures},
               {"checks", checks},
               {"summed_identity",
                r.summed_identity ? lemma_json(X, *r.summed_identity) : json(nullptr)}};
        ctx.out << j.dump() << '\n';
        return passed ? kSuccess : kCheckFailed;
    }

    const char* parity = r.dimension % 2 ? "odd" : "even";
    if (r.is_euler) {
        ctx.out << "EULER COMPLEX, dim " << r.dimension << " (" << parity << "), chi = " << r.chi;
        if (!r.theorem_applicable) {
            ctx.out << ", theorem not applicable\n";
        } else if (passed) {
            ctx.out << ", theorem verified\n";
        } else {
            ctx.out << ", THEOREM VIOLATED\n";
        }
        if (r.summed_identity) {
            ctx.out << "summed link identity: " << r.summed_identity->lhs << " = "
                    << r.summed_identity->rhs << (r.summed_identity->holds ? "" : "  FAILED")
                    << '\n';
        }
    } else if (!r.pure) {
        ctx.out << "NOT AN EULER COMPLEX, dim " << r.dimension << ", chi = " << r.chi
                << ": not pure\n";
    } else {
        ctx.out << "NOT AN EULER COMPLEX, dim " << r.dimension << ", chi = " << r.chi << ": "
                << r.failures << " of " << r.simplices_checked << " links fail\n";
    }

    std::size_t shown_failures = 0;
    for (const auto& c : r.checks) {
        if (!c.ok) ++shown_failures;
        ctx.out << "  link of " << describe(X, c.simplex) << ": dim " << c.link_dim
                << ", chi = " << c.link_chi << ", expected " << c.expected_chi
                << (c.ok ? "" : "  FAIL") << '\n';
    }
    if (r.failures > shown_failures) {
        ctx.out << "  ... " << (r.failures - shown_failures) << " more failing links\n";
    }
    return passed ? kSuccess : kCheckFailed;
}

int cmd_link(Context& ctx, const std::string& file, const std::vector<std::string>& labels,
             bool want_star) {
    const Complex X = load(file);
    const Simplex s = X.simplex_of(labels);
    if (!want_star) {
        ctx.out << serialize(link(X, s));
        return kSuccess;
    }
    const SimplexSet st = star(X, s);
    ctx.out << serialize_simplices(X, st.members());
    return kSuccess;
}

int cmd_verify_lemmas(Context& ctx, const std::string& file) {
    const Complex X = load(file);
    const int n = X.dimension();

    std::vector<LemmaReport> double_count;
    for (int l = 0; l <= n; ++l) {
        for (int k = 0; k <= l; ++k) double_count.push_back(verify_coface_double_count(X, k, l));
    }
    std::vector<LemmaReport> link_count;
    for (int k = 0; k <= n; ++k) {
        for (const auto& s : X.simplices_of_dim(k)) {
            for (int l = k; l <= n; ++l) link_count.push_back(verify_link_coface_count(X, s, l));
        }
    }

    auto passed = [](const std::vector<LemmaReport>& rs) {
        return static_cast<std::size_t>(
            std::count_if(rs.begin(), rs.end(), [](const auto& r) { return r.passed(); }));
    };
    const std::size_t dc_ok = passed(double_count);
    const std::size_t lc_ok = passed(link_count);
    const bool all_ok = dc_ok == double_count.size() && lc_ok == link_count.size();

    if (ctx.json_output) {
        auto section = [&](const std::vector<LemmaReport>& rs, std::size_t ok) {
            json failures = json::array();
            for (const auto& r : rs) {
                if (!r.passed()) failures.push_back(lemma_json(X, r));
            }
            return json{{"checked", rs.size()}, {"held", ok}, {"failures", failures}};
        };
        ctx.out << json{{"coface_double_count", section(double_count, dc_ok)},
                        {"link_coface_count", section(link_count, lc_ok)}}
                       .dump()
                << '\n';
        return all_ok ? kSuccess : kCheckFailed;
    }

    ctx.out << "coface double count: " << dc_ok << "/" << double_count.size() << " hold\n";
    ctx.out << "link coface count: " << lc_ok << "/" << link_count.size()
            << " hold (with explicit bijection)\n";
    for (const auto& r : double_count) {
        if (r.passed()) continue;
        ctx.out << "  FAIL coface double count k=" << *r.k << " l=" << *r.l << ": " << r.lhs
                << " != " << r.rhs << '\n';
    }
    for (const auto& r : link_count) {
        if (r.passed()) continue;
        ctx.out << "  FAIL link coface count " << describe(X, *r.simplex) << " l=" << *r.l << ": "
                << r.lhs << " vs " << r.rhs << (r.bijection.value_or(true) ? "" : ", bijection broken")
                << '\n';
    }
    return all_ok ? kSuccess : kCheckFailed;
}

int emit_complex(Context& ctx, const Complex& X, const std::string& out_path) {
    const std::string text = serialize(X);
    if (out_path.empty()) {
        ctx.out << text;
        return kSuccess;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file || !(file << text)) {
        throw Error(ErrorKind::kLookup, "cannot write '" + out_path + "'");
    }
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Context ctx{out, err};
    std::function<int()> action;

    CLI::App app{"Abstract simplicial complexes: f-vectors, links, Euler complex checks",
                 "simplicial"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", ctx.json_output, "Emit JSON instead of text");

    std::string file;
    std::vector<std::string> labels;

    auto* info = app.add_subcommand("info", "Dimension, purity, f-vector and Euler characteristic");
    info->add_option("file", file, "Facet file or corpus:NAME")->required();
    info->callback([&] { action = [&] { return cmd_info(ctx, file); }; });

    EulerCheckOptions check_options;
    auto* check = app.add_subcommand("check", "Classify as Euler complex and verify the odd-dimension theorem");
    check->add_option("file", file, "Facet file or corpus:NAME")->required();
    check->add_flag("--verbose", check_options.verbose, "List passing link checks too");
    check->add_option("--max-failures", check_options.max_failures, "Failing links to list")
        ->check(CLI::NonNegativeNumber);
    check->callback([&] { action = [&] { return cmd_check(ctx, file, check_options); }; });

    for (const bool want_star : {false, true}) {
        auto* sub = app.add_subcommand(want_star ? "star" : "link",
                                       want_star ? "Simplices containing a simplex (one per line)"
                                                 : "Link of a simplex, as a facet file");
        sub->add_option("file", file, "Facet file or corpus:NAME")->required();
        sub->add_option("labels", labels, "Vertex labels of the simplex")->required();
        sub->callback([&, want_star] {
            action = [&, want_star] { return cmd_link(ctx, file, labels, want_star); };
        });
    }

    auto* lemmas = app.add_subcommand("verify-lemmas", "Check the counting identities on a complex");
    lemmas->add_option("file", file, "Facet file or corpus:NAME")->required();
    lemmas->callback([&] { action = [&] { return cmd_verify_lemmas(ctx, file); }; });

    std::string out_path;
    auto* gen = app.add_subcommand("gen", "Generate a complex");
    gen->require_subcommand(1);
    gen->fallthrough();
    gen->add_option("--out", out_path, "Write to this path instead of stdout");

    int size_arg = 0;
    auto add_sized = [&](const std::string& name, const std::string& help,
                         std::function<Complex(int)> make) {
        auto* sub = gen->add_subcommand(name, help);
        sub->add_option("n", size_arg, "Size parameter")->required();
        sub->callback([&, make] {
            action = [&, make] { return emit_complex(ctx, make(size_arg), out_path); };
        });
    };
    add_sized("boundary-simplex", "Boundary of the (N+1)-simplex (an N-sphere)", simplex_boundary);
    add_sized("full-simplex", "The full N-simplex", full_simplex);
    add_sized("cross-polytope", "Boundary of the N-dimensional cross-polytope", cross_polytope_boundary);
    add_sized("cycle", "Cycle on M vertices", cycle);

    std::string apex = "apex0";
    auto* gcone = gen->add_subcommand("cone", "Cone over a complex");
    gcone->add_option("file", file, "Facet file or corpus:NAME")->required();
    gcone->add_option("--apex", apex, "Apex label");
    gcone->callback([&] { action = [&] { return emit_complex(ctx, cone(load(file), apex), out_path); }; });

    auto* gsusp = gen->add_subcommand("suspension", "Suspension of a complex");
    gsusp->add_option("file", file, "Facet file or corpus:NAME")->required();
    gsusp->callback([&] { action = [&] { return emit_complex(ctx, suspension(load(file)), out_path); }; });

    std::vector<std::string> join_files;
    auto* gjoin = gen->add_subcommand("join", "Join of two complexes");
    gjoin->add_option("files", join_files, "Two facet files or corpus:NAME")->required()->expected(2);
    gjoin->callback([&] {
        action = [&] {
            return emit_complex(ctx, join(load(join_files[0]), load(join_files[1])), out_path);
        };
    });

    std::uint64_t seed = 0;
    int dim = 0, num_facets = 0, num_vertices = 0;
    auto* grandom = gen->add_subcommand("random", "Seeded random pure complex: SEED N F V");
    grandom->add_option("seed", seed, "PRNG seed")->required();
    grandom->add_option("n", dim, "Dimension")->required();
    grandom->add_option("facets", num_facets, "Number of facets")->required();
    grandom->add_option("vertices", num_vertices, "Vertex pool size")->required();
    grandom->callback([&] {
        action = [&] {
            return emit_complex(ctx, random_pure_complex(Seed{seed}, dim, num_facets, num_vertices),
                                out_path);
        };
    });

    auto* corpus = app.add_subcommand("corpus", "Bundled example complexes");
    corpus->require_subcommand(1);
    corpus->add_subcommand("list", "List corpus members")->callback([&] {
        action = [&] {
            for (const auto& name : corpus_names()) ctx.out << name << '\n';
            return int{kSuccess};
        };
    });
    std::string corpus_name;
    auto* show = corpus->add_subcommand("show", "Print a corpus member in canonical form");
    show->add_option("name", corpus_name, "Corpus member")->required();
    show->callback([&] {
        action = [&] {
            ctx.out << serialize(load_corpus(corpus_name));
            return int{kSuccess};
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kSuccess;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsageError;
    }

    try {
        return action();
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
}

}  // namespace simplicial::cli
