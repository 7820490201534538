// Acceptance run: one PASS/FAIL line per criterion, with wall-clock timings
// against fixed budgets. Exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "simplicial/cli.hpp"
#include "simplicial/complex_io.hpp"
#include "simplicial/corpus.hpp"
#include "simplicial/counting.hpp"
#include "simplicial/euler_check.hpp"
#include "simplicial/generators.hpp"

namespace {

using namespace simplicial;
using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::vector<std::string> notes;

    void expect(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            notes.push_back(what);
        }
    }
};

struct Criterion {
    int number;
    std::string title;
    double budget_ms;
    std::function<void(Outcome&)> body;
};

struct Named {
    std::string name;
    Complex complex;
};

std::string fvec(const FVector& f) {
    std::string s = "(";
    for (std::size_t i = 0; i < f.counts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(f.counts[i]);
    }
    return s + ")";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

int run_cli(const std::vector<std::string>& args, std::string& out) {
    std::ostringstream o, e;
    const int code = cli::run(args, o, e);
    out = o.str();
    return code;
}

// The family from the desk-scale theorem check.
std::vector<Named> theorem_family() {
    std::vector<Named> family;
    for (int n : {1, 3, 5}) {
        family.push_back({"boundary of " + std::to_string(n + 1) + "-simplex", simplex_boundary(n)});
    }
    for (int d : {1, 3, 5}) {
        family.push_back({"cross-polytope boundary dim " + std::to_string(d),
                          cross_polytope_boundary(d + 1)});
    }
    for (int m = 3; m <= 12; ++m) family.push_back({"cycle " + std::to_string(m), cycle(m)});
    for (int a = 3; a <= 6; ++a) {
        for (int b = a; b <= 6; ++b) {
            family.push_back({"join cycle " + std::to_string(a) + " * cycle " + std::to_string(b),
                              join(cycle(a), cycle(b))});
        }
    }
    for (const auto& name : corpus_names()) {
        const Complex X = load_corpus(name);
        const EulerReport r = check_euler(X);
        if (r.is_euler && r.dimension % 2 == 0) {
            family.push_back({"suspension of " + name, suspension(X)});
        }
    }
    return family;
}

// Seeded pure complexes with n <= 4, at most 12 vertices and 30 facets, plus
// the corpus.
std::vector<Named> fuzz_corpus() {
    std::vector<Named> out;
    std::mt19937_64 params(20240611);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const int n = static_cast<int>(seed % 5);
        const int v = n + 1 + static_cast<int>(params() % static_cast<std::uint64_t>(12 - n));
        const auto pool = static_cast<std::uint64_t>(std::min<std::int64_t>(30, binomial(v, n + 1)));
        const int f = 1 + static_cast<int>(params() % pool);
        std::ostringstream name;
        name << "random(seed=" << seed << ", n=" << n << ", F=" << f << ", V=" << v << ")";
        out.push_back({name.str(), random_pure_complex(Seed{seed}, n, f, v)});
    }
    for (const auto& name : corpus_names()) out.push_back({name, load_corpus(name)});
    return out;
}

void tetrahedron(Outcome& o) {
    const Complex T = make_complex({{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}});
    const FVector f = T.f_vector();
    const std::int64_t chi = T.euler_characteristic();
    o.expect(f.counts == std::vector<std::int64_t>{4, 6, 4}, "f = " + fvec(f));
    o.expect(chi == 2, "chi = " + std::to_string(chi));
}

void sphere_formula(Outcome& o) {
    for (int n = 0; n <= 10; ++n) {
        const std::int64_t chi = simplex_boundary(n).euler_characteristic();
        const std::int64_t expected = 1 + (n % 2 == 0 ? 1 : -1);
        o.expect(chi == expected, "n = " + std::to_string(n) + ": chi = " + std::to_string(chi));
    }
}

void theorem(Outcome& o) {
    int odd = 0;
    for (const auto& [name, X] : theorem_family()) {
        if (X.dimension() % 2 == 0) continue;
        ++odd;
        const EulerReport r = check_euler(X);
        std::string why;
        if (!r.is_euler) {
            why = "not an Euler complex";
            for (const auto& c : r.checks) {
                why += "; link of " + describe(X, c.simplex) + " has chi " + std::to_string(c.link_chi) +
                       ", expected " + std::to_string(c.expected_chi);
            }
        }
        o.expect(r.is_euler && r.chi == 0,
                 name + " (dim " + std::to_string(r.dimension) + ", chi = " + std::to_string(r.chi) +
                     "): " + (why.empty() ? "chi is not 0" : why));
    }
    o.notes.insert(o.notes.begin(), std::to_string(odd) + " odd-dimensional members");
}

void coface_double_count(Outcome& o) {
    std::size_t checked = 0;
    for (const auto& [name, X] : fuzz_corpus()) {
        for (int l = 0; l <= X.dimension(); ++l) {
            for (int k = 0; k <= l; ++k) {
                const LemmaReport r = verify_coface_double_count(X, k, l);
                ++checked;
                o.expect(r.holds, name + " k=" + std::to_string(k) + " l=" + std::to_string(l) + ": " +
                                      std::to_string(r.lhs) + " != " + std::to_string(r.rhs));
            }
        }
    }
    o.notes.insert(o.notes.begin(), std::to_string(checked) + " (k,l) pairs");
}

void link_coface_count(Outcome& o) {
    std::size_t checked = 0;
    for (const auto& [name, X] : fuzz_corpus()) {
        for (int k = 0; k <= X.dimension(); ++k) {
            for (const auto& s : X.simplices_of_dim(k)) {
                for (int l = k; l <= X.dimension(); ++l) {
                    const LemmaReport r = verify_link_coface_count(X, s, l);
                    ++checked;
                    o.expect(r.passed(), name + " " + describe(X, s) + " l=" + std::to_string(l) + ": " +
                                             std::to_string(r.lhs) + " vs " + std::to_string(r.rhs));
                }
            }
        }
    }
    o.notes.insert(o.notes.begin(), std::to_string(checked) + " (simplex,l) pairs");
}

void coefficient_identity(Outcome& o) {
    for (int l = 1; l <= 30; ++l) {
        // Direct summation with brute-force binomials.
        std::int64_t sum = 0;
        for (int k = 0; k <= l - 1; ++k) {
            sum += ((l - k - 1) % 2 == 0 ? 1 : -1) * oracle::binomial(l + 1, k + 1);
        }
        const std::int64_t expected = l % 2 == 0 ? 0 : 2;
        o.expect(sum == expected && coefficient_sum(l) == expected && verify_coefficient_sum(l).holds,
                 "l = " + std::to_string(l) + ": " + std::to_string(sum));
    }
}

void summed_identity(Outcome& o) {
    int verified = 0;
    for (const auto& [name, X] : theorem_family()) {
        if (X.dimension() % 2 == 0 || !check_euler(X).is_euler) continue;
        const LemmaReport r = verify_summed_link_identity(X);
        ++verified;
        o.expect(r.holds, name + ": " + std::to_string(r.lhs) + " != " + std::to_string(r.rhs));
    }
    o.notes.insert(o.notes.begin(), std::to_string(verified) + " odd-dimensional Euler complexes");
}

void hypothesis_necessity(Outcome& o) {
    for (const char* name : {"rp2-6", "torus-7"}) {
        const Complex X = load_corpus(name);
        const auto faces = oracle::all_faces(X);
        const std::int64_t brute_chi = oracle::euler_characteristic(faces);
        const bool brute_euler = oracle::is_euler(faces);
        const EulerReport r = check_euler(X);
        o.expect(brute_euler && r.is_euler, std::string(name) + " is not an Euler complex");
        o.expect(r.dimension == 2, std::string(name) + " has dimension " + std::to_string(r.dimension));
        o.expect(r.chi == brute_chi, std::string(name) + ": chi disagrees with brute force");
        std::string out;
        const int code = run_cli({"check", std::string("corpus:") + name}, out);
        o.expect(code == cli::kSuccess, std::string(name) + ": check exited " + std::to_string(code));
        o.expect(out.find("theorem not applicable") != std::string::npos,
                 std::string(name) + ": output lacks 'theorem not applicable'");
        o.notes.push_back(std::string(name) + ": chi = " + std::to_string(brute_chi));
    }
    const auto chi_of = [](const char* name) {
        return oracle::euler_characteristic(oracle::all_faces(load_corpus(name)));
    };
    o.expect(chi_of("rp2-6") == 1, "rp2-6 chi is not 1");
    o.expect(chi_of("torus-7") == 0, "torus-7 chi is not 0");
}

void negative_detection(Outcome& o) {
    struct Case {
        const char* name;
        std::vector<std::string> offenders;
    };
    for (const Case& c : {Case{"bowtie", {"{a}"}}, Case{"path-2", {"{a}", "{c}"}}}) {
        const Complex X = load_corpus(c.name);
        o.expect(!oracle::is_euler(oracle::all_faces(X)), std::string(c.name) + ": brute force says Euler");
        std::string out;
        const int code = run_cli({"check", std::string("corpus:") + c.name}, out);
        o.expect(code == cli::kCheckFailed, std::string(c.name) + ": check exited " + std::to_string(code));
        o.expect(out.find("NOT AN EULER COMPLEX") != std::string::npos,
                 std::string(c.name) + ": not rejected");
        for (const auto& s : c.offenders) {
            o.expect(out.find("link of " + s) != std::string::npos,
                     std::string(c.name) + ": offending simplex " + s + " not named");
        }
    }
}

void round_trip(Outcome& o) {
    std::vector<Named> samples;
    for (const auto& name : corpus_names()) samples.push_back({name, load_corpus(name)});
    for (int n = 0; n <= 6; ++n) {
        samples.push_back({"boundary " + std::to_string(n), simplex_boundary(n)});
        samples.push_back({"full simplex " + std::to_string(n), full_simplex(n)});
        samples.push_back({"cross-polytope " + std::to_string(n + 1), cross_polytope_boundary(n + 1)});
    }
    for (const auto& item : theorem_family()) samples.push_back(item);
    for (auto& item : fuzz_corpus()) samples.push_back(std::move(item));
    samples.push_back({"cone", cone(load_corpus("torus-7"), "apex")});
    samples.push_back({"disjoint union", disjoint_union(load_corpus("bowtie"), cycle(4))});

    for (const auto& [name, X] : samples) {
        const std::string text = serialize(X);
        const Complex back = parse(text);
        o.expect(back == X && serialize(back) == text, name + ": round trip differs");
    }

    const std::string dir = GOLDEN_DIR;
    std::vector<std::pair<std::string, Complex>> golden;
    for (const auto& name : corpus_names()) golden.emplace_back(name + ".cplx", load_corpus(name));
    golden.emplace_back("cycle-5.cplx", cycle(5));
    golden.emplace_back("join-cycle3-cycle3.cplx", join(cycle(3), cycle(3)));
    golden.emplace_back("random_11_2_6_7.cplx", random_pure_complex(Seed{11}, 2, 6, 7));
    golden.emplace_back("random_2024_4_30_40.cplx", random_pure_complex(Seed{2024}, 4, 30, 40));
    for (const auto& [file, X] : golden) {
        o.expect(serialize(X) == read_file(dir + "/" + file), file + ": differs from golden file");
    }
    o.notes.insert(o.notes.begin(), std::to_string(samples.size()) + " round trips, " +
                                        std::to_string(golden.size()) + " golden files");
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "tetrahedron surface f = (4,6,4), chi = 2", 1.0, tetrahedron},
        {2, "sphere formula for simplex boundaries n = 0..10", 5000.0, sphere_formula},
        {3, "odd-dimensional family members are Euler with chi = 0", 30000.0, theorem},
        {4, "coface double count on fuzz corpus", 60000.0, coface_double_count},
        {5, "link coface count with bijection on fuzz corpus", 120000.0, link_coface_count},
        {6, "coefficient identity for l = 1..30", 1000.0, coefficient_identity},
        {7, "summed link identity on odd Euler family members", 30000.0, summed_identity},
        {8, "rp2-6 and torus-7 are even Euler complexes", 5000.0, hypothesis_necessity},
        {9, "bowtie and path-2 rejected with offender named", 5000.0, negative_detection},
        {10, "round trip and golden serialization", 30000.0, round_trip},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = Clock::now();
        try {
            c.body(o);
        } catch (const std::exception& e) {
            o.ok = false;
            o.notes.push_back(std::string("exception: ") + e.what());
        }
        const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        const bool in_time = ms < c.budget_ms;
        const bool pass = o.ok && in_time;
        failed += !pass;
        std::printf("%s  %2d  %-55s %10.3f ms (budget %.0f ms)\n", pass ? "PASS" : "FAIL", c.number,
                    c.title.c_str(), ms, c.budget_ms);
        if (!in_time) std::printf("        over time budget\n");
        for (const auto& note : o.notes) std::printf("        %s\n", note.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
