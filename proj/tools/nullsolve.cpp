#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nullsolve/covering.hpp"
#include "nullsolve/graphs.hpp"
#include "nullsolve/io.hpp"
#include "nullsolve/lift.hpp"
#include "nullsolve/olson.hpp"
#include "nullsolve/ppa.hpp"
#include "nullsolve/selftest.hpp"

namespace {

using namespace nullsolve;

// Usage-level problem detected after CLI11 parsing (bad file, bad list).
struct UsageError {
    std::string msg;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError{"cannot open file: " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::int64_t> parse_int_list(const std::string& text,
                                         const std::string& what) {
    std::vector<std::int64_t> out;
    std::string tok;
    std::istringstream ss(text);
    while (std::getline(ss, tok, ',')) {
        const std::size_t a = tok.find_first_not_of(" \t");
        const std::size_t b = tok.find_last_not_of(" \t");
        if (a == std::string::npos)
            throw UsageError{"empty entry in " + what + " list"};
        tok = tok.substr(a, b - a + 1);
        try {
            std::size_t used = 0;
            const long long v = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError{"bad integer '" + tok + "' in " + what + " list"};
        }
    }
    if (out.empty()) throw UsageError{"empty " + what + " list"};
    return out;
}

std::int64_t env_step_cap() {
    const char* s = std::getenv("NULLSOLVE_STEP_CAP");
    if (!s || !*s) return 0;
    char* end = nullptr;
    const long long v = std::strtoll(s, &end, 10);
    if (end == s || *end != '\0')
        throw UsageError{"NULLSOLVE_STEP_CAP is not an integer"};
    return v;
}

std::string index_set_str(const std::vector<int>& idx) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) os << ',';
        os << idx[i] + 1;
    }
    os << '}';
    return os.str();
}

void print_trace(const PathResult& path, int m) {
    for (std::size_t i = 1; i < path.nodes.size(); ++i)
        std::cout << "TRACE " << node_str(path.nodes[i - 1], m) << " -> "
                  << node_str(path.nodes[i], m) << '\n';
}

int cmd_kappa(std::int64_t p, int d, const std::string& set_text) {
    std::set<std::int64_t> elems;
    for (std::int64_t v : parse_int_list(set_text, "--set"))
        elems.insert(v);
    const ResidueSet B(p, d, elems);
    std::cout << "RESULT kappa = " << kappa(B) << '\n';
    const CoveringFamily fam = build_kappa_covering(B);
    std::cout << "RESULT total_degree = " << fam.total_degree() << '\n';
    std::cout << "RESULT polys = " << fam.polys().size() << '\n';
    for (std::size_t i = 0; i < fam.polys().size(); ++i) {
        const FactoredIVP& h = fam.polys()[i];
        std::cout << "RESULT poly " << i + 1 << ": roots = [";
        for (std::size_t j = 0; j < h.roots().size(); ++j) {
            if (j) std::cout << ',';
            std::cout << h.roots()[j];
        }
        std::cout << "], delta = " << h.delta() << '\n';
    }
    for (std::int64_t b : B.elems()) {
        std::size_t hit = 0;
        for (std::size_t i = 0; i < fam.polys().size(); ++i) {
            const Int v = fam.polys()[i].eval(Int(b));
            if (mpz_divisible_ui_p(v.get_mpz_t(),
                                   static_cast<unsigned long>(p))) {
                hit = i + 1;
                break;
            }
        }
        std::cout << "RESULT cover " << b << ": poly " << hit << '\n';
    }
    return 0;
}

int cmd_solve_olson(const std::string& file, const std::string& engine_name,
                    bool trace) {
    const OlsonInstance inst = parse_olson_file(slurp(file));
    const Engine eng =
        engine_name == "ppa" ? Engine::Ppa : Engine::Brute;
    PathResult path;
    const bool want_path = trace && eng == Engine::Ppa;
    const auto J = solve_olson(inst, eng, env_step_cap(),
                               want_path ? &path : nullptr);
    if (!J) {
        std::cout << "ERROR no solution\n";
        return 3;
    }
    if (want_path) print_trace(path, inst.m());
    std::cout << "RESULT J = " << index_set_str(*J) << '\n';
    for (int i = 0; i < inst.n(); ++i) {
        std::int64_t sum = 0;
        for (int j : *J) sum += inst.a()[static_cast<std::size_t>(i)]
                                       [static_cast<std::size_t>(j)];
        const std::int64_t mod = inst.Q()[static_cast<std::size_t>(i)].modulus();
        std::cout << "RESULT row " << i + 1 << ": sum = " << sum
                  << ", residue = " << mod_floor(sum, mod) << " (mod " << mod
                  << ")\n";
    }
    return 0;
}

int cmd_divisible_subgraph(const std::string& file, int d,
                           const std::string& engine_name) {
    const GraphFile gf = parse_graph_file(slurp(file));
    const Engine eng =
        engine_name == "ppa" ? Engine::Ppa : Engine::Brute;
    const std::vector<int> F = divisible_subgraph(gf.g, d, eng);
    std::cout << "RESULT F = " << index_set_str(F) << '\n';
    const std::vector<std::int64_t> deg = subgraph_degrees(gf.g, F);
    for (int v = 1; v <= gf.g.n; ++v)
        std::cout << "RESULT degree " << v << " = "
                  << deg[static_cast<std::size_t>(v - 1)] << '\n';
    return 0;
}

int cmd_f_avoiding(const std::string& file, const std::string& mod_text,
                   bool natural) {
    if (mod_text.empty() == !natural)
        throw UsageError{"choose exactly one of --mod and --natural"};
    const GraphFile gf = parse_graph_file(slurp(file));
    std::vector<int> E;
    if (natural) {
        std::vector<std::set<std::int64_t>> F(
            static_cast<std::size_t>(gf.g.n));
        for (const auto& [v, vals] : gf.forbid)
            F[static_cast<std::size_t>(v - 1)] = vals;
        E = f_avoiding_natural(gf.g, F);
    } else {
        std::int64_t p = 0;
        int d = 1;
        const std::size_t caret = mod_text.find('^');
        try {
            p = std::stoll(mod_text.substr(0, caret));
            if (caret != std::string::npos)
                d = std::stoi(mod_text.substr(caret + 1));
        } catch (const std::exception&) {
            throw UsageError{"bad --mod value '" + mod_text +
                             "', expected P or P^D"};
        }
        std::vector<ResidueSet> F;
        for (int v = 1; v <= gf.g.n; ++v) {
            std::set<std::int64_t> vals;
            const auto it = gf.forbid.find(v);
            if (it != gf.forbid.end())
                vals = it->second;
            F.push_back(ResidueSet(p, d, vals));
        }
        E = f_avoiding_mod(gf.g, F, p, d);
    }
    std::cout << "RESULT E' = " << index_set_str(E) << '\n';
    const std::vector<std::int64_t> deg = subgraph_degrees(gf.g, E);
    for (int v = 1; v <= gf.g.n; ++v)
        std::cout << "RESULT degree " << v << " = "
                  << deg[static_cast<std::size_t>(v - 1)] << '\n';
    return 0;
}

int cmd_ppa_run(const std::string& file, bool trace, std::int64_t cap_flag) {
    const GeneralFormPoly inst = parse_genpoly_file(slurp(file));
    std::int64_t cap = cap_flag > 0 ? cap_flag : env_step_cap();
    const PathResult path = follow_path(inst, cap);
    std::cout << render_ppa_report(inst, path, trace);
    return 0;
}

int cmd_explicit_cn(const std::string& file) {
    const GeneralFormPoly inst = parse_genpoly_file(slurp(file));
    IntMultiPoly f(inst.m);
    for (const Block& blk : inst.blocks) {
        IntMultiPoly prod(inst.m);
        prod.add(0, 1);
        for (const ExplicitPoly& poly : blk.polys) {
            IntMultiPoly factor(inst.m);
            for (Mask mono : poly.monomials) factor.add(mono, 1);
            prod = prod * factor;
            prod.reduce_mod(2);
        }
        for (const auto& [mono, c] : prod.coeffs()) f.add(mono, c);
    }
    f.reduce_mod(2);
    const Mask s = solve_explicit_cn(f, inst.m);
    std::cout << "RESULT s = ";
    for (int j = 0; j < inst.m; ++j) std::cout << ((s >> j) & 1);
    std::cout << '\n';
    const Int v = f.value_at(s);
    std::cout << "RESULT f(s) = " << (mpz_odd_p(v.get_mpz_t()) ? 1 : 0) << '\n';
    return 0;
}

int cmd_f_oracle(std::int64_t p, const std::string& d_text,
                 const std::string& q_text, int m_cap) {
    const std::vector<std::int64_t> dl64 = parse_int_list(d_text, "--d");
    std::vector<int> dl;
    for (std::int64_t d : dl64) dl.push_back(static_cast<int>(d));
    std::vector<std::string> pieces;
    std::string piece;
    std::istringstream ss(q_text);
    while (std::getline(ss, piece, ';')) pieces.push_back(piece);
    if (pieces.size() != dl.size())
        throw UsageError{"--q needs one ';'-separated set per row"};
    std::vector<ResidueSet> Q;
    for (std::size_t i = 0; i < dl.size(); ++i) {
        std::set<std::int64_t> elems;
        if (pieces[i].find_first_not_of(" \t") != std::string::npos)
            for (std::int64_t v : parse_int_list(pieces[i], "--q"))
                elems.insert(v);
        Q.push_back(ResidueSet(p, dl[i], elems));
    }
    const std::int64_t F = F_exact(p, dl, Q, m_cap);
    std::cout << "RESULT F = " << F << '\n';
    if (F == m_cap)
        std::cout << "RESULT note = m-cap reached; F may exceed this value\n";
    return 0;
}

int cmd_selftest() {
    const std::vector<CheckResult> results = run_acceptance_suite();
    int passed = 0;
    for (const CheckResult& r : results) {
        std::cout << format_check_line(r) << '\n';
        if (r.pass) ++passed;
    }
    std::cout << "RESULT selftest = " << passed << '/' << results.size()
              << (passed == static_cast<int>(results.size()) ? " PASS"
                                                             : " FAIL")
              << '\n';
    return passed == static_cast<int>(results.size()) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"covering-polynomial machinery for congruence constraints: "
                 "subset, subgraph, and parity-argument solvers"};
    app.require_subcommand(1);

    std::int64_t p = 0;
    int d = 0, m_cap = 0;
    std::int64_t step_cap = 0;
    std::string set_text, file, engine = "brute", mod_text, d_text, q_text;
    bool trace = false, natural = false;

    CLI::App* kappa_cmd =
        app.add_subcommand("kappa", "covering bound and family for a set");
    kappa_cmd->add_option("--p", p, "prime")->required();
    kappa_cmd->add_option("--d", d, "exponent")->required();
    kappa_cmd->add_option("--set", set_text, "comma-separated residues")
        ->required();

    CLI::App* olson_cmd =
        app.add_subcommand("solve-olson", "solve a subset-sum instance file");
    olson_cmd->add_option("file", file, "olson instance file")->required();
    olson_cmd->add_option("--engine", engine, "brute or ppa")
        ->check(CLI::IsMember({"brute", "ppa"}));
    olson_cmd->add_flag("--trace", trace, "print the ppa path");

    CLI::App* div_cmd = app.add_subcommand(
        "divisible-subgraph", "nonempty subgraph with 2^d-divisible degrees");
    div_cmd->add_option("file", file, "graph file")->required();
    div_cmd->add_option("--d", d, "exponent of 2")->required();
    div_cmd->add_option("--engine", engine, "brute or ppa")
        ->check(CLI::IsMember({"brute", "ppa"}));

    CLI::App* avoid_cmd = app.add_subcommand(
        "f-avoiding", "nonempty subgraph avoiding forbidden degrees");
    avoid_cmd->add_option("file", file, "graph file with forbid lines")
        ->required();
    avoid_cmd->add_option("--mod", mod_text, "treat degrees modulo P^D");
    avoid_cmd->add_flag("--natural", natural, "treat degrees as naturals");

    CLI::App* ppa_cmd =
        app.add_subcommand("ppa-run", "follow the parity-argument path");
    ppa_cmd->add_option("file", file, "genpoly instance file")->required();
    ppa_cmd->add_flag("--trace", trace, "print every step");
    ppa_cmd->add_option("--step-cap", step_cap, "maximum path length");

    CLI::App* cn_cmd = app.add_subcommand(
        "explicit-cn", "solve f(s) != 0 from the expanded polynomial");
    cn_cmd->add_option("file", file, "genpoly instance file")->required();

    CLI::App* oracle_cmd = app.add_subcommand(
        "f-oracle", "exact threshold by double exhaustion");
    oracle_cmd->add_option("--p", p, "prime")->required();
    oracle_cmd->add_option("--d", d_text, "comma-separated exponents")
        ->required();
    oracle_cmd
        ->add_option("--q", q_text, "semicolon-separated target sets")
        ->required();
    oracle_cmd->add_option("--m-cap", m_cap, "search cap")->required();

    app.add_subcommand("selftest", "run the acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (kappa_cmd->parsed()) return cmd_kappa(p, d, set_text);
        if (olson_cmd->parsed()) return cmd_solve_olson(file, engine, trace);
        if (div_cmd->parsed()) return cmd_divisible_subgraph(file, d, engine);
        if (avoid_cmd->parsed()) return cmd_f_avoiding(file, mod_text, natural);
        if (ppa_cmd->parsed()) return cmd_ppa_run(file, trace, step_cap);
        if (cn_cmd->parsed()) return cmd_explicit_cn(file);
        if (oracle_cmd->parsed())
            return cmd_f_oracle(p, d_text, q_text, m_cap);
        return cmd_selftest();
    } catch (const UsageError& e) {
        std::cout << "ERROR " << e.msg << '\n';
        return 2;
    } catch (const ParseError& e) {
        std::cout << "ERROR " << e.what() << '\n';
        return 2;
    } catch (const CapExceeded& e) {
        std::cout << "ERROR " << e.what() << '\n';
        return 4;
    } catch (const Error& e) {
        std::cout << "ERROR " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cout << "ERROR " << e.what() << '\n';
        return 1;
    }
}
