// Command-line surface: family construction, analysis, bound evaluation,
// exact/heuristic search, greedy matching, figure data emission, and the
// verification suites. Exit codes: 0 success, 1 verdict failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kneser/bounds.hpp"
#include "kneser/constructions.hpp"
#include "kneser/search.hpp"
#include "kneser/spectral.hpp"
#include "kneser/verify.hpp"

using json = nlohmann::ordered_json;
using namespace kneser;

namespace {

Rat parse_rat(const std::string& text) {
    try {
        Rat r(text);
        if (r.get_den() <= 0) throw std::invalid_argument("zero denominator");
        r.canonicalize();
        return r;
    } catch (const std::exception&) {
        throw CLI::ValidationError("expected an exact rational like 3/2, got '" + text + "'");
    }
}

json rat_json(const Rat& q) { return rat_str(q); }

json rats_json(const std::vector<Rat>& v) {
    json out = json::array();
    for (const auto& q : v) out.push_back(rat_json(q));
    return out;
}

json bound_json(const BoundReport& r) {
    json j;
    j["name"] = r.name;
    j["value"] = r.value.decimal(Round::down);
    j["rounding"] = "down";
    if (r.value.is_rational()) j["value_exact"] = rat_str(r.value.rational_value());
    j["hypothesis"] = r.hypothesis;
    j["hypothesis_ok"] = r.hypothesis_ok;
    j["forced"] = r.forced;
    if (r.comparison) {
        j["comparison"] = {{"quantity", r.comparison->quantity},
                           {"measured", rat_str(r.comparison->measured)},
                           {"holds", r.comparison->holds}};
    }
    return j;
}

Family load_family(const std::string& path) {
    if (path == "-") return read_family(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_family(in);
}

void emit_family(const Family& f, const std::string& path) {
    if (path.empty() || path == "-") {
        write_family(std::cout, f);
    } else {
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot open " + path + " for writing");
        write_family(out, f);
    }
}

void construct_summary(const Family& f, std::ostream& os) {
    const SizeParameter sp = f.size_param();
    const DegreeProfile p = degree_profile(f);
    os << "size " << f.size() << "  s " << sp.s << "  lambda " << rat_str(sp.lambda)
       << "  max_degree " << p.max_degree << "  edges " << p.edge_count << "\n";
}

int cmd_analyze(const std::string& path) {
    const Family f = load_family(path);
    const DegreeProfile p = degree_profile(f);
    const SizeParameter sp = f.size_param();
    json j;
    j["n"] = f.n();
    j["k"] = f.k();
    j["size"] = f.size();
    j["s"] = sp.s;
    j["lambda"] = rat_json(sp.lambda);
    j["max_degree"] = p.max_degree;
    j["edge_count"] = p.edge_count.get_str();
    if (!f.empty() && f.k() >= 1 && f.n() >= 2 * f.k() + 1) {
        const SpectralProfile prof = linear_profile(f);
        j["alpha"] = rat_json(prof.alpha);
        j["gamma"] = rats_json(prof.gamma);
        j["gamma_max"] = rat_json(prof.gamma_max);
        j["a"] = rats_json(prof.a);
        j["eta"] = rat_json(prof.eta);
        if (!prof.eigennorm_sq.empty()) j["eigennorm_sq"] = rats_json(prof.eigennorm_sq);
        const GammamaxVerdict v = check_gammamax(prof);
        j["gammamax"] = {{"lhs", rat_str(v.lhs)}, {"rhs", rat_str(v.rhs)}, {"holds", v.holds}};
        j["thirdorder_bound"] = rat_json(thirdorder_bound(prof));
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_bounds(int n, int k, int s, const Rat& lambda, const Rat& c0, bool force) {
    json out = json::array();
    out.push_back(bound_json(main_lower_bound(n, k, s, lambda, force)));
    out.push_back(bound_json(construction_upper_bound(n, k, s, lambda, force)));
    {
        json j;
        j["name"] = "random_expected_degree";
        j["value_exact"] = rat_str(random_expected_degree(n, k, s, lambda));
        out.push_back(j);
    }
    {
        json j;
        j["name"] = "stars_max_degree";
        j["value_exact"] = stars_max_degree(n, k, s).get_str();
        out.push_back(j);
    }
    out.push_back(bound_json(threshold_evaluator(ThresholdKind::extlem3, n, k, s, lambda, c0)));
    out.push_back(bound_json(threshold_evaluator(ThresholdKind::manylem3, n, k, s, lambda)));
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_search(int n, int k, long m, const std::string& objective, const std::string& mode,
               std::uint64_t seed, long iterations, const std::string& witness_out) {
    const Objective obj = objective == "edge_count" ? Objective::edge_count : Objective::max_degree;
    SearchResult res;
    if (mode == "local") {
        res = local_search(n, k, m, seed, iterations, obj);
    } else {
        res = exact_minimize(n, k, m, obj,
                             mode == "exhaustive" ? SearchMode::exhaustive : SearchMode::branch_and_bound);
    }
    json j;
    j["objective"] = objective;
    j["optimum"] = res.optimum.get_str();
    j["nodes_explored"] = res.nodes_explored;
    j["proven_optimal"] = res.proven_optimal;
    json members = json::array();
    for (const auto& a : res.witness.members()) members.push_back(a.str());
    j["witness"] = members;
    std::cout << j.dump(2) << "\n";
    if (!witness_out.empty()) emit_family(res.witness, witness_out);
    return 0;
}

int cmd_matching(const std::string& path) {
    const Family f = load_family(path);
    const MatchingResult m = greedy_matching(f);
    json j;
    j["size"] = m.members.size();
    json members = json::array();
    for (const auto& a : m.members) members.push_back(a.str());
    j["members"] = members;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_figure1(int n, int k, const std::string& out_path) {
    std::ostringstream os;
    os << "m,lambda,s,hypothesis_ok,lower_bound_down,upper_bound_up,stars_point,lex_avg_degree_down,"
          "exact_min\n";
    const Int total = binom(n, k);
    const bool feasible = total <= 20;
    for (Int m = 1; m <= total; ++m) {
        const SizeParameter sp = size_parameter(n, k, m);
        const BoundReport lo = main_lower_bound(n, k, sp.s, sp.lambda, true);
        const BoundReport hi = construction_upper_bound(n, k, sp.s, sp.lambda, true);
        const Family lex = order_segment(Order::lex, n, k, m);
        Rat avg = Rat(2) * Rat(degree_profile(lex).edge_count) / Rat(m);
        avg.canonicalize();
        os << m.get_str() << ',' << rat_str(sp.lambda) << ',' << sp.s << ','
           << (lo.hypothesis_ok ? 1 : 0) << ',' << lo.value.decimal(Round::down) << ','
           << hi.value.decimal(Round::up) << ',';
        if (sp.s >= 1 && sp.lambda == sp.s) os << stars_max_degree(n, k, sp.s).get_str();
        os << ',' << decimal_str(avg, Round::down) << ',';
        if (feasible)
            os << exact_minimize(n, k, m.get_si(), Objective::max_degree).optimum.get_str();
        os << '\n';
    }
    if (out_path.empty() || out_path == "-") {
        std::cout << os.str();
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
        out << os.str();
    }
    return 0;
}

int cmd_verify(const std::string& suite) {
    bool ok = true;
    for (int id : suite_criteria(suite)) {
        const CheckResult r = run_criterion(id);
        std::cout << "criterion " << id << " [" << (r.pass ? "PASS" : "FAIL") << "] " << r.name
                  << " — " << r.detail << "\n";
        ok = ok && r.pass;
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis of induced subgraphs of Kneser graphs"};
    app.require_subcommand(1);

    int n = 0, k = 0, s = 1;
    long m = 0, iterations = 1000;
    std::uint64_t seed = 0;
    std::string lambda_str = "1", c0_str = "1", order = "lex";
    std::string in_path = "-", out_path, witness_out, objective = "max_degree", mode = "bb";
    std::string kind, suite = "all";

    auto* construct = app.add_subcommand("construct", "build a named family");
    construct->add_option("kind", kind, "stars|explicit|random|segment")->required();
    construct->add_option("--n", n)->required();
    construct->add_option("--k", k)->required();
    construct->add_option("--s", s);
    construct->add_option("--lambda", lambda_str, "exact rational p/q");
    construct->add_option("--m", m);
    construct->add_option("--seed", seed);
    construct->add_option("--order", order, "lex|colex (segment)");
    construct->add_option("-o,--out", out_path, "family file ('-' = stdout)");

    auto* analyze = app.add_subcommand("analyze", "degree/spectral report for a family file");
    analyze->add_option("file", in_path, "family file ('-' = stdin)");

    auto* bounds = app.add_subcommand("bounds", "evaluate the named degree bounds");
    bounds->add_option("--n", n)->required();
    bounds->add_option("--k", k)->required();
    bounds->add_option("--s", s)->required();
    bounds->add_option("--lambda", lambda_str)->required();
    bounds->add_option("--c0", c0_str);
    bool force = false;
    bounds->add_flag("--force", force, "evaluate outside hypothesis ranges");

    auto* search = app.add_subcommand("search", "minimize an objective over families of size m");
    search->add_option("--n", n)->required();
    search->add_option("--k", k)->required();
    search->add_option("--m", m)->required();
    search->add_option("--objective", objective, "max_degree|edge_count");
    search->add_option("--mode", mode, "bb|exhaustive|local");
    search->add_option("--seed", seed);
    search->add_option("--iterations", iterations);
    search->add_option("--witness-out", witness_out, "write the witness family here");

    auto* matching = app.add_subcommand("matching", "greedy matching of a family file");
    matching->add_option("file", in_path, "family file ('-' = stdin)");

    auto* figure1 = app.add_subcommand("figure1", "CSV of bound curves against family size");
    figure1->add_option("--n", n)->required();
    figure1->add_option("--k", k)->required();
    figure1->add_option("-o,--out", out_path, "CSV file ('-' = stdout)");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "spectral|mixing|bounds|oracle|all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (construct->parsed()) {
            Family f(0, 0);
            if (kind == "stars") {
                SubsetCode head(n);
                for (int e = 1; e <= s; ++e) head.insert(e);
                f = union_of_stars(n, k, head);
            } else if (kind == "explicit" || kind == "random") {
                ConstructionSpec cs;
                cs.n = n;
                cs.k = k;
                cs.s = s;
                cs.lambda = parse_rat(lambda_str);
                if (kind == "explicit") {
                    const ExplicitFamily ef = explicit_family(cs);
                    f = ef.family;
                    std::cerr << "t " << ef.t << "\n";
                } else {
                    if (!construct->count("--seed"))
                        throw CLI::ValidationError("random construction requires --seed");
                    cs.seed = seed;
                    f = random_family(cs);
                }
            } else if (kind == "segment") {
                f = order_segment(order == "colex" ? Order::colex : Order::lex, n, k, m);
            } else {
                throw CLI::ValidationError("unknown construction kind '" + kind + "'");
            }
            construct_summary(f, std::cerr);
            emit_family(f, out_path);
            return 0;
        }
        if (analyze->parsed()) return cmd_analyze(in_path);
        if (bounds->parsed()) return cmd_bounds(n, k, s, parse_rat(lambda_str), parse_rat(c0_str), force);
        if (search->parsed()) return cmd_search(n, k, m, objective, mode, seed, iterations, witness_out);
        if (matching->parsed()) return cmd_matching(in_path);
        if (figure1->parsed()) return cmd_figure1(n, k, out_path);
        if (verify->parsed()) return cmd_verify(suite);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
