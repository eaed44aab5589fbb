// pclie: bases, dimension series, and normal forms for partially
// commutative Lie algebras over a commutation graph.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pclie/expr.hpp"
#include "pclie/gsb.hpp"
#include "pclie/oracle.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

pclie::CommutationGraph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw pclie::ParseError("cannot open graph file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return pclie::parse_graph(buf.str());
}

void print_degrees_text(const std::vector<std::vector<pclie::NWord>>& by_degree,
                        const pclie::Alphabet& alphabet) {
    for (std::size_t d = 1; d < by_degree.size(); ++d) {
        std::cout << "degree " << d << ":";
        for (const pclie::NWord& w : by_degree[d])
            std::cout << " " << pclie::to_string(w, alphabet);
        std::cout << "\n";
    }
}

nlohmann::ordered_json nword_json(const pclie::NWord& t, const pclie::Alphabet& alphabet) {
    if (t.is_leaf())
        return alphabet.name(t.letter());
    return nlohmann::ordered_json::array(
        {nword_json(t.left(), alphabet), nword_json(t.right(), alphabet)});
}

void print_degrees_json(const std::vector<std::vector<pclie::NWord>>& by_degree,
                        const pclie::Alphabet& alphabet) {
    nlohmann::ordered_json out;
    out["max_degree"] = by_degree.size() - 1;
    auto degrees = nlohmann::ordered_json::array();
    for (std::size_t d = 1; d < by_degree.size(); ++d) {
        nlohmann::ordered_json entry;
        entry["degree"] = d;
        entry["dimension"] = by_degree[d].size();
        auto words = nlohmann::ordered_json::array();
        for (const pclie::NWord& w : by_degree[d])
            words.push_back(nword_json(w, alphabet));
        entry["words"] = std::move(words);
        degrees.push_back(std::move(entry));
    }
    out["degrees"] = std::move(degrees);
    std::cout << out.dump(2) << "\n";
}

int run_basis(const std::string& graph_path, int max_degree, const std::string& format) {
    const pclie::CommutationGraph g = load_graph(graph_path);
    const auto basis = pclie::enumerate_basis(g, max_degree);
    if (format == "json")
        print_degrees_json(basis, g.alphabet());
    else
        print_degrees_text(basis, g.alphabet());
    return kExitPass;
}

int run_nilpotent_basis(const std::string& graph_path, int nil_class) {
    const pclie::CommutationGraph g = load_graph(graph_path);
    print_degrees_text(pclie::nilpotent_basis(g, nil_class), g.alphabet());
    return kExitPass;
}

int run_relators(const std::string& graph_path, int max_degree) {
    const pclie::CommutationGraph g = load_graph(graph_path);
    const pclie::RelationSet s = pclie::generate_s(g, max_degree);
    for (int d = 2; d <= max_degree; ++d) {
        std::cout << "degree " << d << ":";
        for (const pclie::NWord& r : s.relators(d))
            std::cout << " " << pclie::to_string(r, g.alphabet());
        std::cout << "\n";
    }
    return kExitPass;
}

int run_dims(const std::string& graph_path, int max_degree, const std::string& oracle) {
    const pclie::CommutationGraph g = load_graph(graph_path);
    const auto basis = pclie::enumerate_basis(g, max_degree);

    std::vector<std::int64_t> oracle_dims;
    if (oracle == "linear")
        oracle_dims = pclie::dims_by_linear_algebra(g, max_degree);
    else if (oracle == "series")
        oracle_dims = pclie::dims_by_clique_series(g, max_degree);

    std::cout << "degree\tengine";
    if (!oracle_dims.empty())
        std::cout << "\toracle(" << oracle << ")";
    std::cout << "\n";

    bool agree = true;
    for (int d = 1; d <= max_degree; ++d) {
        const auto engine = static_cast<std::int64_t>(basis[static_cast<std::size_t>(d)].size());
        std::cout << d << "\t" << engine;
        if (!oracle_dims.empty()) {
            const std::int64_t o = oracle_dims[static_cast<std::size_t>(d - 1)];
            std::cout << "\t" << o;
            agree = agree && engine == o;
        }
        std::cout << "\n";
    }
    if (!oracle_dims.empty()) {
        std::cout << "agreement: " << (agree ? "yes" : "no") << "\n";
        return agree ? kExitPass : kExitFail;
    }
    return kExitPass;
}

int run_nf(const std::string& graph_path, int max_degree, const std::string& expr_text) {
    const pclie::CommutationGraph g = load_graph(graph_path);
    const pclie::RelationSet s = pclie::generate_s(g, max_degree);
    const pclie::LiePolynomial p =
        pclie::to_polynomial(pclie::parse_expression(expr_text, g.alphabet()));
    std::cout << pclie::to_string(pclie::normal_form(p, s), g.alphabet()) << "\n";
    return kExitPass;
}

int run_eq(const std::string& graph_path, int max_degree, const std::vector<std::string>& exprs) {
    const pclie::CommutationGraph g = load_graph(graph_path);
    const pclie::RelationSet s = pclie::generate_s(g, max_degree);
    const pclie::LiePolynomial a =
        pclie::to_polynomial(pclie::parse_expression(exprs.at(0), g.alphabet()));
    const pclie::LiePolynomial b =
        pclie::to_polynomial(pclie::parse_expression(exprs.at(1), g.alphabet()));
    std::cout << (pclie::equal_in_pc(a, b, s) ? "equal" : "not equal") << "\n";
    return kExitPass;
}

int run_check_gsb(const std::string& graph_path, int max_degree) {
    const pclie::CommutationGraph g = load_graph(graph_path);
    const pclie::CompositionReport report = pclie::check_gsb(g, max_degree);
    std::cout << "relators: " << report.relator_count << "\n";
    std::cout << "compositions: " << report.entries.size() << " (intersections: " << report.intersections
              << ", inclusions: " << report.inclusions << ")\n";
    int nontrivial = 0;
    for (const auto& entry : report.entries) {
        if (entry.trivial)
            continue;
        ++nontrivial;
        std::cout << "nontrivial composition at " << pclie::to_string(entry.composition.w, g.alphabet())
                  << " -> " << pclie::to_string(entry.reduced, g.alphabet()) << "\n";
    }
    std::cout << "nontrivial: " << nontrivial << "\n";
    std::cout << "verdict: " << (report.pass ? "pass" : "fail") << "\n";
    return report.pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* env = std::getenv("PCLIE_MAX_TERMS")) {
        char* end = nullptr;
        const unsigned long long limit = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || limit == 0) {
            std::cerr << "error: PCLIE_MAX_TERMS must be a positive integer\n";
            return kExitUsage;
        }
        pclie::set_max_polynomial_terms(static_cast<std::size_t>(limit));
    }

    CLI::App app{"Bases and normal forms for partially commutative Lie algebras"};
    app.require_subcommand(1);

    std::string graph_path;
    std::string format = "text";
    std::string oracle = "none";
    std::string expr_text;
    std::vector<std::string> eq_exprs;
    int max_degree = 0;
    int nil_class = 0;

    auto* basis = app.add_subcommand("basis", "Linear basis of L(G) per degree");
    basis->add_option("--graph", graph_path, "Graph JSON file")->required();
    basis->add_option("--max-degree", max_degree, "Largest degree to enumerate")->required();
    basis->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    auto* dims = app.add_subcommand("dims", "Dimensions of the homogeneous components");
    dims->add_option("--graph", graph_path, "Graph JSON file")->required();
    dims->add_option("--max-degree", max_degree, "Largest degree")->required();
    dims->add_option("--oracle", oracle, "Independent cross-check")
        ->check(CLI::IsMember({"linear", "series", "none"}));

    auto* nf = app.add_subcommand("nf", "Normal form of an expression in L(G)");
    nf->add_option("--graph", graph_path, "Graph JSON file")->required();
    nf->add_option("--max-degree", max_degree, "Relation degree bound")->required();
    nf->add_option("--expr", expr_text, "Lie expression")->required();

    auto* eq = app.add_subcommand("eq", "Equality of two expressions in L(G)");
    eq->add_option("--graph", graph_path, "Graph JSON file")->required();
    eq->add_option("--max-degree", max_degree, "Relation degree bound")->required();
    eq->add_option("--expr", eq_exprs, "Lie expression (exactly twice)")->required()->expected(2);

    auto* check = app.add_subcommand("check-gsb", "Verify S(G) is closed under compositions");
    check->add_option("--graph", graph_path, "Graph JSON file")->required();
    check->add_option("--max-degree", max_degree, "Overlap word length bound")->required();

    auto* nilp = app.add_subcommand("nilpotent-basis", "Basis of the nilpotent quotient L(G,n)");
    nilp->add_option("--graph", graph_path, "Graph JSON file")->required();
    nilp->add_option("--class", nil_class, "Nilpotency class n")->required();

    auto* rel = app.add_subcommand("relators", "The relation set S(G) per degree");
    rel->add_option("--graph", graph_path, "Graph JSON file")->required();
    rel->add_option("--max-degree", max_degree, "Largest relator degree")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (basis->parsed())
            return run_basis(graph_path, max_degree, format);
        if (dims->parsed())
            return run_dims(graph_path, max_degree, oracle);
        if (nf->parsed())
            return run_nf(graph_path, max_degree, expr_text);
        if (eq->parsed())
            return run_eq(graph_path, max_degree, eq_exprs);
        if (check->parsed())
            return run_check_gsb(graph_path, max_degree);
        if (nilp->parsed())
            return run_nilpotent_basis(graph_path, nil_class);
        if (rel->parsed())
            return run_relators(graph_path, max_degree);
    } catch (const pclie::ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const pclie::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const pclie::DegreeBoundError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
