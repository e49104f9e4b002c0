#include "gmi/cli.hpp"

#include "gmi/errors.hpp"
#include "gmi/markov.hpp"
#include "gmi/models.hpp"
#include "gmi/text_io.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>
#include <variant>

namespace gmi {

namespace {

struct Options {
    std::string graph_file;
    std::string family;
    std::string which;
    std::string statements_file;
    std::string spec_a;
    std::string spec_b;
    bool degrees = false;
    std::size_t max_vertices = kDefaultGlobalMarkovCap;
    std::size_t max_trek_vertices = kDefaultTrekVertexCap;
    ResourceLimits limits;
};

std::vector<CIStatement> family_statements(const MixedGraph& g, const std::string& family, const Options& opt) {
    if (family == "pairwise") return pairwise_markov(g);
    if (family == "local") return local_markov(g);
    if (family == "global") return global_markov(g, opt.max_vertices);
    throw InvalidArgument("unknown statement family '" + family + "'");
}

/// The model ring implied by a document: discrete when levels are given.
class Model {
public:
    explicit Model(const GraphDocument& doc) : graph_(doc.graph) {
        if (doc.levels)
            ring_.emplace<DiscreteModelRing>(*doc.levels);
        else
            ring_.emplace<GaussianModelRing>(doc.graph);
    }

    bool discrete() const { return std::holds_alternative<DiscreteModelRing>(ring_); }

    Ideal ci(std::span<const CIStatement> statements) const {
        if (discrete()) return ci_ideal(std::get<DiscreteModelRing>(ring_), statements);
        return ci_ideal(std::get<GaussianModelRing>(ring_), statements);
    }

    Ideal vanishing(const ResourceLimits& limits) const {
        if (discrete()) return discrete_vanishing_ideal(std::get<DiscreteModelRing>(ring_), graph_, limits);
        return gaussian_vanishing_ideal(std::get<GaussianModelRing>(ring_), limits);
    }

    Ideal trek(std::size_t cap) const {
        if (discrete()) throw UnsupportedGraph("trek ideals are defined for Gaussian models only; remove 'levels'");
        return trek_ideal(std::get<GaussianModelRing>(ring_), graph_, cap);
    }

    const GaussianModelRing& gaussian() const {
        if (discrete()) throw UnsupportedGraph("identifiability is defined for Gaussian models only; remove 'levels'");
        return std::get<GaussianModelRing>(ring_);
    }

private:
    const MixedGraph& graph_;
    std::variant<std::monostate, DiscreteModelRing, GaussianModelRing> ring_;
};

Ideal ideal_from_spec(const Model& model, const MixedGraph& g, const std::string& spec, const Options& opt) {
    if (spec == "vanishing") return model.vanishing(opt.limits);
    if (spec == "trek") return model.trek(opt.max_trek_vertices);
    if (spec.starts_with("ci-")) return model.ci(family_statements(g, spec.substr(3), opt));
    if (spec.starts_with("ci:")) return model.ci(load_statements(spec.substr(3), g));
    throw InvalidArgument("unknown ideal '" + spec +
                          "'; expected ci-pairwise, ci-local, ci-global, ci:FILE, vanishing or trek");
}

void cmd_statements(const Options& opt, std::ostream& out) {
    GraphDocument doc = load_graph_document(opt.graph_file);
    for (const auto& s : family_statements(doc.graph, opt.family, opt)) out << format_statement(doc.graph, s) << '\n';
}

void cmd_ideal(const Options& opt, std::ostream& out, std::ostream& err) {
    GraphDocument doc = load_graph_document(opt.graph_file);
    Model model(doc);
    Ideal ideal = [&] {
        if (opt.which == "ci") {
            if (!opt.statements_file.empty()) return model.ci(load_statements(opt.statements_file, doc.graph));
            return model.ci(family_statements(doc.graph, opt.family.empty() ? "global" : opt.family, opt));
        }
        if (opt.which == "vanishing") return model.vanishing(opt.limits);
        return model.trek(opt.max_trek_vertices);
    }();
    if (opt.degrees) {
        DegreeProfile profile = min_gens_degrees(ideal, opt.limits);
        if (!profile.homogeneous) err << "warning: ideal is not homogeneous; degrees come from a greedy generating set\n";
        for (std::size_t i = 0; i < profile.degrees.size(); ++i) out << (i ? " " : "") << profile.degrees[i];
        if (!profile.degrees.empty()) out << '\n';
        return;
    }
    for (const auto& f : ideal.generators()) out << f.to_string() << '\n';
}

void cmd_identify(const Options& opt, std::ostream& out) {
    GraphDocument doc = load_graph_document(opt.graph_file);
    Model model(doc);
    IdentResult result = identify_parameters(model.gaussian(), opt.limits);
    for (const auto& p : result.parameters) {
        out << p.name << '\t' << to_string(p.classification);
        if (p.witness) out << '\t' << p.witness->to_string();
        out << '\n';
    }
}

void cmd_compare(const Options& opt, std::ostream& out) {
    GraphDocument doc = load_graph_document(opt.graph_file);
    Model model(doc);
    Ideal a = ideal_from_spec(model, doc.graph, opt.spec_a, opt);
    Ideal b = ideal_from_spec(model, doc.graph, opt.spec_b, opt);
    out << to_string(ideal_compare(a, b, opt.limits)) << '\n';
}

void add_limits(CLI::App* cmd, Options& opt) {
    cmd->add_option("--max-basis", opt.limits.max_basis, "Gröbner basis size cap")->check(CLI::PositiveNumber);
    cmd->add_option("--max-terms", opt.limits.max_terms, "term cap for intermediate polynomials")->check(CLI::PositiveNumber);
    cmd->add_option("--timeout-seconds", opt.limits.timeout_seconds, "wall-clock cap per computation (0 = none)")
        ->check(CLI::NonNegativeNumber);
}

void add_caps(CLI::App* cmd, Options& opt) {
    cmd->add_option("--max-vertices", opt.max_vertices, "vertex cap for global Markov enumeration");
    cmd->add_option("--max-trek-vertices", opt.max_trek_vertices, "vertex cap for trek ideal enumeration");
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Exact algebra of graphical models", "gmi"};
    app.require_subcommand(1);

    const std::vector<std::string> families = {"pairwise", "local", "global"};

    auto* statements = app.add_subcommand("statements", "list the Markov statements of a graph");
    statements->add_option("graph", opt.graph_file, "graph document")->required();
    statements->add_option("--family", opt.family, "pairwise, local or global")
        ->required()
        ->check(CLI::IsMember(families));
    add_caps(statements, opt);

    auto* ideal = app.add_subcommand("ideal", "list the generators of an ideal of the graph's model");
    ideal->add_option("graph", opt.graph_file, "graph document")->required();
    ideal->add_option("--which", opt.which, "ci, vanishing or trek")
        ->required()
        ->check(CLI::IsMember({"ci", "vanishing", "trek"}));
    auto* family = ideal->add_option("--family", opt.family, "statement family for ci")->check(CLI::IsMember(families));
    ideal->add_option("--statements", opt.statements_file, "statement file for ci")->excludes(family);
    ideal->add_flag("--degrees", opt.degrees, "print the degrees of a minimal generating set");
    add_limits(ideal, opt);
    add_caps(ideal, opt);

    auto* identify = app.add_subcommand("identify", "classify the parameters of a Gaussian model");
    identify->add_option("graph", opt.graph_file, "graph document")->required();
    add_limits(identify, opt);

    auto* compare = app.add_subcommand("compare", "compare two ideals of the graph's model");
    compare->add_option("graph", opt.graph_file, "graph document")->required();
    compare->add_option("a", opt.spec_a, "ci-pairwise, ci-local, ci-global, ci:FILE, vanishing or trek")->required();
    compare->add_option("b", opt.spec_b, "second ideal, same forms")->required();
    add_limits(compare, opt);
    add_caps(compare, opt);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream help_out;
        int code = app.exit(e, help_out, err);
        out << help_out.str();
        return code == 0 ? kExitOk : kExitParse;
    }

    std::ostringstream buffer;
    try {
        if (*statements)
            cmd_statements(opt, buffer);
        else if (*ideal)
            cmd_ideal(opt, buffer, err);
        else if (*identify)
            cmd_identify(opt, buffer);
        else
            cmd_compare(opt, buffer);
    } catch (const ParseError& e) {
        err << "gmi: parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const ResourceLimitExceeded& e) {
        err << "gmi: resource limit: " << e.what() << '\n';
        return kExitResource;
    } catch (const Error& e) {
        err << "gmi: " << e.what() << '\n';
        return kExitSemantic;
    }
    out << buffer.str();
    return kExitOk;
}

}  // namespace gmi
