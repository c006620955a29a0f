// fre2fa: compile fuzzy regular expressions to fuzzy automata.
//
// Exit codes: 0 ok, 2 bad input (syntax, document), 3 bad flag value,
// 4 word symbol outside the alphabet, 5 counterexample found,
// 6 word budget exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fre2fa/document.hpp"
#include "fre2fa/errors.hpp"
#include "fre2fa/fuzzy_automaton.hpp"
#include "fre2fa/generator.hpp"
#include "fre2fa/glushkov.hpp"
#include "fre2fa/marked.hpp"
#include "fre2fa/oracle.hpp"
#include "fre2fa/regex.hpp"

namespace {

using namespace fre2fa;

enum Exit : int {
    ok = 0,
    bad_input = 2,
    bad_flag = 3,
    bad_word = 4,
    counterexample = 5,
    over_budget = 6,
};

struct Options {
    std::string expr;
    std::string word;
    std::string alphabet;
    std::string method = "follow";
    std::string structure = "goedel";
    std::string format = "json";
    std::string input = "-";
    std::size_t max_len = 6;
    std::uint64_t seed = 1;
    std::size_t count = 200;
    unsigned depth = 5;
    unsigned alphabet_size = 3;
    std::vector<std::string> pool{"0.3", "0.7"};
    bool oracle = false;
    bool render_flag = false;
    bool crisp = false;
};

struct Pipeline {
    FuzzyRegex regex;
    MarkedExpression marked;
    CrispAutomaton crisp;
    FuzzyAutomaton fuzzy;
};

LatticeStructure structure_of(const Options& o)
{
    return LatticeStructure(parse_structure_kind(o.structure));
}

FuzzyRegex parse_expression(const Options& o)
{
    FuzzyRegex r = o.alphabet.empty() ? parse(o.expr) : parse(o.expr, Alphabet(o.alphabet));
    const LatticeStructure s = structure_of(o);
    const MarkedExpression m = mark(r);
    for (const auto& p : m.positions)
        if (!s.admits(p.phi))
            throw Error("scalar " + p.phi.to_string() + " is not a truth value of the " +
                        std::string(s.name()) + " structure");
    return r;
}

Pipeline run_pipeline(const Options& o)
{
    Pipeline p{parse_expression(o), {}, {}, {}};
    p.marked = o.alphabet.empty() ? mark(p.regex) : mark(p.regex, Alphabet(o.alphabet));
    const PositionSets ps = position_sets(p.marked);
    p.crisp = build_position_automaton(p.marked, ps);
    if (o.method == "follow")
        p.crisp = follow_quotient(p.crisp, ps);
    p.fuzzy = fuzzify(p.crisp, p.marked, structure_of(o));
    return p;
}

void print_document(const AutomatonDocument& doc, const std::string& format)
{
    if (format == "dot")
        std::cout << to_dot(doc);
    else
        std::cout << to_json(doc).dump(2) << '\n';
}

int cmd_parse(const Options& o)
{
    const FuzzyRegex r = parse_expression(o);
    std::cout << (o.render_flag ? render(r) : dump(r)) << '\n';
    return ok;
}

int cmd_build(const Options& o)
{
    const Pipeline p = run_pipeline(o);
    AutomatonDocument doc;
    if (o.crisp) {
        doc = to_document(p.crisp, p.marked, parse_structure_kind(o.structure));
    } else {
        doc = to_document(p.fuzzy);
        std::map<State, std::vector<std::size_t>> labels;
        for (State q = 0; q < p.crisp.labels.size(); ++q)
            labels[q].assign(p.crisp.labels[q].begin(), p.crisp.labels[q].end());
        doc.labels = std::move(labels);
    }
    print_document(doc, o.format);
    return ok;
}

int cmd_eval(const Options& o)
{
    const Pipeline p = run_pipeline(o);
    for (char c : o.word) {
        if (!p.fuzzy.alphabet.contains(c)) {
            std::cerr << "error: " << UnknownSymbol(c).what() << '\n';
            return bad_word;
        }
    }
    const TruthValue v = o.oracle ? denote(p.regex, o.word, structure_of(o)) : eval_word(p.fuzzy, o.word);
    std::cout << v.to_string() << '\n';
    return ok;
}

int cmd_compare(const Options& o)
{
    const FuzzyRegex r = parse_expression(o);
    EquivalenceOptions opts;
    opts.budget = word_budget_from_environment();
    const Alphabet sigma = o.alphabet.empty() ? r.letters() : Alphabet(o.alphabet);
    const EquivalenceReport report = check_equivalence(r, sigma, structure_of(o), o.max_len, opts);
    std::cout << to_json(report).dump(2) << '\n';
    return report.equal() ? ok : counterexample;
}

int cmd_fuzz(const Options& o)
{
    GeneratorConfig config;
    config.max_depth = o.depth;
    config.alphabet_size = o.alphabet_size;
    for (const auto& text : o.pool)
        config.scalar_pool.push_back(parse_truth_value(text));

    std::string letters;
    for (unsigned i = 0; i < o.alphabet_size; ++i)
        letters.push_back(static_cast<char>('a' + i));
    const Alphabet sigma(letters);
    const LatticeStructure structure = structure_of(o);
    EquivalenceOptions opts;
    opts.budget = word_budget_from_environment();

    std::size_t equal = 0;
    std::size_t strict = 0;
    std::size_t bound_violations = 0;
    nlohmann::ordered_json failures = nlohmann::ordered_json::array();
    for (std::size_t t = 0; t < o.count; ++t) {
        const FuzzyRegex r = generate(o.seed + t, config);
        const EquivalenceReport report = check_equivalence(r, sigma, structure, o.max_len, opts);
        if (report.follow_states < report.position_states)
            ++strict;
        const bool bounds = report.follow_states <= report.position_states &&
                            report.position_states == report.positions + 1;
        if (!bounds)
            ++bound_violations;
        if (report.equal() && bounds) {
            ++equal;
        } else {
            auto j = to_json(report);
            j["seed"] = o.seed + t;
            failures.push_back(std::move(j));
        }
    }

    nlohmann::ordered_json out;
    out["count"] = o.count;
    out["seed"] = o.seed;
    out["structure"] = std::string(structure.name());
    out["max_len"] = o.max_len;
    out["config"] = {{"max_depth", o.depth}, {"alphabet_size", o.alphabet_size}, {"scalar_pool", o.pool}};
    out["equal"] = equal;
    out["follow_smaller"] = strict;
    out["state_bound_violations"] = bound_violations;
    out["failures"] = std::move(failures);
    std::cout << out.dump(2) << '\n';
    return equal == o.count ? ok : counterexample;
}

int cmd_export(const Options& o)
{
    std::string text;
    if (o.input == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(o.input);
        if (!in)
            throw DocumentError("cannot open '" + o.input + "'");
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    const auto j = nlohmann::ordered_json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw DocumentError("input is not valid JSON");
    print_document(document_from_json(j), o.format);
    return ok;
}

} // namespace

int main(int argc, char** argv)
{
    Options o;
    CLI::App app{"Compile fuzzy regular expressions to fuzzy automata"};
    app.require_subcommand(1);

    const auto methods = CLI::IsMember({"follow", "position"});
    const auto structures = CLI::IsMember({"goedel", "product", "boolean"});
    const auto formats = CLI::IsMember({"json", "dot"});

    auto add_expr = [&](CLI::App* sub) {
        sub->add_option("expr", o.expr, "Fuzzy regular expression")->required();
        sub->add_option("--alphabet", o.alphabet, "Declared alphabet (default: letters of the expression)");
    };
    auto add_structure = [&](CLI::App* sub) {
        sub->add_option("--structure", o.structure, "Truth-value structure")->check(structures);
    };

    auto* parse_cmd = app.add_subcommand("parse", "Parse and print the expression tree");
    add_expr(parse_cmd);
    add_structure(parse_cmd);
    parse_cmd->add_flag("--render", o.render_flag, "Print the canonical text form instead of the tree");

    auto* build_cmd = app.add_subcommand("build", "Build the fuzzy automaton");
    add_expr(build_cmd);
    add_structure(build_cmd);
    build_cmd->add_option("--method", o.method, "Construction route")->check(methods);
    build_cmd->add_option("--format", o.format, "Output format")->check(formats);
    build_cmd->add_flag("--crisp", o.crisp, "Emit the crisp automaton over letters and scalar symbols");

    auto* eval_cmd = app.add_subcommand("eval", "Degree of a word");
    add_expr(eval_cmd);
    eval_cmd->add_option("word", o.word, "Input word (may be empty)")->required();
    add_structure(eval_cmd);
    eval_cmd->add_option("--method", o.method, "Construction route")->check(methods);
    eval_cmd->add_flag("--oracle", o.oracle, "Evaluate the expression's denotation directly");

    auto* compare_cmd = app.add_subcommand("compare", "Check both routes against the denotation");
    add_expr(compare_cmd);
    add_structure(compare_cmd);
    compare_cmd->add_option("--max-len", o.max_len, "Longest word to enumerate");

    auto* fuzz_cmd = app.add_subcommand("fuzz", "Compare on randomly generated expressions");
    add_structure(fuzz_cmd);
    fuzz_cmd->add_option("--count", o.count, "Number of expressions");
    fuzz_cmd->add_option("--seed", o.seed, "Seed of the first expression");
    fuzz_cmd->add_option("--max-len", o.max_len, "Longest word to enumerate");
    fuzz_cmd->add_option("--depth", o.depth, "Maximum expression depth")->check(CLI::Range(1u, 64u));
    fuzz_cmd->add_option("--alphabet-size", o.alphabet_size, "Letters a, b, ...")->check(CLI::Range(1u, 26u));
    fuzz_cmd->add_option("--pool", o.pool, "Scalar values")->delimiter(',');

    auto* export_cmd = app.add_subcommand("export", "Render an automaton document");
    export_cmd->add_option("input", o.input, "Document file (default: standard input)");
    export_cmd->add_option("--format", o.format, "Output format")->check(formats);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return bad_flag;
    }

    try {
        if (*parse_cmd)
            return cmd_parse(o);
        if (*build_cmd)
            return cmd_build(o);
        if (*eval_cmd)
            return cmd_eval(o);
        if (*compare_cmd)
            return cmd_compare(o);
        if (*fuzz_cmd)
            return cmd_fuzz(o);
        if (*export_cmd)
            return cmd_export(o);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return over_budget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return bad_flag;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return bad_input;
    }
    return ok;
}
