#include "fre2fa/document.hpp"

#include <sstream>

#include "fre2fa/errors.hpp"

namespace fre2fa {

using nlohmann::ordered_json;

AutomatonDocument to_document(const CrispAutomaton& aut, const MarkedExpression& m, StructureKind structure)
{
    AutomatonDocument doc;
    doc.structure = structure;
    doc.kind = AutomatonDocument::Kind::Crisp;
    for (const Symbol& s : aut.alphabet) {
        doc.alphabet.push_back(s.name());
        if (s.is_scalar())
            doc.phi[s.name()] = m.at(s.scalar_position).phi;
    }
    doc.states = aut.num_states;
    doc.initial.assign(aut.num_states, TruthValue::zero());
    if (aut.num_states > 0)
        doc.initial[0] = TruthValue::one();
    for (const auto& t : aut.transitions)
        doc.transitions.push_back({t.from, t.symbol.name(), t.to, TruthValue::one()});
    for (State q : aut.finals)
        doc.finals.push_back({q, TruthValue::one()});
    std::map<State, std::vector<std::size_t>> labels;
    for (State q = 0; q < aut.labels.size(); ++q)
        labels[q] = std::vector<std::size_t>(aut.labels[q].begin(), aut.labels[q].end());
    doc.labels = std::move(labels);
    return doc;
}

AutomatonDocument to_document(const FuzzyAutomaton& fa)
{
    AutomatonDocument doc;
    doc.structure = fa.structure.kind();
    doc.kind = AutomatonDocument::Kind::Fuzzy;
    for (char c : fa.alphabet)
        doc.alphabet.emplace_back(1, c);
    doc.states = fa.num_states();
    doc.initial = fa.sigma;
    // Transitions ordered by (from, symbol, to).
    for (State i = 0; i < doc.states; ++i)
        for (std::size_t a = 0; a < fa.alphabet.size(); ++a)
            for (State j = 0; j < doc.states; ++j)
                if (!fa.delta[a](i, j).is_zero())
                    doc.transitions.push_back({i, std::string(1, fa.alphabet[a]), j, fa.delta[a](i, j)});
    for (State q = 0; q < doc.states; ++q)
        if (!fa.tau[q].is_zero())
            doc.finals.push_back({q, fa.tau[q]});
    return doc;
}

FuzzyAutomaton fuzzy_from_document(const AutomatonDocument& doc)
{
    if (doc.kind != AutomatonDocument::Kind::Fuzzy)
        throw DocumentError("document does not describe a fuzzy automaton");
    std::string letters;
    for (const auto& s : doc.alphabet) {
        if (s.size() != 1)
            throw DocumentError("fuzzy alphabet symbols must be single characters");
        letters += s;
    }
    FuzzyAutomaton fa{LatticeStructure(doc.structure), Alphabet(letters), {}, doc.initial,
                      TruthVector(doc.states)};
    if (fa.alphabet.size() != doc.alphabet.size())
        throw DocumentError("duplicate alphabet symbols");
    if (doc.initial.size() != doc.states)
        throw DocumentError("initial vector length differs from state count");
    fa.delta.assign(fa.alphabet.size(), TruthMatrix(doc.states, doc.states));
    for (const auto& t : doc.transitions) {
        if (t.from >= doc.states || t.to >= doc.states || t.symbol.size() != 1 ||
            !fa.alphabet.contains(t.symbol[0]))
            throw DocumentError("transition references unknown state or symbol");
        fa.delta[*fa.alphabet.index_of(t.symbol[0])](t.from, t.to) = t.weight;
    }
    for (const auto& f : doc.finals) {
        if (f.state >= doc.states)
            throw DocumentError("final entry references unknown state");
        fa.tau[f.state] = f.weight;
    }
    return fa;
}

ordered_json to_json(const AutomatonDocument& doc)
{
    const bool crisp = doc.kind == AutomatonDocument::Kind::Crisp;
    ordered_json j;
    j["format_version"] = doc.format_version;
    j["structure"] = std::string(LatticeStructure(doc.structure).name());
    j["kind"] = crisp ? "crisp" : "fuzzy";
    j["alphabet"] = doc.alphabet;
    j["states"] = doc.states;
    if (crisp) {
        j["initial"] = 0;
    } else {
        ordered_json init = ordered_json::array();
        for (const auto& v : doc.initial)
            init.push_back(v.to_string());
        j["initial"] = std::move(init);
    }
    ordered_json ts = ordered_json::array();
    for (const auto& t : doc.transitions)
        ts.push_back({{"from", t.from}, {"symbol", t.symbol}, {"to", t.to}, {"weight", t.weight.to_string()}});
    j["transitions"] = std::move(ts);
    ordered_json fs = ordered_json::array();
    for (const auto& f : doc.finals)
        fs.push_back({{"state", f.state}, {"weight", f.weight.to_string()}});
    j["finals"] = std::move(fs);
    if (doc.labels) {
        ordered_json ls = ordered_json::object();
        for (const auto& [q, positions] : *doc.labels)
            ls[std::to_string(q)] = positions;
        j["labels"] = std::move(ls);
    }
    if (!doc.phi.empty()) {
        ordered_json ph = ordered_json::object();
        for (const auto& [name, v] : doc.phi)
            ph[name] = v.to_string();
        j["phi"] = std::move(ph);
    }
    return j;
}

AutomatonDocument document_from_json(const ordered_json& j)
{
    try {
        AutomatonDocument doc;
        doc.format_version = j.at("format_version").get<int>();
        if (doc.format_version != document_format_version)
            throw DocumentError("unsupported format_version " + std::to_string(doc.format_version));
        doc.structure = parse_structure_kind(j.at("structure").get<std::string>());
        const auto kind = j.at("kind").get<std::string>();
        if (kind != "crisp" && kind != "fuzzy")
            throw DocumentError("unknown kind '" + kind + "'");
        doc.kind = kind == "crisp" ? AutomatonDocument::Kind::Crisp : AutomatonDocument::Kind::Fuzzy;
        doc.alphabet = j.at("alphabet").get<std::vector<std::string>>();
        doc.states = j.at("states").get<std::size_t>();
        const auto& init = j.at("initial");
        if (init.is_number_unsigned()) {
            const auto q = init.get<std::size_t>();
            if (q >= doc.states)
                throw DocumentError("initial state out of range");
            doc.initial.assign(doc.states, TruthValue::zero());
            doc.initial[q] = TruthValue::one();
        } else {
            for (const auto& v : init)
                doc.initial.push_back(parse_exact_value(v.get<std::string>()));
            if (doc.initial.size() != doc.states)
                throw DocumentError("initial vector length differs from state count");
        }
        for (const auto& t : j.at("transitions"))
            doc.transitions.push_back({t.at("from").get<State>(), t.at("symbol").get<std::string>(),
                                       t.at("to").get<State>(),
                                       parse_exact_value(t.at("weight").get<std::string>())});
        for (const auto& f : j.at("finals"))
            doc.finals.push_back({f.at("state").get<State>(), parse_exact_value(f.at("weight").get<std::string>())});
        if (j.contains("labels")) {
            std::map<State, std::vector<std::size_t>> labels;
            for (const auto& [key, positions] : j.at("labels").items())
                labels[std::stoull(key)] = positions.get<std::vector<std::size_t>>();
            doc.labels = std::move(labels);
        }
        if (j.contains("phi"))
            for (const auto& [name, v] : j.at("phi").items())
                doc.phi[name] = parse_exact_value(v.get<std::string>());
        return doc;
    } catch (const nlohmann::json::exception& e) {
        throw DocumentError(std::string("malformed automaton document: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw DocumentError(std::string("malformed automaton document: ") + e.what());
    } catch (const MalformedNumber& e) {
        throw DocumentError(std::string("malformed automaton document: ") + e.what());
    }
}

std::string to_dot(const AutomatonDocument& doc)
{
    const bool crisp = doc.kind == AutomatonDocument::Kind::Crisp;
    std::map<State, TruthValue> final_weight;
    for (const auto& f : doc.finals)
        if (!f.weight.is_zero())
            final_weight[f.state] = f.weight;

    std::ostringstream out;
    out << "digraph automaton {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle];\n";
    for (State q = 0; q < doc.states; ++q) {
        out << "  " << q;
        if (const auto it = final_weight.find(q); it != final_weight.end()) {
            out << " [shape=doublecircle";
            if (!crisp)
                out << ", xlabel=\"" << it->second.to_string() << "\"";
            out << "]";
        }
        out << ";\n";
    }
    for (State q = 0; q < doc.initial.size(); ++q) {
        if (doc.initial[q].is_zero())
            continue;
        out << "  init" << q << " [shape=point];\n";
        out << "  init" << q << " -> " << q;
        if (!crisp)
            out << " [label=\"" << doc.initial[q].to_string() << "\"]";
        out << ";\n";
    }
    for (const auto& t : doc.transitions) {
        out << "  " << t.from << " -> " << t.to << " [label=\"" << t.symbol;
        if (const auto it = doc.phi.find(t.symbol); it != doc.phi.end()) {
            out << "/" << it->second.to_string() << "\", style=dashed]";
        } else if (crisp) {
            out << "\"]";
        } else {
            out << "/" << t.weight.to_string() << "\"]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

ordered_json to_json(const EquivalenceReport& report)
{
    ordered_json j;
    j["expression"] = render(report.expression);
    j["structure"] = std::string(LatticeStructure(report.structure).name());
    j["max_len"] = report.max_len;
    j["words_checked"] = report.words_checked;
    j["positions"] = report.positions;
    j["follow_states"] = report.follow_states;
    j["position_states"] = report.position_states;
    if (report.equal()) {
        j["verdict"] = "equal";
    } else {
        const auto& c = *report.counterexample;
        j["verdict"] = "counterexample";
        j["counterexample"] = {{"word", c.word},
                               {"oracle", c.oracle.to_string()},
                               {"follow", c.follow.to_string()},
                               {"position", c.position.to_string()}};
    }
    return j;
}

} // namespace fre2fa
