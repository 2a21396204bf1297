#include "lssbound/io.hpp"

#include <json.hpp>

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace lssbound {

using nlohmann::json;

namespace {

const json& field(const json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end())
        throw FormatError(std::string("missing key \"") + key + "\"");
    return *it;
}

std::uint32_t as_index(const json& v, const std::string& key) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0 ||
        v.get<std::int64_t>() > std::numeric_limits<std::uint32_t>::max())
        throw FormatError("key \"" + key + "\" must hold nonnegative integers");
    return v.get<std::uint32_t>();
}

}  // namespace

Dfa parse_dfa(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw FormatError("DFA document must be an object");
    static const std::set<std::string> known{"states", "alphabet", "initial", "accepting", "delta"};
    for (const auto& [key, _] : doc.items())
        if (!known.contains(key))
            throw FormatError("unknown key \"" + key + "\"");

    const std::uint32_t states = as_index(field(doc, "states"), "states");

    const json& labels = field(doc, "alphabet");
    if (!labels.is_array())
        throw FormatError("key \"alphabet\" must be a list of strings");
    std::vector<std::string> symbols;
    for (const auto& l : labels) {
        if (!l.is_string())
            throw FormatError("key \"alphabet\" must be a list of strings");
        symbols.push_back(l.get<std::string>());
    }
    Alphabet alphabet;
    try {
        alphabet = Alphabet(std::move(symbols));
    } catch (const DfaError& e) {
        throw FormatError(std::string("key \"alphabet\": ") + e.what());
    }

    const State initial = as_index(field(doc, "initial"), "initial");

    const json& acc = field(doc, "accepting");
    if (!acc.is_array())
        throw FormatError("key \"accepting\" must be a list of integers");
    std::vector<State> accepting;
    for (const auto& v : acc)
        accepting.push_back(as_index(v, "accepting"));

    const json& delta = field(doc, "delta");
    if (!delta.is_array())
        throw FormatError("key \"delta\" must be a list of rows");
    if (delta.size() != states)
        throw FormatError("key \"delta\" has " + std::to_string(delta.size()) + " rows, expected " +
                          std::to_string(states));
    std::vector<std::vector<State>> rows;
    for (const auto& row : delta) {
        if (!row.is_array() || row.size() != alphabet.size())
            throw FormatError("key \"delta\" rows must list one target per alphabet symbol");
        std::vector<State> r;
        for (const auto& v : row)
            r.push_back(as_index(v, "delta"));
        rows.push_back(std::move(r));
    }

    Dfa d = make_dfa(std::move(alphabet), initial, std::move(accepting), rows);
    if (auto err = validate(d))
        throw FormatError("invalid DFA: " + *err);
    return d;
}

Dfa load_dfa(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw FormatError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_dfa(buf.str());
    } catch (const DfaError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

std::string dfa_to_json(const Dfa& d) {
    json delta = json::array();
    for (State q = 0; q < d.state_count; ++q) {
        json row = json::array();
        for (Symbol c = 0; c < d.alphabet.size(); ++c)
            row.push_back(d.next(q, c));
        delta.push_back(std::move(row));
    }
    json doc{{"states", d.state_count},
             {"alphabet", d.alphabet.labels()},
             {"initial", d.initial},
             {"accepting", d.accepting},
             {"delta", std::move(delta)}};
    return doc.dump(2) + "\n";
}

std::string plain_state_name(State q) { return std::to_string(q); }

std::string to_dot(const Dfa& d, const std::string& graph_name, const StateNamer& name) {
    std::ostringstream out;
    out << "digraph \"" << graph_name << "\" {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle];\n";
    out << "  __start [shape=point, label=\"\"];\n";
    for (State q = 0; q < d.state_count; ++q) {
        out << "  s" << q << " [label=\"" << name(q) << "\"";
        if (d.is_accepting(q))
            out << ", shape=doublecircle";
        out << "];\n";
    }
    out << "  __start -> s" << d.initial << ";\n";
    for (State q = 0; q < d.state_count; ++q)
        for (Symbol c = 0; c < d.alphabet.size(); ++c)
            out << "  s" << q << " -> s" << d.next(q, c) << " [label=\"" << d.alphabet.label(c) << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace lssbound
