// lsstool: command-line front end for the shortest-word-in-intersection toolkit.

#include "lssbound/constructions.hpp"
#include "lssbound/io.hpp"
#include "lssbound/minimize.hpp"
#include "lssbound/product.hpp"
#include "lssbound/report.hpp"
#include "lssbound/search.hpp"
#include "lssbound/shortest.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using namespace lssbound;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::uint32_t m = 0;
    std::uint32_t n = 0;
    std::uint32_t max_n = 0;
    std::vector<std::uint32_t> sizes;
    std::vector<std::string> dfa_paths;
    std::string format = "text";
    std::string dot;
    std::string automaton = "m2";
    int workers = 0;
    std::uint64_t budget = SearchOptions{}.max_tuples;
    bool timestamp = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string stamp(std::string json_text, bool timestamp) {
    if (!timestamp)
        return json_text;
    auto doc = nlohmann::ordered_json::parse(json_text);
    const auto now = std::chrono::system_clock::now().time_since_epoch();
    doc["generated_at_unix"] = std::chrono::duration_cast<std::chrono::seconds>(now).count();
    return doc.dump(2) + "\n";
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << text;
    if (!out)
        throw std::runtime_error("write failed for " + path.string());
}

std::string product_dot(std::uint32_t m, std::uint32_t n) {
    const Dfa pair[] = {build_m1(m), build_m2(m, n)};
    const Product p = product(pair);
    return to_dot(p.dfa, "M1 x M2", [&](State q) {
        return "(" + m1_state_name(p.tags[q][0]) + ", " + m2_state_name(p.tags[q][1]) + ")";
    });
}

int cmd_witness(const Options& o) {
    if (o.m == 0 || o.n == 0)
        throw UsageError("--m and --n must be positive");
    std::uint32_t m = o.m, n = o.n;
    if (m > n) {
        std::swap(m, n);
        std::cerr << "note: m > n, swapped to m = " << m << ", n = " << n
                  << " (the construction assumes m <= n)\n";
    }
    const WitnessReport r = witness_report(m, n);
    if (o.format == "structured")
        std::cout << stamp(witness_json(r), o.timestamp);
    else if (o.format == "csv")
        std::cout << verify_csv({r});
    else
        std::cout << witness_text(r);

    if (!o.dot.empty()) {
        const std::filesystem::path dir(o.dot);
        std::filesystem::create_directories(dir);
        write_file(dir / "m1.dot", to_dot(build_m1(m), "M1", m1_state_name));
        write_file(dir / "m2.dot", to_dot(build_m2(m, n), "M2", m2_state_name));
        write_file(dir / "product.dot", product_dot(m, n));
    }
    return r.pass ? kExitOk : kExitFailed;
}

int cmd_verify(const Options& o) {
    if (o.max_n == 0)
        throw UsageError("--max-n must be positive");
    const auto rows = verify_range(o.max_n);
    if (o.format == "structured")
        std::cout << stamp(verify_json(rows), o.timestamp);
    else if (o.format == "csv")
        std::cout << verify_csv(rows);
    else
        std::cout << verify_text(rows);
    for (const auto& r : rows)
        if (!r.pass)
            return kExitFailed;
    return kExitOk;
}

int cmd_search(const Options& o) {
    if (o.sizes.empty())
        throw UsageError("--sizes needs at least one size");
    SearchOptions opts;
    opts.workers = o.workers;
    opts.max_tuples = o.budget;
    SearchReport r;
    try {
        r = tightness_search(o.sizes, Alphabet::binary(), opts);
    } catch (const SearchError& e) {
        throw UsageError(e.what());
    }
    if (o.format == "structured")
        std::cout << stamp(search_json(r), o.timestamp);
    else if (o.format == "csv")
        std::cout << search_csv(r);
    else
        std::cout << search_text(r);
    return r.bound_violations == 0 ? kExitOk : kExitFailed;
}

int cmd_lss(const Options& o) {
    if (o.dfa_paths.empty())
        throw UsageError("lss needs at least one --dfa file");
    std::vector<Dfa> dfas;
    for (const auto& p : o.dfa_paths)
        dfas.push_back(load_dfa(p));
    const auto r = intersection_lss(dfas);
    const Alphabet& a = dfas.front().alphabet;
    if (o.format == "structured")
        std::cout << stamp(lss_json(a, r), o.timestamp);
    else if (o.format == "csv")
        std::cout << "empty,length,witness\n"
                  << (r ? "false," + std::to_string(r->length) + "," + format_word(a, r->witness)
                        : std::string("true,,"))
                  << "\n";
    else
        std::cout << lss_text(a, r);
    return r ? kExitOk : kExitFailed;
}

int cmd_export_dot(const Options& o) {
    std::string text;
    if (!o.dfa_paths.empty()) {
        if (o.dfa_paths.size() == 1) {
            text = to_dot(load_dfa(o.dfa_paths.front()), "dfa");
        } else {
            std::vector<Dfa> dfas;
            for (const auto& p : o.dfa_paths)
                dfas.push_back(load_dfa(p));
            const Product p = product(dfas);
            text = to_dot(p.dfa, "product", [&](State q) {
                std::string s = "(";
                for (std::size_t i = 0; i < p.tags[q].size(); ++i)
                    s += (i ? ", " : "") + std::to_string(p.tags[q][i]);
                return s + ")";
            });
        }
    } else {
        if (o.m == 0)
            throw UsageError("export-dot needs --dfa or --m (and --n for m2/product)");
        if (o.automaton == "m1") {
            text = to_dot(build_m1(o.m), "M1", m1_state_name);
        } else {
            if (o.n == 0)
                throw UsageError("--n is required for --automaton " + o.automaton);
            if (o.m > o.n)
                throw UsageError("--m must not exceed --n");
            text = o.automaton == "m2" ? to_dot(build_m2(o.m, o.n), "M2", m2_state_name) : product_dot(o.m, o.n);
        }
    }
    if (o.dot.empty())
        std::cout << text;
    else
        write_file(o.dot, text);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Shortest words in intersections of regular languages"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "structured", "csv"}));
        sub->add_flag("--timestamp", o.timestamp, "Add a generation timestamp to structured output");
    };

    auto* witness = app.add_subcommand("witness", "Check the two-automaton construction for one (m, n)");
    witness->add_option("--m", o.m, "States of the first automaton")->required();
    witness->add_option("--n", o.n, "States of the second automaton")->required();
    witness->add_option("--dot", o.dot, "Directory for m1.dot, m2.dot and product.dot");
    add_format(witness);

    auto* verify = app.add_subcommand("verify", "Check the construction for every 1 <= m <= n <= max-n");
    verify->add_option("--max-n", o.max_n, "Largest n")->required();
    add_format(verify);

    auto* search = app.add_subcommand("search", "Exhaustive search for the maximum intersection lss");
    search->add_option("--sizes", o.sizes, "Automaton sizes, e.g. 2,2,3")->delimiter(',');
    search->add_option("--workers", o.workers, "Worker threads (0: default)")->check(CLI::NonNegativeNumber);
    search->add_option("--budget", o.budget, "Maximum number of language tuples");
    add_format(search);

    auto* lss = app.add_subcommand("lss", "Shortest word accepted by every given DFA");
    lss->add_option("--dfa", o.dfa_paths, "DFA interchange file (repeatable)");
    add_format(lss);

    auto* dot = app.add_subcommand("export-dot", "Write a Graphviz rendering");
    dot->add_option("--dfa", o.dfa_paths, "DFA interchange file (repeatable; several give their product)");
    dot->add_option("--automaton", o.automaton, "Construction to render")
        ->check(CLI::IsMember({"m1", "m2", "product"}));
    dot->add_option("--m", o.m, "First construction size");
    dot->add_option("--n", o.n, "Second construction size");
    dot->add_option("--dot", o.dot, "Output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*witness)
            return cmd_witness(o);
        if (*verify)
            return cmd_verify(o);
        if (*search)
            return cmd_search(o);
        if (*lss)
            return cmd_lss(o);
        return cmd_export_dot(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
