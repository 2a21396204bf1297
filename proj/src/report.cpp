#include "lssbound/report.hpp"

#include "lssbound/constructions.hpp"
#include "lssbound/io.hpp"
#include "lssbound/minimize.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace lssbound {

using nlohmann::ordered_json;

WitnessReport witness_report(std::uint32_t m, std::uint32_t n) {
    const Dfa m1 = build_m1(m);
    const Dfa m2 = build_m2(m, n);
    const Dfa pair[] = {m1, m2};

    WitnessReport r;
    r.m = m;
    r.n = n;
    r.expected = std::uint64_t{m} * n - 1;
    if (auto lss = intersection_lss(pair)) {
        r.computed_lss = lss->length;
        r.witness_word = std::move(lss->witness);
    }
    r.closed_form_word = closed_form_witness(m, n);
    r.closed_form_accepted = accepts(m1, r.closed_form_word) && accepts(m2, r.closed_form_word);
    r.sc_m1 = state_complexity(m1);
    r.sc_m2 = state_complexity(m2);
    r.pass = r.computed_lss == r.expected && r.closed_form_accepted &&
             r.closed_form_word.size() == r.expected;
    return r;
}

std::vector<WitnessReport> verify_range(std::uint32_t max_n) {
    std::vector<WitnessReport> rows;
    for (std::uint32_t n = 1; n <= max_n; ++n)
        for (std::uint32_t m = 1; m <= n; ++m)
            rows.push_back(witness_report(m, n));
    return rows;
}

namespace {

const Alphabet& binary() {
    static const Alphabet a = Alphabet::binary();
    return a;
}

std::string quoted_word(const Alphabet& a, const Word& w) { return "\"" + format_word(a, w) + "\""; }

ordered_json witness_object(const WitnessReport& r) {
    ordered_json o;
    o["m"] = r.m;
    o["n"] = r.n;
    o["computed_lss"] = r.computed_lss ? ordered_json(*r.computed_lss) : ordered_json(nullptr);
    o["witness_word"] = format_word(binary(), r.witness_word);
    o["closed_form_word"] = format_word(binary(), r.closed_form_word);
    o["closed_form_accepted"] = r.closed_form_accepted;
    o["expected"] = r.expected;
    o["sc_m1"] = r.sc_m1;
    o["sc_m2"] = r.sc_m2;
    o["pass"] = r.pass;
    return o;
}

std::string lss_cell(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : "empty"; }

}  // namespace

std::string witness_text(const WitnessReport& r) {
    std::ostringstream out;
    out << "m = " << r.m << ", n = " << r.n << "\n"
        << "expected lss (mn-1):   " << r.expected << "\n"
        << "computed lss:          " << lss_cell(r.computed_lss) << "\n"
        << "least shortest word:   " << quoted_word(binary(), r.witness_word) << "\n"
        << "closed-form word:      " << quoted_word(binary(), r.closed_form_word) << " (length "
        << r.closed_form_word.size() << ", " << (r.closed_form_accepted ? "accepted" : "NOT accepted")
        << ")\n"
        << "state complexities:    " << r.sc_m1 << ", " << r.sc_m2 << "\n"
        << "result:                " << (r.pass ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string witness_json(const WitnessReport& r) {
    ordered_json o;
    o["schema_version"] = kSchemaVersion;
    o["report"] = witness_object(r);
    return o.dump(2) + "\n";
}

std::string verify_text(const std::vector<WitnessReport>& rows) {
    std::ostringstream out;
    out << std::setw(4) << "m" << std::setw(5) << "n" << std::setw(10) << "expected" << std::setw(10)
        << "computed" << std::setw(7) << "sc1" << std::setw(5) << "sc2" << "  result\n";
    std::size_t failures = 0;
    for (const auto& r : rows) {
        out << std::setw(4) << r.m << std::setw(5) << r.n << std::setw(10) << r.expected << std::setw(10)
            << lss_cell(r.computed_lss) << std::setw(7) << r.sc_m1 << std::setw(5) << r.sc_m2 << "  "
            << (r.pass ? "pass" : "FAIL") << "\n";
        failures += r.pass ? 0 : 1;
    }
    out << rows.size() << " pairs, " << failures << " failed\n";
    return out.str();
}

std::string verify_json(const std::vector<WitnessReport>& rows) {
    ordered_json o;
    o["schema_version"] = kSchemaVersion;
    ordered_json list = ordered_json::array();
    bool all = true;
    for (const auto& r : rows) {
        list.push_back(witness_object(r));
        all = all && r.pass;
    }
    o["rows"] = std::move(list);
    o["all_pass"] = all;
    return o.dump(2) + "\n";
}

std::string verify_csv(const std::vector<WitnessReport>& rows) {
    std::ostringstream out;
    out << "m,n,expected,computed_lss,closed_form_accepted,sc_m1,sc_m2,pass\n";
    for (const auto& r : rows)
        out << r.m << ',' << r.n << ',' << r.expected << ',' << lss_cell(r.computed_lss) << ','
            << (r.closed_form_accepted ? "true" : "false") << ',' << r.sc_m1 << ',' << r.sc_m2 << ','
            << (r.pass ? "true" : "false") << "\n";
    return out.str();
}

namespace {

std::string join(const std::vector<std::uint32_t>& v, char sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0)
            s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

}  // namespace

std::string search_text(const SearchReport& r) {
    std::ostringstream out;
    out << "sizes:              " << join(r.sizes, ',') << "\n"
        << "target (prod-1):    " << r.target << "\n"
        << "max lss:            " << lss_cell(r.max_lss) << "\n"
        << "attained:           " << (r.attained ? "yes" : "no") << "\n"
        << "tuples examined:    " << r.tuples_examined << " (" << r.tuples_skipped
        << " skipped with an empty component)\n"
        << "languages per size:";
    for (auto c : r.languages_per_size)
        out << ' ' << c;
    out << "\n";
    if (r.max_lss) {
        const Alphabet& a = r.witness_tuple.front().dfa().alphabet;
        out << "witness word:       " << quoted_word(a, r.witness_word) << "\n";
        for (std::size_t i = 0; i < r.witness_tuple.size(); ++i)
            out << "witness component " << i << ":\n" << dfa_to_json(r.witness_tuple[i].dfa());
    }
    return out.str();
}

std::string search_json(const SearchReport& r) {
    ordered_json o;
    o["schema_version"] = kSchemaVersion;
    o["sizes"] = r.sizes;
    o["target"] = r.target;
    o["max_lss"] = r.max_lss ? ordered_json(*r.max_lss) : ordered_json(nullptr);
    o["attained"] = r.attained;
    o["tuples_examined"] = r.tuples_examined;
    o["tuples_skipped"] = r.tuples_skipped;
    o["bound_violations"] = r.bound_violations;
    o["languages_per_size"] = r.languages_per_size;
    ordered_json tuple = ordered_json::array();
    for (const auto& c : r.witness_tuple)
        tuple.push_back(ordered_json::parse(dfa_to_json(c.dfa())));
    o["witness_tuple"] = std::move(tuple);
    if (r.max_lss)
        o["witness_word"] = format_word(r.witness_tuple.front().dfa().alphabet, r.witness_word);
    else
        o["witness_word"] = nullptr;
    return o.dump(2) + "\n";
}

std::string search_csv(const SearchReport& r) {
    std::ostringstream out;
    out << "sizes,target,max_lss,attained,tuples_examined,tuples_skipped,bound_violations\n"
        << '"' << join(r.sizes, ',') << "\"," << r.target << ',' << lss_cell(r.max_lss) << ','
        << (r.attained ? "true" : "false") << ',' << r.tuples_examined << ',' << r.tuples_skipped << ','
        << r.bound_violations << "\n";
    return out.str();
}

std::string lss_text(const Alphabet& a, const std::optional<LssResult>& r) {
    if (!r)
        return "empty intersection\n";
    return "length: " + std::to_string(r->length) + "\nwitness: " + quoted_word(a, r->witness) + "\n";
}

std::string lss_json(const Alphabet& a, const std::optional<LssResult>& r) {
    ordered_json o;
    o["schema_version"] = kSchemaVersion;
    o["empty"] = !r.has_value();
    o["length"] = r ? ordered_json(r->length) : ordered_json(nullptr);
    o["witness"] = r ? ordered_json(format_word(a, r->witness)) : ordered_json(nullptr);
    return o.dump(2) + "\n";
}

std::string m1_state_name(State q) { return "p_" + std::to_string(q); }
std::string m2_state_name(State q) { return "q_" + std::to_string(q); }

}  // namespace lssbound
