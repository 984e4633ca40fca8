#include "superfs/report_json.hpp"

#include "superfs/error.hpp"

#include <cctype>
#include <fstream>

namespace superfs::io {

namespace {

json complex_json(Complex c) { return json::array({c.real(), c.imag()}); }

Complex complex_from(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

template <class T>
json opt(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> opt_from(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<T>();
}

const char* verdict(bool b) { return b ? "pass" : "fail"; }

} // namespace

Group parse_group(const json& j) {
    try {
        if (j.contains("table")) {
            auto table = j.at("table").get<std::vector<std::vector<int>>>();
            if (j.contains("order") && j.at("order").get<std::size_t>() != table.size())
                throw GroupError("\"order\" does not match the table size");
            std::vector<std::string> names;
            if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
            return Group::from_table(std::move(table), std::move(names));
        }
        if (j.contains("generators"))
            return Group::from_permutations(j.at("degree").get<int>(), j.at("generators").get<std::vector<std::vector<int>>>());
    } catch (const json::exception& e) {
        throw GroupError(std::string("malformed group record: ") + e.what());
    }
    throw GroupError("group record needs \"table\" or \"generators\"");
}

json group_to_json(const Group& g) {
    json j{{"order", g.order()}, {"table", g.table()}};
    if (!g.names().empty()) j["names"] = g.names();
    return j;
}

std::vector<int> parse_phi(const json& j, int order) {
    try {
        auto phi = j.get<std::vector<int>>();
        if (static_cast<int>(phi.size()) != order) throw TwistError("phi has " + std::to_string(phi.size()) + " entries, expected " + std::to_string(order));
        return phi;
    } catch (const json::exception& e) {
        throw TwistError(std::string("malformed phi: ") + e.what());
    }
}

std::vector<Phase> parse_alpha(const json& j, int order) {
    try {
        const auto rows = j.get<std::vector<std::vector<std::string>>>();
        if (static_cast<int>(rows.size()) != order) throw TwistError("alpha must have " + std::to_string(order) + " rows");
        std::vector<Phase> alpha;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(rows[r].size()) != order) throw TwistError("alpha row " + std::to_string(r) + " has wrong length");
            for (const auto& s : rows[r]) alpha.push_back(Phase::parse(s));
        }
        return alpha;
    } catch (const json::exception& e) {
        throw TwistError(std::string("malformed alpha: ") + e.what());
    }
}

json twist_to_json(const Twist& t) {
    json rows = json::array();
    for (int g = 0; g < t.order; ++g) {
        json row = json::array();
        for (int h = 0; h < t.order; ++h) row.push_back(t.a(g, h).str());
        rows.push_back(std::move(row));
    }
    return {{"phi", t.phi}, {"alpha", std::move(rows)}};
}

json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

json to_json(const ClassificationReport& r) {
    json mods = json::array();
    for (const auto& s : r.supermodules) {
        json m;
        m["dims"] = {s.dim_even, s.dim_odd};
        m["q"] = s.q;
        m["reality"] = s.reality == Reality::Real ? "real" : "complex";
        m["u_sign"] = opt(s.u_sign);
        m["fs_type"] = s.fs_type ? json(*s.fs_type > 0 ? "R" : "H") : json(nullptr);
        m["S_ordinary"] = opt(s.s_ordinary);
        m["eta_gow"] = opt(s.eta_gow);
        m["S_super"] = s.s_super ? json(s.s_super->symbolic()) : json(nullptr);
        m["S_super_raw"] = complex_json(s.s_super_raw);
        if (s.reality == Reality::Complex)
            m["bw_class"] = "complex";
        else
            m["bw_class"] = opt(s.bw);
        m["checks"] = {{"theorem", verdict(s.checks.theorem)},
                       {"gow_identity", verdict(s.checks.gow_identity)},
                       {"rewrite_identity", verdict(s.checks.rewrite_identity)},
                       {"grading", verdict(s.checks.grading)},
                       {"q_type", verdict(s.checks.q_type)}};
        m["failures"] = s.failures;
        mods.push_back(std::move(m));
    }
    return {{"order", r.order},
            {"phi", r.phi},
            {"ring", r.ring == CoefficientRing::Z2 ? "Z2" : "Q/Z"},
            {"supermodules", std::move(mods)},
            {"dimension_sum", r.dimension_sum},
            {"dimension_check", verdict(r.dimension_check)},
            {"failures", r.failures},
            {"verdict", r.pass() ? "PASS" : "FAIL"}};
}

ClassificationReport classification_from_json(const json& j) {
    ClassificationReport r;
    r.order = j.at("order").get<int>();
    r.phi = j.at("phi").get<std::vector<int>>();
    r.ring = j.at("ring").get<std::string>() == "Z2" ? CoefficientRing::Z2 : CoefficientRing::QZ;
    r.dimension_sum = j.at("dimension_sum").get<double>();
    r.dimension_check = j.at("dimension_check").get<std::string>() == "pass";
    r.failures = j.at("failures").get<std::vector<std::string>>();
    for (const auto& m : j.at("supermodules")) {
        SupermoduleReport s;
        s.dim_even = m.at("dims").at(0).get<int>();
        s.dim_odd = m.at("dims").at(1).get<int>();
        s.q = m.at("q").get<int>();
        s.reality = m.at("reality").get<std::string>() == "real" ? Reality::Real : Reality::Complex;
        s.u_sign = opt_from<int>(m.at("u_sign"));
        if (!m.at("fs_type").is_null()) s.fs_type = m.at("fs_type").get<std::string>() == "R" ? 1 : -1;
        s.s_ordinary = opt_from<int>(m.at("S_ordinary"));
        s.eta_gow = opt_from<int>(m.at("eta_gow"));
        s.s_super_raw = complex_from(m.at("S_super_raw"));
        if (!m.at("S_super").is_null()) {
            SuperIndicator ind{s.s_super_raw, std::nullopt};
            const auto sym = m.at("S_super").get<std::string>();
            if (sym != "0") {
                // "e^{2·pi·i·k/8}": k is the digit run just before the slash.
                const auto slash = sym.rfind('/');
                if (slash == std::string::npos) throw InputError("malformed S_super '" + sym + "'");
                auto start = slash;
                while (start > 0 && std::isdigit(static_cast<unsigned char>(sym[start - 1]))) --start;
                if (start == slash) throw InputError("malformed S_super '" + sym + "'");
                ind.eighth_root = std::stoi(sym.substr(start, slash - start));
            }
            s.s_super = ind;
        }
        if (m.at("bw_class").is_number()) s.bw = m.at("bw_class").get<int>();
        const auto& c = m.at("checks");
        s.checks.theorem = c.at("theorem") == "pass";
        s.checks.gow_identity = c.at("gow_identity") == "pass";
        s.checks.rewrite_identity = c.at("rewrite_identity") == "pass";
        s.checks.grading = c.at("grading") == "pass";
        s.checks.q_type = c.at("q_type") == "pass";
        s.failures = m.at("failures").get<std::vector<std::string>>();
        r.supermodules.push_back(std::move(s));
    }
    return r;
}

json to_json(const PartitionReport& r) {
    json terms = json::array();
    for (auto t : r.rhs_terms) terms.push_back(complex_json(t));
    return {{"family", r.family},
            {"surface", r.surface},
            {"structure", opt(r.structure)},
            {"lhs", complex_json(r.lhs)},
            {"rhs", complex_json(r.rhs)},
            {"abs_diff", r.abs_diff},
            {"hom_count", r.hom_count},
            {"invariant", opt(r.invariant)},
            {"rhs_terms", std::move(terms)},
            {"verdict", r.pass ? "PASS" : "FAIL"}};
}

PartitionReport partition_from_json(const json& j) {
    PartitionReport r;
    r.family = j.at("family").get<std::string>();
    r.surface = j.at("surface").get<std::string>();
    r.structure = opt_from<std::string>(j.at("structure"));
    r.lhs = complex_from(j.at("lhs"));
    r.rhs = complex_from(j.at("rhs"));
    r.abs_diff = j.at("abs_diff").get<double>();
    r.hom_count = j.at("hom_count").get<unsigned long long>();
    r.invariant = opt_from<int>(j.at("invariant"));
    for (const auto& t : j.at("rhs_terms")) r.rhs_terms.push_back(complex_from(t));
    r.pass = j.at("verdict").get<std::string>() == "PASS";
    return r;
}

} // namespace superfs::io
