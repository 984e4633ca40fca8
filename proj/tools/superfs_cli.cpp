// superfs: classify twisted group superalgebras and check partition-function
// identities from the command line.
//
// Exit status: 0 when every check passes, 1 on a mathematical failure,
// 2 on malformed input.

#include "superfs/catalog.hpp"
#include "superfs/error.hpp"
#include "superfs/gauge.hpp"
#include "superfs/report_json.hpp"
#include "superfs/superalg.hpp"
#include "superfs/surfaces.hpp"
#include "superfs/twist.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace superfs;
using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct Inputs {
    std::string group_path;
    std::string phi = "zero";
    std::string alpha = "zero";
    int clifford = -1;
    std::uint64_t seed = 1;
    int max_order = 96;
    double snap_tol = 1e-6;
    bool json = false;
};

struct Loaded {
    std::string label;
    TwistedGroup theory;
    DecomposeOptions decompose;
};

std::string fmt(double x) {
    if (std::abs(x) < 5e-13) x = 0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

std::string fmt(Complex z) {
    if (std::abs(z.imag()) < 5e-13) return fmt(z.real());
    if (std::abs(z.real()) < 5e-13) return fmt(z.imag()) + "i";
    std::string im = fmt(z.imag());
    if (im[0] != '-') im = "+" + im;
    return fmt(z.real()) + im + "i";
}

// Left-justifies to `width` display columns; counts UTF-8 code points.
std::string pad(const std::string& text, std::size_t width) {
    std::size_t cols = 0;
    for (unsigned char c : text) cols += (c & 0xC0) != 0x80;
    return cols >= width ? text + " " : text + std::string(width - cols, ' ');
}

std::string join(const std::vector<int>& v, const char* sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
    return out;
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw InputError(std::string("bad ") + what + " entry '" + item + "'");
        }
    }
    return out;
}

std::vector<int> resolve_phi(const std::string& arg, const Group& g) {
    if (arg == "zero") return std::vector<int>(g.order(), 0);
    if (arg == "id") {
        auto homs = homomorphisms_to_z2(g);
        if (homs.size() != 2)
            throw TwistError("--phi id needs a group with exactly one nontrivial map to Z2; this one has " +
                             std::to_string(homs.size() - 1));
        return homs[1];
    }
    const json j = io::read_file(arg);
    return io::parse_phi(j.is_object() ? j.at("phi") : j, g.order());
}

std::vector<Phase> resolve_alpha(const std::string& arg, const Group& g) {
    if (arg == "zero") return std::vector<Phase>(static_cast<std::size_t>(g.order()) * g.order());
    const json j = io::read_file(arg);
    return io::parse_alpha(j.is_object() ? j.at("alpha") : j, g.order());
}

Group resolve_group(const Inputs& in) {
    if (in.group_path.empty()) throw InputError("one of --group or --clifford is required");
    return io::parse_group(io::read_file(in.group_path));
}

Loaded load(const Inputs& in) {
    Loaded out;
    out.decompose.seed = in.seed;
    out.decompose.max_order = in.max_order;
    out.decompose.tol.snap = in.snap_tol;
    if (in.clifford >= 0) {
        if (!in.group_path.empty() || in.phi != "zero" || in.alpha != "zero")
            throw InputError("--clifford cannot be combined with --group, --phi or --alpha");
        if (in.clifford > 12) throw InputError("--clifford is limited to n <= 12");
        out.theory = clifford_twist(in.clifford);
        out.label = "Cl(" + std::to_string(in.clifford) + ")";
        out.decompose.max_order = std::max(out.decompose.max_order, out.theory.group.order());
        return out;
    }
    Group g = resolve_group(in);
    Twist t = validate_twist(g, Twist{g.order(), resolve_phi(in.phi, g), resolve_alpha(in.alpha, g)}).twist;
    out.theory = {std::move(g), std::move(t)};
    out.label = in.group_path;
    return out;
}

void add_input_options(CLI::App* cmd, Inputs& in) {
    cmd->add_option("--group", in.group_path, "group file (JSON multiplication table or permutation generators)");
    cmd->add_option("--phi", in.phi, "grading: twist/phi file, 'id' or 'zero'");
    cmd->add_option("--alpha", in.alpha, "2-cocycle: twist/alpha file or 'zero'");
    cmd->add_option("--clifford", in.clifford, "use the Clifford twist on (Z2)^N");
    cmd->add_option("--seed", in.seed, "seed for the randomized decomposition");
    cmd->add_option("--max-order", in.max_order, "largest group order the decomposition accepts");
    cmd->add_option("--snap-tol", in.snap_tol, "tolerance for snapping indicators to exact values");
    cmd->add_flag("--json", in.json, "machine-readable output");
}

std::string bw_text(const SupermoduleReport& s) {
    if (s.reality == Reality::Complex) return "complex";
    return s.bw ? std::to_string(*s.bw) : "?";
}

std::string opt_sign(const std::optional<int>& v) {
    if (!v) return "-";
    return *v > 0 ? "+1" : (*v < 0 ? "-1" : "0");
}

void print_classification(const std::string& label, const ClassificationReport& r) {
    std::printf("%s: |G| = %d, phi = [%s], alpha %s-valued\n", label.c_str(), r.order, join(r.phi).c_str(),
                r.ring == CoefficientRing::Z2 ? "Z2" : "Q/Z");
    std::printf("%3s  %-7s %2s  %-8s %3s %4s  %s%s%-8s %s\n", "#", "dims", "q", "reality", "S", "eta",
                pad("S_super", 17).c_str(), pad("raw", 28).c_str(), "BW", "checks");
    int idx = 0;
    for (const auto& s : r.supermodules) {
        const std::string dims = std::to_string(s.dim_even) + "|" + std::to_string(s.dim_odd);
        const std::string sym = s.s_super ? s.s_super->symbolic() : "?";
        std::printf("%3d  %-7s %2d  %-8s %3s %4s  %s%s%-8s %s\n", idx++, dims.c_str(), s.q,
                    s.reality == Reality::Real ? "real" : "complex", opt_sign(s.s_ordinary).c_str(),
                    opt_sign(s.eta_gow).c_str(), pad(sym, 17).c_str(), pad(fmt(s.s_super_raw), 28).c_str(), bw_text(s).c_str(),
                    s.pass() ? "PASS" : "FAIL");
        for (const auto& f : s.failures) std::printf("       ! %s\n", f.c_str());
    }
    std::printf("sum dim^2 / 2^q = %s (|G| = %d): %s\n", fmt(r.dimension_sum).c_str(), r.order,
                r.dimension_check ? "PASS" : "FAIL");
    for (const auto& f : r.failures) std::printf("! %s\n", f.c_str());
    std::printf("%s\n", r.pass() ? "PASS" : "FAIL");
}

int cmd_classify(const Inputs& in) {
    const Loaded l = load(in);
    const TwistedGroupAlgebra algebra(l.theory.group, l.theory.twist);
    const auto report = verify_main_theorem(algebra, l.decompose);
    if (in.json)
        std::cout << io::to_json(report).dump(2) << "\n";
    else
        print_classification(l.label, report);
    return report.pass() ? 0 : kExitFail;
}

std::string class_list(const ClassificationReport& r) {
    std::string out = "{";
    for (std::size_t i = 0; i < r.supermodules.size(); ++i) out += (i ? "," : "") + bw_text(r.supermodules[i]);
    return out + "}";
}

int cmd_verify(const Inputs& in, bool sweep_h2, bool sweep_phi) {
    struct Row {
        std::string label;
        TwistedGroup theory;
        DecomposeOptions decompose;
    };
    std::vector<Row> rows;
    if (in.clifford >= 0) {
        if (sweep_h2 || sweep_phi) throw InputError("--sweep-h2 / --sweep-phi need --group");
        for (int n = 1; n <= in.clifford; ++n) {
            Inputs one = in;
            one.clifford = n;
            Loaded l = load(one);
            rows.push_back({l.label, std::move(l.theory), l.decompose});
        }
    } else {
        Inputs base = in;
        Group g = resolve_group(in);
        std::vector<std::vector<int>> phis;
        if (sweep_phi)
            phis = homomorphisms_to_z2(g);
        else
            phis.push_back(resolve_phi(in.phi, g));
        std::vector<std::vector<Phase>> alphas;
        if (sweep_h2)
            alphas = h2_representatives(g);
        else
            alphas.push_back(resolve_alpha(in.alpha, g));
        DecomposeOptions d;
        d.seed = in.seed;
        d.max_order = in.max_order;
        d.tol.snap = in.snap_tol;
        for (std::size_t p = 0; p < phis.size(); ++p)
            for (std::size_t a = 0; a < alphas.size(); ++a) {
                Twist t = validate_twist(g, Twist{g.order(), phis[p], alphas[a]}).twist;
                rows.push_back({"phi#" + std::to_string(p) + " alpha#" + std::to_string(a), {g, std::move(t)}, d});
            }
    }

    bool all = true;
    json out = json::array();
    for (const auto& row : rows) {
        const TwistedGroupAlgebra algebra(row.theory.group, row.theory.twist);
        const auto report = verify_main_theorem(algebra, row.decompose);
        all = all && report.pass();
        if (in.json) {
            out.push_back({{"label", row.label}, {"twist", io::twist_to_json(row.theory.twist)}, {"report", io::to_json(report)}});
            continue;
        }
        std::string values;
        for (std::size_t i = 0; i < report.supermodules.size(); ++i) {
            const auto& s = report.supermodules[i];
            values += (i ? "," : "") + (s.s_super ? s.s_super->symbolic() : std::string("?"));
        }
        const auto odd = std::count(report.phi.begin(), report.phi.end(), 1);
        std::printf("%-16s |G|=%-4d odd=%-4ld S_super {%s}  BW %s  %s\n", row.label.c_str(), report.order, static_cast<long>(odd),
                    values.c_str(), class_list(report).c_str(), report.pass() ? "PASS" : "FAIL");
        for (const auto& s : report.supermodules)
            for (const auto& f : s.failures) std::printf("  ! %s\n", f.c_str());
        for (const auto& f : report.failures) std::printf("  ! %s\n", f.c_str());
    }
    if (in.json)
        std::cout << out.dump(2) << "\n";
    else
        std::printf("%zu rows, %s\n", rows.size(), all ? "all PASS" : "FAIL");
    return all ? 0 : kExitFail;
}

EnumerationOptions enumeration_from_env() {
    EnumerationOptions e;
    if (const char* b = std::getenv("SUPERFS_BUDGET")) {
        try {
            std::size_t used = 0;
            e.budget = std::stoull(b, &used);
            if (used != std::string(b).size()) throw std::invalid_argument(b);
        } catch (const std::logic_error&) {
            throw InputError(std::string("SUPERFS_BUDGET must be a non-negative integer, got '") + b + "'");
        }
    }
    return e;
}

void print_partition(const PartitionReport& r) {
    std::printf("%s on %s%s\n", r.family.c_str(), r.surface.c_str(), r.structure ? (", " + *r.structure).c_str() : "");
    std::printf("  lhs     %s   (%llu homomorphisms)\n", fmt(r.lhs).c_str(), r.hom_count);
    std::printf("  rhs     %s", fmt(r.rhs).c_str());
    if (r.invariant) std::printf("   (%s %d)", r.family == "spin" ? "Arf" : "ABK", *r.invariant);
    std::printf("\n  |diff|  %s\n  %s\n", fmt(r.abs_diff).c_str(), r.pass ? "PASS" : "FAIL");
}

struct PartitionFlags {
    std::string surface;
    std::string family = "oriented";
    std::string spin;
    std::string pin;
    bool all_structures = false;
    double tol = 1e-6;
};

int cmd_partition(const Inputs& in, const PartitionFlags& pf) {
    if (pf.surface.empty()) throw InputError("--surface is required");
    const Surface surface = Surface::parse(pf.surface);
    const Family family = parse_family(pf.family);
    const bool structured = family == Family::Spin || family == Family::PinMinus;
    const int given = (pf.spin.empty() ? 0 : 1) + (pf.pin.empty() ? 0 : 1) + (pf.all_structures ? 1 : 0);
    if (!structured && given) throw InputError("--spin / --pin / --all-structures only apply to the spin and pin- families");
    if (structured && given != 1) throw InputError("the " + pf.family + " family needs exactly one of --spin, --pin, --all-structures");
    if (family == Family::Spin && !pf.pin.empty()) throw InputError("--pin given for the spin family");
    if (family == Family::PinMinus && !pf.spin.empty()) throw InputError("--spin given for the pin- family");

    std::vector<QuadraticRefinement> structures;
    if (!pf.spin.empty()) structures.push_back(make_refinement(surface, RefinementRing::Z2, parse_int_list(pf.spin, "--spin")));
    if (!pf.pin.empty()) structures.push_back(make_refinement(surface, RefinementRing::Z4, parse_int_list(pf.pin, "--pin")));

    const Loaded l = load(in);
    CrosscheckOptions opts;
    opts.enumeration = enumeration_from_env();
    opts.decompose = l.decompose;
    opts.tolerance = pf.tol;
    const TheoryData theory = make_theory(l.theory.group, l.theory.twist, family);
    const auto reports = crosscheck(theory, surface, structures, opts);

    bool all = true;
    json out = json::array();
    for (const auto& r : reports) {
        all = all && r.pass;
        if (in.json)
            out.push_back(io::to_json(r));
        else
            print_partition(r);
    }
    if (in.json) std::cout << (out.size() == 1 ? out[0] : out).dump(2) << "\n";
    return all ? 0 : kExitFail;
}

int cmd_sweep(const Inputs& in, const PartitionFlags& pf) {
    if (pf.surface.empty()) throw InputError("--surface is required");
    if (in.phi != "zero" || in.alpha != "zero") throw InputError("sweep enumerates phi and alpha itself; drop --phi / --alpha");
    const Surface surface = Surface::parse(pf.surface);
    Group g;
    DecomposeOptions d;
    d.seed = in.seed;
    d.max_order = in.max_order;
    d.tol.snap = in.snap_tol;
    if (in.clifford >= 0) {
        if (!in.group_path.empty()) throw InputError("--clifford cannot be combined with --group");
        g = clifford_twist(in.clifford).group;
        d.max_order = std::max(d.max_order, g.order());
    } else {
        g = resolve_group(in);
    }
    const bool orientable = surface.is_orientable();
    const std::vector<Family> families =
        orientable ? std::vector<Family>{Family::Oriented, Family::Spin} : std::vector<Family>{Family::Unoriented, Family::PinMinus};
    const auto phis = homomorphisms_to_z2(g);
    const auto alphas = h2_representatives(g);

    CrosscheckOptions opts;
    opts.enumeration = enumeration_from_env();
    opts.decompose = d;
    opts.tolerance = pf.tol;

    bool all = true;
    std::size_t theories = 0, checks = 0, failures = 0;
    json out = json::array();
    for (Family f : families) {
        const bool graded = f == Family::Spin || f == Family::PinMinus;
        const std::size_t nphi = graded ? phis.size() : 1;
        for (std::size_t p = 0; p < nphi; ++p)
            for (std::size_t a = 0; a < alphas.size(); ++a) {
                const TheoryData theory = make_theory(g, Twist{g.order(), phis[p], alphas[a]}, f);
                const auto reports = crosscheck(theory, surface, {}, opts);
                ++theories;
                std::size_t bad = 0;
                json rj = json::array();
                for (const auto& r : reports) {
                    bad += r.pass ? 0 : 1;
                    if (in.json) rj.push_back(io::to_json(r));
                }
                checks += reports.size();
                failures += bad;
                all = all && bad == 0;
                if (in.json) {
                    out.push_back({{"family", to_string(f)}, {"phi", theory.twist.phi}, {"alpha_index", a}, {"reports", std::move(rj)}});
                    continue;
                }
                std::printf("%-10s phi=[%s] alpha#%-3zu %3zu checks  %s\n", to_string(f).c_str(),
                            join(theory.twist.phi, "").c_str(), a, reports.size(), bad ? "FAIL" : "PASS");
                for (const auto& r : reports)
                    if (!r.pass)
                        std::printf("  ! %s: lhs %s, rhs %s\n", r.structure.value_or("-").c_str(), fmt(r.lhs).c_str(),
                                    fmt(r.rhs).c_str());
            }
    }
    if (in.json)
        std::cout << out.dump(2) << "\n";
    else
        std::printf("%zu theories, %zu checks, %zu failures on %s\n", theories, checks, failures, surface.str().c_str());
    return all ? 0 : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Super Frobenius-Schur indicators and surface partition functions for twisted finite groups"};
    app.require_subcommand(1);

    Inputs in;
    PartitionFlags pf;
    bool sweep_h2 = false, sweep_phi = false;

    auto* classify = app.add_subcommand("classify", "list irreducible supermodules with indicators and BW classes");
    add_input_options(classify, in);

    auto* verify = app.add_subcommand("verify", "check the indicator theorem over a Clifford ladder or twist sweep");
    add_input_options(verify, in);
    verify->add_flag("--sweep-h2", sweep_h2, "iterate over H^2(G, Z2) representatives");
    verify->add_flag("--sweep-phi", sweep_phi, "iterate over all homomorphisms G -> Z2");

    auto add_surface_options = [&](CLI::App* cmd) {
        add_input_options(cmd, in);
        cmd->add_option("--surface", pf.surface, "orientable:G or nonorientable:K");
        cmd->add_option("--tol", pf.tol, "relative tolerance for lhs = rhs");
    };
    auto* partition = app.add_subcommand("partition", "compare both sides of a partition-function identity");
    add_surface_options(partition);
    partition->add_option("--family", pf.family, "oriented, unoriented, spin or pin-");
    partition->add_option("--spin", pf.spin, "spin structure as comma-separated bits");
    partition->add_option("--pin", pf.pin, "pin- structure as comma-separated values in {1,3}");
    partition->add_flag("--all-structures", pf.all_structures, "every spin / pin- structure on the surface");

    auto* sweep = app.add_subcommand("sweep", "crosscheck every family, grading, cocycle class and structure");
    add_surface_options(sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (in.snap_tol < 0 || pf.tol < 0) throw InputError("tolerances must be non-negative");
        if (*classify) return cmd_classify(in);
        if (*verify) return cmd_verify(in, sweep_h2, sweep_phi);
        if (*partition) return cmd_partition(in, pf);
        if (*sweep) return cmd_sweep(in, pf);
    } catch (const InputError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInput;
    } catch (const nlohmann::json::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInput;
    } catch (const Error& e) {
        std::fprintf(stderr, "failure: %s\n", e.what());
        return kExitFail;
    }
    return kExitInput;
}
