#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cyclo/cns.hpp"
#include "cyclo/cyclotomic.hpp"
#include "cyclo/errors.hpp"
#include "cyclo/multind.hpp"

using json = nlohmann::json; // std::map-backed: keys serialize sorted
using namespace cyclo;

namespace {

// All numeric payloads that can outgrow 53 bits are serialized as decimal
// strings; small structural numbers stay native.
json int_str(const Int& v) { return v.get_str(); }

json poly_json(const IntPoly& f) {
    json coeffs = json::array();
    for (const Int& c : f.coeffs()) coeffs.push_back(int_str(c));
    return json{{"coefficients", coeffs},
                {"degree", f.degree()},
                {"pretty", to_string(f)}};
}

json digits_json(const std::vector<Int>& digits) {
    json out = json::array();
    for (const Int& d : digits) out.push_back(int_str(d));
    return out;
}

std::vector<Int> parse_int_list(const std::string& text) {
    std::vector<Int> out;
    std::string item;
    std::istringstream ss(text);
    while (std::getline(ss, item, ',')) {
        // trim blanks around the entry
        const auto a = item.find_first_not_of(" \t");
        const auto b = item.find_last_not_of(" \t");
        if (a == std::string::npos)
            throw InvalidInput("empty entry in integer list '" + text + "'");
        try {
            out.emplace_back(item.substr(a, b - a + 1));
        } catch (const std::invalid_argument&) {
            throw InvalidInput("bad integer '" + item + "' in list");
        }
    }
    return out;
}

std::uint64_t default_max_steps() {
    if (const char* env = std::getenv("CYCLO_MAX_STEPS")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw InvalidInput("CYCLO_MAX_STEPS is not a valid step count");
        }
    }
    return kDefaultMaxSteps;
}

const char* verdict_name(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::Dependent: return "dependent";
        case VerdictKind::NormIndependent: return "norm-independence";
        case VerdictKind::TorsionRuledOut: return "torsion-check";
        case VerdictKind::UnitCase: return "unit-order";
    }
    return "?";
}

json witness_json(const DependenceWitness& w) {
    return json{{"p", w.p}, {"q", w.q}, {"j", w.j}, {"verified", w.verified}};
}

struct CommandOutput {
    json params;
    json results;
    bool pass = true;
    std::vector<std::string> csv; // sweep rows, header first; empty otherwise
};

std::string expansion_status_name(ExpansionStatus s) {
    switch (s) {
        case ExpansionStatus::Terminated: return "terminated";
        case ExpansionStatus::Cycle: return "cycle";
        case ExpansionStatus::BudgetExceeded: return "budget-exceeded";
    }
    return "?";
}

// degree phi(k) polynomials get expensive in memory well before this
constexpr long kMaxOrder = 1'000'000;

void check_order(long k, long lower) {
    if (k < lower)
        throw InvalidInput("k must be >= " + std::to_string(lower));
    if (k > kMaxOrder)
        throw InvalidInput("k must be <= " + std::to_string(kMaxOrder));
}

CommandOutput run_poly(long k) {
    CommandOutput out;
    out.params = json{{"k", k}};
    check_order(k, 1);
    out.results = json{{"phi", poly_json(cyclotomic(static_cast<unsigned long>(k)))},
                       {"euler_phi", euler_phi(static_cast<unsigned long>(k))},
                       {"radical", radical(static_cast<unsigned long>(k))}};
    return out;
}

CommandOutput run_base(long k, long m) {
    CommandOutput out;
    out.params = json{{"k", k}, {"m", m}};
    check_order(k, 3);
    const CnsBasis basis = base_polynomial(k, m);
    out.results = json{{"polynomial", poly_json(basis.P)},
                       {"digit_bound", int_str(basis.digit_bound)},
                       {"phi", euler_phi(static_cast<unsigned long>(k))}};
    return out;
}

CommandOutput run_check_cns(long k, long m, bool exhaustive, long box,
                            std::uint64_t max_steps) {
    CommandOutput out;
    out.params = json{{"k", k}, {"m", m}, {"exhaustive", exhaustive}};
    if (exhaustive) {
        out.params["box"] = box;
        out.params["max_steps"] = max_steps;
    }
    check_order(k, 3);
    const CnsBasis basis = base_polynomial(k, m);
    const CriterionReport criterion = petho_check(basis.P);
    json c{{"monotone_ok", criterion.monotone_ok},
           {"p0_ok", criterion.p0_ok},
           {"no_unit_root_ok", criterion.no_unit_root_ok},
           {"passed", criterion.passed}};
    if (criterion.first_violation) c["first_violation"] = *criterion.first_violation;
    out.results = json{{"criterion", c},
                       {"polynomial", poly_json(basis.P)},
                       {"digit_bound", int_str(basis.digit_bound)}};
    out.pass = criterion.passed;
    if (exhaustive) {
        const VerificationReport v = exhaustive_verify(basis, box, max_steps);
        json vj{{"box_radius", v.box_radius},
                {"tested", v.tested},
                {"all_terminated", v.all_terminated}};
        if (v.counterexample)
            vj["counterexample"] = digits_json(v.counterexample->coeffs());
        out.results["exhaustive"] = vj;
        out.pass = out.pass && v.all_terminated;
    }
    return out;
}

CommandOutput run_encode(long k, long m, const std::string& element,
                         std::uint64_t max_steps) {
    CommandOutput out;
    out.params = json{{"k", k}, {"m", m}, {"element", element},
                      {"max_steps", max_steps}};
    check_order(k, 3);
    const CnsBasis basis = base_polynomial(k, m);
    std::vector<Int> coeffs = parse_int_list(element);
    if (coeffs.size() > static_cast<std::size_t>(basis.P.degree()))
        throw InvalidInput("element has more coefficients than the ring degree");
    const Residue gamma = Residue::from_coeffs(basis.ring, std::move(coeffs));
    const DigitExpansion e = encode(basis, gamma, max_steps);
    out.results = json{{"digits", digits_json(e.digits)},
                       {"status", expansion_status_name(e.status)},
                       {"steps", e.steps}};
    if (e.status == ExpansionStatus::Cycle) {
        out.results["cycle_entry"] = e.cycle_entry;
        out.results["cycle_length"] = e.cycle_length;
    }
    out.pass = e.status == ExpansionStatus::Terminated;
    return out;
}

CommandOutput run_decode(long k, long m, const std::string& digits) {
    CommandOutput out;
    out.params = json{{"k", k}, {"m", m}, {"digits", digits}};
    check_order(k, 3);
    const CnsBasis basis = base_polynomial(k, m);
    const Residue gamma = decode(basis, parse_int_list(digits));
    out.results = json{{"element", digits_json(gamma.coeffs())}};
    return out;
}

CommandOutput run_sweep_theorem1(long phi_max, long m_max, int jobs) {
    CommandOutput out;
    out.params = json{{"phi_max", phi_max}, {"m_max", m_max}};
    const Theorem1Sweep sweep = theorem1_sweep(phi_max, m_max, jobs);
    json failures = json::array();
    out.csv.push_back("k,m,passed,violation");
    for (const SweepEntry& e : sweep.entries) {
        out.csv.push_back(std::to_string(e.k) + "," + std::to_string(e.m) +
                          "," + (e.passed ? "true" : "false") + "," +
                          e.violation);
        if (!e.passed)
            failures.push_back(
                json{{"k", e.k}, {"m", e.m}, {"violation", e.violation}});
    }
    out.results = json{{"pairs", sweep.pairs},
                       {"passes", sweep.passes},
                       {"failures", failures}};
    out.pass = sweep.all_passed;
    return out;
}

CommandOutput run_independence(long k, long m, long n) {
    CommandOutput out;
    out.params = json{{"k", k}, {"m", m}, {"n", n}};
    check_order(k, 3);
    const IndependenceVerdict v = independence_verdict(k, m, n);
    json r{{"norm_m", int_str(v.norm_m)},
           {"norm_n", int_str(v.norm_n)},
           {"outcome", v.dependent() ? "dependent" : "independent"},
           {"detail", v.detail}};
    if (v.dependent()) {
        r["witness"] = witness_json(*v.witness);
    } else {
        r["certificate"] = verdict_name(v.kind);
    }
    if (v.primitive_pair)
        r["primitive_pair"] = json::array({v.primitive_pair->first,
                                           v.primitive_pair->second});
    out.results = r;
    out.pass = !v.dependent();
    return out;
}

CommandOutput run_sweep_independence(long k, long range_max, int jobs) {
    CommandOutput out;
    out.params = json{{"k", k}, {"max", range_max}};
    check_order(k, 3);
    const IndependenceSweep sweep = theorem2_sweep(k, range_max, jobs);
    json dependents = json::array();
    json unexpected = json::array();
    out.csv.push_back("m,n,outcome,p,q,j,verified");
    for (const IndependenceSweepEntry& e : sweep.entries) {
        std::string row = std::to_string(e.m) + "," + std::to_string(e.n) + "," +
                          (e.kind == VerdictKind::Dependent ? "dependent"
                                                            : "independent");
        if (e.witness) {
            row += "," + std::to_string(e.witness->p) + "," +
                   std::to_string(e.witness->q) + "," +
                   std::to_string(e.witness->j) + "," +
                   (e.witness->verified ? "true" : "false");
        } else {
            row += ",,,,";
        }
        out.csv.push_back(row);
        if (e.kind == VerdictKind::Dependent) {
            json d{{"m", e.m}, {"n", e.n}};
            if (e.witness) d["witness"] = witness_json(*e.witness);
            dependents.push_back(d);
        }
    }
    for (const auto& [m, n] : sweep.unexpected)
        unexpected.push_back(json{{"m", m}, {"n", n}});
    out.results = json{{"pairs", sweep.pairs},
                       {"independent", sweep.independent},
                       {"dependent", dependents},
                       {"unexpected", unexpected},
                       {"note", "finite sweep: numerical evidence only for the "
                                "unbounded statements"}};
    out.pass = sweep.pass;
    return out;
}

CommandOutput run_nagell(long x_max, long k_max, long q_max) {
    CommandOutput out;
    out.params = json{{"x_max", x_max}, {"k_max", k_max}, {"q_max", q_max}};
    const auto solutions = nagell_search(x_max, k_max, q_max);
    json list = json::array();
    for (const NagellSolution& s : solutions)
        list.push_back(json{{"x", s.x}, {"y", int_str(s.y)}, {"k", s.k},
                            {"q", s.q}});
    out.results = json{{"solutions", list}, {"count", solutions.size()}};
    return out;
}

CommandOutput run_quartic(long x_max, long q_max) {
    CommandOutput out;
    out.params = json{{"x_max", x_max}, {"q_max", q_max}};
    const auto solutions = quartic_search(x_max, q_max);
    json trivial = json::array();
    json nontrivial = json::array();
    for (const QuarticSolution& s : solutions) {
        json entry{{"x", s.x}, {"y", int_str(s.y)}, {"q", s.q}};
        (s.x == 1 ? trivial : nontrivial).push_back(entry);
    }
    out.results = json{{"trivial_family", trivial},
                       {"nontrivial", nontrivial},
                       {"count", solutions.size()}};
    return out;
}

CommandOutput run_certificates(long q) {
    CommandOutput out;
    out.params = json{{"q", q}};
    const auto polys = pki_polynomials(q);
    const auto [g01, g34] = gcd_certificates(q);
    json ps = json::array();
    for (const IntPoly& p : polys) ps.push_back(to_string(p, "n"));
    const bool g01_ok = g01 == IntPoly{1};
    const bool g34_ok = g34 == IntPoly{0, Int(q)};
    out.results = json{{"p_polynomials", ps},
                       {"gcd_p0_p1", to_string(g01, "n")},
                       {"gcd_p3_p4", to_string(g34, "n")},
                       {"matches_displayed_values", g01_ok && g34_ok}};
    out.pass = g01_ok && g34_ok;
    return out;
}

void print_text(const json& value, const std::string& prefix,
                std::ostream& os) {
    if (value.is_object()) {
        for (const auto& [key, sub] : value.items()) {
            const std::string path = prefix.empty() ? key : prefix + "." + key;
            print_text(sub, path, os);
        }
    } else if (value.is_array()) {
        if (value.empty()) {
            os << prefix << ": []\n";
            return;
        }
        std::size_t i = 0;
        for (const auto& sub : value) {
            print_text(sub, prefix + "[" + std::to_string(i++) + "]", os);
        }
    } else if (value.is_string()) {
        os << prefix << ": " << value.get<std::string>() << "\n";
    } else {
        os << prefix << ": " << value.dump() << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"canonical number systems with cyclotomic bases: "
                 "construction, verification and independence checks"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "output format (csv: sweeps only)")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    int jobs = 1;
    app.add_option("--jobs", jobs, "worker threads for sweep commands")
        ->check(CLI::PositiveNumber);

    long k = 0, m = 0, n = 0, box = 2;
    long phi_max = 0, m_max = 0, range_max = 0;
    long x_max = 0, k_max = 0, q_max = 0, q = 0;
    std::string element, digits;
    std::uint64_t max_steps = 0; // 0 = default/env
    bool exhaustive = false;

    CLI::App* c_poly = app.add_subcommand("poly", "print a cyclotomic polynomial");
    c_poly->add_option("--k", k)->required();

    CLI::App* c_base = app.add_subcommand("base", "construct a radix base");
    c_base->add_option("--k", k)->required();
    c_base->add_option("--m", m)->required();

    CLI::App* c_check = app.add_subcommand("check-cns", "run the radix-system criterion");
    c_check->add_option("--k", k)->required();
    c_check->add_option("--m", m)->required();
    c_check->add_flag("--exhaustive", exhaustive, "also run the box check");
    c_check->add_option("--box", box, "box radius for --exhaustive");
    c_check->add_option("--max-steps", max_steps);

    CLI::App* c_encode = app.add_subcommand("encode", "digit expansion of an element");
    c_encode->add_option("--k", k)->required();
    c_encode->add_option("--m", m)->required();
    c_encode->add_option("--element", element, "coefficients, least significant first")
        ->required();
    c_encode->add_option("--max-steps", max_steps);

    CLI::App* c_decode = app.add_subcommand("decode", "element from a digit string");
    c_decode->add_option("--k", k)->required();
    c_decode->add_option("--m", m)->required();
    c_decode->add_option("--digits", digits, "digits, least significant first")
        ->required();

    CLI::App* c_sweep1 = app.add_subcommand("sweep-theorem1", "criterion sweep over (k, m)");
    c_sweep1->add_option("--phi-max", phi_max)->required();
    c_sweep1->add_option("--m-max", m_max)->required();

    CLI::App* c_ind = app.add_subcommand("independence", "decide multiplicative independence");
    c_ind->add_option("--k", k)->required();
    c_ind->add_option("--m", m)->required();
    c_ind->add_option("--n", n)->required();

    CLI::App* c_sweep2 = app.add_subcommand("sweep-independence", "verdict sweep over pairs");
    c_sweep2->add_option("--k", k)->required();
    c_sweep2->add_option("--max", range_max)->required();

    CLI::App* c_nagell = app.add_subcommand("nagell", "repunit perfect-power search");
    c_nagell->add_option("--x-max", x_max)->required();
    c_nagell->add_option("--k-max", k_max)->required();
    c_nagell->add_option("--q-max", q_max)->required();

    CLI::App* c_quartic = app.add_subcommand("quartic", "X^2 + 3 = 4Y^q search");
    c_quartic->add_option("--x-max", x_max)->required();
    c_quartic->add_option("--q-max", q_max)->required();

    CLI::App* c_cert = app.add_subcommand("certificates", "gcd certificates over Z[n]");
    c_cert->add_option("--q", q)->required();

    // accept the global --format/--jobs after the subcommand name too
    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    const auto started = std::chrono::steady_clock::now();
    try {
        CommandOutput out;
        std::string command;
        if (max_steps == 0) max_steps = default_max_steps();
        if (app.got_subcommand(c_poly)) {
            command = "poly";
            out = run_poly(k);
        } else if (app.got_subcommand(c_base)) {
            command = "base";
            out = run_base(k, m);
        } else if (app.got_subcommand(c_check)) {
            command = "check-cns";
            out = run_check_cns(k, m, exhaustive, box, max_steps);
        } else if (app.got_subcommand(c_encode)) {
            command = "encode";
            out = run_encode(k, m, element, max_steps);
        } else if (app.got_subcommand(c_decode)) {
            command = "decode";
            out = run_decode(k, m, digits);
        } else if (app.got_subcommand(c_sweep1)) {
            command = "sweep-theorem1";
            out = run_sweep_theorem1(phi_max, m_max, jobs);
        } else if (app.got_subcommand(c_ind)) {
            command = "independence";
            out = run_independence(k, m, n);
        } else if (app.got_subcommand(c_sweep2)) {
            command = "sweep-independence";
            out = run_sweep_independence(k, range_max, jobs);
        } else if (app.got_subcommand(c_nagell)) {
            command = "nagell";
            out = run_nagell(x_max, k_max, q_max);
        } else if (app.got_subcommand(c_quartic)) {
            command = "quartic";
            out = run_quartic(x_max, q_max);
        } else if (app.got_subcommand(c_cert)) {
            command = "certificates";
            out = run_certificates(q);
        }

        const auto elapsed =
            std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - started);

        if (format == "csv" && out.csv.empty())
            throw InvalidInput(
                "--format csv is only available for sweep commands");

        if (format == "csv") {
            for (const std::string& row : out.csv) std::cout << row << "\n";
        } else {
            json report{{"command", command},
                        {"params", out.params},
                        {"results", out.results},
                        {"pass", out.pass},
                        {"elapsed_ms", elapsed.count()}};
            if (format == "json") {
                std::cout << report.dump(2) << "\n";
            } else {
                print_text(report, "", std::cout);
            }
        }
        return out.pass ? 0 : 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
