// ehrhart: count lattice points, compute Ehrhart polynomials and run the
// coefficient, root and reflexivity checks from the command line.
//
// Exit status: 0 success, 1 a check reported a failing verdict, 2 bad input.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ehrhart/counting.hpp"
#include "ehrhart/ehrhart.hpp"
#include "ehrhart/io.hpp"
#include "ehrhart/reflexive.hpp"
#include "ehrhart/reproduce.hpp"
#include "ehrhart/roots.hpp"

namespace {

using namespace ehrhart;

constexpr int kOk = 0;
constexpr int kVerdictFailed = 1;
constexpr int kUsage = 2;

enum class Format { Json, Csv, Plain };

struct Request {
    std::string family;
    std::string input;
    unsigned long k = 1;
    std::string a;
    double tol = 1e-7;
    bool box_scan = false;
    std::string max_box_points = "100000000";
    unsigned threads = 1;
    Format format = Format::Json;
    std::uint64_t seed = ReproductionOptions{}.seed;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

unsigned default_threads() {
    if (const char* env = std::getenv("EHRHART_THREADS")) {
        try {
            const unsigned long value = std::stoul(env);
            if (value >= 1 && value <= 1024) return static_cast<unsigned>(value);
        } catch (const std::exception&) {
        }
        std::cerr << "ignoring EHRHART_THREADS='" << env << "'\n";
    }
    return 1;
}

LatticePolytope load_polytope(const Request& req) {
    if (req.family.empty() == req.input.empty()) {
        throw UsageError("exactly one of --family or --input is required");
    }
    if (!req.family.empty()) return parse_family_spec(req.family);
    std::ifstream in(req.input);
    if (!in) throw UsageError("cannot open '" + req.input + "'");
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), req.input);
    }
    return polytope_from_json(doc);
}

ScanOptions scan_options(const Request& req) {
    ScanOptions scan;
    scan.threads = req.threads;
    try {
        scan.max_box_points = parse_integer(req.max_box_points);
    } catch (const std::invalid_argument&) {
        throw UsageError("--max-box-points must be a natural number");
    }
    return scan;
}

Counter counter_for(const LatticePolytope& p, const Request& req) {
    return req.box_scan ? box_scan_counter(p, scan_options(req)) : family_counter(p, scan_options(req));
}

Rational a_value(const Request& req) {
    Rational a;
    try {
        a = Rational::parse(req.a);
    } catch (const std::exception&) {
        throw UsageError("--a must be a positive rational such as 2 or 3/2");
    }
    if (a.sign() <= 0) throw UsageError("--a must be positive");
    return a;
}

void emit(const Json& doc, Format format, const std::string& plain) {
    if (format == Format::Json) {
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << plain;
    }
}

// ---- subcommands ----------------------------------------------------------

int cmd_polytope(const Request& req) {
    std::cout << polytope_to_json(load_polytope(req)).dump(2) << '\n';
    return kOk;
}

int cmd_count(const Request& req) {
    const auto p = load_polytope(req);
    const Integer count = counter_for(p, req)(req.k);
    std::ostringstream plain;
    if (req.format == Format::Csv) plain << "k,count\n" << req.k << ',' << count << '\n';
    else plain << count << '\n';
    emit(Json{{"dimension", p.dimension()}, {"k", req.k}, {"count", count.get_str()}}, req.format, plain.str());
    return kOk;
}

std::string ehrhart_plain(const EhrhartPolynomial& ehr, Format format) {
    std::ostringstream out;
    if (format == Format::Csv) {
        out << "index,coefficient\n";
        for (std::size_t i = 0; i <= ehr.dimension(); ++i) out << i << ',' << ehr.coefficient(i) << '\n';
    } else {
        out << "LE(kP) = " << ehr.polynomial() << '\n';
    }
    return out.str();
}

int cmd_ehrhart(const Request& req) {
    const auto p = load_polytope(req);
    const auto ehr = ehrhart_of(p, counter_for(p, req));
    emit(ehrhart_to_json(ehr), req.format, ehrhart_plain(ehr, req.format));
    return kOk;
}

int cmd_wills(const Request& req) {
    const auto p = load_polytope(req);
    const auto verdict = wills_check(ehrhart_of(p, counter_for(p, req)));
    std::ostringstream plain;
    if (req.format == Format::Csv) plain << "index,coefficient,bound,holds\n";
    for (const auto& e : verdict.per_index) {
        if (req.format == Format::Csv) {
            plain << e.i << ',' << e.coefficient << ',' << e.bound << ',' << (e.holds ? "true" : "false") << '\n';
        } else {
            plain << "lE_" << e.i << " = " << e.coefficient << (e.holds ? " <= " : " > ") << e.bound
                  << (e.holds ? "" : "  VIOLATED") << '\n';
        }
    }
    if (req.format == Format::Plain) plain << (verdict.overall ? "all bounds hold\n" : "bounds violated\n");
    emit(wills_to_json(verdict), req.format, plain.str());
    return verdict.overall ? kOk : kVerdictFailed;
}

struct RootLineSuite {
    bool hypothesis_parity = false;
    bool hypothesis_roots = false;
    bool all_hold = true;
    Json json;
    std::string plain;
};

RootLineSuite run_root_line_suite(const EhrhartPolynomial& ehr, const RootSet& rs, const Rational& a, const Request& req) {
    RootLineSuite suite;
    const std::size_t n = ehr.dimension();
    suite.hypothesis_parity = parity_necessary_check(ehr, a);
    suite.hypothesis_roots = common_real_part(rs, Rational(1) / a, req.tol);

    std::ostringstream plain;
    if (req.format == Format::Csv) plain << "check,s,t,lhs,rhs,holds,equality\n";
    Json ratios = Json::array();
    auto record = [&](const std::string& name, long s, long t, const InequalityVerdict& v) {
        suite.all_hold = suite.all_hold && v.holds;
        if (req.format == Format::Csv) {
            plain << name << ',' << s << ',' << t << ',' << v.lhs << ',' << v.rhs << ','
                  << (v.holds ? "true" : "false") << ',' << (v.is_equality ? "true" : "false") << '\n';
        } else {
            plain << name;
            if (s >= 0) plain << " (" << s << "," << t << ")";
            plain << ": " << v.lhs << (v.is_equality ? " = " : v.holds ? " < " : " > ") << v.rhs << '\n';
        }
    };
    for (std::size_t t = 1; t <= n; ++t) {
        for (std::size_t s = 0; s < t; ++s) {
            if (ehr.coefficient(s).is_zero()) continue;
            const auto v = root_line_ratio_check(ehr, a, s, t);
            record("ratio", static_cast<long>(s), static_cast<long>(t), v);
            Json row = inequality_to_json(v);
            row["s"] = s;
            row["t"] = t;
            ratios.push_back(std::move(row));
        }
    }
    const auto volume = root_line_volume_bound(ehr, a);
    record("volume", -1, -1, volume);
    suite.json = Json{{"a", a.to_string()},
                      {"hypothesis", {{"parity", suite.hypothesis_parity}, {"roots", suite.hypothesis_roots}}},
                      {"ratio", std::move(ratios)},
                      {"volume_bound", inequality_to_json(volume)}};
    if (n >= 2) {
        const auto upper = root_line_upper_bound(ehr, a);
        record("upper", -1, -1, upper);
        Json up = inequality_to_json(upper);
        up["nonreal_pairs"] = nonreal_pair_count(rs, req.tol);
        suite.json["upper_bound"] = std::move(up);
    }
    if (req.format == Format::Plain) {
        plain << "hypothesis (all roots on Re = -1/a): parity " << (suite.hypothesis_parity ? "yes" : "no")
              << ", roots " << (suite.hypothesis_roots ? "yes" : "no") << '\n';
    }
    suite.plain = plain.str();
    return suite;
}

int cmd_root_line(const Request& req) {
    if (req.a.empty()) throw UsageError("thm31 requires --a");
    const Rational a = a_value(req);
    const auto p = load_polytope(req);
    const auto ehr = ehrhart_of(p, counter_for(p, req));
    const auto rs = find_roots(ehr.polynomial());
    auto suite = run_root_line_suite(ehr, rs, a, req);
    emit(suite.json, req.format, suite.plain);
    const bool hypothesis = suite.hypothesis_parity && suite.hypothesis_roots;
    return hypothesis && suite.all_hold ? kOk : kVerdictFailed;
}

int cmd_roots(const Request& req) {
    const auto p = load_polytope(req);
    const auto ehr = ehrhart_of(p, counter_for(p, req));
    const auto rs = find_roots(ehr.polynomial());
    const bool braun = braun_disc_check(rs, ehr.dimension());
    const auto common = detect_common_real_part(rs, req.tol);

    Json doc{{"ehrhart", ehrhart_to_json(ehr)},
             {"roots", roots_to_json(rs)},
             {"braun_disc", braun},
             {"common_real_part", common ? Json(format_decimal(*common)) : Json(nullptr)},
             {"nonreal_pairs", nonreal_pair_count(rs, req.tol)},
             {"gamma_sum_identity", gamma_sum_identity_check(ehr)}};
    std::ostringstream plain;
    if (req.format == Format::Csv) {
        plain << "re,im\n";
        for (const auto& z : rs.roots) plain << format_decimal(z.real()) << ',' << format_decimal(z.imag()) << '\n';
    } else {
        for (const auto& z : rs.roots) {
            plain << format_decimal(z.real()) << (z.imag() < 0 ? " - " : " + ")
                  << format_decimal(std::abs(z.imag())) << "i\n";
        }
        plain << "residual bound " << rs.residual_bound << "; Braun disc " << (braun ? "ok" : "VIOLATED") << '\n';
        if (common) plain << "common real part " << format_decimal(*common) << '\n';
    }

    bool ok = braun;
    if (!req.a.empty()) {
        const auto suite = run_root_line_suite(ehr, rs, a_value(req), req);
        doc["thm31"] = suite.json;
        if (req.format == Format::Plain) plain << suite.plain;
        ok = ok && suite.hypothesis_parity && suite.hypothesis_roots && suite.all_hold;
    }
    emit(doc, req.format, plain.str());
    return ok ? kOk : kVerdictFailed;
}

int cmd_reflexive(const Request& req) {
    const auto p = load_polytope(req);
    const auto ehr = ehrhart_of(p, counter_for(p, req));
    const auto report = reflexivity_equivalence(p, ehr);
    const auto rs = find_roots(ehr.polynomial());
    const auto cor = root_line_consequence(p, ehr, rs, req.tol);
    Json doc = reflexivity_to_json(report);
    doc["corollary"] = Json{{"hypothesis", cor.hypothesis}, {"consequence", cor.consequence}, {"holds", cor.holds}};

    std::ostringstream plain;
    if (req.format == Format::Csv) {
        plain << "field,value\n";
        for (const auto& [key, value] : doc.items()) {
            if (!value.is_object()) plain << key << ',' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
        }
        plain << "corollary_holds," << (cor.holds ? "true" : "false") << '\n';
    } else {
        plain << "index l = " << report.index_l << '\n'
              << "l-reflexive by definition: " << (report.def_check ? "yes" : "no") << '\n'
              << "l P* lattice polytope:     " << (report.polar_check ? "yes" : "no") << '\n'
              << "lE_{n-1} = n/(2l) vol:     " << (report.coefficient_check ? "yes" : "no") << "  ("
              << report.coefficient_lhs << " vs " << report.coefficient_rhs << ")\n"
              << "agree: " << (report.agree ? "yes" : "NO") << '\n';
    }
    emit(doc, req.format, plain.str());
    return report.agree && cor.holds ? kOk : kVerdictFailed;
}

int cmd_reproduce(const Request& req) {
    ReproductionOptions options;
    options.threads = req.threads;
    options.seed = req.seed;
    options.root_tol = req.tol;
    const auto rows = reproduce_results(options);
    bool all = true;
    Json list = Json::array();
    std::ostringstream plain;
    if (req.format == Format::Csv) plain << "id,passed,seconds,title,detail\n";
    for (const auto& r : rows) {
        all = all && r.passed;
        list.push_back(Json{{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
        if (req.format == Format::Csv) {
            plain << r.id << ',' << (r.passed ? "pass" : "fail") << ',' << std::fixed << std::setprecision(3)
                  << r.seconds << ",\"" << r.title << "\",\"" << r.detail << "\"\n";
        } else {
            plain << std::left << std::setw(4) << r.id << (r.passed ? "PASS  " : "FAIL  ") << r.title << '\n'
                  << "      " << r.detail << '\n';
        }
    }
    emit(Json{{"rows", std::move(list)}, {"all_passed", all}}, req.format, plain.str());
    return all ? kOk : kVerdictFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Ehrhart polynomials, lattice point counts and coefficient checks"};
    app.require_subcommand(1);
    Request req;
    req.threads = default_threads();

    std::string format_name = "json";

    auto add_common = [&](CLI::App* sub, bool needs_polytope) {
        if (needs_polytope) {
            sub->add_option("--family", req.family, "family spec, e.g. pn:7 or product(pn:7,cube:2)");
            sub->add_option("--input", req.input, "polytope JSON file");
            sub->add_flag("--box-scan", req.box_scan, "count by brute-force box scan");
            sub->add_option("--max-box-points", req.max_box_points, "largest box a scan may visit")
                ->capture_default_str();
        }
        sub->add_option("--threads", req.threads, "box scan workers (default EHRHART_THREADS or 1)");
        sub->add_option("--format", format_name, "output format")
            ->check(CLI::IsMember({"json", "csv", "plain"}))
            ->capture_default_str();
        sub->add_option("--tol", req.tol, "root real-part tolerance")->capture_default_str();
    };

    auto* polytope = app.add_subcommand("polytope", "print the polytope as JSON");
    add_common(polytope, true);
    auto* count = app.add_subcommand("count", "number of lattice points in kP");
    add_common(count, true);
    count->add_option("-k,--dilation", req.k, "dilation factor")->capture_default_str();
    auto* ehr = app.add_subcommand("ehrhart", "Ehrhart polynomial by interpolation");
    add_common(ehr, true);
    auto* roots = app.add_subcommand("roots", "roots of the Ehrhart polynomial");
    add_common(roots, true);
    roots->add_option("--a", req.a, "also test the common real part -1/a and its inequalities");
    auto* wills = app.add_subcommand("wills", "compare coefficients with those of the cube");
    add_common(wills, true);
    auto* thm31 = app.add_subcommand("thm31", "coefficient inequalities for roots on Re = -1/a");
    add_common(thm31, true);
    thm31->add_option("--a", req.a, "positive rational a")->required();
    auto* reflexive = app.add_subcommand("reflexive", "l-reflexivity characterization");
    add_common(reflexive, true);
    auto* reproduce = app.add_subcommand("reproduce-paper", "recompute every published value and verdict");
    add_common(reproduce, false);
    reproduce->add_option("--seed", req.seed, "seed for the random polygon sample")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    req.format = format_name == "csv" ? Format::Csv : format_name == "plain" ? Format::Plain : Format::Json;

    try {
        if (*polytope) return cmd_polytope(req);
        if (*count) return cmd_count(req);
        if (*ehr) return cmd_ehrhart(req);
        if (*roots) return cmd_roots(req);
        if (*wills) return cmd_wills(req);
        if (*thm31) return cmd_root_line(req);
        if (*reflexive) return cmd_reflexive(req);
        if (*reproduce) return cmd_reproduce(req);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const HypothesisError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
