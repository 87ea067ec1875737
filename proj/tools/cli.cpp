#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "ginirep/emd.hpp"
#include "ginirep/errors.hpp"
#include "ginirep/gini.hpp"
#include "ginirep/json.hpp"
#include "ginirep/kostka_foulkes.hpp"

namespace ginirep::cli {

namespace {

using nlohmann::json;

constexpr int kMaxVerifyN = 6;

std::vector<int> parse_ints(const std::string& text, const std::string& flag) {
    std::vector<int> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        const auto first = item.find_first_not_of(" \t");
        const auto last = item.find_last_not_of(" \t");
        item = first == std::string::npos ? "" : item.substr(first, last - first + 1);
        if (!item.empty() && item.front() == '+') item.erase(0, 1);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
            throw InvalidInput(flag + ": cannot parse '" + text + "' as comma-separated integers");
        out.push_back(value);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string spaced(std::span<const int> xs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
    return os.str();
}

std::string degree_text(const std::optional<std::size_t>& d) { return d ? std::to_string(*d) : "none"; }

json degree_json(const std::optional<std::size_t>& d) { return d ? json(*d) : json(nullptr); }

const char* bool_text(bool b) { return b ? "true" : "false"; }

struct Common {
    std::string format = "text";
    bool header = false;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    sub->add_flag("--header", c.header, "Emit a header row for csv output");
}

void emit_json(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

// --- gini -----------------------------------------------------------------

struct GiniArgs {
    Common common;
    std::string lambda;
    std::optional<int> n;
    std::optional<int> k;
};

int cmd_gini(const GiniArgs& a, std::ostream& out) {
    const auto raw = parse_ints(a.lambda, "--lambda");
    const int n = a.n.value_or(static_cast<int>(raw.size()));
    if (n < 1) throw InvalidInput("--n must be positive");
    const Partition lambda = Partition::padded(raw, static_cast<std::size_t>(n));
    int k = 0;
    if (a.k) {
        k = *a.k;
    } else {
        if (lambda.total() % n != 0)
            throw InvalidInput("total " + std::to_string(lambda.total()) + " is not a multiple of n = " +
                               std::to_string(n) + "; pass --k");
        k = static_cast<int>(lambda.total() / n);
    }
    const auto g = gini_general(lambda, n, k);
    const auto b_lambda = weighted_total(lambda);
    const auto b_flat = weighted_total(flat_partition(k, n));

    if (a.common.format == "json") {
        emit_json(out, {{"lambda", lambda}, {"n", n}, {"k", k}, {"gini", g}, {"b_lambda", b_lambda},
                        {"b_flat", b_flat}, {"gini_via_area", gini_via_area(lambda, n, k)}});
    } else if (a.common.format == "csv") {
        if (a.common.header) out << "lambda,n,k,gini,b_lambda,b_flat\n";
        out << spaced(lambda.parts()) << ',' << n << ',' << k << ',' << g << ',' << b_lambda << ',' << b_flat << '\n';
    } else {
        out << g << '\n';
        out << "lambda " << lambda.to_string() << " n " << n << " k " << k << '\n';
        out << "b(lambda) " << b_lambda << " b(flat) " << b_flat << '\n';
    }
    return kOk;
}

// --- lorenz ---------------------------------------------------------------

struct LorenzArgs {
    Common common;
    std::string lambda;
    std::optional<int> n;
};

int cmd_lorenz(const LorenzArgs& a, std::ostream& out) {
    const auto raw = parse_ints(a.lambda, "--lambda");
    const Partition lambda = Partition::padded(raw, static_cast<std::size_t>(a.n.value_or(static_cast<int>(raw.size()))));
    const LorenzCurve curve = lorenz_curve(lambda);
    if (a.common.format == "json") {
        emit_json(out, curve);
    } else if (a.common.format == "csv") {
        out << curve.to_csv(a.common.header);
    } else {
        for (const auto& s : curve.samples()) out << s.j << ' ' << s.value << '\n';
    }
    return kOk;
}

// --- kf -------------------------------------------------------------------

struct KfArgs {
    Common common;
    std::string lambda;
    std::string mu;
    std::string algorithm = "kostant";
};

int cmd_kf(const KfArgs& a, std::ostream& out, std::ostream& err) {
    const auto raw_l = parse_ints(a.lambda, "--lambda");
    const auto raw_m = parse_ints(a.mu, "--mu");
    const std::size_t n = std::max(raw_l.size(), raw_m.size());
    const Partition lambda = Partition::padded(raw_l, n);
    const Partition mu = Partition::padded(raw_m, n);
    if (lambda.total() != mu.total())
        throw InvalidInput("--lambda and --mu have different totals");

    std::optional<QPolynomial> via_kostant;
    std::optional<QPolynomial> via_charge;
    if (a.algorithm != "charge") via_kostant = kostka_foulkes_kostant(lambda, mu);
    if (a.algorithm != "kostant") via_charge = kostka_foulkes_charge(lambda, mu);
    const QPolynomial& poly = via_kostant ? *via_kostant : *via_charge;
    const bool both = via_kostant && via_charge;
    const bool agree = !both || *via_kostant == *via_charge;

    if (a.common.format == "json") {
        json doc{{"lambda", lambda},          {"mu", mu},
                 {"algorithm", a.algorithm}, {"coefficients", poly},
                 {"polynomial", poly.to_string()}, {"degree", degree_json(poly.degree())}};
        if (both) doc["agreement"] = agree;
        emit_json(out, doc);
    } else if (a.common.format == "csv") {
        if (a.common.header) out << "degree,coefficient\n";
        const auto cs = poly.coefficients();
        for (std::size_t d = 0; d < cs.size(); ++d) out << d << ',' << cs[d] << '\n';
    } else {
        out << poly.to_string() << '\n';
        out << "degree " << degree_text(poly.degree()) << '\n';
        if (both) out << "agreement " << bool_text(agree) << '\n';
    }
    if (!agree) {
        err << "kf: kostant route gives " << via_kostant->to_string() << " but charge route gives "
            << via_charge->to_string() << '\n';
        return kCrossCheckFailed;
    }
    return kOk;
}

// --- graded-mult ------------------------------------------------------------

struct GradedArgs {
    Common common;
    std::string alpha;
    std::optional<int> k;
};

void report_text(std::ostream& out, const GradedMultiplicityReport& r) {
    out << "lambda=" << r.lambda.to_string() << " alpha=" << r.alpha.to_string() << " k=" << r.k
        << " m(q)=" << r.polynomial.to_string() << " degree=" << degree_text(r.degree) << " gini=" << r.gini
        << " holds=" << bool_text(r.theorem1_holds) << " routes_agree=" << bool_text(r.routes_agree) << '\n';
}

void report_csv_header(std::ostream& out) {
    out << "lambda,alpha,k,degree,gini,theorem1_holds,routes_agree,coefficients\n";
}

void report_csv(std::ostream& out, const GradedMultiplicityReport& r) {
    const auto cs = r.polynomial.coefficients();
    std::ostringstream coeffs;
    for (std::size_t i = 0; i < cs.size(); ++i) coeffs << (i ? " " : "") << cs[i];
    out << spaced(r.lambda.parts()) << ',' << spaced(r.alpha.entries()) << ',' << r.k << ','
        << (r.degree ? std::to_string(*r.degree) : "") << ',' << r.gini << ',' << bool_text(r.theorem1_holds)
        << ',' << bool_text(r.routes_agree) << ',' << coeffs.str() << '\n';
}

int cmd_graded(const GradedArgs& a, std::ostream& out, std::ostream& err) {
    const IntVector alpha(parse_ints(a.alpha, "--alpha"));
    const int k = a.k.value_or(alpha.size() ? -alpha[alpha.size() - 1] : 0);
    const auto rep = graded_multiplicity_report(alpha, k);

    if (a.common.format == "json") {
        json doc = rep;
        doc["polynomial"] = rep.polynomial.to_string();
        emit_json(out, doc);
    } else if (a.common.format == "csv") {
        if (a.common.header) report_csv_header(out);
        report_csv(out, rep);
    } else {
        out << rep.polynomial.to_string() << '\n';
        out << "degree " << degree_text(rep.degree) << '\n';
        out << "k " << rep.k << " lambda " << rep.lambda.to_string() << '\n';
        out << "gini " << rep.gini << '\n';
        out << "theorem1_holds " << bool_text(rep.theorem1_holds) << '\n';
        out << "routes_agree " << bool_text(rep.routes_agree) << '\n';
    }
    if (!rep.routes_agree) {
        err << "graded-mult: direct alternating sum disagrees with K_{lambda,(k^n)}(q)\n";
        return kCrossCheckFailed;
    }
    return rep.theorem1_holds ? kOk : kVerificationFailed;
}

// --- emd --------------------------------------------------------------------

struct EmdArgs {
    Common common;
    std::string mu;
    std::string lambda;
    bool oracle = false;
    std::size_t max_states = BfsLimits{}.max_states;
};

int cmd_emd(const EmdArgs& a, std::ostream& out, std::ostream& err) {
    const Composition mu(parse_ints(a.mu, "--mu"));
    const Composition lambda(parse_ints(a.lambda, "--lambda"));
    const EmdResult result = emd(mu, lambda);
    std::optional<std::int64_t> bfs;
    if (a.oracle) bfs = emd_bfs_oracle(mu, lambda, {.max_states = a.max_states});
    const bool agree = !bfs || *bfs == result.distance;

    if (a.common.format == "json") {
        json doc = result;
        if (bfs) {
            doc["oracle"] = *bfs;
            doc["agreement"] = agree;
        }
        emit_json(out, doc);
    } else if (a.common.format == "csv") {
        if (a.common.header) out << (bfs ? "distance,oracle\n" : "distance\n");
        out << result.distance;
        if (bfs) out << ',' << *bfs;
        out << '\n';
    } else {
        out << result.distance << '\n';
        if (bfs) out << "oracle " << *bfs << "\nagreement " << bool_text(agree) << '\n';
    }
    if (!agree) {
        err << "emd: symmetric difference gives " << result.distance << " but BFS gives " << *bfs << '\n';
        return kCrossCheckFailed;
    }
    return kOk;
}

// --- verify -----------------------------------------------------------------

struct VerifyArgs {
    Common common;
    int n = 0;
    int k = 0;
    bool parallel = false;
    unsigned workers = 0;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    if (a.n > kMaxVerifyN)
        throw ResourceLimit("verify: n = " + std::to_string(a.n) + " exceeds the supported maximum of " +
                            std::to_string(kMaxVerifyN) + " (the alternating sums have n! terms)");
    VerifyOptions opts;
    if (a.parallel) opts.workers = a.workers ? a.workers : std::max(1u, std::thread::hardware_concurrency());
    const auto reports = verify_theorem1(a.n, a.k, opts);

    std::size_t holds = 0, violations = 0, zeros = 0, mismatches = 0;
    for (const auto& r : reports) {
        if (r.polynomial.is_zero()) ++zeros;
        else if (r.theorem1_holds) ++holds;
        else ++violations;
        if (!r.routes_agree) ++mismatches;
    }

    if (a.common.format == "json") {
        emit_json(out, {{"n", a.n},
                        {"k", a.k},
                        {"records", reports},
                        {"summary",
                         {{"total", reports.size()},
                          {"holds", holds},
                          {"violations", violations},
                          {"zero_polynomials", zeros},
                          {"route_mismatches", mismatches}}}});
    } else if (a.common.format == "csv") {
        if (a.common.header) report_csv_header(out);
        for (const auto& r : reports) report_csv(out, r);
    } else {
        for (const auto& r : reports) report_text(out, r);
        out << "summary: " << reports.size() << " partitions, " << holds << " hold, " << violations
            << " violations, " << zeros << " zero polynomials, " << mismatches << " route mismatches\n";
    }

    if (violations) {
        err << "verify: " << violations << " report(s) with degree != gini\n";
        return kVerificationFailed;
    }
    if (mismatches) {
        err << "verify: " << mismatches << " report(s) where the two routes to m_alpha(q) disagree\n";
        return kCrossCheckFailed;
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Discrete Gini index, Kostka-Foulkes polynomials, graded multiplicities and 1-D EMD"};
    app.name(args.empty() ? "ginirep" : args.front());
    app.require_subcommand(1);

    GiniArgs gini_args;
    auto* gini_cmd = app.add_subcommand("gini", "Generalized discrete Gini index g_{nk,n}(lambda)");
    gini_cmd->add_option("--lambda", gini_args.lambda, "Partition, comma-separated")->required();
    gini_cmd->add_option("--n", gini_args.n, "Number of parts (pads with zeros; default: entries given)");
    gini_cmd->add_option("--k", gini_args.k, "Per-person share (default: total / n)");
    add_common(gini_cmd, gini_args.common);

    LorenzArgs lorenz_args;
    auto* lorenz_cmd = app.add_subcommand("lorenz", "Discrete Lorenz curve samples (j, L(j))");
    lorenz_cmd->add_option("--lambda", lorenz_args.lambda, "Partition, comma-separated")->required();
    lorenz_cmd->add_option("--n", lorenz_args.n, "Number of parts (pads with zeros)");
    add_common(lorenz_cmd, lorenz_args.common);

    KfArgs kf_args;
    auto* kf_cmd = app.add_subcommand("kf", "Kostka-Foulkes polynomial K_{lambda,mu}(q)");
    kf_cmd->add_option("--lambda", kf_args.lambda, "Shape partition")->required();
    kf_cmd->add_option("--mu", kf_args.mu, "Weight partition")->required();
    kf_cmd->add_option("--algorithm", kf_args.algorithm, "kostant, charge or both")
        ->check(CLI::IsMember({"kostant", "charge", "both"}))
        ->capture_default_str();
    add_common(kf_cmd, kf_args.common);

    GradedArgs graded_args;
    auto* graded_cmd = app.add_subcommand("graded-mult", "Graded multiplicity m_alpha(q) and its Gini check");
    graded_cmd->add_option("--alpha", graded_args.alpha, "Weakly decreasing zero-sum weight")->required();
    graded_cmd->add_option("--k", graded_args.k, "Shift k >= |alpha_n| (default: |alpha_n|)");
    add_common(graded_cmd, graded_args.common);

    EmdArgs emd_args;
    auto* emd_cmd = app.add_subcommand("emd", "One-dimensional earth mover's distance");
    emd_cmd->add_option("--mu", emd_args.mu, "Composition")->required();
    emd_cmd->add_option("--lambda", emd_args.lambda, "Composition")->required();
    emd_cmd->add_flag("--oracle", emd_args.oracle, "Cross-check with breadth-first search");
    emd_cmd->add_option("--max-states", emd_args.max_states, "State limit for --oracle")->capture_default_str();
    add_common(emd_cmd, emd_args.common);

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "Check deg m_alpha(q) = g_{nk,n}(lambda) over all lambda");
    verify_cmd->add_option("--n", verify_args.n, "Number of parts (2..6)")->required();
    verify_cmd->add_option("--k", verify_args.k, "Per-person share (>= 1)")->required();
    verify_cmd->add_flag("--parallel", verify_args.parallel, "Evaluate partitions on several threads");
    verify_cmd->add_option("--workers", verify_args.workers, "Thread count for --parallel (default: all cores)");
    add_common(verify_cmd, verify_args.common);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    if (args.empty()) argv.push_back("ginirep");
    for (const auto& s : args) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kInputError;
    }

    try {
        if (*gini_cmd) return cmd_gini(gini_args, out);
        if (*lorenz_cmd) return cmd_lorenz(lorenz_args, out);
        if (*kf_cmd) return cmd_kf(kf_args, out, err);
        if (*graded_cmd) return cmd_graded(graded_args, out, err);
        if (*emd_cmd) return cmd_emd(emd_args, out, err);
        if (*verify_cmd) return cmd_verify(verify_args, out, err);
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const ResourceLimit& e) {
        err << "resource limit: " << e.what() << '\n';
        return kInputError;
    } catch (const OverflowError& e) {
        err << "overflow: " << e.what() << '\n';
        return kCrossCheckFailed;
    }
    return kInputError;
}

}  // namespace ginirep::cli
