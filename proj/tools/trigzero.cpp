// trigzero: count real zeros of trigonometric polynomials, check the
// reversal inequality, print sign-change certificates and run Monte Carlo
// experiments.
//
// Exit codes: 0 ok, 1 parse or validation error, 2 inequality violation,
// 3 numerically ambiguous count.

#include "CLI11.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "trigzero/trigzero.hpp"

namespace {

using namespace trigzero;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_violation = 2;
constexpr int exit_ambiguous = 3;

struct Options {
    std::string coeffs;
    std::string file;
    std::string kind = "cosine";
    std::string X = "0";
    std::string method = "auto";
    double tol = default_tolerance;
    std::string spec;
    std::uint64_t seed = 1;
    long n = 1000;
    std::string out;
    std::string format;
    std::string Ks;
    std::string ps;
    int length = 9;
    bool exhaustive = false;
};

/// Output text and the exit code to return after writing it.
struct Result {
    std::string text;
    int code = exit_ok;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CoeffVector load_coeffs(const Options& o) {
    if (o.coeffs.empty() == o.file.empty()) throw ParseError("give exactly one of --coeffs or --file");
    if (!o.coeffs.empty()) return CoeffVector::parse(o.coeffs);
    std::string text;
    for (char c : read_file(o.file))
        if (!std::isspace(static_cast<unsigned char>(c))) text += c;
    return CoeffVector::parse(text);
}

double parse_X(const std::string& text) {
    std::string t;
    for (char c : text) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (t == "inf" || t == "+inf" || t == "infinity" || t == "+infinity") return std::numeric_limits<double>::infinity();
    if (t == "-inf" || t == "-infinity") return -std::numeric_limits<double>::infinity();
    return parse_rational(text).get_d();
}

Kind parse_kind(const std::string& s) {
    if (s == "cosine") return Kind::cosine;
    if (s == "sine") return Kind::sine;
    if (s == "mixed") return Kind::mixed;
    throw ParseError("unknown kind '" + s + "'");
}

/// "auto" picks the exact counter whenever the kind supports it.
Method parse_method(const std::string& s, const TrigPoly& p, double tol) {
    if (s == "exact") return Method::exact();
    if (s == "numeric") return Method::numeric(tol);
    if (s == "auto") return p.effective_kind() == Kind::mixed ? Method::numeric(tol) : Method::exact();
    throw ParseError("unknown method '" + s + "'");
}

CountingChoice parse_counting(const std::string& s) {
    if (s == "exact") return CountingChoice::exact;
    if (s == "numeric") return CountingChoice::numeric;
    if (s == "auto") return CountingChoice::automatic;
    throw ParseError("unknown method '" + s + "'");
}

template <class T>
std::vector<T> parse_list(const std::string& text) {
    std::vector<T> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::istringstream is(item);
        T v;
        if (!(is >> v) || !(is >> std::ws).eof()) throw ParseError("bad list entry '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw ParseError("empty list");
    return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Result cmd_count(const Options& o) {
    const CoeffVector a = load_coeffs(o);
    const Kind kind = parse_kind(o.kind);
    TrigPoly p{a, kind, kind == Kind::mixed ? parse_X(o.X) : 0.0};
    const ZeroCount z = count_zeros(p, parse_method(o.method, p, o.tol));
    json j = io::to_json(z);
    j["K"] = a.K();
    j["kind"] = to_string(kind);
    if (kind == Kind::mixed) j["X"] = std::isinf(p.X) ? json(p.X > 0 ? "inf" : "-inf") : json(p.X);
    return {dump(j)};
}

Result cmd_pair(const Options& o) {
    const CoeffVector a = load_coeffs(o);
    const Method m = o.method == "numeric" ? Method::numeric(o.tol) : Method::exact();
    if (o.method != "numeric" && o.method != "exact" && o.method != "auto")
        throw ParseError("unknown method '" + o.method + "'");
    const PairReport r = verify_proposition(a, m);
    return {dump(io::to_json(r)), r.holds ? exit_ok : exit_violation};
}

Result cmd_cert(const Options& o) {
    const CoeffVector a = load_coeffs(o);
    if (a.is_zero()) throw IdenticallyZero();
    const GridValues g = grid_values(a);
    const PairBound b = certified_pair_bound(a);
    json j = io::to_json(g);
    j["paper_sign_changes"] = {{"lambda", paper_sign_changes(g.lambda)}, {"samples", paper_sign_changes(g.samples)}};
    j["robust_sign_changes"] = {{"lambda", robust_sign_changes(g.lambda)},
                                {"samples", robust_sign_changes(g.samples)}};
    j["lb_forward"] = b.lb_forward;
    j["lb_reverse"] = b.lb_reverse;
    return {dump(j)};
}

ExperimentOptions experiment_options(const Options& o) {
    ExperimentOptions e;
    e.counting = parse_counting(o.method);
    e.tol = o.tol;
    return e;
}

Result summaries_out(const std::vector<ExperimentSummary>& rows, const std::string& format) {
    long violations = 0;
    for (const auto& r : rows) violations += r.n_pair_violations;
    const int code = violations > 0 ? exit_violation : exit_ok;
    if (format.empty() || format == "csv") return {io::to_csv(rows), code};
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back(io::to_json(r));
        return {dump(rows.size() == 1 ? arr[0] : arr), code};
    }
    throw ParseError("unknown format '" + format + "'");
}

Result cmd_mc(const Options& o) {
    if (o.spec.empty()) throw ParseError("mc needs --spec");
    const EnsembleSpec spec = io::ensemble_from_file(o.spec);
    return summaries_out({estimate_mean_zeros(spec, o.seed, o.n, experiment_options(o))}, o.format);
}

Result cmd_sweep(const Options& o) {
    if (o.spec.empty()) throw ParseError("sweep needs --spec");
    if (o.Ks.empty() == o.ps.empty()) throw ParseError("sweep needs exactly one of --Ks or --ps");
    const EnsembleSpec base = io::ensemble_from_file(o.spec);
    const auto points = o.Ks.empty() ? family_over_p(base, parse_list<double>(o.ps))
                                     : family_over_K(base, parse_list<int>(o.Ks));
    return summaries_out(sweep(points, o.seed, o.n, experiment_options(o)), o.format);
}

Result cmd_lemma(const Options& o) {
    if (o.length < 3 || o.length % 2 == 0) throw ParseError("--length must be odd and at least 3");
    const int K = (o.length - 1) / 2;
    long passed = 0, failed = 0, checked = 0;
    if (o.exhaustive) {
        // every pattern in {-1, 0, 1}^length
        if (o.length > 15) throw ParseError("exhaustive mode supports --length <= 15");
        long total = 1;
        for (int i = 0; i < o.length; ++i) total *= 3;
        std::vector<double> v(static_cast<std::size_t>(o.length));
        for (long code = 0; code < total; ++code) {
            long c = code;
            for (auto& x : v) {
                x = static_cast<double>(c % 3) - 1.0;
                c /= 3;
            }
            (alternation_identity_holds<double>(v) ? passed : failed)++;
        }
        checked = total;
    } else {
        if (o.n < 1) throw ParseError("--n must be positive");
        for (long i = 0; i < o.n; ++i) {
            StreamEngine eng(o.seed, 1, static_cast<std::uint64_t>(i));
            std::normal_distribution<double> normal(0.0, 1.0);
            std::vector<double> v(static_cast<std::size_t>(o.length));
            for (auto& x : v)
                do x = normal(eng);
                while (x == 0.0);
            auto alt = alternate<double>(v);
            const bool ok = paper_sign_changes(v) + paper_sign_changes(alt) == 2 * K;
            (ok ? passed : failed)++;
        }
        checked = o.n;
    }
    json j = {{"n", checked},   {"length", o.length}, {"K", K},          {"bound", 2 * K},
              {"passed", passed}, {"failed", failed}, {"exhaustive", o.exhaustive}};
    return {dump(j), failed == 0 ? exit_ok : exit_violation};
}

void add_coeff_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--coeffs", o.coeffs, "comma-separated a_0,...,a_K (integers, decimals, p/q)");
    cmd->add_option("--file", o.file, "file holding the coefficient text");
    cmd->add_option("--out", o.out, "write output here instead of standard output");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Real zeros of random trigonometric polynomials"};
    app.require_subcommand(1);
    Options o;

    auto* count = app.add_subcommand("count", "count real zeros in one period");
    add_coeff_flags(count, o);
    count->add_option("--kind", o.kind, "cosine | sine | mixed");
    count->add_option("--X", o.X, "phase parameter for --kind mixed (real or inf)");
    count->add_option("--method", o.method, "exact | numeric | auto");
    count->add_option("--tol", o.tol, "unit-circle tolerance for numeric counting");

    auto* pair = app.add_subcommand("pair", "check Z(C_a) + Z(C_rev a) >= 2K");
    add_coeff_flags(pair, o);
    pair->add_option("--method", o.method, "exact | numeric");
    pair->add_option("--tol", o.tol, "unit-circle tolerance for numeric counting");

    auto* cert = app.add_subcommand("cert", "grid values and sign-change lower bounds");
    add_coeff_flags(cert, o);

    auto* mc = app.add_subcommand("mc", "Monte Carlo estimate of the mean zero count");
    mc->add_option("--spec", o.spec, "ensemble spec JSON file")->required();
    mc->add_option("--seed", o.seed, "stream seed");
    mc->add_option("--n", o.n, "number of draws");
    mc->add_option("--method", o.method, "exact | numeric | auto");
    mc->add_option("--tol", o.tol, "unit-circle tolerance for numeric counting");
    mc->add_option("--format", o.format, "csv | json");
    mc->add_option("--out", o.out, "output path");

    auto* sw = app.add_subcommand("sweep", "Monte Carlo over a list of K or p values");
    sw->add_option("--spec", o.spec, "base ensemble spec JSON file")->required();
    sw->add_option("--Ks", o.Ks, "comma-separated K values");
    sw->add_option("--ps", o.ps, "comma-separated bernoulli01 p values");
    sw->add_option("--seed", o.seed, "stream seed");
    sw->add_option("--n", o.n, "draws per grid point");
    sw->add_option("--method", o.method, "exact | numeric | auto");
    sw->add_option("--tol", o.tol, "unit-circle tolerance for numeric counting");
    sw->add_option("--format", o.format, "csv | json");
    sw->add_option("--out", o.out, "output path");

    auto* lemma = app.add_subcommand("lemma", "check the sign-alternation identity on random sequences");
    lemma->add_option("--n", o.n, "number of random sequences");
    lemma->add_option("--length", o.length, "odd sequence length 2K+1");
    lemma->add_option("--seed", o.seed, "stream seed");
    lemma->add_flag("--exhaustive", o.exhaustive, "enumerate all patterns in {-1,0,1}^length instead");
    lemma->add_option("--out", o.out, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_invalid;
    }

    Result result;
    try {
        if (*count) result = cmd_count(o);
        else if (*pair) result = cmd_pair(o);
        else if (*cert) result = cmd_cert(o);
        else if (*mc) result = cmd_mc(o);
        else if (*sw) result = cmd_sweep(o);
        else if (*lemma) result = cmd_lemma(o);
    } catch (const NumericallyAmbiguous& e) {
        std::cerr << "error: NumericallyAmbiguous: " << e.what() << "\n";
        return exit_ambiguous;
    } catch (const AllDrawsZero& e) {
        std::cerr << "error: AllDrawsZero: " << e.what() << "\n";
        return exit_invalid;
    } catch (const IdenticallyZero& e) {
        std::cerr << "error: IdenticallyZero: " << e.what() << "\n";
        return exit_invalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    }

    if (o.out.empty()) {
        std::cout << result.text;
    } else {
        std::ofstream f(o.out);
        if (!(f << result.text)) {
            std::cerr << "error: cannot write '" << o.out << "'\n";
            return exit_invalid;
        }
    }
    return result.code;
}
