#pragma once

// JSON and CSV forms of specs, counts, certificates and experiment summaries.

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "trigzero/certificate.hpp"
#include "trigzero/errors.hpp"
#include "trigzero/montecarlo.hpp"
#include "trigzero/zerocount.hpp"

namespace trigzero::io {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Ensemble specs
//
// {"K": 8, "layout": {"type": "iid", "dist": {"type": "gaussian", "mu": 0, "sigma": 1}, "L": 2, "M": 6}}
// {"K": 8, "layout": {"type": "palindromic", "halves": [{"type": "gaussian", "sigma": 1}, ...]}}

namespace detail {

inline double number(const json& j, const char* key, std::optional<double> fallback = std::nullopt) {
    if (!j.contains(key)) {
        if (fallback) return *fallback;
        throw InvalidSpec(std::string("missing field '") + key + "'");
    }
    if (!j.at(key).is_number()) throw InvalidSpec(std::string("field '") + key + "' must be a number");
    return j.at(key).get<double>();
}

inline int integer(const json& j, const char* key) {
    if (!j.contains(key)) throw InvalidSpec(std::string("missing field '") + key + "'");
    if (!j.at(key).is_number_integer()) throw InvalidSpec(std::string("field '") + key + "' must be an integer");
    return j.at(key).get<int>();
}

}  // namespace detail

inline Distribution distribution_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type") || !j.at("type").is_string())
        throw InvalidSpec("a distribution needs a string 'type'");
    const auto type = j.at("type").get<std::string>();
    using detail::number;
    if (type == "gaussian") return Distribution::gaussian(number(j, "mu", 0.0), number(j, "sigma", 1.0));
    if (type == "uniform") return Distribution::uniform(number(j, "lo"), number(j, "hi"));
    if (type == "rademacher") return Distribution::rademacher();
    if (type == "bernoulli01") return Distribution::bernoulli01(number(j, "p"));
    if (type == "point_mass") return Distribution::point_mass(number(j, "c"));
    if (type == "cauchy") return Distribution::cauchy(number(j, "loc", 0.0), number(j, "scale", 1.0));
    throw InvalidSpec("unknown distribution type '" + type + "'");
}

inline json to_json(const Distribution& d) {
    json j;
    j["type"] = d.name();
    std::visit(
        [&](const auto& v) {
            using D = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<D, dist::Gaussian>) {
                j["mu"] = v.mu;
                j["sigma"] = v.sigma;
            } else if constexpr (std::is_same_v<D, dist::Uniform>) {
                j["lo"] = v.lo;
                j["hi"] = v.hi;
            } else if constexpr (std::is_same_v<D, dist::Bernoulli01>) {
                j["p"] = v.p;
            } else if constexpr (std::is_same_v<D, dist::PointMass>) {
                j["c"] = v.c;
            } else if constexpr (std::is_same_v<D, dist::Cauchy>) {
                j["loc"] = v.loc;
                j["scale"] = v.scale;
            }
        },
        d.variant());
    return j;
}

inline EnsembleSpec ensemble_from_json(const json& j) {
    if (!j.is_object()) throw InvalidSpec("ensemble spec must be a JSON object");
    EnsembleSpec spec;
    spec.K = detail::integer(j, "K");
    if (!j.contains("layout") || !j.at("layout").is_object()) throw InvalidSpec("missing object 'layout'");
    const json& layout = j.at("layout");
    const auto type = layout.value("type", std::string{});
    if (type == "iid") {
        if (!layout.contains("dist")) throw InvalidSpec("iid layout needs 'dist'");
        IidLayout iid{distribution_from_json(layout.at("dist")), 0, spec.K};
        if (layout.contains("L")) iid.L = detail::integer(layout, "L");
        if (layout.contains("M")) iid.M = detail::integer(layout, "M");
        spec.layout = iid;
    } else if (type == "palindromic") {
        if (!layout.contains("halves") || !layout.at("halves").is_array())
            throw InvalidSpec("palindromic layout needs an array 'halves'");
        PalindromicLayout pal;
        for (const auto& h : layout.at("halves")) pal.halves.push_back(distribution_from_json(h));
        spec.layout = std::move(pal);
    } else {
        throw InvalidSpec("layout type must be 'iid' or 'palindromic'");
    }
    spec.validate();
    return spec;
}

inline EnsembleSpec ensemble_from_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidSpec(std::string("spec is not valid JSON: ") + e.what());
    }
    return ensemble_from_json(j);
}

inline EnsembleSpec ensemble_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidSpec("cannot open spec file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ensemble_from_text(ss.str());
}

inline json to_json(const EnsembleSpec& s) {
    json layout;
    if (auto* iid = std::get_if<IidLayout>(&s.layout)) {
        layout = {{"type", "iid"}, {"dist", to_json(iid->dist)}, {"L", iid->L}, {"M", iid->M}};
    } else {
        json halves = json::array();
        for (const auto& d : std::get<PalindromicLayout>(s.layout).halves) halves.push_back(to_json(d));
        layout = {{"type", "palindromic"}, {"halves", halves}};
    }
    return {{"K", s.K}, {"layout", layout}};
}

// ---------------------------------------------------------------------------
// Results

inline json to_json(const ZeroCount& z) {
    json j = {{"Z", z.count}, {"certification", to_string(z.certification)}};
    if (z.certification == Certification::numerical) {
        j["tolerance"] = z.tolerance;
        j["degraded"] = z.degraded;
    }
    if (!z.zeros.empty()) {
        json zs = json::array();
        for (const auto& l : z.zeros)
            zs.push_back({{"position", l.position}, {"multiplicity", l.multiplicity}, {"residual", l.residual}});
        j["zeros"] = zs;
    }
    return j;
}

inline json to_json(const PairReport& r) {
    json j = {{"Z_a", r.z_forward}, {"Z_rev", r.z_reverse}, {"sum", r.sum}, {"bound", r.bound}, {"holds", r.holds}};
    if (r.degenerate_forward) j["degenerate_forward"] = true;
    if (r.degenerate_reverse) j["degenerate_reverse"] = true;
    return j;
}

inline json to_json(const GridValues& g) {
    return {{"K", g.K},
            {"theta", g.theta},
            {"samples", g.samples},
            {"lambda", g.lambda},
            {"near_zero_warning", g.near_zero_warning}};
}

inline json to_json(const ExperimentSummary& s) {
    return {{"seed", s.seed},
            {"n", s.n_requested},
            {"n_zero", s.n_identically_zero},
            {"n_counted", s.n_counted},
            {"mean_Z", s.mean_Z},
            {"stderr_Z", s.stderr_Z},
            {"violations", s.n_pair_violations},
            {"recounted_exact", s.n_recounted_exact},
            {"method", s.method},
            {"K", s.K},
            {"L", s.L},
            {"M", s.M},
            {"dist", s.dist},
            {"wall_time", s.wall_time}};
}

// ---------------------------------------------------------------------------
// CSV

inline constexpr const char* summary_csv_header = "seed,n,n_zero,n_counted,mean_Z,stderr_Z,violations,K,L,M,dist";

/// 17 significant digits, enough to round-trip a double.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string to_csv_row(const ExperimentSummary& s) {
    std::ostringstream os;
    os << s.seed << ',' << s.n_requested << ',' << s.n_identically_zero << ',' << s.n_counted << ','
       << format_double(s.mean_Z) << ',' << format_double(s.stderr_Z) << ',' << s.n_pair_violations << ',' << s.K
       << ',' << s.L << ',' << s.M << ',' << csv_quote(s.dist);
    return os.str();
}

inline std::string to_csv(const std::vector<ExperimentSummary>& rows) {
    std::string out = std::string(summary_csv_header) + "\n";
    for (const auto& r : rows) out += to_csv_row(r) + "\n";
    return out;
}

}  // namespace trigzero::io
