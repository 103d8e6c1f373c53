#include "lamprime/io.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>

namespace lamprime {

Json rational_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_number()) return parse_rational(j.dump());
    throw ParseError("expected a rational, got " + j.dump());
}

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

Json rational_array(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& q : v) a.push_back(rational_json(q));
    return a;
}

std::vector<Rational> rational_vector(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an array of rationals");
    std::vector<Rational> v;
    v.reserve(j.size());
    for (const auto& e : j) v.push_back(rational_from_json(e));
    return v;
}

}  // namespace

Json lp_solution_json(const LpSolution& s) {
    Json j;
    j["lambda"] = rational_json(s.lambda);
    j["objective"] = objective_name(s.objective);
    j["value"] = rational_json(s.value);
    j["P"] = rational_json(s.line.P);
    j["N"] = rational_json(s.line.N);
    j["certified"] = s.certified;
    j["x"] = rational_array(s.x);
    return j;
}

Json interval_json(const LambdaInterval& iv) {
    Json j;
    j["lo"] = rational_json(iv.lo);
    j["hi"] = rational_json(iv.hi);
    j["epsilon"] = rational_json(iv.epsilon);
    j["lo_clamped"] = iv.lo_clamped;
    j["hi_clamped"] = iv.hi_clamped;
    return j;
}

LambdaInterval interval_from_json(const Json& j) {
    LambdaInterval iv;
    iv.lo = rational_from_json(field(j, "lo"));
    iv.hi = rational_from_json(field(j, "hi"));
    if (j.contains("epsilon")) iv.epsilon = rational_from_json(j.at("epsilon"));
    iv.lo_clamped = j.value("lo_clamped", false);
    iv.hi_clamped = j.value("hi_clamped", false);
    return iv;
}

Json cover_json(const CoverFamily& family, bool with_vectors) {
    Json j;
    j["algorithm"] = family.algorithm;
    j["objective"] = objective_name(family.objective);
    j["epsilon"] = rational_json(family.epsilon);
    j["domain"] = {{"lo", rational_json(family.domain_lo)}, {"hi", rational_json(family.domain_hi)}};
    Json members = Json::array();
    for (const auto& m : family.members) {
        Json e;
        e["lambda"] = rational_json(m.lambda);
        e["P"] = rational_json(m.line.P);
        e["N"] = rational_json(m.line.N);
        e["value"] = rational_json(m.value);
        e["interval"] = interval_json(m.interval);
        if (with_vectors && !m.x.empty()) e["x"] = rational_array(m.x);
        members.push_back(std::move(e));
    }
    j["members"] = std::move(members);
    j["lp_solve_count"] = family.lp_solve_count;
    j["orlp_solve_count"] = family.orlp_solve_count;
    return j;
}

CoverFamily cover_from_json(const Json& j) {
    try {
        CoverFamily f;
        f.algorithm = j.value("algorithm", std::string());
        f.objective = j.contains("objective") ? parse_objective(j.at("objective").get<std::string>()) : Objective::lamprime;
        f.epsilon = rational_from_json(field(j, "epsilon"));
        const Json& domain = field(j, "domain");
        f.domain_lo = rational_from_json(field(domain, "lo"));
        f.domain_hi = rational_from_json(field(domain, "hi"));
        const Json& members = field(j, "members");
        if (!members.is_array()) throw ParseError("'members' must be an array");
        for (const auto& e : members) {
            CoverMember m;
            m.lambda = rational_from_json(field(e, "lambda"));
            m.line = {rational_from_json(field(e, "P")), rational_from_json(field(e, "N"))};
            m.value = rational_from_json(field(e, "value"));
            m.interval = interval_from_json(field(e, "interval"));
            if (e.contains("x")) m.x = rational_vector(e.at("x"));
            f.members.push_back(std::move(m));
        }
        f.lp_solve_count = j.value("lp_solve_count", 0);
        f.orlp_solve_count = j.value("orlp_solve_count", 0);
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed cover: ") + e.what());
    }
}

Json clustering_family_json(const std::vector<RoundedMember>& family) {
    Json a = Json::array();
    for (const auto& m : family) {
        Json e;
        e["lambda"] = rational_json(m.lambda);
        e["lambda_interval"] = interval_json(m.interval);
        e["assignment"] = m.clustering.assignment();
        e["score"] = rational_json(m.score);
        e["lp_value"] = rational_json(m.lp_value);
        e["ratio"] = rational_json(m.ratio);
        a.push_back(std::move(e));
    }
    return a;
}

std::string curve_pieces_csv(const PwlCurve& curve) {
    std::ostringstream out;
    out << "lambda_lo,lambda_hi,P,N\n";
    for (const auto& p : curve.pieces())
        out << to_string(p.lo) << ',' << to_string(p.hi) << ',' << to_string(p.line.P) << ',' << to_string(p.line.N)
            << '\n';
    return out.str();
}

std::string curve_samples_csv(const PwlCurve& curve, int grid) {
    std::vector<Rational> at;
    for (const auto& p : curve.pieces()) {
        at.push_back(p.lo);
        at.push_back(p.hi);
    }
    if (!curve.empty() && grid > 1) {
        Rational width = curve.hi() - curve.lo();
        for (int i = 0; i < grid; ++i) at.push_back(curve.lo() + width * make_rational(i, grid - 1));
    }
    std::sort(at.begin(), at.end());
    at.erase(std::unique(at.begin(), at.end()), at.end());
    std::ostringstream out;
    out << "lambda,value\n";
    for (const auto& l : at) out << to_string(l) << ',' << to_string(curve.value_at(l)) << '\n';
    return out.str();
}

Json exact_family_json(const ExactCurve& curve) {
    Json a = Json::array();
    for (std::size_t i = 0; i < curve.family.size(); ++i) {
        const auto& p = curve.curve.pieces()[i];
        Json e;
        e["lambda_lo"] = rational_json(p.lo);
        e["lambda_hi"] = rational_json(p.hi);
        e["P"] = rational_json(p.line.P);
        e["N"] = rational_json(p.line.N);
        e["assignment"] = curve.family[i].assignment();
        a.push_back(std::move(e));
    }
    return a;
}

Json cover_report_json(const CoverReport& report) {
    Json j;
    j["ok"] = report.ok();
    j["intervals_cover"] = report.intervals_cover;
    j["ratio_ok"] = report.ratio_ok;
    j["worst_ratio"] = rational_json(report.worst_ratio);
    j["worst_lambda"] = rational_json(report.worst_lambda);
    j["grid_points"] = report.grid_points;
    Json gaps = Json::array();
    for (const auto& g : report.gaps) gaps.push_back({{"lo", rational_json(g.lo)}, {"hi", rational_json(g.hi)}});
    j["gaps"] = std::move(gaps);
    Json certified = Json::array();
    for (const auto& iv : report.certified) certified.push_back(interval_json(iv));
    j["certified"] = std::move(certified);
    return j;
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("write to '" + tmp.string() + "' failed");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw std::runtime_error("cannot rename into '" + path + "': " + ec.message());
    }
}

}  // namespace lamprime
