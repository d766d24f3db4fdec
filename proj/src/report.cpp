#include "rmint/report.hpp"

namespace rmint {

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    return h;
}

Json make_report(const std::string& command) {
    Json j;
    j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    j["command"] = command;
    return j;
}

void attach_input(Json& report, const std::string& path, const std::string& bytes) {
    report["input"] = {{"path", path}, {"digest", digest_hex(fnv1a64(bytes))}};
}

std::string render_report(const Json& report) { return report.dump(2) + "\n"; }

Json to_json(const FqSubspace& s) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < s.dim(); ++r) {
        std::string row;
        for (auto v : s.basis().row(r)) row += static_cast<char>('0' + v);
        rows.push_back(row);
    }
    return Json{{"ambient", s.ambient()}, {"dim", s.dim()}, {"basis_rows", rows}};
}

Json ext_vec_json(const FieldCtx& ctx, const ExtVec& v) {
    Json out = Json::array();
    for (auto x : v) out.push_back(ctx.element_to_string(x));
    return out;
}

Json to_json(const FieldCtx& ctx, const SpannableResult& r) {
    Json j{{"spannable", r.spannable},
           {"hyperplanes", r.hyperplanes},
           {"pairs_swept", r.pairs_swept},
           {"pairs_eliminated", r.pairs_eliminated}};
    if (r.witness)
        j["witness"] = {{"h1_dual", ext_vec_json(ctx, r.witness->first)},
                        {"h2_dual", ext_vec_json(ctx, r.witness->second)}};
    return j;
}

Json to_json(const FieldCtx& ctx, const IntersectingResult& r) {
    Json j{{"intersecting", r.intersecting},
           {"method", r.method},
           {"classes", r.classes},
           {"pairs_swept", r.pairs_swept},
           {"pairs_eliminated", r.pairs_eliminated}};
    if (r.witness) {
        const char* a = std::string_view(r.method) == "definitional" ? "codeword_1" : "h1_dual";
        const char* b = std::string_view(r.method) == "definitional" ? "codeword_2" : "h2_dual";
        j["witness"] = {{a, ext_vec_json(ctx, r.witness->first)}, {b, ext_vec_json(ctx, r.witness->second)}};
    }
    return j;
}

Json to_json(const FieldCtx& ctx, const EvasiveCertificate& c) {
    Json j{{"pass", c.pass}, {"swept", c.swept}};
    if (c.witness) {
        Json basis = Json::array();
        for (const auto& v : *c.witness) basis.push_back(ext_vec_json(ctx, v));
        j["witness"] = {{"basis", basis}, {"weight", c.witness_weight}};
    }
    return j;
}

Json to_json(const LinearSetStats& s) {
    Json pts = Json::object();
    for (auto [w, cnt] : s.points) pts[std::to_string(w)] = cnt;
    Json j{{"rank", s.rank}, {"cardinality", s.cardinality}, {"point_weights", pts}};
    if (s.has_tau) {
        Json tau = Json::object();
        for (auto [sz, cnt] : s.tau) tau[std::to_string(sz)] = cnt;
        j["tau"] = tau;
    }
    return j;
}

namespace {
std::string rational_str(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}
} // namespace

Json to_json(const TauProfile& p) {
    Json vals = Json::object();
    for (const auto& [sz, v] : p.values) vals[std::to_string(sz)] = rational_str(v);
    return Json{{"q", p.q},
                {"m", p.m},
                {"cardinality", p.cardinality.str()},
                {"values", vals},
                {"negative", p.negative},
                {"non_integral", p.non_integral}};
}

Json to_json(const Contradiction633& c) {
    return Json{{"q", c.q},
                {"scattered_profile",
                 {{"tau_1", c.tau_1.str()},
                  {"tau_qplus1", c.tau_qplus1.str()},
                  {"tau_q2q1", c.tau_q2q1.str()},
                  {"matches_closed_form", c.scattered_matches_closed_form}}},
                {"required_weight3_lines", c.required_weight3_lines.str()},
                {"per_point_cap", c.per_point_cap.str()},
                {"bound_weight3_lines", c.bound_weight3_lines.str()},
                {"scattered_contradiction", c.scattered_contradiction},
                {"weight2_tau_qplus1", rational_str(c.weight2_value)},
                {"weight2_negative", c.weight2_negative},
                {"weight2_counting", to_json(c.weight2_counting)},
                {"q2_gap", c.q2_gap},
                {"note", c.note}};
}

Json to_json(const ExistenceVerdict& v) {
    return Json{{"status", to_string(v.status)}, {"citations", v.reasons}};
}

Json to_json(const ExtremalReport& r) {
    return Json{{"k_is_3", r.k_is_3},
                {"m_ge_6", r.m_ge_6},
                {"dual_scattered", r.dual_scattered},
                {"dual_dim", r.dual_dim},
                {"d", r.d},
                {"d_is_m_minus_1", r.d_is_m_minus_1},
                {"intersecting", r.intersecting},
                {"characterization_holds", r.characterization_holds}};
}

Json to_json(const FieldCtx& ctx, const SearchResult& r) {
    Json j{{"found", r.found}, {"trials_used", r.trials_used}};
    j["timing"] = {{"wall_ms", r.wall_ms}};
    if (r.found) j["found_trial"] = r.found_trial;
    if (r.subspace) {
        j["subspace"] = to_json(*r.subspace);
        j["digest"] = digest_hex(subspace_digest(*r.subspace));
    }
    if (r.generator) {
        Json rows = Json::array();
        for (const auto& row : *r.generator) rows.push_back(ext_vec_json(ctx, row));
        j["generator"] = rows;
    }
    if (r.enumerated) {
        j["enumerated"] = r.enumerated;
        j["intersecting_hits"] = r.intersecting_hits;
        Json cands = Json::array();
        for (const auto& c : r.candidates) {
            std::string dual;
            for (auto v : c.dual_vector) dual += static_cast<char>('0' + v);
            Json cj{{"index", c.index}, {"dual_vector", dual}, {"spanning", c.spanning}};
            if (c.spanning) {
                cj["intersecting"] = c.intersecting;
                cj["d"] = c.distance;
            }
            cands.push_back(cj);
        }
        j["candidates"] = cands;
    }
    return j;
}

} // namespace rmint
