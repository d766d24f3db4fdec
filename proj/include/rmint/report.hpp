#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "rmint/bounds.hpp"
#include "rmint/linear_set.hpp"
#include "rmint/search.hpp"

namespace rmint {

using Json = nlohmann::json; // objects keep keys sorted: canonical key order

inline constexpr const char* kToolName = "rmint";
inline constexpr const char* kToolVersion = "0.1.0";

std::uint64_t fnv1a64(std::string_view bytes);

/// Report skeleton: tool block, command, and an input digest when a file is
/// involved. Verdict fields byte-reproduce across runs; timings live under
/// "timing" and are excluded from that contract.
Json make_report(const std::string& command);
void attach_input(Json& report, const std::string& path, const std::string& bytes);
std::string render_report(const Json& report); // pretty, canonical key order

// JSON views of domain objects.
Json to_json(const FqSubspace& s);
Json ext_vec_json(const FieldCtx& ctx, const ExtVec& v);
Json to_json(const FieldCtx& ctx, const SpannableResult& r);
Json to_json(const FieldCtx& ctx, const IntersectingResult& r);
Json to_json(const FieldCtx& ctx, const EvasiveCertificate& c);
Json to_json(const LinearSetStats& s);
Json to_json(const TauProfile& p);
Json to_json(const Contradiction633& c);
Json to_json(const ExistenceVerdict& v);
Json to_json(const ExtremalReport& r);
Json to_json(const FieldCtx& ctx, const SearchResult& r);

} // namespace rmint
