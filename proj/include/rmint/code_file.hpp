#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rmint/rank_code.hpp"

namespace rmint {

/// Parsed form of the .code text format (see docs/FORMAT.md): a [field]
/// section (tower description or preset), a [code] section (k, n and the
/// generator rows as element literals) and an optional [meta] section.
struct CodeFileData {
    FieldSpec field;
    std::optional<std::string> preset;
    std::uint32_t k = 0, n = 0;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::pair<std::string, std::string>> meta;
};

CodeFileData parse_code_file_text(const std::string& text);
CodeFileData parse_code_file(const std::string& path);

/// Builds the validated field and code ("a^K" exponents reduce mod q^m - 1 on
/// read; G must have full row rank).
std::pair<FieldCtxPtr, RankCode> build_code(const CodeFileData& data);

/// Canonical serialization: fixed section and key order, canonical element
/// literals. serialize(parse(file)) is stable.
std::string serialize_code_file(const FieldCtx& ctx, const RankCode& code,
                                const std::vector<std::pair<std::string, std::string>>& meta = {});

} // namespace rmint
