#include "rmint/code_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace rmint {

namespace {

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::uint64_t parse_uint(const std::string& v, std::size_t line) {
    std::uint64_t out = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || p != v.data() + v.size())
        throw ParseError(line, 1, "expected an unsigned integer, got '" + v + "'");
    return out;
}

std::vector<std::uint8_t> parse_coeff_list(const std::string& v, std::size_t line) {
    if (v.size() < 2 || v.front() != '[' || v.back() != ']')
        throw ParseError(line, 1, "expected a coefficient list like [1,0,1]");
    std::vector<std::uint8_t> out;
    std::string inner = v.substr(1, v.size() - 2);
    std::stringstream ss(inner);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = strip(item);
        std::uint64_t c = parse_uint(item, line);
        if (c > 255) throw ParseError(line, 1, "coefficient out of range");
        out.push_back(static_cast<std::uint8_t>(c));
    }
    if (out.empty()) throw ParseError(line, 1, "empty coefficient list");
    return out;
}

} // namespace

CodeFileData parse_code_file_text(const std::string& text) {
    CodeFileData data;
    enum class Section { none, field, code, meta } section = Section::none;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    bool saw_field = false, saw_code = false;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip(raw);
        if (line.empty() || line[0] == '#') continue;
        if (line.front() == '[') {
            if (line == "[field]") {
                section = Section::field;
                saw_field = true;
            } else if (line == "[code]") {
                section = Section::code;
                saw_code = true;
            } else if (line == "[meta]") {
                section = Section::meta;
            } else {
                throw ParseError(lineno, 1, "unknown section " + line);
            }
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError(lineno, 1, "expected key = value");
        std::string key = strip(line.substr(0, eq));
        std::string value = strip(line.substr(eq + 1));
        switch (section) {
        case Section::none:
            throw ParseError(lineno, 1, "content before any section header");
        case Section::field:
            if (key == "preset") {
                data.preset = value;
                data.field = field_preset(value);
            } else if (key == "p") {
                data.field.p = static_cast<std::uint32_t>(parse_uint(value, lineno));
            } else if (key == "e") {
                data.field.e = static_cast<std::uint32_t>(parse_uint(value, lineno));
            } else if (key == "m") {
                data.field.m = static_cast<std::uint32_t>(parse_uint(value, lineno));
            } else if (key == "modulus_q") {
                data.field.modulus_q = parse_coeff_list(value, lineno);
            } else if (key == "modulus_qm") {
                data.field.modulus_qm = parse_coeff_list(value, lineno);
            } else {
                throw ParseError(lineno, 1, "unknown [field] key '" + key + "'");
            }
            break;
        case Section::code:
            if (key == "k") {
                data.k = static_cast<std::uint32_t>(parse_uint(value, lineno));
            } else if (key == "n") {
                data.n = static_cast<std::uint32_t>(parse_uint(value, lineno));
            } else if (key == "row") {
                std::vector<std::string> row;
                std::stringstream ss(value);
                std::string tok;
                while (ss >> tok) row.push_back(tok);
                data.rows.push_back(std::move(row));
            } else {
                throw ParseError(lineno, 1, "unknown [code] key '" + key + "'");
            }
            break;
        case Section::meta:
            data.meta.emplace_back(key, value);
            break;
        }
    }
    if (!saw_field) throw ParseError(lineno, 1, "missing [field] section");
    if (!saw_code) throw ParseError(lineno, 1, "missing [code] section");
    if (data.k == 0 || data.n == 0) throw ParseError(lineno, 1, "[code] needs k and n");
    if (data.rows.size() != data.k)
        throw ParseError(lineno, 1, "expected " + std::to_string(data.k) + " generator rows, got " +
                                        std::to_string(data.rows.size()));
    for (const auto& row : data.rows)
        if (row.size() != data.n)
            throw ParseError(lineno, 1, "generator row has " + std::to_string(row.size()) +
                                            " entries, expected " + std::to_string(data.n));
    return data;
}

CodeFileData parse_code_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), Errc::validation_error, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_code_file_text(ss.str());
}

std::pair<FieldCtxPtr, RankCode> build_code(const CodeFileData& data) {
    auto ctx = FieldCtx::build(data.field);
    std::vector<ExtVec> rows(data.k, ExtVec(data.n));
    for (std::uint32_t i = 0; i < data.k; ++i)
        for (std::uint32_t j = 0; j < data.n; ++j) rows[i][j] = ctx->element_from_string(data.rows[i][j]);
    return {ctx, RankCode(ctx, std::move(rows))};
}

std::string serialize_code_file(const FieldCtx& ctx, const RankCode& code,
                                const std::vector<std::pair<std::string, std::string>>& meta) {
    std::ostringstream out;
    out << "[field]\n";
    out << "p = " << ctx.p() << "\n";
    out << "e = " << ctx.e() << "\n";
    out << "m = " << ctx.m() << "\n";
    auto coeffs = [&](const std::vector<std::uint8_t>& c) {
        std::string s = "[";
        for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
        return s + "]";
    };
    if (ctx.e() > 1) out << "modulus_q = " << coeffs(ctx.modulus_q()) << "\n";
    out << "modulus_qm = " << coeffs(ctx.modulus_qm()) << "\n";
    out << "[code]\n";
    out << "k = " << code.k() << "\n";
    out << "n = " << code.n() << "\n";
    for (std::size_t i = 0; i < code.k(); ++i) {
        out << "row =";
        for (std::size_t j = 0; j < code.n(); ++j) out << " " << ctx.element_to_string(code.generator()[i][j]);
        out << "\n";
    }
    if (!meta.empty()) {
        out << "[meta]\n";
        for (const auto& [k, v] : meta) out << k << " = " << v << "\n";
    }
    return out.str();
}

} // namespace rmint
