#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rmint {

enum class Errc {
    not_prime,
    reducible_modulus,
    table_cap_exceeded,
    zero_inverse,
    level_mismatch,
    ambient_mismatch,
    enumeration_cap_exceeded,
    pair_cap_exceeded,
    bad_dims,
    degenerate_code,
    singular_matrix,
    zero_vector,
    precondition_violated,
    bound_violated,
    refused_not_exists,
    singular_system,
    parse_error,
    validation_error,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Errc code() const { return code_; }

    /// True for cap-style failures (CLI exit code 2).
    bool is_cap() const {
        return code_ == Errc::table_cap_exceeded || code_ == Errc::enumeration_cap_exceeded ||
               code_ == Errc::pair_cap_exceeded;
    }

private:
    Errc code_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t col, const std::string& msg)
        : Error(Errc::parse_error,
                "parse error at line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg),
          line_(line),
          col_(col) {}
    std::size_t line() const { return line_; }
    std::size_t col() const { return col_; }

private:
    std::size_t line_, col_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, Errc code, const std::string& msg) {
    if (!cond) fail(code, msg);
}

/// Hard caps with conservative desk-scale defaults. All overridable from the CLI.
struct Caps {
    std::uint64_t table = 1ull << 22;        // largest top field backed by log/antilog tables
    std::uint64_t enumeration = 1ull << 26;  // q^dim vector enumeration limit
    std::uint64_t sweep = 1ull << 26;        // hyperplane/point/subspace sweep limit
    std::uint64_t pairs = 1ull << 34;        // unordered pair sweep limit
};

} // namespace rmint
