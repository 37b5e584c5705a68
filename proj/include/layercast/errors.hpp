#pragma once

#include <stdexcept>
#include <string>

namespace layercast {

enum class errc {
    bad_range,
    non_integer_cache,
    out_of_range,
    indivisible_file_length,
    infeasible_layer,
    missing_payload,
    undeliverable_subfile,
    budget_exceeded,
    premise_violated,
    parse_error,
    internal_check,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::bad_range: return "bad_range";
        case errc::non_integer_cache: return "non_integer_cache";
        case errc::out_of_range: return "out_of_range";
        case errc::indivisible_file_length: return "indivisible_file_length";
        case errc::infeasible_layer: return "infeasible_layer";
        case errc::missing_payload: return "missing_payload";
        case errc::undeliverable_subfile: return "undeliverable_subfile";
        case errc::budget_exceeded: return "budget_exceeded";
        case errc::premise_violated: return "premise_violated";
        case errc::parse_error: return "parse_error";
        case errc::internal_check: return "internal_check";
    }
    return "unknown";
}

/// Library-wide exception carrying a machine-checkable error code.
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace layercast
