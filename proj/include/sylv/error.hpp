#pragma once

#include <stdexcept>
#include <string>

namespace sylv {

// Error classes surfaced to callers (and mapped to CLI exit codes).
enum class Errc {
    parse,
    backend_mismatch,
    division_by_zero,
    singular,
    rank_deficient,
    invalid_argument,
};

inline const char* errc_name(Errc c) noexcept {
    switch (c) {
        case Errc::parse: return "parse";
        case Errc::backend_mismatch: return "backend-mismatch";
        case Errc::division_by_zero: return "division-by-zero";
        case Errc::singular: return "singular";
        case Errc::rank_deficient: return "rank-deficient";
        case Errc::invalid_argument: return "invalid-argument";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace sylv
