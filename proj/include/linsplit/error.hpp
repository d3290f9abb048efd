#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace linsplit {

enum class Errc {
    invalid_tour,
    invalid_instance,
    invalid_interval,
    corrupt_result,
    no_feasible_split,
    oracle_cap,
    invalid_config,
    parse,
    mismatch,
    contract_violation,
};

inline std::string_view to_string(Errc code) {
    switch (code) {
    case Errc::invalid_tour: return "invalid-tour";
    case Errc::invalid_instance: return "invalid-instance";
    case Errc::invalid_interval: return "invalid-interval";
    case Errc::corrupt_result: return "corrupt-result";
    case Errc::no_feasible_split: return "no-feasible-split";
    case Errc::oracle_cap: return "oracle-cap";
    case Errc::invalid_config: return "invalid-config";
    case Errc::parse: return "parse";
    case Errc::mismatch: return "mismatch";
    case Errc::contract_violation: return "contract-violation";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

namespace detail {
[[noreturn]] inline void contract_failure(const char* expr, const char* file, int line) {
    throw Error(Errc::contract_violation,
                std::string(expr) + " (" + file + ":" + std::to_string(line) + ")");
}
} // namespace detail

} // namespace linsplit

// Contract checks are compiled in only when LINSPLIT_CHECKED is defined
// (the test builds do this, the benchmark builds do not).
#if defined(LINSPLIT_CHECKED)
#define LINSPLIT_EXPECTS(cond) \
    ((cond) ? void(0) : ::linsplit::detail::contract_failure(#cond, __FILE__, __LINE__))
#else
#define LINSPLIT_EXPECTS(cond) ((void)0)
#endif
