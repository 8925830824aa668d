#ifndef SOLWAVE_ERRORS_HPP
#define SOLWAVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace solwave {

// One code per failure family; the C API maps these 1:1 onto its status enum.
enum class Errc {
    invalid_argument = 1,    // bad sizes, non-power-of-two N, nonpositive tolerance...
    parse_error,             // malformed JSON / rational string / field file
    exact_unsupported,       // exact lane rejects the input (even dim, fractional degree...)
    no_singular_term,        // singularity index asked of an all-smooth symbol
    non_polynomial,          // basis reduction does not terminate in a polynomial
    no_exact_symbol,         // polynomial division leaves a remainder
    singular_multiplier,     // |p| below tolerance at a grid frequency
    diverged,                // iterate blow-up or NaN
    degenerate_stabilizer,   // inner product in the stabilizer ratio vanished
    insufficient_data,       // too few usable shells / spectrum below floor
    io_error,                // filesystem failures
    internal,                // should-not-happen guard rails
};

struct Error : std::runtime_error {
    Errc code;
    Error(Errc c, const std::string& what) : std::runtime_error(what), code(c) {}
};

[[noreturn]] inline void fail(Errc c, const std::string& what) { throw Error(c, what); }

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::invalid_argument:      return "invalid_argument";
        case Errc::parse_error:           return "parse_error";
        case Errc::exact_unsupported:     return "exact_unsupported";
        case Errc::no_singular_term:      return "no_singular_term";
        case Errc::non_polynomial:        return "non_polynomial";
        case Errc::no_exact_symbol:       return "no_exact_symbol";
        case Errc::singular_multiplier:   return "singular_multiplier";
        case Errc::diverged:              return "diverged";
        case Errc::degenerate_stabilizer: return "degenerate_stabilizer";
        case Errc::insufficient_data:     return "insufficient_data";
        case Errc::io_error:              return "io_error";
        case Errc::internal:              return "internal";
    }
    return "unknown";
}

} // namespace solwave

#endif
