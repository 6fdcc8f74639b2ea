#pragma once

#include <stdexcept>
#include <string>

namespace graphcent {

/// Error categories raised by the library. Each maps to exactly one
/// validation or domain rule; the CLI maps categories to exit codes.
enum class errc {
    self_loop,              ///< edge (i,i) rejected at construction
    duplicate_edge,         ///< repeated unordered pair rejected at construction
    vertex_out_of_range,    ///< endpoint or vertex index outside [0, n)
    parse_error,            ///< malformed graph input (carries line/field context)
    empty_graph,            ///< operation requires at least one edge (m >= 1)
    not_symmetric,          ///< matrix handed to the eigensolver is not symmetric
    not_psd,                ///< eigenvalue below the clamp window on a PSD-expected matrix
    invalid_order,          ///< Renyi order p <= 0 or p == 1
    invalid_exponent,       ///< degree-Theil exponent k <= 0
    all_zero,               ///< characteristic vector with no positive entry
    too_small,              ///< centralization denominator requires n >= 3
    disconnected,           ///< operation requires a connected graph
    wrong_case,             ///< crossing search invoked on a case-B graph
    infeasible_edge_count,  ///< random graph request outside [n-1, n(n-1)/2]
};

/// Stable identifier string for an error category (used in messages and tests).
const char* errc_name(errc code) noexcept;

/// Single exception type carrying an error category plus a human-readable
/// message. Thrown by every fallible operation in the library.
class graph_error : public std::runtime_error {
  public:
    graph_error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message),
          code_(code) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

/// Throw a graph_error with the given category and message.
[[noreturn]] inline void throw_error(errc code, const std::string& message) {
    throw graph_error(code, message);
}

} // namespace graphcent
