#include "graphcent/errors.hpp"

namespace graphcent {

const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::self_loop: return "self_loop";
        case errc::duplicate_edge: return "duplicate_edge";
        case errc::vertex_out_of_range: return "vertex_out_of_range";
        case errc::parse_error: return "parse_error";
        case errc::empty_graph: return "empty_graph";
        case errc::not_symmetric: return "not_symmetric";
        case errc::not_psd: return "not_psd";
        case errc::invalid_order: return "invalid_order";
        case errc::invalid_exponent: return "invalid_exponent";
        case errc::all_zero: return "all_zero";
        case errc::too_small: return "too_small";
        case errc::disconnected: return "disconnected";
        case errc::wrong_case: return "wrong_case";
        case errc::infeasible_edge_count: return "infeasible_edge_count";
    }
    return "unknown";
}

} // namespace graphcent
