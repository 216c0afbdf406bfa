#pragma once

#include <stdexcept>
#include <string>

namespace ccov {

// Every failure mode the library can signal.  The C wrapper maps these onto
// the small status-code surface; inside the C++ core we throw.
enum class errc {
    invalid_argument,     // malformed number, bad address, k < 1, width <= 0 ...
    lambda_out_of_range,  // lambda outside (0, 1/2)
    rank_mismatch,        // pair operations need equal ranks
    order_violation,      // condition requires left(I) <= left(J)
    invalid_bracket,      // root isolation needs opposite nonzero end signs
    negative_input,       // products of intervals are only defined for x, y >= 0
    empty_interval,       // raw interval with lo > hi
    unknown_id,           // no such threshold catalog entry
    not_certified,        // a prerequisite certificate did not pass
    no_window,            // no scaled window admits the target (defensive; see witness.cpp)
    expansion_stalled,    // witness scan hit its rank limit without a bifurcation
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

} // namespace ccov
