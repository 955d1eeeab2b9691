#pragma once
#include <stdexcept>
#include <string>

namespace qrv {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// argument outside an operation's stated domain
struct domain_error : error {
    using error::error;
};

// an exact integral does not converge; message names the offending term
struct divergence_error : error {
    using error::error;
};

// adaptive scheme exhausted its budget; carries the partial result as text
struct convergence_error : error {
    std::string partial;
    convergence_error(const std::string& msg, std::string partial_value)
        : error(msg), partial(std::move(partial_value)) {}
};

// matrix argument too large for the series budget
struct magnitude_error : error {
    using error::error;
};

// projection or contraction collapsed to zero
struct degenerate_error : error {
    using error::error;
};

// an exact sign inequality failed; message names the violated condition
struct certification_error : error {
    using error::error;
};

// malformed or missing coefficient data
struct data_error : error {
    using error::error;
};

}  // namespace qrv
