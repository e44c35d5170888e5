#ifndef CSSGV_ERRORS_HPP
#define CSSGV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cssgv {

// Base class for all toolkit errors. The CLI maps these to exit code 3
// (domain errors); certification failures are reported through Certificate
// statuses, not exceptions.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct dimension_error : error {
    using error::error;
};

// Degree profile violates k_Z | j_Z n or k_Delta | j_Delta n.
struct divisibility_error : error {
    using error::error;
};

struct rank_deficient_error : error {
    using error::error;
};

// SimpleGraph rejection sampling exceeded max_rejections.
struct rejection_limit_error : error {
    using error::error;
};

// Brute-force enumeration cutoff exceeded.
struct too_large_error : error {
    using error::error;
};

struct domain_violation : error {
    using error::error;
};

struct unknown_function_error : error {
    using error::error;
};

// Minus-sign trial exponent evaluated outside log2(1-x) validity.
struct log_domain_error : error {
    using error::error;
};

struct io_error : error {
    using error::error;
};

} // namespace cssgv

#endif
