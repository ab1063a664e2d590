#ifndef HYPDUAL_ERRORS_HPP
#define HYPDUAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hypdual {

// All recoverable failures are typed so callers (in particular the random
// instance generator) can reject a bad draw instead of aborting.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class division_by_zero : public error {
public:
    division_by_zero() : error("division by zero") {}
    explicit division_by_zero(const std::string& what) : error(what) {}
};

// A denominator factor of a negative-index Pochhammer product vanished.
class pole_error : public error {
public:
    using error::error;
};

class parse_error : public error {
public:
    using error::error;
};

class element_not_in_set : public error {
public:
    using error::error;
};

// A precondition on the mathematical domain was violated (n_A < n_B,
// invalid instance parameters, bad mod degree, ...).
class domain_violation : public error {
public:
    using error::error;
};

class distinctness_violation : public error {
public:
    using error::error;
};

// M > r+1: no closed form is defined for the duality sum.
class case_out_of_range : public error {
public:
    using error::error;
};

class generation_exhausted : public error {
public:
    using error::error;
};

} // namespace hypdual

#endif // HYPDUAL_ERRORS_HPP
