#pragma once

#include <stdexcept>
#include <string>

namespace gft {

/// Base class of every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class division_by_near_zero_constant_term : public error {
public:
    explicit division_by_near_zero_constant_term(const std::string& what) : error(what) {}
};

class inner_constant_term_nonzero : public error {
public:
    explicit inner_constant_term_nonzero(const std::string& what) : error(what) {}
};

class constant_term_not_one : public error {
public:
    explicit constant_term_not_one(const std::string& what) : error(what) {}
};

class order_too_low : public error {
public:
    explicit order_too_low(const std::string& what) : error(what) {}
};

class index_out_of_range : public error {
public:
    explicit index_out_of_range(const std::string& what) : error(what) {}
};

class invalid_phi : public error {
public:
    explicit invalid_phi(const std::string& what) : error(what) {}
};

class invalid_janowski_parameters : public invalid_phi {
public:
    explicit invalid_janowski_parameters(const std::string& what) : invalid_phi(what) {}
};

class invalid_sample : public error {
public:
    explicit invalid_sample(const std::string& what) : error(what) {}
};

/// Raised when an operation needs a theorem's hypotheses and they fail.
class hypothesis_gate_failed : public error {
public:
    explicit hypothesis_gate_failed(const std::string& what) : error(what) {}
};

} // namespace gft
