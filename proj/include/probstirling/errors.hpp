#pragma once

#include <stdexcept>
#include <string>

namespace probstirling {

// A mathematical precondition of an operation does not hold (zero mean for
// first-kind numbers, non-delta series handed to a reversion, u = 1 for
// Frobenius-Euler numbers, ...).
class PreconditionError : public std::domain_error {
public:
    explicit PreconditionError(const std::string& what) : std::domain_error(what) {}
};

// The requested quantity has no closed form in the catalog.
class NotAvailableError : public std::domain_error {
public:
    explicit NotAvailableError(const std::string& what) : std::domain_error(what) {}
};

} // namespace probstirling
