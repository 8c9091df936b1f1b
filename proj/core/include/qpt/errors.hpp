#pragma once

#include <stdexcept>
#include <string>

namespace qpt {

/* Error taxonomy shared by the whole library.  Shape problems (mismatched
 * dimensions, bad mask lengths) are structural; value-level precondition
 * failures (non-Hermitian input, trace far from one) are contract
 * violations; convergence failures and failed internal cross-checks are
 * numerical; malformed input files are parse errors.  Bad scalar arguments
 * and out-of-range indices use std::invalid_argument / std::out_of_range. */

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class StructuralError : public Error {
public:
    using Error::Error;
};

class ContractViolation : public Error {
public:
    using Error::Error;
};

class NumericalError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace qpt
