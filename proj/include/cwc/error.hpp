#pragma once

#include <stdexcept>
#include <string>

namespace cwc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An argument contract was violated (bad parameter combination, wrong sizes).
struct PreconditionError : Error {
    using Error::Error;
};

// A bounded or randomized search ran out of budget before finding a witness.
struct BudgetError : Error {
    using Error::Error;
};

// A constructed or loaded object failed its own validity check.
struct ValidationError : Error {
    using Error::Error;
};

}  // namespace cwc
