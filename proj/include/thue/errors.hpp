#pragma once

#include <stdexcept>
#include <string>

namespace thue {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// seq
struct AlphabetOverlapError : Error { using Error::Error; };
struct OutOfAlphabetError : Error { using Error::Error; };

// graph
struct DisconnectedError : Error { using Error::Error; };
struct InvalidGraphError : Error { using Error::Error; };

// colour
struct IncompleteColouringError : Error { using Error::Error; };

// solver
struct TooLargeError : Error { using Error::Error; };

// construct
struct ConstructionFailedError : Error { using Error::Error; };
struct BudgetExhaustedError : Error { using Error::Error; };

// lll
struct DeltaTooSmallError : Error { using Error::Error; };

// io
struct ParseError : Error { using Error::Error; };

} // namespace thue
