#pragma once

#include <stdexcept>
#include <string>

namespace veer {

struct MalformedWord : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct StrandMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidGrid : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct MalformedJson : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SizeLimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace veer
