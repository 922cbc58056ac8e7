#pragma once

#include <stdexcept>
#include <string>

namespace torb {

// Malformed or out-of-contract input (bad dimensions, non-coprime moduli,
// invalid characteristic data, unparsable files).
class InputError : public std::runtime_error {
  public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// An exhaustive-search request whose candidate count exceeds the cap.
class BudgetError : public std::runtime_error {
  public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem-level failure (unreadable file, unwritable output).
class IoError : public std::runtime_error {
  public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace torb
