#pragma once

#include <stdexcept>
#include <string>

namespace hopf {

// Exit-code bearing error categories used by the engines and the CLI.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independent computations disagree.
class InternalMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A requested operation is not expressible in the current exact arithmetic.
class NotExpressible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hopf
