#pragma once

#include <stdexcept>
#include <string>

namespace btspin {

// Invalid textual input: PD/Gauss/braid codes, JSON tables, flag values.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Violated mathematical precondition: non-coprime pair, out-of-range m, ...
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Work refused because a configured cap or the exact-arithmetic range was
// exceeded. Callers must treat this as "not computed", never as a result.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace btspin
