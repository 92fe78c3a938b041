#pragma once

#include <stdexcept>
#include <string>

namespace trinet {

/// Point outside the triangle or argument outside an operator's interval.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Unknown registry name, bad node count, inconsistent options.
class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

} // namespace trinet
