#pragma once

#include <stdexcept>
#include <string>

namespace tralg
{

/// Malformed literal, netlist or assignment text.
class parse_error : public std::runtime_error
{
public:
  explicit parse_error( const std::string& what ) : std::runtime_error( what ) {}
  parse_error( const std::string& what, std::size_t line )
      : std::runtime_error( "line " + std::to_string( line ) + ": " + what ), line_( line )
  {
  }

  /// 1-based line number, or 0 when the error is not tied to a line.
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_ = 0;
};

/// An enumeration or search would exceed its configured budget.
class budget_exceeded : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Two evaluation routes that must agree did not. Never expected to fire.
class inconsistency_error : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

} // namespace tralg
