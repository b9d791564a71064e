#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace revsynth
{

/*! \brief Malformed textual input.  line() is 1-based, 0 when not tied to a line. */
class parse_error : public std::runtime_error
{
public:
  parse_error( const std::string& what, std::size_t line = 0u )
      : std::runtime_error( line == 0u ? what : "line " + std::to_string( line ) + ": " + what ),
        line_( line )
  {
  }

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/*! \brief A synthesis result failed one of its own post-conditions. */
class invariant_error : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

} // namespace revsynth
