#ifndef OCW_ERROR_HPP
#define OCW_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ocw {

// Invalid caller input: bad vertex id, violated operation precondition.
class argument_error : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A configured cap was exceeded (group order, value-set size, Φ count...).
class resource_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Text that does not conform to a grammar; carries the offending position
// (0-based character offset, or line number for line-oriented formats).
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A stated mathematical hypothesis does not hold for the given inputs
// (e.g. the commutator-lift hypothesis); names a violating witness.
class precondition_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A relation the theory guarantees failed to hold: implementation bug.
class internal_error : public std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace ocw

#endif
