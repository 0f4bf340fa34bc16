#ifndef FILTRA_ERRORS_HPP
#define FILTRA_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace filtra {

struct dimension_mismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct parse_error : std::runtime_error {
  parse_error(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

// A resource guard tripped (working span grew past the configured cap).
struct span_cap_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computation contradicted a verified identity; never expected to fire.
struct falsification_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace filtra

#endif
