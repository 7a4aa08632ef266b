#pragma once

#include <stdexcept>
#include <string>

namespace brg {

// Structural problem in a ribbon graph: dangling end, duplicate end,
// unknown edge or vertex identifier.
class GraphError : public std::runtime_error {
  public:
    explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text. line is 1-based; 0 means no line information.
class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    int line() const noexcept { return line_; }

  private:
    int line_;
};

// Subset enumeration over 2^E was refused because E exceeds the configured cap.
class CapExceeded : public std::runtime_error {
  public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace brg
