#pragma once

#include <stdexcept>
#include <string>

namespace patmat {

// 1-based cell coordinates, matching the external text formats.
struct Position {
    int row = 0;
    int col = 0;

    friend bool operator==(const Position&, const Position&) = default;
    friend auto operator<=>(const Position&, const Position&) = default;
};

// Base class for every error thrown by this library.
class error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Input text that does not parse (CLI maps this to exit code 2).
class format_error : public error {
  public:
    using error::error;
};

// Arguments outside an operation's domain, including violated
// preconditions (CLI exit code 1).
class domain_error : public error {
  public:
    using error::error;
};

// Instance exceeds a hard size cap (CLI exit code 3).
class resource_error : public error {
  public:
    using error::error;
};

// A structural requirement failed at a specific cell; carries the cell so
// callers can report exactly where the walk or check got stuck.
class structural_error : public error {
  public:
    structural_error(const std::string& message, Position where)
        : error(message), where_(where) {}

    Position where() const noexcept { return where_; }

  private:
    Position where_;
};

} // namespace patmat
