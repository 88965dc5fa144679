#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace opmine {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Frame construction problems: empty/duplicate element names, size out of range.
class FrameError : public Error {
public:
    using Error::Error;
};

/// Two values built over different frames were combined, or a name/mask does
/// not belong to the frame it was used with.
class FrameMismatchError : public Error {
public:
    using Error::Error;
};

/// Masses of a BBA do not sum to 1 within tolerance.
class MassSumError : public Error {
public:
    using Error::Error;
};

/// Positive mass assigned to the empty set.
class EmptyFocalError : public Error {
public:
    using Error::Error;
};

/// A numeric argument is outside its documented domain.
class RangeError : public Error {
public:
    using Error::Error;
};

/// File could not be opened, read or written.
class IoError : public Error {
public:
    using Error::Error;
};

/// Structurally malformed persistent input; the message carries a JSON-path
/// style location ("$.rows[2].cells[0][1].set").
class SchemaError : public Error {
public:
    using Error::Error;
};

/// Unknown evaluation/confidence label in survey input.
class LabelError : public Error {
public:
    LabelError(const std::string& what, std::size_t line, std::size_t column)
        : Error(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    explicit LabelError(const std::string& what) : Error(what) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_ = 0;    // 1-based; 0 = not tied to a file position
    std::size_t column_ = 0;  // 1-based CSV column
};

/// Input too large for an intentionally exponential reference algorithm.
class SizeError : public Error {
public:
    using Error::Error;
};

}  // namespace opmine
