#pragma once

#include <stdexcept>
#include <string>

namespace lsc {

/// Two sequences (or a sequence and a set) disagree on the truncation length K.
class dimension_mismatch : public std::invalid_argument {
public:
    explicit dimension_mismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Operation on a parameter value whose set is empty (flagged, not exceptional
/// at construction time; raised when a point query or sample is requested).
class empty_set_error : public std::runtime_error {
public:
    explicit empty_set_error(const std::string& what) : std::runtime_error(what) {}
};

/// File could not be opened, read, or written.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace lsc
