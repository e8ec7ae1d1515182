#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kempe {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Structural violation while building a graph (loop, parallel edge, bad index).
class GraphError : public Error {
  public:
    using Error::Error;
};

/// Malformed serialized input. `offset` is the byte offset into the input
/// when known; `path` names the offending JSON location when known.
class ParseError : public Error {
  public:
    ParseError(const std::string & what, std::size_t offset, std::string path = {}) :
        Error(what), offset_(offset), path_(std::move(path))
    {
    }

    auto offset() const -> std::size_t { return offset_; }
    auto path() const -> const std::string & { return path_; }

  private:
    std::size_t offset_;
    std::string path_;
};

/// An instance (coloring, transversal, pattern) that violates its invariants.
class InstanceError : public Error {
  public:
    using Error::Error;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public Error {
  public:
    using Error::Error;
};

class SizeLimitError : public PreconditionError {
  public:
    using PreconditionError::PreconditionError;
};

class BudgetExceeded : public Error {
  public:
    using Error::Error;
};

} // namespace kempe
