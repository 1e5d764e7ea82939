#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace comb {

struct SourceSpan {
  std::string file;
  std::size_t line = 0;
  std::size_t column = 0;      // first column, 1-based
  std::size_t column_end = 0;  // one past the last column

  std::string to_string() const;
  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

enum class ErrorKind {
  Syntax,
  Type,
  BackendMismatch,
  Unsupported,
  Factorization,
  FamilyShape,
  ResourceLimit,
  Io,
  Usage,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<SourceSpan> span = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  const std::optional<SourceSpan>& span() const noexcept { return span_; }
  // Message without the span prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::optional<SourceSpan> span_;
  std::string detail_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace comb
