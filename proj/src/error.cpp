#include "comb/error.hpp"

namespace comb {

std::string SourceSpan::to_string() const {
  std::string out = file.empty() ? "<input>" : file;
  out += ":" + std::to_string(line) + ":" + std::to_string(column);
  if (column_end > column + 1) out += "-" + std::to_string(column_end - 1);
  return out;
}

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "syntax error";
    case ErrorKind::Type: return "type error";
    case ErrorKind::BackendMismatch: return "backend mismatch";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Factorization: return "factorization check failed";
    case ErrorKind::FamilyShape: return "family shape error";
    case ErrorKind::ResourceLimit: return "resource limit";
    case ErrorKind::Io: return "i/o error";
    case ErrorKind::Usage: return "usage error";
  }
  return "error";
}

namespace {
std::string render(ErrorKind kind, const std::string& message,
                   const std::optional<SourceSpan>& span) {
  std::string out;
  if (span) out += span->to_string() + ": ";
  out += to_string(kind);
  out += ": ";
  out += message;
  return out;
}
}  // namespace

Error::Error(ErrorKind kind, const std::string& message,
             std::optional<SourceSpan> span)
    : std::runtime_error(render(kind, message, span)),
      kind_(kind),
      span_(std::move(span)),
      detail_(message) {}

void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace comb
