#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace folia {

struct SourcePos {
  int line = 1;
  int col = 1;
  std::size_t offset = 0;
};

// Malformed DSL or JSON text. `pos` points at the offending token.
class SyntaxError : public std::runtime_error {
public:
  SyntaxError(SourcePos pos, const std::string& what)
      : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.col) + ": " + what),
        pos_(pos) {}

  SourcePos pos() const { return pos_; }

private:
  SourcePos pos_;
};

// JSON carried the wrong schema version or an unexpected shape.
class SchemaError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An element's indices or structure do not fit its group shape.
class ShapeError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class IssueCode {
  EmptyCycle,
  EmptySupportSlot,
  DuplicateSupportKey,
};

const char* to_string(IssueCode code);

// One pattern-invariant violation; `path` locates the node, e.g.
// "/nat.cyc[1]/int.sup[5]".
struct ValidationIssue {
  IssueCode code;
  std::string path;
};

}  // namespace folia
