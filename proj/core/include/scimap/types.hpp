#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace scimap {

using VertexId = std::uint32_t;

/// Dense integer handle plus the journal title abbreviation it stands for.
struct JournalId {
  VertexId index = 0;
  std::string label;

  friend bool operator==(const JournalId&, const JournalId&) = default;
};

/// Malformed or inconsistent user input. The CLI maps this to exit code 1;
/// anything escaping as std::logic_error is an internal invariant violation
/// and maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace scimap
