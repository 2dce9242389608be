#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bicirc {

// Raised when a lazy group enumeration would exceed its element cap.
// Callers that can degrade (census, analyze) catch this and report the
// affected item as "undecided" instead of failing the whole run.
class CapExceededError : public std::runtime_error {
public:
  CapExceededError(std::uint64_t cap, std::uint64_t reached)
      : std::runtime_error("group enumeration exceeded element cap " +
                           std::to_string(cap) + " (reached " +
                           std::to_string(reached) + " elements)"),
        cap_(cap) {}

  std::uint64_t cap() const { return cap_; }

private:
  std::uint64_t cap_;
};

// Parse failure for text formats (cycle notation, graph6, symbol forms).
// offset is the byte position of the offending input character.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

}  // namespace bicirc
