#pragma once

#include <cctype>
#include <string>

#include "cqsres/errors.hpp"
#include "cqsres/int_types.hpp"

namespace cqsres {
namespace detail {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  void expect(char c, const char* what) {
    if (peek() != c) throw SyntaxError(std::string("expected ") + what, pos);
    ++pos;
  }
  Int integer() {
    std::size_t start = pos;
    if (peek() == '-') ++pos;
    while (!done() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || (text[start] == '-' && pos == start + 1))
      throw SyntaxError("expected integer", start);
    return Int(text.substr(start, pos - start));
  }
  void finish() {
    if (!done()) throw SyntaxError("trailing input", pos);
  }
};

}  // namespace detail
}  // namespace cqsres
