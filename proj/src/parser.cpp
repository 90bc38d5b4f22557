#include "charp/parser.hpp"

#include <cctype>
#include <limits>
#include <string>

namespace charp {
namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  MultiPoly run() {
    skip_space();
    if (pos_ == text_.size()) fail("empty expression");
    MultiPoly result = expr();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  MultiPoly factor() {
    skip_space();
    if (accept('-')) return -factor();
    MultiPoly b = base();
    if (accept('^')) {
      skip_space();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("expected a natural exponent");
      }
      b = b.pow(natural_u64());
    }
    return b;
  }

  MultiPoly base() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return literal();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable();
    fail(std::string("unexpected '") + c + "'");
  }

  MultiPoly literal() {
    const std::uint64_t p = ring_->field().characteristic();
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = (value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0')) % p;
      ++pos_;
    }
    return MultiPoly::constant(ring_, static_cast<std::int64_t>(value));
  }

  std::uint64_t natural_u64() {
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (std::numeric_limits<std::uint32_t>::max() - digit) / 10) {
        pos_ = start;
        fail("exponent too large");
      }
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  MultiPoly variable() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string_view name = text_.substr(start, pos_ - start);
    if (!ring_->index_of(name)) {
      pos_ = start;
      fail("unknown variable '" + std::string(name) + "'");
    }
    return MultiPoly::variable(ring_, name);
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse(std::string_view text, const RingPtr& ring) { return Parser(text, ring).run(); }

std::vector<MultiPoly> parse_all(const std::vector<std::string>& texts, const RingPtr& ring) {
  std::vector<MultiPoly> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse(t, ring));
  return out;
}

}  // namespace charp
