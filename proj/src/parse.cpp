#include "orbitforge/parse.hpp"

#include <cctype>
#include <stdexcept>

namespace orbitforge {

namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, std::string_view text, const std::map<std::string, Rat>& bindings)
      : ring_(ring), text_(text), bindings_(bindings) {}

  MPoly parse() {
    MPoly p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  const RingPtr& ring_;
  std::string_view text_;
  const std::map<std::string, Rat>& bindings_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument(what + " at offset " + std::to_string(pos_) + " in expression");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MPoly expr() {
    MPoly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MPoly term() {
    MPoly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        MPoly d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc *= Rat(1 / d.constant_term());
      } else {
        return acc;
      }
    }
  }

  MPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MPoly power() {
    MPoly base = atom();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      long e = std::stol(std::string(text_.substr(start, pos_ - start)));
      return base.pow(e);
    }
    return base;
  }

  MPoly atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return MPoly::constant(ring_, Rat(BigInt(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      if (auto it = bindings_.find(name); it != bindings_.end()) return MPoly::constant(ring_, it->second);
      if (auto idx = ring_->find(name)) return MPoly::variable(ring_, *idx);
      fail("unknown name '" + name + "'");
    }
    fail("unexpected character");
  }
};

}  // namespace

MPoly parse_poly(const RingPtr& ring, std::string_view text, const std::map<std::string, Rat>& bindings) {
  return Parser(ring, text, bindings).parse();
}

}  // namespace orbitforge
