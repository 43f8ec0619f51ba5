#include "oddzeta/expr.hpp"

#include "oddzeta/zeta.hpp"

#include <cctype>
#include <stdexcept>

namespace oddzeta {

namespace {

class Parser {
 public:
  Parser(const std::string& text, Bits bits) : text_(text), bits_(bits) {}

  HReal parse() {
    HReal value = product();
    skip_space();
    if (pos_ != text_.size()) {
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    }
    return value;
  }

 private:
  // product := power (('*' | '/') power)*
  HReal product() {
    HReal value = power();
    for (;;) {
      if (accept('*')) {
        value *= power();
      } else if (accept('/')) {
        value /= power();
      } else {
        return value;
      }
    }
  }

  // power := atom ('^' ['-'] integer)?
  HReal power() {
    HReal base = atom();
    if (!accept('^')) {
      return base;
    }
    const bool negative = accept('-');
    const long exponent = integer();
    HReal value = pow(base, static_cast<unsigned long>(exponent));
    return negative ? HReal::from_int(1, bits_) / value : value;
  }

  // atom := '-' atom | 'pi' | 'zeta' integer | integer | '(' product ')'
  HReal atom() {
    if (accept('-')) {
      return -atom();
    }
    if (accept('(')) {
      HReal value = product();
      if (!accept(')')) {
        fail("missing ')'");
      }
      return value;
    }
    if (accept_word("pi")) {
      return pi(bits_);
    }
    if (accept_word("zeta")) {
      const long s = integer();
      if (s < 2) {
        fail("zeta needs an integer argument >= 2");
      }
      return zeta_euler_maclaurin(HReal::from_int(s, bits_), bits_);
    }
    skip_space();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      return HReal::from_int(integer(), bits_);
    }
    fail("expected pi, zetaN, an integer or '('");
  }

  long integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_ || pos_ - start > 9) {
      fail("expected a small integer");
    }
    return std::stol(text_.substr(start, pos_ - start));
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept_word(const std::string& word) {
    skip_space();
    if (text_.compare(pos_, word.size(), word) == 0) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("bad expression '" + text_ + "' at position " + std::to_string(pos_) + ": " +
                                what);
  }

  const std::string& text_;
  Bits bits_;
  std::size_t pos_ = 0;
};

}  // namespace

HReal evaluate_expr(const std::string& text, Bits bits) { return Parser(text, bits).parse(); }

}  // namespace oddzeta
