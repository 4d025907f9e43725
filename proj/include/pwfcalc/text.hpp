#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "pwfcalc/error.hpp"

namespace pwfcalc {

// Minimal cursor over literal text shared by all the grammars.
class Cursor {
public:
  explicit Cursor(std::string_view src) : src_(src) {}

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= src_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }
  char peek_raw() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
  bool starts_with(std::string_view s) {
    skip_ws();
    return src_.substr(pos_, s.size()) == s;
  }
  bool accept(std::string_view s) {
    if (!starts_with(s)) return false;
    pos_ += s.size();
    return true;
  }
  // Accepts a keyword only when it is not followed by an identifier character.
  bool accept_keyword(std::string_view s) {
    if (!starts_with(s)) return false;
    std::size_t end = pos_ + s.size();
    if (end < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_'))
      return false;
    pos_ = end;
    return true;
  }
  void expect(std::string_view s) {
    if (!accept(s)) fail("expected '" + std::string(s) + "'");
  }
  bool peek_digit() {
    skip_ws();
    return pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]));
  }
  std::uint64_t natural() {
    skip_ws();
    if (!peek_digit()) fail("expected a natural number");
    std::uint64_t v = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(src_[pos_] - '0');
      ++pos_;
    }
    return v;
  }
  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_' || src_[pos_] == '\''))
      ++pos_;
    if (start == pos_) fail("expected an identifier");
    return std::string(src_.substr(start, pos_ - start));
  }
  void advance(std::size_t n = 1) { pos_ += n; }
  std::size_t pos() const { return pos_; }
  void reset(std::size_t p) { pos_ = p; }
  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::parse, msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(src_) + "\"");
  }

private:
  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace pwfcalc
