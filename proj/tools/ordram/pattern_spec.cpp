#include "pattern_spec.hpp"

#include <cctype>
#include <filesystem>

#include "ordram/graph_io.hpp"

namespace ordram::cli {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  OrderedGraph parse() {
    OrderedGraph g = spec(false);
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw PatternSyntaxError(pos_, what + " at position " + std::to_string(pos_));
  }

  bool accept(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  int number(int min) {
    const std::size_t start = pos_;
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) fail("number too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    if (value < min) {
      pos_ = start;
      fail("value must be at least " + std::to_string(min));
    }
    return static_cast<int>(value);
  }

  OrderedGraph spec(bool nested) {
    if (accept("nm:")) return nested_matching(number(1));
    if (accept("k:")) return complete_graph(number(1));
    if (accept("path:")) return monotone_path(number(1));
    if (accept("star:")) {
      const int l = number(1);
      expect(',');
      return ordered_star(l, number(1));
    }
    if (accept("join(")) {
      OrderedGraph g = spec(true);
      while (accept("+")) g = join(g, spec(true));
      expect(')');
      return g;
    }
    if (accept("file:")) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && !(nested && (text_[pos_] == '+' || text_[pos_] == ')'))) ++pos_;
      if (pos_ == start) fail("expected a file path");
      const std::string path(text_.substr(start, pos_ - start));
      try {
        return read_graph_file(path);
      } catch (const ParseError& e) {
        throw PatternSyntaxError(start, path + ":" + std::to_string(e.line()) + ": " + e.what());
      } catch (const std::exception& e) {
        throw PatternSyntaxError(start, e.what());
      }
    }
    fail("expected nm:, k:, path:, star:, join( or file:");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

OrderedGraph pattern_spec_parse(std::string_view text) { return Parser(text).parse(); }

OrderedGraph parse_graph_argument(const std::string& text) {
  for (std::string_view prefix : {"nm:", "k:", "path:", "star:", "join(", "file:"}) {
    if (text.rfind(prefix, 0) == 0) return pattern_spec_parse(text);
  }
  return read_graph_file(text);
}

}  // namespace ordram::cli
