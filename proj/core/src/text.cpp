#include "stanley/text.hpp"

#include <cctype>
#include <limits>
#include <vector>

#include "stanley/error.hpp"

namespace stanley {

namespace {

class Scanner {
public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool accept_word(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) fail(std::string("expected ") + what);
  }

  // Unsigned decimal; saturates instead of overflowing so callers can report caps.
  long long number(const char* what) {
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail(std::string("expected ") + what);
    }
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (value < std::numeric_limits<int>::max()) value = value * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return value;
  }

  std::size_t position() const { return pos_; }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

using Term = std::vector<std::pair<int, long long>>;  // (1-based var, exponent)

Term parse_term(Scanner& in) {
  Term term;
  if (in.peek() == '1') {
    in.number("1");
    return term;
  }
  do {
    if (!in.accept('x')) in.fail("expected variable 'x<i>'");
    long long var = in.number("variable index");
    if (var < 1) in.fail("variable indices start at 1");
    long long exp = 1;
    if (in.accept('^')) exp = in.number("exponent");
    term.emplace_back(static_cast<int>(var), exp);
  } while (in.accept('*'));
  return term;
}

}  // namespace

MonomialIdeal parse_ideal(std::string_view text, const ParseOptions& options) {
  Scanner in(text);
  std::optional<int> header;
  if (in.accept_word("ring")) {
    long long n = in.number("variable count after 'ring'");
    if (n < 1 || n > kMaxVariables) in.fail("ring size must be between 1 and " + std::to_string(kMaxVariables));
    header = static_cast<int>(n);
    if (!in.accept(';')) in.accept(':');
  }

  std::vector<Term> terms;
  bool zero = false;
  if (in.at_end()) in.fail("empty ideal body");
  if (in.peek() == '0') {
    in.number("0");
    zero = true;
  } else {
    terms.push_back(parse_term(in));
    while (in.accept(',')) terms.push_back(parse_term(in));
  }
  if (!in.at_end()) in.fail("unexpected character '" + std::string(1, in.peek()) + "'");

  int max_var = 1;
  for (const auto& t : terms) {
    for (auto [v, e] : t) max_var = std::max(max_var, v);
  }
  int n = options.nvars.value_or(header.value_or(max_var));
  if (max_var > n) {
    throw ParseError("variable x" + std::to_string(max_var) + " outside ring of " + std::to_string(n) +
                         " variables",
                     0);
  }

  RingCtx ring(n, options.exponent_cap);
  if (zero) return MonomialIdeal::zero(ring);
  std::vector<Monomial> gens;
  for (const auto& t : terms) {
    Monomial m(n);
    for (auto [v, e] : t) {
      long long total = static_cast<long long>(m[v - 1]) + e;
      if (total > options.exponent_cap) {
        throw ExponentCapError("exponent " + std::to_string(total) + " of x" + std::to_string(v) +
                               " exceeds cap " + std::to_string(options.exponent_cap));
      }
      m[v - 1] = static_cast<Exponent>(total);
    }
    gens.push_back(std::move(m));
  }
  return MonomialIdeal(ring, std::move(gens));
}

}  // namespace stanley
