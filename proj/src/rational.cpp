#include "delaycode/rational.hpp"

#include "delaycode/error.hpp"

#include <cctype>
#include <cstdlib>
#include <string>

namespace delaycode {

bool guard_override() {
  const char* value = std::getenv("DELAYCODE_GUARD_OVERRIDE");
  return value != nullptr && std::string(value) == "1";
}

std::string to_fraction(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

std::string to_decimal(const Rational& value, int digits) {
  BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  const bool negative = num < 0;
  if (negative) {
    num = -num;
  }
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) {
    scale *= 10;
  }
  // round half up on the absolute value
  BigInt scaled = (num * scale * 2 + den) / (den * 2);
  BigInt whole = scaled / scale;
  BigInt frac = scaled % scale;
  std::string out = negative && scaled != 0 ? "-" : "";
  out += whole.str();
  if (digits > 0) {
    std::string tail = frac.str();
    out += "." + std::string(static_cast<std::size_t>(digits) - tail.size(), '0') + tail;
  }
  return out;
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    i = 1;
  }
  if (i == text.size()) {
    throw ParseError("malformed fraction '" + std::string(whole) + "'");
  }
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      if (text[j] == '.' || text[j] == 'e' || text[j] == 'E') {
        throw ParseError("decimal probabilities are not accepted, use n/d: '" + std::string(whole) + "'");
      }
      throw ParseError("malformed fraction '" + std::string(whole) + "'");
    }
  }
  return BigInt(std::string(text));
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  return text;
}

}  // namespace

Rational parse_fraction(std::string_view text) {
  const std::string_view whole = trim(text);
  const auto slash = whole.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(whole, whole));
  }
  const BigInt num = parse_integer(trim(whole.substr(0, slash)), whole);
  const BigInt den = parse_integer(trim(whole.substr(slash + 1)), whole);
  if (den == 0) {
    throw ParseError("zero denominator in '" + std::string(whole) + "'");
  }
  return Rational(num, den);
}

std::optional<std::vector<Rational>> solve_unique(std::vector<std::vector<Rational>> A,
                                                  std::vector<Rational> b) {
  const std::size_t rows = A.size();
  const std::size_t cols = rows == 0 ? 0 : A[0].size();
  std::size_t r = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && A[p][c] == 0) {
      ++p;
    }
    if (p == rows) {
      return std::nullopt;  // free variable
    }
    std::swap(A[p], A[r]);
    std::swap(b[p], b[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) {
        continue;
      }
      const Rational factor = A[i][c] / A[r][c];
      for (std::size_t j = c; j < cols; ++j) {
        A[i][j] -= factor * A[r][j];
      }
      b[i] -= factor * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r < cols) {
    return std::nullopt;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (b[i] != 0) {
      return std::nullopt;  // inconsistent
    }
  }
  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < r; ++i) {
    x[pivot_col[i]] = b[i] / A[i][pivot_col[i]];
  }
  return x;
}

}  // namespace delaycode
