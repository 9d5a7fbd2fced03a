#include "spinekit/rational.hpp"

#include <cctype>
#include <sstream>

namespace spinekit {

Rat make_rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rat> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) return std::nullopt;

  std::string num_digits;
  std::string den_digits;
  auto slash = text.find('/');
  auto dot = text.find('.');
  if (slash != std::string_view::npos) {
    if (dot != std::string_view::npos) return std::nullopt;
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    num_digits = std::string(num);
    den_digits = std::string(den);
    if (den_digits.find_first_not_of('0') == std::string::npos) return std::nullopt;
  } else if (dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (whole.empty() && frac.empty()) return std::nullopt;
    if (!whole.empty() && !all_digits(whole)) return std::nullopt;
    if (!frac.empty() && !all_digits(frac)) return std::nullopt;
    num_digits = std::string(whole) + std::string(frac);
    if (num_digits.empty()) return std::nullopt;
    den_digits = "1" + std::string(frac.size(), '0');
  } else {
    if (!all_digits(text)) return std::nullopt;
    num_digits = std::string(text);
    den_digits = "1";
  }

  mpz_class num(num_digits, 10);
  mpz_class den(den_digits, 10);
  Rat r(num, den);
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

std::string rat_to_string(const Rat& value) { return value.get_str(); }

int rat_sign(const Rat& value) { return sgn(value); }

std::string format_rational_vector(const std::vector<Rat>& values) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << ", ";
    out << values[i].get_str();
  }
  out << ")";
  return out.str();
}

}  // namespace spinekit
