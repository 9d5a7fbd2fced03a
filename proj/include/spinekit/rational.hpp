#ifndef SPINEKIT_RATIONAL_HPP
#define SPINEKIT_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spinekit {

// Exact rational scalar used throughout. All arithmetic on canonical values
// stays canonical (lowest terms, positive denominator).
using Rat = mpq_class;

Rat make_rat(long num, long den = 1);

// Parses "p/q", integers ("-11"), and decimal literals ("1.6" -> 8/5).
// No exponents, no floats. Returns nullopt on malformed input.
std::optional<Rat> parse_rational(std::string_view text);

// Canonical form: "p" when the denominator is 1, "p/q" otherwise.
std::string rat_to_string(const Rat& value);

int rat_sign(const Rat& value);

std::string format_rational_vector(const std::vector<Rat>& values);

}  // namespace spinekit

#endif
