#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace currents {

// Exact rational scalar used throughout the engine.  mpq_class keeps values
// canonical (reduced, positive denominator), so equality and map ordering
// are well defined.
using Rat = mpq_class;

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

// Parses "p", "-p" or "p/q" with integer p, q.  No floating point accepted.
std::optional<Rat> parse_rational(const std::string& text);

// Renders as "p" or "p/q".
std::string to_string(const Rat& x);

}  // namespace currents
