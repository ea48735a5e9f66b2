#pragma once

#include <string>
#include <string_view>

#include "hankel/measure.hpp"
#include "hankel/spaces.hpp"

namespace hankel {

/// Parses "lebesgue", "atomic:[(t,c),...]" or "density:gamma=<g>,delta=<d>,c=<c>"
/// (delta defaults to 0, c to 1). Numbers are read with std::from_chars, so decimal
/// literals round exactly as the C++ standard prescribes. Throws ParseError carrying the
/// byte offset of the problem; constructor errors are reported as ParseError at offset 0.
Measure parse_measure(std::string_view text);

/// Parses "hardy:p=<p>", "bergman:p=<p>,alpha=<a>", "dirichlet:p=<p>,alpha=<a>", "bloch",
/// "logbloch:gamma=<g>", "logbergman1:gamma=<g>", "logdirichlet1:gamma=<g>".
SpaceSpec parse_space(std::string_view text);

/// Canonical literals using shortest round-trip number formatting.
std::string to_literal(const Measure& m);
std::string to_literal(const SpaceSpec& s);

/// Shortest decimal string that reads back to the same double.
std::string format_double(double x);

}  // namespace hankel
