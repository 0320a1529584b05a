#pragma once

#include <optional>
#include <string>

#include "thompson/cayley.hpp"

namespace thompson {

// Gzip-compressed ball cache. One file per radius: a JSON header line
// {format, generators, radius, count, engine_hash} followed by one
// "<canonical serialization>\t<depth>" line per element. A header that
// does not match the current engine hash is treated as a miss.
namespace ball_cache {

std::string file_name(int radius);
std::string engine_hash();

std::optional<Ball> load(const std::string& dir, int radius);
void save(const std::string& dir, const Ball& ball);

// Loads when possible, otherwise computes (and saves if dir is nonempty).
Ball load_or_compute(const std::string& dir, int radius,
                     const SearchLimits& limits = {});

}  // namespace ball_cache

}  // namespace thompson
