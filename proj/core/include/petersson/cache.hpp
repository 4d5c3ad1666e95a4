#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "petersson/rat.hpp"

namespace petersson::cache {

// Versioned on-disk memo for Bernoulli numbers and Cohen H values:
//   {"version": 1, "bernoulli": {"6": "1/42"}, "cohenH": {"3,4": "-1/2"}}
// Disabled until configure() is called; loading a missing file is fine.
// save() rewrites atomically (temp file + rename).

void configure(const std::string& path);
bool enabled();
const std::string& path();
void save();
void reset();  // drop state and disable (used by tests)

std::optional<Rat> lookup_bernoulli(unsigned n);
void store_bernoulli(unsigned n, const Rat& v);
std::optional<Rat> lookup_cohen(unsigned r, std::uint64_t N);
void store_cohen(unsigned r, std::uint64_t N, const Rat& v);

}  // namespace petersson::cache
