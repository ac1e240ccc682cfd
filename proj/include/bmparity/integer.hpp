#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bmparity {

// Arbitrary precision integers are used for every pairing value and every
// presentation matrix, so no computation here can overflow.
using Integer = mpz_class;
using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

// Coefficient ring of a based matrix.
enum class Ring { kZ, kZ2 };

std::string_view ring_name(Ring ring);
std::optional<Ring> parse_ring(std::string_view text);

// Canonical representative of `value` in `ring`: unchanged over Z, the least
// non-negative residue over Z2.
Integer normalize(Ring ring, const Integer& value);
void normalize_in_place(Ring ring, IntVector& v);

bool is_zero(const IntVector& v);
IntVector zero_vector(std::size_t n);
IntVector unit_vector(std::size_t n, std::size_t i);

// Floor division and the matching non-negative remainder (for d > 0).
Integer floor_div(const Integer& n, const Integer& d);
Integer mod_floor(const Integer& n, const Integer& d);

std::string to_string(const Integer& value);
std::string to_string(const IntVector& v);

}  // namespace bmparity
