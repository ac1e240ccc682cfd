#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace bmparity {

enum class PassRole { kOver, kUnder, kFlat };

struct Pass {
  int crossing;
  PassRole role;
  int sign;  // +1 or -1
  friend bool operator==(const Pass&, const Pass&) = default;
};

// A validated cyclic sequence of passes. Every crossing occurs exactly twice;
// virtual codes mark one pass O and the other U, flat codes mark neither, and
// both passes of a crossing carry the same sign.
struct GaussCode {
  std::vector<Pass> passes;
  bool virtual_mode = false;

  std::size_t crossing_count() const { return passes.size() / 2; }
  // Crossing ids in increasing order.
  std::vector<int> crossings() const;
  // Positions of the two passes of crossing `id`, in code order.
  std::pair<std::size_t, std::size_t> positions(int id) const;
  // Orientation of (tangent at the first-listed pass, tangent at the second).
  int frame_sign(int id) const;
};

// Grammar: passes ([OU]?)(positive integer)([+-]), optionally separated by
// whitespace or commas. Throws InputError on any violation.
GaussCode parse_gauss_code(std::string_view text);

std::string format_gauss_code(const GaussCode& code);

// The same cyclic code read from pass `offset` on. Flat signs are flipped
// where the two passes of a crossing swap their listing order, so the
// underlying curve is unchanged.
GaussCode rotate_code(const GaussCode& code, std::size_t offset);

}  // namespace bmparity
