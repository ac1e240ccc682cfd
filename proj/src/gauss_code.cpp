#include "bmparity/gauss_code.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "bmparity/based_matrix.hpp"

namespace bmparity {

std::vector<int> GaussCode::crossings() const {
  std::vector<int> ids;
  for (const auto& p : passes) ids.push_back(p.crossing);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

std::pair<std::size_t, std::size_t> GaussCode::positions(int id) const {
  std::vector<std::size_t> at;
  for (std::size_t i = 0; i < passes.size(); ++i) {
    if (passes[i].crossing == id) at.push_back(i);
  }
  if (at.size() != 2) throw InputError("crossing " + std::to_string(id) + " is not in the code");
  return {at[0], at[1]};
}

int GaussCode::frame_sign(int id) const {
  const Pass& first = passes[positions(id).first];
  if (first.role == PassRole::kUnder) return -first.sign;
  return first.sign;
}

GaussCode parse_gauss_code(std::string_view text) {
  GaussCode code;
  std::size_t marked = 0;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw InputError("bad Gauss code at offset " + std::to_string(i) + ": " + why);
  };
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      ++i;
      continue;
    }
    Pass pass{0, PassRole::kFlat, 0};
    if (ch == 'O' || ch == 'U') {
      pass.role = ch == 'O' ? PassRole::kOver : PassRole::kUnder;
      ++marked;
      ++i;
    }
    const std::size_t digits = i;
    long value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + (text[i] - '0');
      if (value > 1'000'000) fail("crossing id too large");
      ++i;
    }
    if (i == digits) fail("expected a crossing number");
    if (value == 0) fail("crossing numbers are positive");
    if (i >= text.size() || (text[i] != '+' && text[i] != '-')) fail("expected a sign");
    pass.sign = text[i] == '+' ? 1 : -1;
    pass.crossing = static_cast<int>(value);
    ++i;
    code.passes.push_back(pass);
  }
  if (marked != 0 && marked != code.passes.size()) {
    throw InputError("bad Gauss code: mixes marked and unmarked passes");
  }
  code.virtual_mode = marked != 0;

  std::map<int, std::vector<const Pass*>> seen;
  for (const auto& p : code.passes) seen[p.crossing].push_back(&p);
  for (const auto& [id, ps] : seen) {
    const std::string name = "crossing " + std::to_string(id);
    if (ps.size() != 2) {
      throw InputError("bad Gauss code: " + name + " appears " + std::to_string(ps.size()) +
                       (ps.size() == 1 ? " time" : " times"));
    }
    if (ps[0]->role != ps[1]->role && (ps[0]->role == PassRole::kFlat || ps[1]->role == PassRole::kFlat)) {
      throw InputError("bad Gauss code: " + name + " mixes marked and unmarked passes");
    }
    if (code.virtual_mode && ps[0]->role == ps[1]->role) {
      throw InputError("bad Gauss code: " + name + " needs one O and one U pass");
    }
    if (ps[0]->sign != ps[1]->sign) throw InputError("bad Gauss code: " + name + " has mismatched signs");
  }
  return code;
}

std::string format_gauss_code(const GaussCode& code) {
  std::string out;
  for (const auto& p : code.passes) {
    if (p.role == PassRole::kOver) out += 'O';
    if (p.role == PassRole::kUnder) out += 'U';
    out += std::to_string(p.crossing);
    out += p.sign > 0 ? '+' : '-';
  }
  return out;
}

GaussCode rotate_code(const GaussCode& code, std::size_t offset) {
  GaussCode out;
  out.virtual_mode = code.virtual_mode;
  const std::size_t m = code.passes.size();
  for (std::size_t i = 0; i < m; ++i) out.passes.push_back(code.passes[(i + offset) % m]);
  if (!code.virtual_mode) {
    for (int id : code.crossings()) {
      const auto [a, b] = code.positions(id);
      // The listing order swaps when exactly one pass moves past the cut.
      const bool swapped = (a >= offset % m) != (b >= offset % m);
      if (!swapped) continue;
      for (auto& p : out.passes) {
        if (p.crossing == id) p.sign = -p.sign;
      }
    }
  }
  return out;
}

}  // namespace bmparity
