#include "bmparity/integer.hpp"

namespace bmparity {

std::string_view ring_name(Ring ring) { return ring == Ring::kZ ? "Z" : "Z2"; }

std::optional<Ring> parse_ring(std::string_view text) {
  if (text == "Z" || text == "z") return Ring::kZ;
  if (text == "Z2" || text == "z2") return Ring::kZ2;
  return std::nullopt;
}

Integer normalize(Ring ring, const Integer& value) {
  if (ring == Ring::kZ) return value;
  return mod_floor(value, 2);
}

void normalize_in_place(Ring ring, IntVector& v) {
  if (ring == Ring::kZ) return;
  for (auto& x : v) x = mod_floor(x, 2);
}

bool is_zero(const IntVector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

IntVector zero_vector(std::size_t n) { return IntVector(n, Integer(0)); }

IntVector unit_vector(std::size_t n, std::size_t i) {
  IntVector v(n, Integer(0));
  v[i] = 1;
  return v;
}

Integer floor_div(const Integer& n, const Integer& d) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

Integer mod_floor(const Integer& n, const Integer& d) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return r;
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const IntVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].get_str();
  }
  return out + ")";
}

}  // namespace bmparity
