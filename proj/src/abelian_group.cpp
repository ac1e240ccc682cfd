#include "bmparity/abelian_group.hpp"

#include <map>
#include <stdexcept>

namespace bmparity {

CanonicalAbelianGroup::CanonicalAbelianGroup(std::size_t ambient_dimension, Ring ring,
                                             IntMatrix relations)
    : ambient_dimension_(ambient_dimension), ring_(ring), relations_(std::move(relations)) {
  for (const auto& r : relations_) {
    if (r.size() != ambient_dimension_) throw std::invalid_argument("relation has wrong length");
  }
  if (ring_ == Ring::kZ2) {
    linalg::BitMatrix bits;
    for (const auto& r : relations_) bits.push_back(linalg::to_bits(r));
    echelon_ = linalg::rref_gf2(std::move(bits), ambient_dimension_);
    std::vector<char> pivot(ambient_dimension_, 0);
    for (auto p : echelon_.pivots) pivot[p] = 1;
    for (std::size_t j = 0; j < ambient_dimension_; ++j) {
      if (!pivot[j]) {
        kept_columns_.push_back(j);
        moduli_.push_back(2);
        factors_.push_back(2);
      }
    }
    return;
  }
  const linalg::SmithForm snf = linalg::smith_normal_form(relations_, ambient_dimension_);
  transform_ = snf.column_transform;
  const std::size_t rank = snf.diagonal.size();
  free_rank_ = ambient_dimension_ - rank;
  for (std::size_t j = rank; j < ambient_dimension_; ++j) {
    kept_columns_.push_back(j);
    moduli_.push_back(0);
  }
  for (std::size_t i = 0; i < rank; ++i) {
    if (snf.diagonal[i] == 1) continue;
    kept_columns_.push_back(i);
    moduli_.push_back(snf.diagonal[i]);
    factors_.push_back(snf.diagonal[i]);
  }
}

IntVector CanonicalAbelianGroup::canonicalize(IntVector coords) const {
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (moduli_[i] != 0) coords[i] = mod_floor(coords[i], moduli_[i]);
  }
  return coords;
}

IntVector CanonicalAbelianGroup::reduce(const IntVector& ambient) const {
  if (ambient.size() != ambient_dimension_) throw std::invalid_argument("reduce: wrong dimension");
  IntVector out;
  if (ring_ == Ring::kZ2) {
    linalg::BitVector bits = linalg::to_bits(ambient);
    linalg::reduce_gf2(echelon_, bits);
    for (auto j : kept_columns_) out.push_back(bits[j]);
    return out;
  }
  const IntVector image = linalg::multiply_row(ambient, transform_, ambient_dimension_);
  for (auto j : kept_columns_) out.push_back(image[j]);
  return canonicalize(std::move(out));
}

IntVector CanonicalAbelianGroup::add(const IntVector& a, const IntVector& b) const {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return canonicalize(std::move(out));
}

IntVector CanonicalAbelianGroup::negate(const IntVector& a) const {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return canonicalize(std::move(out));
}

bool CanonicalAbelianGroup::is_zero(const IntVector& canonical) const {
  return bmparity::is_zero(canonicalize(canonical));
}

std::string CanonicalAbelianGroup::signature() const {
  std::string out;
  if (free_rank_ > 0) out = free_rank_ == 1 ? "Z" : "Z^" + std::to_string(free_rank_);
  std::map<Integer, std::size_t, std::less<>> counts;
  std::vector<Integer> order;
  for (const auto& d : factors_) {
    if (counts[d]++ == 0) order.push_back(d);
  }
  for (const auto& d : order) {
    if (!out.empty()) out += " + ";
    out += "Z" + d.get_str();
    if (counts[d] > 1) out += "^" + std::to_string(counts[d]);
  }
  return out.empty() ? "0" : out;
}

CanonicalAbelianGroup quotient_group(std::size_t ambient_dimension, Ring ring,
                                     const IntMatrix& relations) {
  return CanonicalAbelianGroup(ambient_dimension, ring, relations);
}

}  // namespace bmparity
