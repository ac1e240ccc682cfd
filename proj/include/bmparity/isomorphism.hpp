#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bmparity/based_matrix.hpp"

namespace bmparity {

// A basepoint-fixing bijection between the label sets of two based matrices,
// stored by index: image[i] is the index in the target of source index i.
struct Isomorphism {
  std::vector<std::size_t> image;

  bool is_identity() const;
  std::map<std::string, std::string> by_label(const BasedMatrix& source,
                                              const BasedMatrix& target) const;
  friend bool operator==(const Isomorphism&, const Isomorphism&) = default;
};

Isomorphism compose(const Isomorphism& second, const Isomorphism& first);
Isomorphism inverse(const Isomorphism& phi);

// True iff phi fixes s, is a bijection, and preserves every pairing value.
bool preserves_pairing(const BasedMatrix& source, const BasedMatrix& target,
                       const Isomorphism& phi);

// Backtracking search pruned by per-element invariants (b(g,s) and the
// multiset of row values). Intended for the small matrices met here.
std::optional<Isomorphism> is_isomorphic(const BasedMatrix& t1, const BasedMatrix& t2);

// The full automorphism group, identity first.
std::vector<Isomorphism> automorphisms(const BasedMatrix& t);

// Cycle notation over labels, e.g. "(1 3)(2 4)"; "()" for the identity.
std::string cycle_notation(const BasedMatrix& t, const Isomorphism& phi);

}  // namespace bmparity
