#include "bmparity/knot.hpp"

#include "bmparity/carter_surface.hpp"

namespace bmparity {

BasedMatrix based_matrix_of_diagram(const GaussCode& code, Ring ring) {
  const std::vector<int> ids = code.crossings();
  std::vector<std::string> labels{kBasepoint};
  for (int id : ids) labels.push_back(std::to_string(id));
  const std::size_t n = ids.size() + 1;
  IntMatrix table(n, IntVector(n, Integer(0)));
  if (!ids.empty()) {
    const HomologyForm form = homology_form(carter_surface(code));
    const HalfClasses halves = half_classes(code);
    std::vector<const IntVector*> cycles{&halves.whole};
    for (int id : ids) cycles.push_back(&halves.left_half.at(id));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        // Row s holds D . D^l_c, so b(c, s) = D^l_c . D as required.
        table[i][j] = normalize(ring, form.intersect(*cycles[i], *cycles[j]));
        table[j][i] = normalize(ring, -form.intersect(*cycles[i], *cycles[j]));
      }
    }
  }
  return BasedMatrix::create(std::move(labels), ring, table);
}

InvariantBundle matrix_invariant_bundle(const BasedMatrix& t) {
  StablePartition stable = stable_partition(t);
  ReducedParity reduced = reduced_parity_pipeline(t);
  ParityMatrix pm = parity_matrix_of(reduced.parity);
  return InvariantBundle{std::nullopt, t, std::move(stable), std::move(reduced), std::move(pm)};
}

InvariantBundle knot_invariant_bundle(const GaussCode& code, Ring ring) {
  InvariantBundle bundle = matrix_invariant_bundle(based_matrix_of_diagram(code, ring));
  bundle.genus = carter_surface(code).genus();
  return bundle;
}

}  // namespace bmparity
