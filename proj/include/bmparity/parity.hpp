#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bmparity/abelian_group.hpp"
#include "bmparity/based_matrix.hpp"
#include "bmparity/isomorphism.hpp"
#include "bmparity/partition.hpp"
#include "bmparity/tribes.hpp"

namespace bmparity {

enum class ParityKind { kGaussian, kStable, kHat, kReducedFunctor, kReduced };
std::string_view parity_kind_name(ParityKind kind);

// A parity evaluated on one based matrix. Every element g (basepoint
// included, in label order) has an ambient vector over the coordinate
// columns and its image in the coefficient group. The basepoint's ambient
// vector is the relation the group is presented by, where there is one.
struct ParityAssignment {
  ParityKind kind;
  CanonicalAbelianGroup group;
  std::vector<std::string> labels;         // the rows, equal to T's labels
  std::vector<std::string> column_legend;  // one name per ambient coordinate
  std::vector<LabelSet> columns;           // T-side labels behind each coordinate
  IntMatrix ambient;
  IntMatrix values;

  std::size_t row_of(const std::string& label) const;
  const IntVector& value(const std::string& label) const { return values[row_of(label)]; }
};

// p(g) = b(g, s) in the coefficient ring.
ParityAssignment gaussian_parity(const BasedMatrix& t);

// g -> g + Ann in the module over G minus s modulo the stable annulator.
ParityAssignment stable_parity_functor(const BasedMatrix& t);

// Block sums b(g, chi_C) over all blocks of p, modulo the basepoint row.
ParityAssignment hat_parity_functor(const BasedMatrix& t, const Partition& p);

// Block sums with the floor(|C|/2) b(g,s) correction over the primitive
// stable tribes other than the zero tribe.
ParityAssignment reduced_parity_functor(const BasedMatrix& t);

// Everything reduced_parity computes on the way, kept for reporting.
struct ReducedParity {
  TribeTags tags;
  TribeCorrespondence correspondence;
  std::vector<Isomorphism> automorphisms;  // of tags.primitive
  Partition bar_partition;                 // Aut-coarsened stable partition of tags.primitive
  ParityAssignment parity;
};

// Same correction over the Aut-merged primitive classes. Columns are ordered
// by the smallest member of the class on the reduced side and named by the
// reduced matrix's labels.
ReducedParity reduced_parity_pipeline(const BasedMatrix& t);
ParityAssignment reduced_parity(const BasedMatrix& t);

// Rows s then G minus s, columns the bar classes with {s} first.
struct ParityMatrix {
  std::vector<std::string> row_labels;
  std::vector<std::string> column_legend;
  IntMatrix rows;
};

ParityMatrix parity_matrix_report(const BasedMatrix& t);
ParityMatrix parity_matrix_of(const ParityAssignment& p);

// Plain text with a rule under the s row and after the s column.
std::string format_parity_matrix(const ParityMatrix& m);

// "{5,6,7}", or "s" for the basepoint block.
std::string class_name(const LabelSet& labels);

}  // namespace bmparity
