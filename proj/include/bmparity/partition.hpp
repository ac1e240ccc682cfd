#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bmparity/based_matrix.hpp"
#include "bmparity/linalg.hpp"

namespace bmparity {

using LabelSet = std::vector<std::string>;

// A partition of the index set {0, ..., n-1} of a based matrix in which the
// basepoint 0 forms its own block. Blocks are sorted internally and ordered
// by their smallest member, so {s} is always block 0.
class Partition {
 public:
  static Partition discrete(std::size_t ground_size);
  // Throws InputError unless the blocks are disjoint, nonempty, cover
  // {0..n-1} and contain {0} as a block.
  static Partition from_blocks(std::size_t ground_size, std::vector<std::vector<std::size_t>> blocks);
  static Partition from_labels(const BasedMatrix& t, const std::vector<LabelSet>& blocks);

  std::size_t ground_size() const { return block_of_.size(); }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
  const std::vector<std::size_t>& block(std::size_t i) const { return blocks_[i]; }
  std::size_t block_of(std::size_t element) const { return block_of_[element]; }

  // True iff every block of `coarser` is a union of blocks of *this.
  bool refines(const Partition& coarser) const;

  std::vector<LabelSet> labels(const BasedMatrix& t) const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.blocks_ == b.blocks_; }

 private:
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::size_t> block_of_;
};

LabelSet block_labels(const BasedMatrix& t, const std::vector<std::size_t>& block);

// The blocks of `p` (a partition of `source`) intersected with the labels of
// `target`, dropping empty intersections, as a partition of `target`. Labels
// of `target` absent from `source` become singletons.
Partition restrict_partition(const BasedMatrix& source, const Partition& p, const BasedMatrix& target);

Partition discrete_partition(const BasedMatrix& t);

// The subgroup (over Z) or subspace (over Z2) of vectors v over G minus s for
// which some k gives b(v, chi_C) = k b(s, chi_C) on every block C. Over Z the
// basis is in Hermite normal form, over Z2 in reduced row echelon form.
// Coordinate i of a vector corresponds to label index i + 1.
class AnnulatorModule {
 public:
  AnnulatorModule(Ring ring, std::size_t dimension, IntMatrix basis);

  Ring ring() const { return ring_; }
  std::size_t dimension() const { return dimension_; }
  const IntMatrix& basis() const { return basis_; }

  bool contains(const IntVector& v) const;
  bool contains_all(const AnnulatorModule& other) const;

  // Generators of the annulator as a subgroup of Z[G minus s]. Over Z2 this
  // adds 2 * e_i for every coordinate in front of the echelon basis.
  IntMatrix integral_generators() const;

  friend bool operator==(const AnnulatorModule& a, const AnnulatorModule& b) {
    return a.ring_ == b.ring_ && a.dimension_ == b.dimension_ && a.basis_ == b.basis_;
  }

 private:
  Ring ring_;
  std::size_t dimension_;
  IntMatrix basis_;
  linalg::EchelonGf2 echelon_;
};

// b(g, chi_C) for every row g (basepoint included) and block C.
IntMatrix block_sums(const BasedMatrix& t, const Partition& p);

AnnulatorModule annulator(const BasedMatrix& t, const Partition& p);

// {s} together with the classes of g1 ~ g2 <=> g1 - g2 or g1 + g2 in Ann(p).
// Throws std::logic_error if the relation fails to be transitive.
Partition derive(const BasedMatrix& t, const Partition& p);

struct StablePartition {
  Partition partition;
  std::size_t derivations = 0;  // number of derivations that changed the partition
};

StablePartition stable_partition(const BasedMatrix& t);

}  // namespace bmparity
