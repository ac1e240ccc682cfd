#include "bmparity/partition.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace bmparity {
namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

}  // namespace

Partition Partition::discrete(std::size_t ground_size) {
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < ground_size; ++i) blocks.push_back({i});
  return from_blocks(ground_size, std::move(blocks));
}

Partition Partition::from_blocks(std::size_t ground_size,
                                 std::vector<std::vector<std::size_t>> blocks) {
  Partition p;
  p.block_of_.assign(ground_size, ground_size);
  for (auto& b : blocks) {
    if (b.empty()) throw InputError("partition has an empty block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks.begin(), blocks.end());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (auto g : blocks[i]) {
      if (g >= ground_size) throw InputError("partition block mentions an unknown element");
      if (p.block_of_[g] != ground_size) throw InputError("partition blocks overlap");
      p.block_of_[g] = i;
    }
  }
  for (auto b : p.block_of_) {
    if (b == ground_size) throw InputError("partition does not cover the ground set");
  }
  if (ground_size > 0 && blocks.front() != std::vector<std::size_t>{0}) {
    throw InputError("the basepoint must form its own block");
  }
  p.blocks_ = std::move(blocks);
  return p;
}

Partition Partition::from_labels(const BasedMatrix& t, const std::vector<LabelSet>& blocks) {
  std::vector<std::vector<std::size_t>> idx;
  for (const auto& b : blocks) {
    std::vector<std::size_t> block;
    for (const auto& l : b) block.push_back(t.require_index(l));
    idx.push_back(std::move(block));
  }
  return from_blocks(t.size(), std::move(idx));
}

bool Partition::refines(const Partition& coarser) const {
  if (coarser.ground_size() != ground_size()) return false;
  for (const auto& b : blocks_) {
    const std::size_t target = coarser.block_of(b.front());
    for (auto g : b) {
      if (coarser.block_of(g) != target) return false;
    }
  }
  return true;
}

std::vector<LabelSet> Partition::labels(const BasedMatrix& t) const {
  std::vector<LabelSet> out;
  for (const auto& b : blocks_) out.push_back(block_labels(t, b));
  return out;
}

LabelSet block_labels(const BasedMatrix& t, const std::vector<std::size_t>& block) {
  LabelSet out;
  for (auto g : block) out.push_back(t.label(g));
  return out;
}

Partition restrict_partition(const BasedMatrix& source, const Partition& p,
                             const BasedMatrix& target) {
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<char> covered(target.size(), 0);
  for (const auto& b : p.blocks()) {
    std::vector<std::size_t> block;
    for (auto g : b) {
      if (auto i = target.index_of(source.label(g))) {
        block.push_back(*i);
        covered[*i] = 1;
      }
    }
    if (!block.empty()) blocks.push_back(std::move(block));
  }
  for (std::size_t i = 0; i < target.size(); ++i) {
    if (!covered[i]) blocks.push_back({i});
  }
  return Partition::from_blocks(target.size(), std::move(blocks));
}

Partition discrete_partition(const BasedMatrix& t) { return Partition::discrete(t.size()); }

AnnulatorModule::AnnulatorModule(Ring ring, std::size_t dimension, IntMatrix basis)
    : ring_(ring), dimension_(dimension) {
  if (ring == Ring::kZ) {
    basis_ = linalg::hermite_normal_form(std::move(basis), dimension);
  } else {
    linalg::BitMatrix bits;
    for (const auto& v : basis) bits.push_back(linalg::to_bits(v));
    echelon_ = linalg::rref_gf2(std::move(bits), dimension);
    for (const auto& row : echelon_.rows) basis_.push_back(linalg::from_bits(row));
  }
}

bool AnnulatorModule::contains(const IntVector& v) const {
  if (v.size() != dimension_) throw std::invalid_argument("annulator membership: wrong dimension");
  if (ring_ == Ring::kZ) {
    IntVector w = v;
    return linalg::reduce_by_hnf(basis_, w);
  }
  linalg::BitVector bits = linalg::to_bits(v);
  return linalg::reduce_gf2(echelon_, bits);
}

bool AnnulatorModule::contains_all(const AnnulatorModule& other) const {
  for (const auto& v : other.basis()) {
    if (!contains(v)) return false;
  }
  return true;
}

IntMatrix AnnulatorModule::integral_generators() const {
  if (ring_ == Ring::kZ) return basis_;
  IntMatrix out;
  for (std::size_t i = 0; i < dimension_; ++i) {
    IntVector v = zero_vector(dimension_);
    v[i] = 2;
    out.push_back(std::move(v));
  }
  out.insert(out.end(), basis_.begin(), basis_.end());
  return out;
}

IntMatrix block_sums(const BasedMatrix& t, const Partition& p) {
  IntMatrix sums(t.size(), zero_vector(p.block_count()));
  for (std::size_t g = 0; g < t.size(); ++g) {
    for (std::size_t c = 0; c < p.block_count(); ++c) {
      for (auto h : p.block(c)) sums[g][c] += t.at(g, h);
    }
    normalize_in_place(t.ring(), sums[g]);
  }
  return sums;
}

AnnulatorModule annulator(const BasedMatrix& t, const Partition& p) {
  if (p.ground_size() != t.size()) throw InputError("partition does not match the based matrix");
  const std::size_t dim = t.size() - 1;
  const std::size_t width = p.block_count();
  const IntMatrix sums = block_sums(t, p);
  // Unknowns (v_1..v_dim, k); equations v * M - k * w = 0, one per block.
  IntMatrix system(sums.begin() + 1, sums.end());
  IntVector minus_w = sums[0];
  for (auto& x : minus_w) x = -x;
  system.push_back(std::move(minus_w));

  IntMatrix generators;
  if (t.ring() == Ring::kZ) {
    for (auto& row : linalg::integer_left_kernel(system, width)) {
      row.pop_back();
      generators.push_back(std::move(row));
    }
  } else {
    linalg::BitMatrix bits;
    for (const auto& row : system) bits.push_back(linalg::to_bits(row));
    for (auto& row : linalg::left_kernel_gf2(bits, width).rows) {
      row.pop_back();
      generators.push_back(linalg::from_bits(row));
    }
  }
  return AnnulatorModule(t.ring(), dim, std::move(generators));
}

namespace {

// True iff d = k w for some k in the ring.
bool is_multiple(Ring ring, const IntVector& d, const IntVector& w) {
  std::optional<Integer> k;
  for (std::size_t c = 0; c < d.size(); ++c) {
    if (w[c] == 0) {
      if (normalize(ring, d[c]) != 0) return false;
      continue;
    }
    if (!k) {
      if (ring == Ring::kZ2) {
        k = normalize(ring, d[c]);
      } else {
        if (!mpz_divisible_p(d[c].get_mpz_t(), w[c].get_mpz_t())) return false;
        k = d[c] / w[c];
      }
    }
    if (normalize(ring, d[c] - *k * w[c]) != 0) return false;
  }
  return true;
}

}  // namespace

Partition derive(const BasedMatrix& t, const Partition& p) {
  // e_i -+ e_j lies in Ann(p) iff the block-sum rows of i and j differ, or
  // add up, to a multiple of the basepoint row.
  const IntMatrix sums = block_sums(t, p);
  const std::size_t n = t.size();
  std::vector<std::vector<char>> related(n, std::vector<char>(n, 0));
  UnionFind uf(n);
  IntVector diff(p.block_count()), sum(p.block_count());
  for (std::size_t i = 1; i < n; ++i) {
    related[i][i] = 1;
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t c = 0; c < p.block_count(); ++c) {
        diff[c] = sums[i][c] - sums[j][c];
        sum[c] = sums[i][c] + sums[j][c];
      }
      if (is_multiple(t.ring(), diff, sums[0]) || is_multiple(t.ring(), sum, sums[0])) {
        related[i][j] = related[j][i] = 1;
        uf.unite(i, j);
      }
    }
  }
  std::vector<std::vector<std::size_t>> classes(n);
  for (std::size_t g = 0; g < n; ++g) classes[uf.find(g)].push_back(g);
  std::vector<std::vector<std::size_t>> blocks;
  for (auto& c : classes) {
    if (c.empty()) continue;
    for (auto a : c) {
      for (auto b : c) {
        if (a != 0 && !related[a][b]) {
          throw std::logic_error("derived relation is not transitive on '" + t.label(a) + "', '" +
                                 t.label(b) + "'");
        }
      }
    }
    blocks.push_back(std::move(c));
  }
  return Partition::from_blocks(n, std::move(blocks));
}

StablePartition stable_partition(const BasedMatrix& t) {
  StablePartition out{discrete_partition(t), 0};
  for (std::size_t guard = 0; guard <= t.size(); ++guard) {
    Partition next = derive(t, out.partition);
    if (next == out.partition) return out;
    out.partition = std::move(next);
    ++out.derivations;
  }
  throw std::logic_error("stable partition did not converge");
}

}  // namespace bmparity
