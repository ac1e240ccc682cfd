#include "bmparity/tribes.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace bmparity {

bool TribeTags::is_primitive_block(std::size_t b) const {
  return std::find(primitive_blocks.begin(), primitive_blocks.end(), b) != primitive_blocks.end();
}

TribeTags tag_tribes(const BasedMatrix& t) {
  auto [primitive, trace] = reduce_to_primitive(t);
  Partition stable = stable_partition(t).partition;

  std::vector<std::size_t> primitive_blocks;
  for (std::size_t b = 0; b < stable.block_count(); ++b) {
    for (auto g : stable.block(b)) {
      if (primitive.index_of(t.label(g))) {
        primitive_blocks.push_back(b);
        break;
      }
    }
  }

  const std::string ghost = fresh_labels(t, 1).front();
  const BasedMatrix extended = apply_m1(t, ghost);
  const Partition extended_stable = stable_partition(extended).partition;
  const auto& ghost_block = extended_stable.block(extended_stable.block_of(extended.size() - 1));
  std::optional<std::size_t> zero_block;
  for (auto g : ghost_block) {
    if (g == extended.size() - 1) continue;
    const std::size_t b = stable.block_of(t.require_index(extended.label(g)));
    if (zero_block && *zero_block != b) {
      throw std::logic_error("zero tribe restricts to more than one stable tribe");
    }
    zero_block = b;
  }
  if (zero_block) {
    // The restriction must be a whole tribe of T.
    std::size_t members = ghost_block.size() - 1;
    if (members != stable.block(*zero_block).size()) {
      throw std::logic_error("zero tribe restriction is not a stable tribe");
    }
  }
  return TribeTags{std::move(stable), std::move(primitive_blocks), zero_block, std::move(primitive),
                   std::move(trace)};
}

Partition aut_coarsening(const BasedMatrix& primitive, const std::vector<Isomorphism>& auts) {
  const Partition stable = stable_partition(primitive).partition;
  std::vector<std::size_t> parent(stable.block_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& phi : auts) {
      for (std::size_t g = 0; g < primitive.size(); ++g) {
        std::size_t a = find(stable.block_of(g));
        std::size_t b = find(stable.block_of(phi.image[g]));
        if (a != b) {
          parent[std::max(a, b)] = std::min(a, b);
          changed = true;
        }
      }
    }
  }
  std::vector<std::vector<std::size_t>> merged(stable.block_count());
  for (std::size_t b = 0; b < stable.block_count(); ++b) {
    auto& target = merged[find(b)];
    target.insert(target.end(), stable.block(b).begin(), stable.block(b).end());
  }
  std::erase_if(merged, [](const auto& m) { return m.empty(); });
  return Partition::from_blocks(primitive.size(), std::move(merged));
}

TribeCorrespondence transport_tribes(const BasedMatrix& t, const ReductionTrace& trace) {
  const BasedMatrix reduced = replay_trace(t, trace);
  const Partition stable = stable_partition(t).partition;
  const Partition reduced_stable = stable_partition(reduced).partition;

  TribeCorrespondence out;
  std::set<std::size_t> hit;
  for (const auto& block : stable.blocks()) {
    std::vector<std::size_t> image;
    for (auto g : block) {
      if (auto i = reduced.index_of(t.label(g))) image.push_back(*i);
    }
    if (image.empty()) continue;  // not primitive
    std::sort(image.begin(), image.end());
    const std::size_t rb = reduced_stable.block_of(image.front());
    if (reduced_stable.block(rb) != image) {
      throw std::logic_error("tribe " + block_labels(t, block).front() +
                             "... does not restrict to a stable tribe of the reduced matrix");
    }
    if (!hit.insert(rb).second) throw std::logic_error("tribe transport is not injective");
    out.pairs.emplace_back(block_labels(t, block), block_labels(reduced, image));
  }
  if (hit.size() != reduced_stable.block_count()) {
    throw std::logic_error("tribe transport is not surjective");
  }
  return out;
}

}  // namespace bmparity
