#include "bmparity/carter_surface.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

#include "bmparity/linalg.hpp"

namespace bmparity {

long RotationSystem::euler_characteristic() const {
  return static_cast<long>(vertex_count()) - static_cast<long>(edge_count()) +
         static_cast<long>(face_count());
}

std::size_t RotationSystem::genus() const {
  if (vertex_count() == 0) return 0;
  const long twice = 2 - euler_characteristic();
  if (twice < 0 || twice % 2 != 0) throw std::logic_error("inconsistent Euler characteristic");
  return static_cast<std::size_t>(twice / 2);
}

std::size_t RotationSystem::rot_next(std::size_t dart) const {
  const auto& r = rotation[vertex_of_dart[dart]];
  for (std::size_t i = 0; i < 4; ++i) {
    if (r[i] == dart) return r[(i + 1) % 4];
  }
  throw std::logic_error("dart missing from its vertex");
}

RotationSystem carter_surface(const GaussCode& code) {
  RotationSystem s;
  s.crossings = code.crossings();
  const std::size_t m = code.passes.size();
  s.vertex_of_dart.assign(2 * m, 0);
  auto tail = [&](std::size_t pass) { return 2 * pass; };
  auto head_into = [&](std::size_t pass) { return 2 * ((pass + m - 1) % m) + 1; };
  for (std::size_t v = 0; v < s.crossings.size(); ++v) {
    const int id = s.crossings[v];
    const auto [p, q] = code.positions(id);
    const std::size_t in1 = head_into(p), out1 = tail(p), in2 = head_into(q), out2 = tail(q);
    if (code.frame_sign(id) > 0) {
      s.rotation.push_back({in1, in2, out1, out2});
    } else {
      s.rotation.push_back({in1, out2, out1, in2});
    }
    for (auto d : s.rotation.back()) s.vertex_of_dart[d] = v;
  }
  std::vector<char> used(2 * m, 0);
  for (std::size_t start = 0; start < 2 * m; ++start) {
    if (used[start]) continue;
    std::vector<std::size_t> face;
    for (std::size_t d = start; !used[d]; d = s.rot_next(d ^ 1)) {
      used[d] = 1;
      face.push_back(d);
    }
    s.faces.push_back(std::move(face));
  }
  return s;
}

IntVector HomologyForm::loop_vector(const IntVector& edge_cycle) const {
  IntVector out;
  for (auto e : non_tree_edges) out.push_back(edge_cycle[e]);
  return out;
}

IntVector HomologyForm::class_of(const IntVector& edge_cycle) const {
  return linalg::multiply_row(loop_vector(edge_cycle), to_basis, rank);
}

Integer HomologyForm::intersect(const IntVector& cycle1, const IntVector& cycle2) const {
  const IntVector a = loop_vector(cycle1);
  const IntVector b = loop_vector(cycle2);
  Integer total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) total += a[i] * loop_form[i][j] * b[j];
  }
  return total;
}

HomologyForm homology_form(const RotationSystem& s) {
  HomologyForm h;
  const std::size_t n = s.vertex_count();
  const std::size_t edges = s.edge_count();
  if (n == 0) return h;

  // Breadth-first spanning tree; tree_dart_to[v] is the parent-side dart of
  // v's tree edge.
  std::vector<char> tree_edge(edges, 0);
  std::vector<char> reached(n, 0);
  std::deque<std::size_t> queue{0};
  reached[0] = 1;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (auto d : s.rotation[v]) {
      const std::size_t w = s.vertex_of_dart[d ^ 1];
      if (!reached[w]) {
        reached[w] = 1;
        tree_edge[d / 2] = 1;
        queue.push_back(w);
      }
    }
  }
  if (std::find(reached.begin(), reached.end(), 0) != reached.end()) {
    throw std::logic_error("diagram graph is disconnected");
  }

  // Contract the tree: the one-vertex rotation word in counterclockwise order.
  std::vector<std::size_t> word;
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t start, std::size_t stop) {
    for (std::size_t d = start;; d = s.rot_next(d)) {
      if (d == stop) break;
      if (tree_edge[d / 2]) {
        walk(s.rot_next(d ^ 1), d ^ 1);
      } else {
        word.push_back(d);
      }
      if (s.rot_next(d) == start) break;
    }
  };
  const std::size_t root_start = s.rotation[0][0];
  walk(root_start, static_cast<std::size_t>(-1));

  std::vector<std::size_t> slot(edges, static_cast<std::size_t>(-1));
  for (std::size_t e = 0; e < edges; ++e) {
    if (!tree_edge[e]) {
      slot[e] = h.non_tree_edges.size();
      h.non_tree_edges.push_back(e);
    }
  }
  const std::size_t k = h.non_tree_edges.size();
  if (word.size() != 2 * k) throw std::logic_error("rotation word has the wrong length");

  std::vector<std::size_t> position(2 * edges, 0);
  for (std::size_t i = 0; i < word.size(); ++i) position[word[i]] = i;
  // Loop a leaves through its tail a+ and returns through its head a-. The
  // counterclockwise order (a-, b-, a+, b+) is a positive intersection.
  h.loop_form.assign(k, IntVector(k, Integer(0)));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      const std::size_t a = h.non_tree_edges[i], b = h.non_tree_edges[j];
      const std::size_t L = word.size();
      const std::size_t base = position[2 * a + 1];
      auto rel = [&](std::size_t dart) { return (position[dart] + L - base) % L; };
      const std::size_t a_plus = rel(2 * a), b_minus = rel(2 * b + 1), b_plus = rel(2 * b);
      const bool minus_inside = b_minus < a_plus;
      const bool plus_inside = b_plus < a_plus;
      if (minus_inside == plus_inside) continue;
      h.loop_form[i][j] = minus_inside ? 1 : -1;
    }
  }

  for (const auto& face : s.faces) {
    IntVector rel(k, Integer(0));
    for (auto d : face) {
      const std::size_t e = d / 2;
      if (tree_edge[e]) continue;
      // The face runs along d away from its vertex: forward iff d is a tail.
      rel[slot[e]] += (d % 2 == 0) ? 1 : -1;
    }
    h.face_relations.push_back(std::move(rel));
  }

  const linalg::SmithForm snf = linalg::smith_normal_form(h.face_relations, k);
  for (const auto& d : snf.diagonal) {
    if (d != 1) throw std::logic_error("surface homology has torsion");
  }
  const std::size_t r = snf.diagonal.size();
  h.rank = k - r;
  if (h.rank != 2 * s.genus()) throw std::logic_error("homology rank differs from twice the genus");
  h.to_basis.assign(k, IntVector());
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = r; j < k; ++j) h.to_basis[i].push_back(snf.column_transform[i][j]);
  }
  IntMatrix lifts;
  for (std::size_t j = r; j < k; ++j) lifts.push_back(snf.column_transform_inverse[j]);
  h.intersection.assign(h.rank, IntVector(h.rank, Integer(0)));
  for (std::size_t a = 0; a < h.rank; ++a) {
    for (std::size_t b = 0; b < h.rank; ++b) {
      Integer total = 0;
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) total += lifts[a][i] * h.loop_form[i][j] * lifts[b][j];
      }
      h.intersection[a][b] = total;
    }
  }
  return h;
}

HalfClasses half_classes(const GaussCode& code) {
  HalfClasses out;
  const std::size_t m = code.passes.size();
  out.whole.assign(m, Integer(1));
  for (int id : code.crossings()) {
    auto [p, q] = code.positions(id);
    if (code.frame_sign(id) < 0) std::swap(p, q);
    IntVector left(m, Integer(0));
    for (std::size_t e = p; e != q; e = (e + 1) % m) left[e] = 1;
    IntVector right(m);
    for (std::size_t e = 0; e < m; ++e) right[e] = out.whole[e] - left[e];
    out.left_half.emplace(id, std::move(left));
    out.right_half.emplace(id, std::move(right));
  }
  return out;
}

}  // namespace bmparity
