#include "bmparity/random_moves.hpp"

namespace bmparity {

namespace {

Integer random_entry(Rng& rng, Ring ring) {
  if (ring == Ring::kZ2) return static_cast<long>(std::uniform_int_distribution<int>(0, 1)(rng));
  return static_cast<long>(std::uniform_int_distribution<int>(-2, 2)(rng));
}

}  // namespace

BasedMatrix random_based_matrix(Rng& rng, std::size_t elements, Ring ring) {
  const std::size_t n = elements + 1;
  IntMatrix table(n, IntVector(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      table[i][j] = random_entry(rng, ring);
      table[j][i] = normalize(ring, -table[i][j]);
    }
  }
  std::vector<std::string> labels{kBasepoint};
  for (std::size_t i = 1; i < n; ++i) labels.push_back(std::to_string(i));
  return BasedMatrix::create(std::move(labels), ring, table);
}

AppliedMove apply_random_move(const BasedMatrix& t, Rng& rng) {
  const int which = std::uniform_int_distribution<int>(0, 2)(rng);
  if (which == 0) {
    auto fresh = fresh_labels(t, 1);
    return {apply_m1(t, fresh[0]), MoveKind::kM1, false, fresh};
  }
  if (which == 1) {
    auto fresh = fresh_labels(t, 1);
    return {apply_m2(t, fresh[0]), MoveKind::kM2, false, fresh};
  }
  auto fresh = fresh_labels(t, 2);
  IntVector row(t.size());
  for (auto& x : row) x = random_entry(rng, t.ring());
  return {apply_m3(t, fresh[0], fresh[1], row), MoveKind::kM3, false, fresh};
}

std::optional<AppliedMove> apply_random_inverse_move(const BasedMatrix& t, Rng& rng) {
  std::vector<std::vector<std::string>> options;
  for (std::size_t g = 1; g < t.size(); ++g) {
    if (classify_index(t, g) != ElementClass::kGeneric) options.push_back({t.label(g)});
  }
  for (const auto& [a, b] : complementary_pairs(t)) options.push_back({a, b});
  if (options.empty()) return std::nullopt;
  const auto& victims =
      options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
  MoveKind kind;
  BasedMatrix result = remove_element(t, victims, &kind);
  return AppliedMove{std::move(result), kind, true, victims};
}

BasedMatrix reduce_randomly(const BasedMatrix& t, Rng& rng) {
  BasedMatrix current = t;
  while (auto step = apply_random_inverse_move(current, rng)) current = std::move(step->result);
  return current;
}

BasedMatrix random_walk(const BasedMatrix& t, std::size_t steps, Rng& rng) {
  BasedMatrix current = t;
  for (std::size_t i = 0; i < steps; ++i) {
    if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
      if (auto back = apply_random_inverse_move(current, rng)) {
        current = std::move(back->result);
        continue;
      }
    }
    current = apply_random_move(current, rng).result;
  }
  return current;
}

}  // namespace bmparity
