#include "bmparity/axioms.hpp"

#include <algorithm>
#include <map>

#include "bmparity/random_moves.hpp"

namespace bmparity {

namespace {

bool rows_sum_to_basepoint(const BasedMatrix& t, const std::vector<std::size_t>& rows) {
  for (std::size_t h = 0; h < t.size(); ++h) {
    Integer total = 0;
    for (auto g : rows) total += t.at(g, h);
    if (normalize(t.ring(), total - t.at(0, h)) != 0) return false;
  }
  return true;
}

bool sums_to_zero(const ParityAssignment& p, const std::vector<std::size_t>& rows) {
  IntVector total = zero_vector(p.group.coordinate_count());
  for (auto g : rows) total = p.group.add(total, p.values[g]);
  return p.group.is_zero(total);
}

std::vector<std::string> names(const BasedMatrix& t, const std::vector<std::size_t>& rows) {
  std::vector<std::string> out;
  for (auto g : rows) out.push_back(t.label(g));
  return out;
}

ParityAssignment recompute(const BasedMatrix& t, ParityKind kind) {
  switch (kind) {
    case ParityKind::kGaussian: return gaussian_parity(t);
    case ParityKind::kStable: return stable_parity_functor(t);
    case ParityKind::kHat: return hat_parity_functor(t, stable_partition(t).partition);
    case ParityKind::kReducedFunctor: return reduced_parity_functor(t);
    case ParityKind::kReduced: return reduced_parity(t);
  }
  throw std::logic_error("unknown parity kind");
}

LabelSet restrict_to(const LabelSet& labels, const BasedMatrix& t) {
  LabelSet out;
  for (const auto& l : labels) {
    if (t.index_of(l)) out.push_back(l);
  }
  return out;
}

std::string move_text(const AppliedMove& m) {
  std::string out(move_kind_name(m.kind));
  for (const auto& l : m.labels) out += " " + l;
  return out;
}

// Ann(T') intersected with the old coordinates must equal Ann(T).
void check_stable_move(const BasedMatrix& t, const BasedMatrix& moved, const AppliedMove& move,
                       std::vector<Violation>& out) {
  const std::size_t n = t.size() - 1;
  const std::size_t k = moved.size() - t.size();
  const AnnulatorModule before = annulator(t, stable_partition(t).partition);
  const AnnulatorModule after = annulator(moved, stable_partition(moved).partition);
  IntMatrix permuted;
  for (const auto& row : after.basis()) {
    IntVector v(row.begin() + static_cast<long>(n), row.end());
    v.insert(v.end(), row.begin(), row.begin() + static_cast<long>(n));
    permuted.push_back(std::move(v));
  }
  IntMatrix restricted;
  if (t.ring() == Ring::kZ) {
    permuted = linalg::hermite_normal_form(std::move(permuted), n + k);
    for (const auto& row : permuted) {
      if (std::all_of(row.begin(), row.begin() + static_cast<long>(k), [](const Integer& x) { return x == 0; })) {
        restricted.emplace_back(row.begin() + static_cast<long>(k), row.end());
      }
    }
  } else {
    linalg::BitMatrix bits;
    for (const auto& row : permuted) bits.push_back(linalg::to_bits(row));
    const auto echelon = linalg::rref_gf2(std::move(bits), n + k);
    for (std::size_t i = 0; i < echelon.rows.size(); ++i) {
      if (echelon.pivots[i] >= k) {
        restricted.push_back(linalg::from_bits(
            linalg::BitVector(echelon.rows[i].begin() + static_cast<long>(k), echelon.rows[i].end())));
      }
    }
  }
  if (!(AnnulatorModule(t.ring(), n, restricted) == before)) {
    out.push_back({"P0", {}, "annulator changes on old elements after " + move_text(move)});
  }
}

// Compares values on old elements through a map of ambient coordinates.
// `target[c]` is the column of p' that column c of p goes to; `extra` adds
// lambda_s to one more column (the hat functor's transport).
void compare_through(const BasedMatrix& t, const ParityAssignment& p, const ParityAssignment& moved,
                     const std::vector<std::size_t>& target, std::optional<std::size_t> extra,
                     const AppliedMove& move, std::vector<Violation>& out) {
  for (std::size_t g = 0; g < t.size(); ++g) {
    IntVector image = zero_vector(moved.column_legend.size());
    for (std::size_t c = 0; c < target.size(); ++c) image[target[c]] += p.ambient[g][c];
    if (extra) image[*extra] += p.ambient[g][0];
    normalize_in_place(t.ring(), image);
    const IntVector expected = moved.group.reduce(image);
    const IntVector& actual = moved.values[moved.row_of(t.label(g))];
    if (expected != actual) {
      out.push_back({"P0", {t.label(g)},
                     "value " + to_string(actual) + " after " + move_text(move) + ", expected " +
                         to_string(expected)});
    }
  }
}

void check_move(const BasedMatrix& t, const ParityAssignment& p, const AppliedMove& move,
                const ParityAssignment* precomputed, std::vector<Violation>& out) {
  const BasedMatrix& moved = move.result;
  if (p.kind == ParityKind::kStable) {
    check_stable_move(t, moved, move, out);
    return;
  }
  const ParityAssignment after = precomputed ? *precomputed : recompute(moved, p.kind);
  if (p.kind == ParityKind::kGaussian) {
    for (std::size_t g = 0; g < t.size(); ++g) {
      if (after.value(t.label(g)) != p.values[g]) {
        out.push_back({"P0", {t.label(g)}, "gaussian value changes after " + move_text(move)});
      }
    }
    return;
  }
  // Match each column of p to the column of p' restricting to it.
  std::map<LabelSet, std::size_t> by_restriction;
  std::optional<std::size_t> new_column;
  for (std::size_t c = 0; c < after.columns.size(); ++c) {
    LabelSet r = restrict_to(after.columns[c], t);
    if (r.size() != after.columns[c].size()) {
      if (new_column) {
        out.push_back({"P0", move.labels, "new elements split over several columns after " + move_text(move)});
        return;
      }
      new_column = c;
    }
    if (!r.empty()) by_restriction[r] = c;
  }
  std::vector<std::size_t> target;
  for (const auto& column : p.columns) {
    auto it = by_restriction.find(column);
    if (it == by_restriction.end()) {
      out.push_back({"P0", column, "column " + class_name(column) + " has no counterpart after " + move_text(move)});
      return;
    }
    target.push_back(it->second);
  }
  if (p.kind != ParityKind::kHat && by_restriction.size() != p.columns.size()) {
    out.push_back({"P0", move.labels, "column count changes after " + move_text(move)});
    return;
  }
  if (p.kind != ParityKind::kHat && !same_signature(p.group, after.group)) {
    out.push_back({"P0", move.labels,
                   "group " + p.group.signature() + " becomes " + after.group.signature() + " after " +
                       move_text(move)});
  }
  std::optional<std::size_t> extra;
  if (p.kind == ParityKind::kHat && move.kind != MoveKind::kM1) extra = new_column;
  compare_through(t, p, after, target, extra, move, out);
}

}  // namespace

std::vector<Violation> check_move_functoriality(const BasedMatrix& t, const ParityAssignment& p,
                                                const AppliedMove& move, const ParityAssignment* after) {
  std::vector<Violation> out;
  check_move(t, p, move, after, out);
  return out;
}

std::vector<Violation> verify_parity_axioms(const BasedMatrix& t, const ParityAssignment& p,
                                            const AxiomCheckOptions& options) {
  std::vector<Violation> out;
  if (p.labels != t.labels()) {
    out.push_back({"P0", {}, "assignment was computed for a different matrix"});
    return out;
  }
  if (!p.group.is_zero(p.values[0])) out.push_back({"s", {kBasepoint}, "basepoint value is not zero"});
  for (std::size_t g = 1; g < t.size(); ++g) {
    if (classify_index(t, g) != ElementClass::kGeneric && !p.group.is_zero(p.values[g])) {
      out.push_back({"P1", {t.label(g)},
                     std::string(element_class_name(classify_index(t, g))) + " element has value " +
                         to_string(p.values[g])});
    }
  }
  for (const auto& [a, b] : complementary_index_pairs(t)) {
    if (!sums_to_zero(p, {a, b})) {
      out.push_back({"P2", names(t, {a, b}), "complementary values do not cancel"});
    }
  }
  for (std::size_t a = 0; a < t.size(); ++a) {
    for (std::size_t b = a; b < t.size(); ++b) {
      for (std::size_t c = b; c < t.size(); ++c) {
        if (rows_sum_to_basepoint(t, {a, b, c}) && !sums_to_zero(p, {a, b, c})) {
          out.push_back({"P3", names(t, {a, b, c}), "values of a row triple do not cancel"});
        }
      }
    }
  }

  if (p.kind == ParityKind::kHat && p.columns != stable_partition(t).partition.labels(t)) {
    return out;
  }
  Rng rng(options.seed);
  for (std::size_t i = 0; i < options.random_moves; ++i) {
    check_move(t, p, apply_random_move(t, rng), nullptr, out);
  }
  return out;
}

std::string describe(const Violation& v) {
  std::string out = "(" + v.axiom + ")";
  if (!v.witnesses.empty()) {
    out += " [";
    for (std::size_t i = 0; i < v.witnesses.size(); ++i) out += (i ? " " : "") + v.witnesses[i];
    out += "]";
  }
  return out + " " + v.detail;
}

}  // namespace bmparity
