#include "bmparity/based_matrix.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace bmparity {
namespace {

bool row_is_zero(const BasedMatrix& t, std::size_t g) {
  for (std::size_t h = 0; h < t.size(); ++h) {
    if (t.at(g, h) != 0) return false;
  }
  return true;
}

bool rows_equal(const BasedMatrix& t, std::size_t g1, std::size_t g2) {
  for (std::size_t h = 0; h < t.size(); ++h) {
    if (t.at(g1, h) != t.at(g2, h)) return false;
  }
  return true;
}

bool is_complementary(const BasedMatrix& t, std::size_t g1, std::size_t g2) {
  for (std::size_t h = 0; h < t.size(); ++h) {
    if (normalize(t.ring(), t.at(g1, h) + t.at(g2, h)) != t.at(0, h)) return false;
  }
  return true;
}

std::string describe(const BasedMatrix& t, std::size_t i) { return "'" + t.label(i) + "'"; }

}  // namespace

BasedMatrix BasedMatrix::create(std::vector<std::string> labels, Ring ring,
                                const IntMatrix& entries) {
  const std::size_t n = labels.size();
  if (n == 0) throw InputError("based matrix needs at least the basepoint label");
  if (labels[0] != kBasepoint) {
    throw InputError("first label must be the basepoint 's', got '" + labels[0] + "'");
  }
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw InputError("empty label");
    if (!seen.insert(l).second) throw InputError("duplicate label '" + l + "'");
  }
  if (entries.size() != n) {
    throw InputError("table has " + std::to_string(entries.size()) + " rows, expected " +
                     std::to_string(n));
  }
  IntVector flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (entries[i].size() != n) {
      throw InputError("row " + std::to_string(i) + " has " + std::to_string(entries[i].size()) +
                       " entries, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      const Integer& v = entries[i][j];
      if (ring == Ring::kZ2 && v != 0 && v != 1) {
        throw InputError("entry (" + labels[i] + "," + labels[j] + ") = " + v.get_str() +
                         " is not in Z2 (use 0 or 1)");
      }
      flat.push_back(v);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (flat[i * n + i] != 0) throw InputError("nonzero diagonal entry at '" + labels[i] + "'");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (normalize(ring, flat[i * n + j] + flat[j * n + i]) != 0) {
        throw InputError("table is not skew-symmetric at (" + labels[i] + "," + labels[j] + ")");
      }
    }
  }
  return BasedMatrix(std::move(labels), ring, std::move(flat));
}

BasedMatrix BasedMatrix::trivial(Ring ring) {
  return BasedMatrix({kBasepoint}, ring, IntVector{Integer(0)});
}

std::optional<std::size_t> BasedMatrix::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t BasedMatrix::require_index(const std::string& label) const {
  auto i = index_of(label);
  if (!i) throw InputError("unknown label '" + label + "'");
  return *i;
}

IntVector BasedMatrix::row(std::size_t i) const {
  return IntVector(entries_.begin() + static_cast<std::ptrdiff_t>(i * size()),
                   entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * size()));
}

IntMatrix BasedMatrix::table() const {
  IntMatrix out;
  for (std::size_t i = 0; i < size(); ++i) out.push_back(row(i));
  return out;
}

BasedMatrix BasedMatrix::submatrix(const std::vector<std::size_t>& keep) const {
  std::vector<std::string> labels;
  IntVector flat;
  for (auto i : keep) {
    labels.push_back(labels_[i]);
    for (auto j : keep) flat.push_back(at(i, j));
  }
  return BasedMatrix(std::move(labels), ring_, std::move(flat));
}

BasedMatrix new_based_matrix(std::vector<std::string> labels, Ring ring, const IntMatrix& entries) {
  return BasedMatrix::create(std::move(labels), ring, entries);
}

std::string_view element_class_name(ElementClass c) {
  switch (c) {
    case ElementClass::kAnnihilating:
      return "annihilating";
    case ElementClass::kCore:
      return "core";
    case ElementClass::kGeneric:
      return "generic";
  }
  return "?";
}

ElementClass classify_index(const BasedMatrix& t, std::size_t g) {
  if (g == 0 || g >= t.size()) throw InputError("classify: not an element of G minus s");
  if (row_is_zero(t, g)) return ElementClass::kAnnihilating;
  if (rows_equal(t, g, 0)) return ElementClass::kCore;
  return ElementClass::kGeneric;
}

ElementClass classify_element(const BasedMatrix& t, const std::string& label) {
  const std::size_t g = t.require_index(label);
  if (g == 0) throw InputError("cannot classify the basepoint");
  return classify_index(t, g);
}

std::vector<std::pair<std::size_t, std::size_t>> complementary_index_pairs(const BasedMatrix& t) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 1; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (is_complementary(t, i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> complementary_pairs(const BasedMatrix& t) {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto [i, j] : complementary_index_pairs(t)) out.emplace_back(t.label(i), t.label(j));
  return out;
}

bool is_primitive(const BasedMatrix& t) {
  for (std::size_t g = 1; g < t.size(); ++g) {
    if (classify_index(t, g) != ElementClass::kGeneric) return false;
  }
  return complementary_index_pairs(t).empty();
}

std::vector<std::string> fresh_labels(const BasedMatrix& t, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t k = 1; out.size() < count; ++k) {
    std::string candidate = "@" + std::to_string(k);
    if (!t.index_of(candidate)) out.push_back(std::move(candidate));
  }
  return out;
}

namespace {

void require_fresh(const BasedMatrix& t, const std::string& label) {
  if (label.empty()) throw InputError("empty label");
  if (t.index_of(label)) throw InputError("label '" + label + "' already present");
}

// Extends t by new rows given on the old labels; the block among new labels
// is supplied separately. Columns are filled by skew-symmetry.
BasedMatrix extend(const BasedMatrix& t, const std::vector<std::string>& added,
                   const IntMatrix& new_rows, const IntMatrix& new_block) {
  const std::size_t n = t.size();
  const std::size_t k = added.size();
  IntMatrix table(n + k, IntVector(n + k, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i][j] = t.at(i, j);
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t h = 0; h < n; ++h) {
      table[n + a][h] = normalize(t.ring(), new_rows[a][h]);
      table[h][n + a] = normalize(t.ring(), -new_rows[a][h]);
    }
    for (std::size_t c = 0; c < k; ++c) table[n + a][n + c] = normalize(t.ring(), new_block[a][c]);
  }
  std::vector<std::string> labels = t.labels();
  labels.insert(labels.end(), added.begin(), added.end());
  return BasedMatrix::create(std::move(labels), t.ring(), table);
}

}  // namespace

BasedMatrix apply_m1(const BasedMatrix& t, const std::string& fresh) {
  require_fresh(t, fresh);
  return extend(t, {fresh}, {zero_vector(t.size())}, {{Integer(0)}});
}

BasedMatrix apply_m2(const BasedMatrix& t, const std::string& fresh) {
  require_fresh(t, fresh);
  return extend(t, {fresh}, {t.row(0)}, {{Integer(0)}});
}

BasedMatrix apply_m3(const BasedMatrix& t, const std::string& fresh1, const std::string& fresh2,
                     const IntVector& row) {
  require_fresh(t, fresh1);
  require_fresh(t, fresh2);
  if (fresh1 == fresh2) throw InputError("M3 needs two distinct labels");
  if (row.size() != t.size()) throw InputError("M3 row must cover every old label");
  IntVector second(t.size());
  for (std::size_t h = 0; h < t.size(); ++h) second[h] = t.at(0, h) - row[h];
  const Integer mutual = row[0];
  return extend(t, {fresh1, fresh2}, {row, second},
                {{Integer(0), mutual}, {Integer(-mutual), Integer(0)}});
}

std::string_view move_kind_name(MoveKind kind) {
  switch (kind) {
    case MoveKind::kM1:
      return "M1";
    case MoveKind::kM2:
      return "M2";
    case MoveKind::kM3:
      return "M3";
  }
  return "?";
}

BasedMatrix remove_element(const BasedMatrix& t, const std::vector<std::string>& victims,
                           MoveKind* kind) {
  if (victims.empty() || victims.size() > 2) {
    throw MoveError("remove_element takes one label or a pair of labels");
  }
  std::vector<std::size_t> idx;
  for (const auto& v : victims) {
    const std::size_t i = t.require_index(v);
    if (i == 0) throw MoveError("the basepoint cannot be removed");
    idx.push_back(i);
  }
  MoveKind performed;
  if (idx.size() == 1) {
    const ElementClass c = classify_index(t, idx[0]);
    if (c == ElementClass::kGeneric) {
      throw MoveError("element " + describe(t, idx[0]) +
                      " is neither annihilating nor core; no inverse move removes it");
    }
    performed = c == ElementClass::kAnnihilating ? MoveKind::kM1 : MoveKind::kM2;
  } else {
    if (idx[0] == idx[1]) throw MoveError("a complementary pair needs two distinct elements");
    if (!is_complementary(t, idx[0], idx[1])) {
      throw MoveError("elements " + describe(t, idx[0]) + " and " + describe(t, idx[1]) +
                      " are not complementary");
    }
    performed = MoveKind::kM3;
  }
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (std::find(idx.begin(), idx.end(), i) == idx.end()) keep.push_back(i);
  }
  if (kind) *kind = performed;
  return t.submatrix(keep);
}

std::pair<BasedMatrix, ReductionTrace> reduce_to_primitive(const BasedMatrix& t) {
  BasedMatrix current = t;
  ReductionTrace trace;
  while (true) {
    std::optional<std::size_t> annihilating, core;
    for (std::size_t g = 1; g < current.size(); ++g) {
      const ElementClass c = classify_index(current, g);
      if (c == ElementClass::kAnnihilating && !annihilating) annihilating = g;
      if (c == ElementClass::kCore && !core) core = g;
    }
    std::vector<std::string> victims;
    if (annihilating) {
      victims = {current.label(*annihilating)};
    } else if (core) {
      victims = {current.label(*core)};
    } else {
      auto pairs = complementary_index_pairs(current);
      if (pairs.empty()) break;
      victims = {current.label(pairs.front().first), current.label(pairs.front().second)};
    }
    MoveKind kind;
    current = remove_element(current, victims, &kind);
    trace.steps.push_back({kind, std::move(victims)});
  }
  return {std::move(current), std::move(trace)};
}

BasedMatrix replay_trace(const BasedMatrix& t, const ReductionTrace& trace) {
  BasedMatrix current = t;
  for (const auto& step : trace.steps) {
    MoveKind kind;
    current = remove_element(current, step.removed, &kind);
    if (kind != step.inverse_of) {
      throw MoveError("trace step on " + step.removed.front() + " expected " +
                      std::string(move_kind_name(step.inverse_of)) + "^-1, replay performed " +
                      std::string(move_kind_name(kind)) + "^-1");
    }
  }
  return current;
}

}  // namespace bmparity
