#include "bmparity/parity.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bmparity {

namespace {

Integer sum_over(const BasedMatrix& t, std::size_t g, const std::vector<std::size_t>& members) {
  Integer total = 0;
  for (auto h : members) total += t.at(g, h);
  return total;
}

std::vector<std::size_t> indices_of(const BasedMatrix& t, const LabelSet& labels) {
  std::vector<std::size_t> out;
  for (const auto& l : labels) out.push_back(t.require_index(l));
  return out;
}

// b(g, chi_C) - floor(|C|/2) b(g, s) for every element and column.
IntMatrix corrected_sums(const BasedMatrix& t, const std::vector<LabelSet>& columns) {
  IntMatrix rows(t.size());
  for (std::size_t g = 0; g < t.size(); ++g) {
    for (const auto& column : columns) {
      const Integer half = static_cast<unsigned long>(column.size() / 2);
      rows[g].push_back(normalize(t.ring(), sum_over(t, g, indices_of(t, column)) - half * t.at(g, 0)));
    }
  }
  return rows;
}

ParityAssignment assemble(const BasedMatrix& t, ParityKind kind, std::vector<std::string> legend,
                          std::vector<LabelSet> columns, IntMatrix ambient, IntMatrix relations) {
  CanonicalAbelianGroup group = quotient_group(legend.size(), t.ring(), relations);
  IntMatrix values;
  for (const auto& row : ambient) values.push_back(group.reduce(row));
  return ParityAssignment{kind,
                          std::move(group),
                          t.labels(),
                          std::move(legend),
                          std::move(columns),
                          std::move(ambient),
                          std::move(values)};
}

// Relation list holding the basepoint row unless it vanishes.
IntMatrix basepoint_relation(const IntMatrix& ambient) {
  if (is_zero(ambient.front())) return {};
  return {ambient.front()};
}

}  // namespace

std::string_view parity_kind_name(ParityKind kind) {
  switch (kind) {
    case ParityKind::kGaussian: return "gaussian";
    case ParityKind::kStable: return "stable";
    case ParityKind::kHat: return "hat";
    case ParityKind::kReducedFunctor: return "reduced-functor";
    case ParityKind::kReduced: return "reduced";
  }
  return "?";
}

std::size_t ParityAssignment::row_of(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw std::out_of_range("no element named " + label);
  return static_cast<std::size_t>(it - labels.begin());
}

std::string class_name(const LabelSet& labels) {
  if (labels.size() == 1 && labels.front() == kBasepoint) return kBasepoint;
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += labels[i];
  }
  return out + "}";
}

ParityAssignment gaussian_parity(const BasedMatrix& t) {
  IntMatrix ambient;
  for (std::size_t g = 0; g < t.size(); ++g) ambient.push_back({t.at(g, 0)});
  return assemble(t, ParityKind::kGaussian, {kBasepoint}, {{kBasepoint}}, std::move(ambient), {});
}

ParityAssignment stable_parity_functor(const BasedMatrix& t) {
  const std::size_t n = t.size() - 1;
  const AnnulatorModule ann = annulator(t, stable_partition(t).partition);
  std::vector<std::string> legend(t.labels().begin() + 1, t.labels().end());
  std::vector<LabelSet> columns;
  for (const auto& l : legend) columns.push_back({l});
  IntMatrix ambient{zero_vector(n)};
  for (std::size_t g = 0; g < n; ++g) ambient.push_back(unit_vector(n, g));
  return assemble(t, ParityKind::kStable, std::move(legend), std::move(columns), std::move(ambient),
                  ann.basis());
}

ParityAssignment hat_parity_functor(const BasedMatrix& t, const Partition& p) {
  if (p.ground_size() != t.size()) throw std::invalid_argument("partition does not match the matrix");
  std::vector<LabelSet> columns = p.labels(t);
  std::vector<std::string> legend;
  for (const auto& c : columns) legend.push_back(class_name(c));
  IntMatrix ambient = block_sums(t, p);
  IntMatrix relations = basepoint_relation(ambient);
  return assemble(t, ParityKind::kHat, std::move(legend), std::move(columns), std::move(ambient),
                  std::move(relations));
}

ParityAssignment reduced_parity_functor(const BasedMatrix& t) {
  const TribeTags tags = tag_tribes(t);
  std::vector<LabelSet> columns;
  std::vector<std::string> legend;
  for (auto b : tags.primitive_blocks) {
    if (tags.zero_block == b) continue;
    columns.push_back(block_labels(t, tags.partition.block(b)));
    legend.push_back(class_name(columns.back()));
  }
  IntMatrix ambient = corrected_sums(t, columns);
  IntMatrix relations = basepoint_relation(ambient);
  return assemble(t, ParityKind::kReducedFunctor, std::move(legend), std::move(columns),
                  std::move(ambient), std::move(relations));
}

ReducedParity reduced_parity_pipeline(const BasedMatrix& t) {
  TribeTags tags = tag_tribes(t);
  TribeCorrespondence correspondence = transport_tribes(t, tags.trace);
  const BasedMatrix& reduced = tags.primitive;
  std::vector<Isomorphism> auts = automorphisms(reduced);
  Partition bar = aut_coarsening(reduced, auts);

  std::optional<std::string> zero_member;  // a reduced-side label of the zero tribe
  if (tags.zero_block_is_primitive()) {
    const LabelSet zero = block_labels(t, tags.partition.block(*tags.zero_block));
    for (const auto& [ours, theirs] : correspondence.pairs) {
      if (ours == zero) zero_member = theirs.front();
    }
    if (!zero_member) throw std::logic_error("primitive zero tribe has no reduced counterpart");
  }

  std::vector<LabelSet> columns;
  std::vector<std::string> legend;
  for (const auto& block : bar.blocks()) {
    const LabelSet reduced_labels = block_labels(reduced, block);
    if (zero_member && std::find(reduced_labels.begin(), reduced_labels.end(), *zero_member) !=
                           reduced_labels.end()) {
      continue;
    }
    const std::set<std::string> inside(reduced_labels.begin(), reduced_labels.end());
    std::vector<std::size_t> lifted;
    for (const auto& [ours, theirs] : correspondence.pairs) {
      if (inside.count(theirs.front())) {
        for (const auto& l : ours) lifted.push_back(t.require_index(l));
      }
    }
    std::sort(lifted.begin(), lifted.end());
    columns.push_back(block_labels(t, lifted));
    legend.push_back(class_name(reduced_labels));
  }
  IntMatrix ambient = corrected_sums(t, columns);
  IntMatrix relations = basepoint_relation(ambient);
  ParityAssignment parity = assemble(t, ParityKind::kReduced, std::move(legend), std::move(columns),
                                     std::move(ambient), std::move(relations));
  return ReducedParity{std::move(tags), std::move(correspondence), std::move(auts), std::move(bar),
                       std::move(parity)};
}

ParityAssignment reduced_parity(const BasedMatrix& t) { return reduced_parity_pipeline(t).parity; }

ParityMatrix parity_matrix_of(const ParityAssignment& p) {
  return ParityMatrix{p.labels, p.column_legend, p.ambient};
}

ParityMatrix parity_matrix_report(const BasedMatrix& t) { return parity_matrix_of(reduced_parity(t)); }

std::string format_parity_matrix(const ParityMatrix& m) {
  const std::size_t cols = m.column_legend.size();
  std::size_t label_width = 0;
  for (const auto& l : m.row_labels) label_width = std::max(label_width, l.size());
  std::vector<std::size_t> width(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    width[j] = m.column_legend[j].size();
    for (const auto& row : m.rows) width[j] = std::max(width[j], to_string(row[j]).size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return std::string(w - s.size(), ' ') + s; };
  auto line = [&](const std::string& head, auto cell) {
    std::string out = pad(head, label_width) + " |";
    for (std::size_t j = 0; j < cols; ++j) {
      out += " " + pad(cell(j), width[j]);
      if (j == 0 && cols > 1) out += " |";
    }
    return out + "\n";
  };
  std::ostringstream out;
  out << line("", [&](std::size_t j) { return m.column_legend[j]; });
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    const std::string row = line(m.row_labels[i], [&](std::size_t j) { return to_string(m.rows[i][j]); });
    out << row;
    if (i == 0) {
      std::string rule(row.size() - 1, '-');
      out << rule << "\n";
    }
  }
  return out.str();
}

}  // namespace bmparity
