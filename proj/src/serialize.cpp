#include "bmparity/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace bmparity {

namespace {

using Json = nlohmann::ordered_json;

Json number(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Json vector_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(number(x));
  return out;
}

Json matrix_value(const BasedMatrix& t) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < t.size(); ++i) rows.push_back(vector_json(t.row(i)));
  return Json{{"ring", std::string(ring_name(t.ring()))}, {"labels", t.labels()}, {"entries", rows}};
}

Json partition_value(const BasedMatrix& t, const Partition& p) { return p.labels(t); }

Json group_value(const CanonicalAbelianGroup& g) {
  return Json{{"signature", g.signature()},
              {"free_rank", g.free_rank()},
              {"torsion", vector_json(g.invariant_factors())}};
}

Json parity_value(const ParityAssignment& p) {
  Json values = Json::array();
  for (std::size_t i = 0; i < p.labels.size(); ++i) {
    values.push_back(Json{{"label", p.labels[i]}, {"value", vector_json(p.values[i])}});
  }
  Json rows = Json::array();
  for (const auto& r : p.ambient) rows.push_back(vector_json(r));
  return Json{{"kind", std::string(parity_kind_name(p.kind))},
              {"group", group_value(p.group)},
              {"column_legend", p.column_legend},
              {"values", values},
              {"parity_matrix", Json{{"rows", p.labels}, {"columns", p.column_legend}, {"entries", rows}}}};
}

std::string aut_text(const InvariantBundle& b) {
  std::string out;
  for (const auto& phi : b.reduced.automorphisms) {
    if (phi.is_identity()) continue;
    if (!out.empty()) out += ", ";
    out += cycle_notation(b.primitive(), phi);
  }
  return out;
}

std::optional<LabelSet> zero_tribe(const InvariantBundle& b) {
  const auto& tags = b.reduced.tags;
  if (!tags.zero_block) return std::nullopt;
  return block_labels(b.matrix, tags.partition.block(*tags.zero_block));
}

}  // namespace

std::string matrix_json(const BasedMatrix& t) { return matrix_value(t).dump(); }

std::string bundle_json(const InvariantBundle& b) {
  const auto& tags = b.reduced.tags;
  Json primitive_tribes = Json::array();
  for (auto i : tags.primitive_blocks) primitive_tribes.push_back(block_labels(b.matrix, tags.partition.block(i)));
  Json zero = nullptr;
  if (auto z = zero_tribe(b)) zero = Json{{"tribe", *z}, {"primitive", tags.zero_block_is_primitive()}};
  Json out;
  if (b.genus) out["genus"] = *b.genus;
  out["based_matrix"] = matrix_value(b.matrix);
  out["primitive_size"] = b.primitive().size();
  out["primitive_matrix"] = matrix_value(b.primitive());
  out["stable_partition"] = partition_value(b.matrix, b.stable.partition);
  out["derivations"] = b.stable.derivations;
  out["primitive_tribes"] = primitive_tribes;
  out["zero_tribe"] = zero;
  out["aut_order"] = b.aut_order();
  out["bar_classes"] = partition_value(b.primitive(), b.reduced.bar_partition);
  out["reduced_parity"] = parity_value(b.reduced.parity);
  return out.dump();
}

std::string format_matrix(const BasedMatrix& t) {
  std::ostringstream out;
  out << "ring " << ring_name(t.ring()) << "\nlabels";
  for (const auto& l : t.labels()) out << ' ' << l;
  out << '\n';
  std::size_t width = 1;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t.size(); ++j) width = std::max(width, to_string(t.at(i, j)).size());
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t.size(); ++j) {
      const std::string cell = to_string(t.at(i, j));
      out << (j ? " " : "") << std::string(width - cell.size(), ' ') << cell;
    }
    out << '\n';
  }
  return out.str();
}

std::string format_partition(const BasedMatrix& t, const Partition& p) {
  std::string out;
  for (const auto& block : p.labels(t)) {
    if (!out.empty()) out += ' ';
    out += '{';
    for (std::size_t i = 0; i < block.size(); ++i) out += (i ? "," : "") + block[i];
    out += '}';
  }
  return out;
}

std::string format_bundle(const InvariantBundle& b) {
  const auto& tags = b.reduced.tags;
  std::ostringstream out;
  if (b.genus) out << "genus: " << *b.genus << '\n';
  out << "based matrix:\n" << format_matrix(b.matrix);
  out << "primitive size: " << b.primitive().size() << " (";
  for (std::size_t i = 0; i < b.primitive().size(); ++i) out << (i ? " " : "") << b.primitive().label(i);
  out << ")\n";
  out << "stable partition: " << format_partition(b.matrix, b.stable.partition) << '\n';
  out << "primitive tribes:";
  for (auto i : tags.primitive_blocks) out << ' ' << class_name(block_labels(b.matrix, tags.partition.block(i)));
  out << '\n';
  out << "zero tribe: ";
  if (auto z = zero_tribe(b)) {
    out << class_name(*z) << (tags.zero_block_is_primitive() ? " (primitive)" : " (not primitive)");
  } else {
    out << "empty";
  }
  out << '\n';
  out << "Aut order: " << b.aut_order();
  if (const std::string gens = aut_text(b); !gens.empty()) out << " " << gens;
  out << '\n';
  out << "group: " << b.group().signature() << '\n';
  out << "parity values:\n";
  const auto& p = b.reduced.parity;
  for (std::size_t i = 1; i < p.labels.size(); ++i) out << "  " << p.labels[i] << ": " << to_string(p.values[i]) << '\n';
  out << "parity matrix:\n" << format_parity_matrix(b.parity_matrix);
  return out.str();
}

BasedMatrix parse_matrix_text(std::string_view text, Ring default_ring) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    Json doc;
    try {
      doc = Json::parse(text);
      const auto ring = parse_ring(doc.at("ring").get<std::string>());
      if (!ring) throw InputError("unknown ring in matrix document");
      IntMatrix entries;
      for (const auto& row : doc.at("entries")) {
        IntVector r;
        for (const auto& x : row) r.push_back(x.is_string() ? Integer(x.get<std::string>()) : Integer(x.get<long>()));
        entries.push_back(std::move(r));
      }
      return BasedMatrix::create(doc.at("labels").get<std::vector<std::string>>(), *ring, entries);
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("malformed matrix document: ") + e.what());
    } catch (const std::invalid_argument&) {
      throw InputError("malformed integer in matrix document");
    }
  }

  Ring ring = default_ring;
  std::optional<std::vector<std::string>> labels;
  IntMatrix rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::replace(line.begin(), line.end(), '|', ' ');
    std::istringstream words(line);
    std::string word;
    if (!(words >> word)) continue;
    if (word == "ring") {
      std::string name;
      words >> name;
      auto parsed = parse_ring(name);
      if (!parsed) throw InputError("line " + std::to_string(line_no) + ": unknown ring '" + name + "'");
      ring = *parsed;
      continue;
    }
    if (word == "labels") {
      labels.emplace();
      while (words >> word) labels->push_back(word);
      continue;
    }
    IntVector row;
    do {
      Integer x;
      if (x.set_str(word, 10) != 0) {
        throw InputError("line " + std::to_string(line_no) + ": not an integer: '" + word + "'");
      }
      row.push_back(x);
    } while (words >> word);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InputError("matrix has no rows");
  if (!labels) {
    labels.emplace();
    labels->push_back(kBasepoint);
    for (std::size_t i = 1; i < rows.size(); ++i) labels->push_back(std::to_string(i));
  }
  return BasedMatrix::create(std::move(*labels), ring, rows);
}

BasedMatrix load_matrix_file(const std::string& path, Ring default_ring) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix_text(buffer.str(), default_ring);
}

}  // namespace bmparity
