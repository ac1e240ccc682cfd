#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bmparity/integer.hpp"

namespace bmparity {

// Raised for malformed user input (tables, labels, codes, files).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a move's precondition does not hold.
class MoveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kBasepoint = "s";

// A triple (G, s, b): an ordered label set whose first entry is the
// basepoint, and a skew-symmetric pairing with zero diagonal over Z or Z2.
// Immutable once built; all "mutating" operations return a new value.
class BasedMatrix {
 public:
  // Validates and builds. Throws InputError on a non-square table, a label
  // mismatch, duplicate labels, a non-skew table, a nonzero diagonal entry or
  // (for Z2) an entry outside {0, 1}.
  static BasedMatrix create(std::vector<std::string> labels, Ring ring, const IntMatrix& entries);

  // The 1 x 1 zero matrix on {s}.
  static BasedMatrix trivial(Ring ring);

  std::size_t size() const { return labels_.size(); }
  Ring ring() const { return ring_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::optional<std::size_t> index_of(const std::string& label) const;
  std::size_t require_index(const std::string& label) const;

  const Integer& at(std::size_t i, std::size_t j) const { return entries_[i * size() + j]; }
  IntVector row(std::size_t i) const;
  IntMatrix table() const;

  // Submatrix on the given indices, in the given order.
  BasedMatrix submatrix(const std::vector<std::size_t>& keep) const;

  friend bool operator==(const BasedMatrix& a, const BasedMatrix& b) {
    return a.ring_ == b.ring_ && a.labels_ == b.labels_ && a.entries_ == b.entries_;
  }

 private:
  BasedMatrix(std::vector<std::string> labels, Ring ring, IntVector entries)
      : labels_(std::move(labels)), ring_(ring), entries_(std::move(entries)) {}

  std::vector<std::string> labels_;
  Ring ring_;
  IntVector entries_;  // row-major, size() x size()
};

BasedMatrix new_based_matrix(std::vector<std::string> labels, Ring ring, const IntMatrix& entries);

enum class ElementClass { kAnnihilating, kCore, kGeneric };
std::string_view element_class_name(ElementClass c);

// Annihilating wins when both definitions hold (zero basepoint row).
ElementClass classify_element(const BasedMatrix& t, const std::string& label);
ElementClass classify_index(const BasedMatrix& t, std::size_t g);

// Index pairs (i < j) of complementary elements, lexicographically sorted.
std::vector<std::pair<std::size_t, std::size_t>> complementary_index_pairs(const BasedMatrix& t);
std::vector<std::pair<std::string, std::string>> complementary_pairs(const BasedMatrix& t);

bool is_primitive(const BasedMatrix& t);

// `count` distinct labels of the form "@k" that do not occur in t. Generated
// labels live in this namespace so traces replay without collisions.
std::vector<std::string> fresh_labels(const BasedMatrix& t, std::size_t count);

// Homology moves. Each appends the new label(s) at the end.
BasedMatrix apply_m1(const BasedMatrix& t, const std::string& fresh);
BasedMatrix apply_m2(const BasedMatrix& t, const std::string& fresh);
// `row` gives b(fresh1, h) for every old h (basepoint first). The second
// element's row and the mutual entry are forced by the sum rule.
BasedMatrix apply_m3(const BasedMatrix& t, const std::string& fresh1, const std::string& fresh2,
                     const IntVector& row);

enum class MoveKind { kM1, kM2, kM3 };
std::string_view move_kind_name(MoveKind kind);

struct ReductionStep {
  MoveKind inverse_of;                // the step applies inverse_of^-1
  std::vector<std::string> removed;   // one label, or a complementary pair
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
};

// Removes one annihilating/core element or one complementary pair. The
// performed inverse move is reported through `kind` when non-null.
BasedMatrix remove_element(const BasedMatrix& t, const std::vector<std::string>& victims,
                           MoveKind* kind = nullptr);

// Deterministic reduction: repeatedly removes the first annihilating element,
// else the first core element, else the lexicographically smallest
// complementary pair, scanning in label order.
std::pair<BasedMatrix, ReductionTrace> reduce_to_primitive(const BasedMatrix& t);

BasedMatrix replay_trace(const BasedMatrix& t, const ReductionTrace& trace);

}  // namespace bmparity
