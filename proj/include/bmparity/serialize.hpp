#pragma once

#include <string>
#include <string_view>

#include "bmparity/abelian_group.hpp"
#include "bmparity/based_matrix.hpp"
#include "bmparity/knot.hpp"
#include "bmparity/parity.hpp"
#include "bmparity/partition.hpp"

namespace bmparity {

// Structured (JSON) forms. Integers that fit in 64 bits are numbers, larger
// ones decimal strings. Key order is fixed so output is byte-stable.
std::string matrix_json(const BasedMatrix& t);
std::string bundle_json(const InvariantBundle& b);

// Plain-text matrix in the layout accepted by parse_matrix_text.
std::string format_matrix(const BasedMatrix& t);
std::string format_partition(const BasedMatrix& t, const Partition& p);
std::string format_bundle(const InvariantBundle& b);

// Text matrix format: optional "ring z|z2" and "labels s a b ..." lines,
// then one row per line of whitespace-separated integers ('|' is ignored).
// Without a labels line the labels are s, 1, 2, ... ; '#' starts a comment.
// A document starting with '{' is read as the JSON form instead.
BasedMatrix parse_matrix_text(std::string_view text, Ring default_ring);
BasedMatrix load_matrix_file(const std::string& path, Ring default_ring);

}  // namespace bmparity
