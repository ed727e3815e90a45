#pragma once

#include <iosfwd>
#include <string>

#include "domino/arrival_sequence.hpp"

namespace domino {

/// Instance file format:
///   line 1:    `n <count>`
///   line i+1:  space-separated earlier neighbors of v_i (may be empty)
/// Lines whose first non-blank character is `#` are comments and do not
/// count as entries; an inline `#` starts a trailing comment.
ArrivalSequence parse_instance(std::istream& in, std::string name = "");
ArrivalSequence parse_instance_file(const std::string& path);

/// Canonical form: `n <count>` followed by one line per vertex with sorted
/// neighbors joined by single spaces, no trailing whitespace, no comments.
/// parse -> serialize -> parse round-trips bit-exactly.
std::string serialize_instance(const ArrivalSequence& seq);
void write_instance_file(const ArrivalSequence& seq, const std::string& path);

}  // namespace domino
