#pragma once

#include <iosfwd>

#include "ctk/amalgam.hpp"

namespace ctk {

// Parsed input file: an amalgam plus the optional z1 subspace.
//
// Grammar (one section header per line, entries indented or not):
//   field:
//     p 7
//     m 1
//   diagram:
//     vertices 1 2 3 4 5 6
//     root 6            # optional; default: smallest label
//     edge 1 3
//   omega:
//     edge 4 5 = tau    # literals: id, tau, frob^e, tau*frob^e
//   badpairs:           # optional
//     block 1 3
//   z1:                 # optional
//     vec 1 0 1 0 0 0
// Blank lines and #-comments are ignored. Unknown keys are hard errors.
struct ParsedSpec {
    AmalgamSpec spec;
    ZVectorSpace z1;
};

ParsedSpec parse_spec(std::istream& in);          // ValidationError with line numbers
ParsedSpec load_spec_file(const std::string& path);

} // namespace ctk
