#pragma once

#include <memory>
#include <string>

#include "polycell/complex.hpp"

namespace polycell {

// Line-oriented complex documents (.pcc):
//
//   pcc 1
//   vertex <id>
//   edge <id> <end0> <end1>
//   face <id> <step>...
//
// A step is an edge id with a trailing direction: '+' enters the edge at side
// 0, '-' at side 1 (U+2212 minus accepted on input, ASCII emitted). '#'
// starts a comment, blank lines are skipped, anything else is rejected.
// A graph is a document with no face lines.

// ParseError (line/column in the message) for malformed text; structural
// violations resurface as SemanticError naming the broken invariant.
std::shared_ptr<const Complex> parse_complex(const std::string& text);

// Canonical form: ids sorted as the constructors left them, one directive per
// line. Emitting a parsed emission is byte-identical.
std::string emit_complex(const Complex& x);

std::shared_ptr<const Complex> load_complex(const std::string& path);
void save_complex(const std::string& path, const Complex& x);

std::string dot_graph(const MultiGraph& g);  // DOT export; never imported

}  // namespace polycell
