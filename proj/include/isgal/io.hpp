#ifndef ISGAL_IO_HPP
#define ISGAL_IO_HPP

#include <string>

#include "isgal/action.hpp"
#include "isgal/correspondence.hpp"
#include "isgal/inverse_semigroup.hpp"

namespace isgal {

/// Reads an .isg file. Format A ("kind partial_maps"): a ground size and
/// generator maps, the semigroup being their closure. Format B ("kind
/// table"): explicit element list, multiplication rows and inverses.
/// Lines starting with # are comments. Throws Error with a line number.
InverseSemigroup parse_isg(const std::string& path);
InverseSemigroup parse_isg_text(const std::string& text);

/// Reads an .act file describing an action of s: "idempotents n" fixes the
/// algebra size, "ideal NAME = i j ..." the nonzero idempotent ideals and
/// "map NAME : i>j ..." the relabelings of generating maximal elements;
/// every other sigma is completed through products and inverses, and
/// disagreeing completions are rejected.
Action parse_act(const std::string& path, const InverseSemigroup& s, const Field& field);
Action parse_act_text(const std::string& text, const InverseSemigroup& s, const Field& field);

/// table-format .isg text; parse_isg_text(emit_isg(s)) reproduces s
std::string emit_isg(const InverseSemigroup& s);

/// .act text for an action; parse_act_text(emit_act(b), b.semigroup(), ...)
/// reproduces the action
std::string emit_act(const Action& b);

/// Hasse diagram of the natural partial order in DOT
std::string hasse_dot(const InverseSemigroup& s);

/// refinement lattice of the correspondence subalgebras in DOT, each node
/// labeled with its partition and stabilizer size
std::string correspondence_dot(const CorrespondenceReport& rep);

}  // namespace isgal

#endif
