#ifndef ISGAL_CORRESPONDENCE_HPP
#define ISGAL_CORRESPONDENCE_HPP

#include <string>
#include <vector>

#include "isgal/action.hpp"

namespace isgal {

struct CorrespondencePair {
  Subsemigroup subsemigroup;
  PartitionSubalgebra subalgebra;
};

struct RejectedSubalgebra {
  PartitionSubalgebra subalgebra;
  std::string reason;   // "not beta-strong" or "not separable"
  std::string witness;
};

struct CorrespondenceReport {
  std::vector<CorrespondencePair> pairs;  // sorted by block count desc, then lex
  std::vector<RejectedSubalgebra> rejected;
  int full_subsemigroup_count = 0;
  int candidate_subalgebra_count = 0;
};

/// Runs both directions of the correspondence between full inverse
/// subsemigroups containing the non-maximal part of S and the separable
/// beta-strong subalgebras, and verifies they are mutually inverse.
/// Any round-trip mismatch throws: the bijection is the test oracle.
CorrespondenceReport correspondence(const Action& b);

struct SurveyEntry {
  Subsemigroup subsemigroup;
  int quotient_size = 0;
  bool galois = false;
};

/// quotient actions over the normal Clifford members of the lattice;
/// an empty list is a legal outcome
std::vector<SurveyEntry> normal_clifford_survey(const Action& b);

}  // namespace isgal

#endif
