#ifndef SWAPBRIBERY_IO_H_
#define SWAPBRIBERY_IO_H_

// Line-oriented text formats. One directive per line, `#` starts a comment,
// voters are numbered from 1 and candidates are addressed by name.
//
// Instance:
//   candidates <name> ...
//   preferred <name>
//   rule plurality | kapproval <k> | veto | borda | copeland <num>/<den>
//        | maximin | spav
//   budget <int>
//   vote <name> ... [approve <l>]           (once per voter, in order)
//   swapprices <voter>                      (followed by m rows of m
//                                            entries; `x` = forbidden, the
//                                            diagonal is ignored)
//   shiftprices <voter> <rho1> <rho2> ...   (rho(0) = 0 is implicit; one
//                                            entry per candidate above p)
//   sigma <voter> <delta>:<cost> ...        (unlisted deltas are forbidden)
//
// Solution:
//   solver <name>
//   swap <voter> <upper> <lower>            (execution order)
//   shift <voter> <k>
//   threshold <voter> <delta>
//   cost <C>
//   winners <name> ...
//   replay ok
//
// X3C source:   x3c <K>, then `set <i> <j> <l>` with elements 1..3K.
// Biclique:     bb <N> <K>, then `edge <u> <w>` with vertices 1..N.
// Possible winner: candidates / preferred / rule as above, then one
//   `partial <chain> ...` line per voter; each chain looks like
//   a>b>c, and an empty line body means no information.

#include <string>
#include <string_view>

#include "swapbribery/generic_solvers.h"
#include "swapbribery/hardness_gen.h"
#include "swapbribery/instance.h"

namespace swapbribery {

// Throws ParseError (with the offending line) or ParameterError.
BriberyInstance parse_instance(std::string_view text);
// Canonical: equal instances give byte-identical output.
std::string write_instance(const BriberyInstance& instance);

struct SolutionDocument {
  std::string solver;
  BriberySolution solution;
};

// Replays the solution first and throws ConsistencyError if it does not
// reproduce the recorded cost and winners or if the preferred candidate
// loses. With `enforce_budget` the cost must also fit the budget.
std::string write_solution(const BriberySolution& solution,
                           const BriberyInstance& instance,
                           std::string_view solver, bool enforce_budget = true);
// Reads the document back against its instance. Does not replay.
SolutionDocument parse_solution(std::string_view text,
                                const BriberyInstance& instance);

X3CInstance parse_x3c(std::string_view text);
std::string write_x3c(const X3CInstance& x3c);
BBInstance parse_bb(std::string_view text);
std::string write_bb(const BBInstance& bb);
PossibleWinnerInstance parse_possible_winner(std::string_view text);
std::string write_possible_winner(const PossibleWinnerInstance& pw);

}  // namespace swapbribery

#endif  // SWAPBRIBERY_IO_H_
