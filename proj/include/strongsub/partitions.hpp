#ifndef STRONGSUB_PARTITIONS_HPP
#define STRONGSUB_PARTITIONS_HPP

#include <functional>
#include <vector>

namespace strongsub {

// Enumerates the ways to spread m items over at most max_cells
// interchangeable cells. Every set partition with at most max_cells blocks
// is visited exactly once, encoded as a restricted-growth assignment a of
// length m: a[j] is the cell of item j, a[0] == 0, and each entry exceeds
// the maximum of all earlier entries by at most one. The callback returns
// false to stop early; the function returns false iff it was stopped.
bool for_each_cell_assignment(int m, int max_cells,
                              const std::function<bool(const std::vector<int>&)>& visit);

}  // namespace strongsub

#endif
