#include "strongsub/partitions.hpp"

namespace strongsub {

namespace {

bool descend(int m, int max_cells, int pos, int used, std::vector<int>& assign,
             const std::function<bool(const std::vector<int>&)>& visit) {
  if (pos == m) return visit(assign);
  const int top = used < max_cells ? used : max_cells - 1;
  for (int cell = 0; cell <= top; ++cell) {
    assign[pos] = cell;
    if (!descend(m, max_cells, pos + 1, cell == used ? used + 1 : used, assign, visit))
      return false;
  }
  return true;
}

}  // namespace

bool for_each_cell_assignment(int m, int max_cells,
                              const std::function<bool(const std::vector<int>&)>& visit) {
  if (m == 0) return visit({});
  if (max_cells <= 0) return true;
  std::vector<int> assign(m, 0);
  return descend(m, max_cells, 0, 0, assign, visit);
}

}  // namespace strongsub
