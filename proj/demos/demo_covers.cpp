// Z/p-covers of the affine line with bounded conductor against index-p
// subgroups of the truncated Witt group, side by side.

#include <iostream>
#include <set>

#include "wittlang/wittlang.hpp"

using namespace wittlang;

int main() {
  bool ok = true;
  for (auto [p, dmax] : {std::pair{2, 6}, std::pair{3, 4}, std::pair{5, 3}}) {
    std::cout << "p = " << p << '\n';
    for (const auto& row : match_filtrations(p, dmax)) {
      std::cout << "  D=" << row.degree << "  covers " << row.as_count << "  subgroups " << row.witt_count
                << (row.equal() ? "" : "  MISMATCH") << '\n';
      ok = ok && row.equal();
    }
  }
  std::cout << "representatives for p = 2, D = 5:\n";
  std::set<std::vector<int>> seen;
  for (const auto& f : enumerate_as_polys(2, 5)) {
    const auto c = as_reduce(f).representative;
    if (c.degree() > 0 && seen.insert(c.coeffs).second) std::cout << "  y^2 - y = " << to_string(c) << '\n';
  }
  return ok ? 0 : 1;
}
