// Five-vertex path with a small tree glued to its middle vertex: the witness
// is 1, 1, 0, -1, -1 on the path and 0 on the glued part.
#include <iostream>

#include "nsum/ns_checker.hpp"

int main() {
  const nsum::Tree t(nsum::parse_edge_list("0 1\n1 2\n2 3\n3 4\n2 5\n5 6\n5 7\n"));
  const auto s = nsum::s_at_all_roots(t);
  for (nsum::Vertex v = 0; v < t.order(); ++v) std::cout << "S(" << v << ") = " << s[v] << '\n';
  const auto w = nsum::construct_witness(t, 0);
  std::cout << "witness:";
  for (const auto& x : w.values) std::cout << ' ' << x;
  std::cout << '\n';
}
