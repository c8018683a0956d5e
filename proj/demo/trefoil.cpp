// Walks the trefoil through the main constructions.
#include <iostream>

#include "knotcat/invariants.hpp"

int main() {
  using namespace knotcat;
  BraidWord b = BraidWord::parse("s1 s1 s1", 2);
  std::cout << "braid " << b.str() << " on " << b.strands << " strands, writhe " << writhes(b).total << "\n";

  GroupPresentation g = knot_group_presentation(b);
  std::cout << "link group " << g.str() << "\n";
  std::cout << "abelianization " << abelianization(g).str() << "\n";

  AlexPoly burau = alexander_polynomial(b, "burau"), fox = alexander_polynomial(b, "fox");
  std::cout << "alexander (burau) " << burau.str() << "\n";
  std::cout << "alexander (fox)   " << fox.str() << "\n";

  for (const char* t : {"s3", "s4", "z3"})
    std::cout << "|Hom(pi, " << t << ")| = " << finite_hom_count(g, finite_group(t)).count << "\n";

  LinkDGCategory cat = knot_dg_category(b);
  DifferentialReport d2 = check_d_squared(*cat.dg);
  std::cout << "knot DG category: " << cat.dg->quiver->arrow_count() << " arrows, d^2 = 0 on " << d2.checked
            << " generators: " << (d2.ok() ? "yes" : "no") << "\n";

  AlgebraPresentation h = hc0_presentation(b);
  std::cout << "HC0 has " << h.generators().size() << " generators and " << h.relations.size() << " relations\n";
  for (auto& r : h.relations) std::cout << "  " << r.str() << " = 0\n";

  for (int q : {3, 5}) {
    PointReport p = point_count(h, q, {}, {});
    std::cout << "points over F" << q << ": " << p.total << "\n";
  }
}
