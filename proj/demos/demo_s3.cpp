// S_3 as a quotient of L_{3,1}(F_2): prints the theta image and its subgroup lattice.

#include <iostream>
#include <map>

#include "wittlang/wittlang.hpp"

using namespace wittlang;

int main() {
  const auto t = build_s3_f2();
  const gf::Field& f = *t.field;
  const auto img = theta_image(t, 1, default_order(t));
  std::cout << "theta image of " << img.domain_size << " elements of L_{3,1}(F_2): " << img.image.size()
            << " matrices\n";
  for (const auto& m : img.image) std::cout << "  " << mat::to_string(f, m) << '\n';

  const GroupTable gamma = matrix_group_table(t.field, img.image);
  std::map<std::string, int> tally;
  const auto subs = all_subgroups(gamma);
  for (const auto& s : subs) ++tally[to_string(signature(gamma, s))];
  std::cout << subs.size() << " subgroups by signature:\n";
  for (const auto& [sig, count] : tally) std::cout << "  " << count << " x " << sig << '\n';

  const bool quasi_p = quasi_p_check(gamma, 2);
  std::cout << "generated by 2-subgroups: " << (quasi_p ? "yes" : "no") << '\n';
  return img.image.size() == 6 && subs.size() == 6 && quasi_p ? 0 : 1;
}
