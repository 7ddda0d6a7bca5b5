// A short tour of the library: an ultrafilter topology, a spectrum, the
// intermediate rings of F2 ⊂ F4, and the patch closure of Max(Z).

#include <iostream>
#include <string>
#include <vector>

#include "ultratop/ultratop.hpp"

using namespace ultratop;

namespace {

std::string show(const Carrier& c, PointSet s) {
  std::string out = "{";
  auto labels = c.labels_of(s);
  for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? "," : "") + labels[i];
  return out + "}";
}

// F2[x]/(x^2 + x + 1) with elements written as bit patterns 0, 1, x, x+1.
ring::FiniteRing f4() {
  const std::vector<std::string> labels = {"0", "1", "x", "x+1"};
  ring::Table add(4, std::vector<std::size_t>(4)), mul = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) add[a][b] = a ^ b;
  return ring::FiniteRing::from_tables(labels, add, mul, 0, 1);
}

}  // namespace

int main() {
  // Ultrafilter topology of F = {{a,b}} over {a,b,c}: the stable sets.
  Carrier c({"a", "b", "c"});
  auto family = core::SetFamily(c, {{"F", c.subset({"a", "b"})}});
  auto ultra = fintop::ultra_topology(family);
  std::cout << "stable sets of {{a,b}}:";
  for (auto s : ultra.closed_sets()) std::cout << ' ' << show(c, s);
  std::cout << "\nstable closure of {a}: " << show(c, core::stable_closure(c.subset({"a"}), family)) << "\n";

  // Spec(Z/12): two closed points, discrete, equal to its patch topology.
  ring::Spectrum spec(ring::FiniteRing::zmod(12));
  std::cout << "Spec(Z/12):";
  for (const auto& p : spec.primes()) std::cout << ' ' << p.label;
  std::cout << (spec.space().is_discrete() ? " (discrete)\n" : "\n");

  // S(F4 | F2) has the two rings F2 and F4; F4 is the generic point.
  auto field = f4();
  ring::RingEmbedding e(ring::FiniteRing::zmod(2), field, {0, 1});
  ring::OverringSpace overrings(e);
  std::cout << "intermediate rings of F2 -> F4:";
  for (const auto& r : overrings.rings()) std::cout << ' ' << r.label << " (" << r.size() << " elements)";
  std::cout << '\n' << io::to_dot(fintop::specialization_order(overrings.space()), "overrings");

  // Max(Z) is not patch-closed: a nonprincipal ultrafilter converges to (0).
  auto closure = specz::patch_closure(specz::ZSubsetDescriptor::max_spectrum());
  std::cout << "patch closure of Max(Z) contains (0): " << std::boolalpha << closure.include_generic() << '\n';
  return 0;
}
