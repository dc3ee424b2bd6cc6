#ifndef PIFIT_PROJECTORS_HPP
#define PIFIT_PROJECTORS_HPP

#include <vector>

#include "pifit/dnormal.hpp"

namespace pifit {

/// U is an Npi-projector of `ambient`: UK/K is Npi-maximal in ambient/K for
/// every K normal in ambient.
bool is_projector_in(PiContext& ctx, int u, int ambient);

std::vector<int> projectors_in(PiContext& ctx, int ambient);

/// E is a covering subgroup: E is a projector of every H with E <= H.
bool is_covering_in(PiContext& ctx, int e, int ambient);
std::vector<int> covering_subgroups(PiContext& ctx);

/// The three-way characterization of projectors in pi'-soluble groups:
/// membership in Npi, self-Dnormalizing, and H ∩ X^{Npi} <= (X^{Npi})' for
/// every intermediate X.
struct ProjectorCharacterization {
  bool in_class = false;
  bool self_dnormalizing = false;
  bool residual_property = false;
  bool all() const { return in_class && self_dnormalizing && residual_property; }
};
ProjectorCharacterization projector_characterization(PiContext& ctx, int h);

struct ProjectorReport {
  std::vector<int> projectors;
  std::vector<int> covering;
  std::vector<ProjectorCharacterization> characterization;  // per lattice index
};
ProjectorReport projector_report(PiContext& ctx);

}  // namespace pifit

#endif
