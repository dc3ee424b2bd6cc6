#include "pifit/projectors.hpp"

namespace pifit {

namespace {

/// Npi-maximality of `u` among lattice members contained in `ambient`.
bool npi_maximal_below(PiContext& ctx, int u, int ambient) {
  if (!ctx.npi_member(u)) return false;
  for (int x : ctx.subs_of(ambient))
    if (x != u && ctx.contains(x, u) && ctx.npi_member(x)) return false;
  return true;
}

}  // namespace

bool is_projector_in(PiContext& ctx, int u, int ambient) {
  if (!ctx.contains(ambient, u)) return false;
  if (!ctx.npi_member(u)) return false;  // the trivial-kernel case forces this anyway
  for (int k : ctx.subs_of(ambient)) {
    if (!ctx.normal_in(k, ambient)) continue;
    if (k == ambient) continue;  // trivial quotient: always maximal
    if (k == ctx.trivial()) {
      if (!npi_maximal_below(ctx, u, ambient)) return false;
      continue;
    }
    const auto& qd = ctx.quotient_lattice(ambient, k);
    IdSet img = qd.q->image_ids(ctx.members(u));
    int img_idx = qd.qlat->index_of(img);
    if (!qd.npi_member[img_idx]) return false;
    bool maximal = true;
    for (int x = 0; x < static_cast<int>(qd.qlat->size()); ++x)
      if (x != img_idx && qd.npi_member[x] && qd.qlat->contains(x, img_idx)) {
        maximal = false;
        break;
      }
    if (!maximal) return false;
  }
  return true;
}

std::vector<int> projectors_in(PiContext& ctx, int ambient) {
  std::vector<int> out;
  for (int u : ctx.subs_of(ambient))
    if (is_projector_in(ctx, u, ambient)) out.push_back(u);
  return out;
}

bool is_covering_in(PiContext& ctx, int e, int ambient) {
  if (!ctx.npi_member(e)) return false;
  for (int h : ctx.subs_of(ambient))
    if (ctx.contains(h, e) && !is_projector_in(ctx, e, h)) return false;
  return true;
}

std::vector<int> covering_subgroups(PiContext& ctx) {
  std::vector<int> out;
  for (int e = 0; e < ctx.size(); ++e)
    if (is_covering_in(ctx, e, ctx.full())) out.push_back(e);
  return out;
}

ProjectorCharacterization projector_characterization(PiContext& ctx, int h) {
  ProjectorCharacterization c;
  c.in_class = ctx.npi_member(h);
  c.self_dnormalizing = ctx.self_dnormalizing(h);
  c.residual_property = true;
  for (int x : ctx.overs_of(h)) {
    int r = ctx.residual_in(x);
    int meet = ctx.intersect(h, r);
    if (!ctx.contains(ctx.derived(r), meet)) {
      c.residual_property = false;
      break;
    }
  }
  return c;
}

ProjectorReport projector_report(PiContext& ctx) {
  ProjectorReport rep;
  rep.projectors = projectors_in(ctx, ctx.full());
  rep.covering = covering_subgroups(ctx);
  rep.characterization.resize(ctx.size());
  for (int h = 0; h < ctx.size(); ++h) rep.characterization[h] = projector_characterization(ctx, h);
  return rep;
}

}  // namespace pifit
