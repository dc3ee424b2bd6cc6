#ifndef PIFIT_TEST_COMMON_HPP
#define PIFIT_TEST_COMMON_HPP

#include <initializer_list>
#include <string>

#include "pifit/corpus.hpp"
#include "pifit/dnormal.hpp"

namespace pifit::testutil {

inline GroupPtr mk(const std::string& name, std::size_t degree,
                   std::initializer_list<std::string> gens) {
  std::vector<Perm> perms;
  for (const auto& s : gens) perms.push_back(parse_perm(s, degree));
  return Group::generate(std::move(perms), name);
}

inline GroupPtr corpus_group(const std::string& name) {
  static const Corpus corpus = default_corpus();
  return find_group(corpus, name).group;
}

inline PiContext make_ctx(const std::string& name, const std::string& pi) {
  GroupPtr g = corpus_group(name);
  return PiContext(Lattice::build(g), PrimeSet::parse(pi));
}

/// Subgroup generated by cycle strings, as a lattice index.
inline int sub_idx(PiContext& ctx, std::initializer_list<std::string> gens) {
  IdSet seed;
  for (const auto& s : gens) seed.push_back(ctx.group().id_of(parse_perm(s, ctx.group().degree())));
  std::sort(seed.begin(), seed.end());
  return ctx.lattice().index_of(closure_ids(ctx.group(), seed));
}

}  // namespace pifit::testutil

#endif
