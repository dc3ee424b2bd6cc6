#include "pifit/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace pifit {

namespace {
constexpr std::size_t kMultTableMax = 2048;
}

GroupPtr Group::generate(std::vector<Perm> generators, std::string name, const GenOptions& opt) {
  std::size_t degree = 1;
  for (const auto& g : generators) {
    if (g.degree() == 0) throw DomainError("degree-0 generator");
    if (degree == 1) degree = g.degree();
    if (g.degree() != degree) throw DomainError("generators of mixed degree");
  }

  std::set<Perm> seen;
  std::deque<Perm> todo;
  seen.insert(Perm::identity(degree));
  for (const auto& g : generators)
    if (seen.insert(g).second) todo.push_back(g);

  std::vector<Perm> gens = generators;
  while (!todo.empty()) {
    Perm cur = std::move(todo.front());
    todo.pop_front();
    for (const auto& g : gens) {
      Perm p = cur.then(g);
      if (seen.insert(p).second) {
        if (seen.size() > opt.order_cap)
          throw CapError("group order exceeds cap " + std::to_string(opt.order_cap));
        todo.push_back(std::move(p));
      }
    }
    Perm q = cur.inverse();
    if (seen.insert(q).second) {
      if (seen.size() > opt.order_cap)
        throw CapError("group order exceeds cap " + std::to_string(opt.order_cap));
      todo.push_back(std::move(q));
    }
  }

  auto grp = std::shared_ptr<Group>(new Group());
  grp->degree_ = degree;
  grp->name_ = std::move(name);
  grp->elements_.assign(seen.begin(), seen.end());  // std::set iterates sorted
  for (const auto& g : generators) grp->generator_ids_.push_back(grp->id_of(g));
  std::sort(grp->generator_ids_.begin(), grp->generator_ids_.end());
  grp->generator_ids_.erase(std::unique(grp->generator_ids_.begin(), grp->generator_ids_.end()),
                            grp->generator_ids_.end());
  grp->build_tables();
  return grp;
}

GroupPtr Group::trivial(std::size_t degree, std::string name) {
  return generate({Perm::identity(degree)}, std::move(name));
}

GroupPtr Group::direct_product(const Group& a, const Group& b, std::string name,
                               const GenOptions& opt) {
  if (a.order() * b.order() > opt.order_cap)
    throw CapError("direct product order exceeds cap " + std::to_string(opt.order_cap));
  const std::size_t da = a.degree(), db = b.degree();
  std::vector<Perm> gens;
  auto embed = [&](const Perm& p, bool left) {
    std::vector<Point> img(da + db);
    for (std::size_t i = 0; i < da; ++i) img[i] = left ? p[static_cast<Point>(i)] : static_cast<Point>(i);
    for (std::size_t i = 0; i < db; ++i)
      img[da + i] = static_cast<Point>(da + (left ? i : p[static_cast<Point>(i)]));
    return Perm(std::move(img));
  };
  for (ElementId id : a.generator_ids()) gens.push_back(embed(a.element(id), true));
  for (ElementId id : b.generator_ids()) gens.push_back(embed(b.element(id), false));
  if (gens.empty()) gens.push_back(Perm::identity(da + db));
  auto grp = generate(std::move(gens), std::move(name), opt);
  if (grp->order() != a.order() * b.order())
    throw DomainError("direct product construction produced wrong order");
  return grp;
}

void Group::build_tables() {
  const std::size_t n = elements_.size();
  inverse_.resize(n);
  element_order_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    inverse_[i] = id_of(elements_[i].inverse());
    element_order_[i] = static_cast<std::uint32_t>(elements_[i].order());
  }
  if (n <= kMultTableMax) {
    mult_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        mult_[i * n + j] = id_of(elements_[i].then(elements_[j]));
  }
}

std::optional<ElementId> Group::find(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || !(*it == p)) return std::nullopt;
  return static_cast<ElementId>(it - elements_.begin());
}

ElementId Group::id_of(const Perm& p) const {
  auto id = find(p);
  if (!id) throw DomainError("permutation is not a group member");
  return *id;
}

ElementId Group::mul(ElementId a, ElementId b) const {
  if (!mult_.empty()) return mult_[static_cast<std::size_t>(a) * elements_.size() + b];
  return id_of(elements_[a].then(elements_[b]));
}

// --- id-set algebra ---

IdSet closure_ids(const Group& g, const IdSet& seed) {
  std::vector<bool> in(g.order(), false);
  std::deque<ElementId> todo;
  auto push = [&](ElementId x) {
    if (!in[x]) {
      in[x] = true;
      todo.push_back(x);
    }
  };
  push(g.identity_id());
  for (ElementId x : seed) push(x);
  IdSet gens(seed);
  while (!todo.empty()) {
    ElementId cur = todo.front();
    todo.pop_front();
    for (ElementId x : gens) push(g.mul(cur, x));
    push(g.inv(cur));
  }
  IdSet out;
  for (ElementId i = 0; i < g.order(); ++i)
    if (in[i]) out.push_back(i);
  return out;
}

bool contains_all(const IdSet& outer, const IdSet& inner) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

bool id_member(const IdSet& set, ElementId x) {
  return std::binary_search(set.begin(), set.end(), x);
}

IdSet intersect_ids(const IdSet& a, const IdSet& b) {
  IdSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IdSet join_ids(const Group& g, const IdSet& a, const IdSet& b) {
  IdSet seed;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(seed));
  return closure_ids(g, seed);
}

IdSet conjugate_ids(const Group& g, const IdSet& s, ElementId x) {
  IdSet out;
  out.reserve(s.size());
  for (ElementId e : s) out.push_back(g.conj(e, x));
  std::sort(out.begin(), out.end());
  return out;
}

IdSet normalizer_ids(const Group& g, const IdSet& s, const IdSet& ambient) {
  IdSet out;
  for (ElementId x : ambient)
    if (conjugate_ids(g, s, x) == s) out.push_back(x);
  return out;
}

IdSet full_ids(const Group& g) {
  IdSet out(g.order());
  for (ElementId i = 0; i < g.order(); ++i) out[i] = i;
  return out;
}

IdSet small_generating_set(const Group& g, const IdSet& s) {
  if (s.size() <= 1) return {};
  IdSet gens;
  IdSet have = {g.identity_id()};
  while (have.size() < s.size()) {
    ElementId best = 0;
    std::size_t best_size = 0;
    IdSet best_closure;
    for (ElementId x : s) {
      if (id_member(have, x)) continue;
      IdSet seed(gens);
      seed.push_back(x);
      IdSet c = closure_ids(g, seed);
      if (c.size() > best_size) {
        best_size = c.size();
        best = x;
        best_closure = std::move(c);
      }
    }
    gens.push_back(best);
    have = std::move(best_closure);
  }
  std::sort(gens.begin(), gens.end());
  return gens;
}

bool is_closed_subgroup(const Group& g, const IdSet& s) {
  if (s.empty() || !id_member(s, g.identity_id())) return false;
  for (ElementId a : s)
    for (ElementId b : s)
      if (!id_member(s, g.mul(a, b))) return false;
  return true;
}

// --- Subgroup wrappers ---

namespace {
void check_same_parent(const Subgroup& s, const Subgroup& t) {
  if (s.parent.get() != t.parent.get()) throw DomainError("subgroups have different parents");
}
}  // namespace

Subgroup make_subgroup(GroupPtr parent, const std::vector<Perm>& gens) {
  IdSet seed;
  for (const auto& p : gens) seed.push_back(parent->id_of(p));
  std::sort(seed.begin(), seed.end());
  return Subgroup{parent, closure_ids(*parent, seed)};
}

Subgroup join(const Subgroup& s, const Subgroup& t) {
  check_same_parent(s, t);
  return Subgroup{s.parent, join_ids(*s.parent, s.members, t.members)};
}

Subgroup intersect(const Subgroup& s, const Subgroup& t) {
  check_same_parent(s, t);
  return Subgroup{s.parent, intersect_ids(s.members, t.members)};
}

Subgroup conjugate(const Subgroup& s, const Perm& g) {
  return Subgroup{s.parent, conjugate_ids(*s.parent, s.members, s.parent->id_of(g))};
}

Subgroup normalizer(const Subgroup& s) {
  return Subgroup{s.parent, normalizer_ids(*s.parent, s.members, full_ids(*s.parent))};
}

bool is_subgroup_of(const Subgroup& s, const Subgroup& t) {
  check_same_parent(s, t);
  return contains_all(t.members, s.members);
}

}  // namespace pifit
