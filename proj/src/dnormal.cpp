#include "pifit/dnormal.hpp"

#include <algorithm>
#include <deque>

namespace pifit {

PiContext::PiContext(LatticePtr lat, PrimeSet pi) : lat_(std::move(lat)), pi_(std::move(pi)) {
  if (pi_.complemented()) throw DomainError("context prime set must be explicit, not complemented");
  const std::size_t n = lat_->size();
  join_memo_.assign(n * n, -1);
  normalizer_memo_.assign(n, -1);
  derived_memo_.assign(n, -1);
  oupper_memo_.assign(n, -1);
  residual_memo_.assign(n, -1);
  normal_in_memo_.assign(n * n, -1);
  subnormal_in_memo_.assign(n * n, -1);
  dnormal_memo_.assign(n * n, -1);
  dnormal_def_memo_.assign(n * n, -1);
}

int PiContext::join(int i, int j) {
  if (i > j) std::swap(i, j);
  int& slot = join_memo_[at(i, j)];
  if (slot < 0) {
    if (contains(j, i))
      slot = j;
    else
      slot = lat_->index_of(join_ids(group(), members(i), members(j)));
  }
  return slot;
}

int PiContext::intersect(int i, int j) {
  if (contains(i, j)) return j;
  if (contains(j, i)) return i;
  return lat_->index_of(intersect_ids(members(i), members(j)));
}

int PiContext::conj_sub(int i, ElementId g) {
  return lat_->index_of(conjugate_ids(group(), members(i), g));
}

int PiContext::normalizer(int i) {
  int& slot = normalizer_memo_[i];
  if (slot < 0)
    slot = lat_->index_of(normalizer_ids(group(), members(i), full_ids(group())));
  return slot;
}

bool PiContext::normal_in(int i, int a) {
  signed char& slot = normal_in_memo_[at(i, a)];
  if (slot < 0) {
    if (!contains(a, i))
      slot = 0;
    else
      slot = is_normal_in_ids(group(), members(i), lat_->gens_of(a)) ? 1 : 0;
  }
  return slot == 1;
}

int PiContext::normal_closure_in(int i, int a) {
  int cur = i;
  while (true) {
    IdSet next = members(cur);
    for (ElementId x : lat_->gens_of(a))
      next = join_ids(group(), next, conjugate_ids(group(), members(cur), x));
    int nidx = lat_->index_of(next);
    if (nidx == cur) return cur;
    cur = nidx;
  }
}

bool PiContext::subnormal_in(int i, int a) {
  signed char& slot = subnormal_in_memo_[at(i, a)];
  if (slot < 0) {
    if (!contains(a, i)) {
      slot = 0;
    } else {
      int k = a;
      slot = 0;
      while (true) {
        if (k == i) {
          slot = 1;
          break;
        }
        int next = lat_->index_of(normal_closure_ids(group(), members(i), lat_->gens_of(k)));
        if (next == k) break;
        k = next;
      }
    }
  }
  return slot == 1;
}

int PiContext::core_in(int i, int a) {
  return lat_->index_of(core_ids(group(), members(i), members(a)));
}

int PiContext::derived(int i) {
  int& slot = derived_memo_[i];
  if (slot < 0) slot = lat_->index_of(derived_subgroup_ids(group(), members(i)));
  return slot;
}

int PiContext::o_upper_pi(int i) {
  int& slot = oupper_memo_[i];
  if (slot < 0) slot = lat_->index_of(o_upper_pi_ids(group(), members(i), pi_));
  return slot;
}

const std::vector<int>& PiContext::sylows_in(int a, std::uint64_t p) {
  auto key = std::make_pair(a, p);
  auto it = sylow_memo_.find(key);
  if (it == sylow_memo_.end())
    it = sylow_memo_.emplace(key, sylow_in_indices(*lat_, a, p)).first;
  return it->second;
}

std::vector<int> PiContext::subs_of(int a) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (lat_->contains(a, i)) out.push_back(i);
  return out;
}

std::vector<int> PiContext::overs_of(int i) const {
  std::vector<int> out;
  for (int a = 0; a < size(); ++a)
    if (lat_->contains(a, i)) out.push_back(a);
  return out;
}

bool PiContext::member(int i, const ClassSpec& spec) {
  auto& flags = member_memo_[spec.to_string()];
  if (flags.empty()) flags.assign(lat_->size(), -1);
  signed char& slot = flags[i];
  if (slot < 0) slot = class_membership_ids(group(), members(i), spec) ? 1 : 0;
  return slot == 1;
}

bool PiContext::npi_member(int i) { return member(i, ClassSpec::npi(pi_)); }

const Quotient& PiContext::quotient(int num, int ker) {
  auto key = std::make_pair(num, ker);
  auto it = quotient_memo_.find(key);
  if (it == quotient_memo_.end()) {
    auto q = std::make_shared<Quotient>(lat_->group_ptr(), members(num), members(ker));
    it = quotient_memo_.emplace(key, std::move(q)).first;
  }
  return *it->second;
}

const PiContext::QuotientLattice& PiContext::quotient_lattice(int num, int ker) {
  auto key = std::make_pair(num, ker);
  auto it = quotient_lattice_memo_.find(key);
  if (it == quotient_lattice_memo_.end()) {
    quotient(num, ker);  // ensure the quotient exists
    QuotientLattice data;
    data.q = quotient_memo_.at(key);
    data.qlat = Lattice::build(data.q->group_ptr(), data.q->group().order());
    data.npi_member.resize(data.qlat->size());
    const ClassSpec npi = ClassSpec::npi(pi_);
    for (int i = 0; i < static_cast<int>(data.qlat->size()); ++i)
      data.npi_member[i] =
          class_membership_ids(data.qlat->group(), data.qlat->members(i), npi) ? 1 : 0;
    it = quotient_lattice_memo_.emplace(key, std::move(data)).first;
  }
  return it->second;
}

bool PiContext::dnormal_def(int h, int a) {
  signed char& slot = dnormal_def_memo_[at(h, a)];
  if (slot >= 0) return slot == 1;
  if (!contains(a, h)) {
    slot = 0;
    return false;
  }
  const std::size_t pi_size = pi_.explicit_size();
  bool ok = true;
  const int nh = normalizer(h);
  for (const auto& [p, e] : factorize(order_of(a))) {
    const bool p_in_pi = pi_.contains(p);
    const PrimeSet pset({static_cast<unsigned>(p)});
    for (int syl : sylows_in(a, p)) {
      if (!reduces_into(members(syl), members(h), pset)) continue;
      if (!p_in_pi || pi_size == 1) {
        if (!contains(nh, syl)) {
          ok = false;
          break;
        }
      } else {  // p in pi, |pi| >= 2
        if (!contains(normalizer(o_upper_pi(h)), syl)) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) break;
  }
  slot = ok ? 1 : 0;
  return ok;
}

bool PiContext::dnormal(int h, int a) {
  signed char& slot = dnormal_memo_[at(h, a)];
  if (slot >= 0) return slot == 1;
  bool ok = false;
  if (contains(a, h)) {
    if (pi_.explicit_size() <= 1) {
      ok = normal_in(h, a);
    } else {
      const int oh = o_upper_pi(h);
      const int oa = o_upper_pi(a);
      ok = normal_in(oh, a) && contains(normalizer(h), oa);
    }
  }
  slot = ok ? 1 : 0;
  return ok;
}

bool PiContext::dsubnormal(int h, int a) {
  if (!contains(a, h)) return false;
  // Chains ascend by containment, so one BFS from h marks every ambient in
  // which h is Dsubnormal.
  auto it = dsub_reach_.find(h);
  if (it == dsub_reach_.end()) {
    std::vector<char> reach(lat_->size(), 0);
    std::deque<int> todo{h};
    reach[h] = 1;
    while (!todo.empty()) {
      int cur = todo.front();
      todo.pop_front();
      for (int k = 0; k < size(); ++k) {
        if (reach[k] || k == cur || !contains(k, cur)) continue;
        if (dnormal(cur, k)) {
          reach[k] = 1;
          todo.push_back(k);
        }
      }
    }
    it = dsub_reach_.emplace(h, std::move(reach)).first;
  }
  return it->second[a] != 0;
}

std::vector<int> PiContext::dsubnormal_chain(int h, int a) {
  if (!contains(a, h)) return {};
  std::vector<int> parent(lat_->size(), -2);
  std::deque<int> todo{h};
  parent[h] = -1;
  while (!todo.empty()) {
    int cur = todo.front();
    todo.pop_front();
    if (cur == a) {
      std::vector<int> chain;
      for (int c = a; c != -1; c = parent[c]) chain.push_back(c);
      std::reverse(chain.begin(), chain.end());
      return chain;
    }
    for (int k = 0; k < size(); ++k) {
      if (parent[k] != -2 || !contains(k, cur) || !contains(a, k) || k == cur) continue;
      if (dnormal(cur, k)) {
        parent[k] = cur;
        todo.push_back(k);
      }
    }
  }
  return {};
}

bool PiContext::self_dnormalizing(int h) {
  for (int k : overs_of(h))
    if (k != h && dnormal(h, k)) return false;
  return true;
}

std::vector<int> PiContext::maximal_dnormal_proper() {
  if (!piprime_soluble())
    throw DomainError("group " + group().name() + " is not " + pi_.to_string() +
                      "'-soluble; maximal Dnormal subgroups not defined here");
  std::vector<int> dn;
  for (int h = 0; h < size(); ++h)
    if (h != full() && dnormal(h, full())) dn.push_back(h);
  std::vector<int> out;
  for (int h : dn) {
    bool maximal = true;
    for (int k : dn)
      if (k != h && contains(k, h)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(h);
  }
  return out;
}

int PiContext::residual_in(int a) {
  int& slot = residual_memo_[a];
  if (slot >= 0) return slot;
  const ClassSpec npi = ClassSpec::npi(pi_);
  auto quotient_in_class = [&](int n) {
    if (n == a) return true;               // trivial quotient
    if (n == trivial()) return npi_member(a);  // quotient isomorphic to a
    return class_membership(quotient(a, n).group(), npi);
  };
  IdSet acc = members(a);
  for (int n : subs_of(a)) {
    if (!normal_in(n, a)) continue;
    if (quotient_in_class(n)) acc = intersect_ids(acc, members(n));
  }
  int r = lat_->index_of(acc);
  if (!quotient_in_class(r))
    throw MismatchError("residual family is not intersection-closed",
                        "{\"group\":\"" + group().name() + "\",\"pi\":\"" + pi_.to_string() +
                            "\",\"subgroup_order\":" + std::to_string(order_of(a)) + "}");
  slot = r;
  return r;
}

bool PiContext::pi_separable() {
  if (!pi_separable_) pi_separable_ = is_pi_separable(*lat_, pi_);
  return *pi_separable_;
}

bool PiContext::piprime_soluble() {
  if (!piprime_soluble_) piprime_soluble_ = is_piprime_soluble(*lat_, pi_);
  return *piprime_soluble_;
}

}  // namespace pifit
