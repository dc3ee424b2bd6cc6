#include "pifit/classes.hpp"

#include <algorithm>

#include "pifit/lattice.hpp"

namespace pifit {

namespace {

bool closed_under_mul(const Group& g, const IdSet& s) {
  for (ElementId a : s)
    for (ElementId b : s)
      if (!id_member(s, g.mul(a, b))) return false;
  return true;
}

/// G = S_pi x S_pi' with S_pi' nilpotent, where S_rho is the set of all
/// rho-elements. The two sets are conjugation-invariant, so once they are
/// closed and their sizes multiply up to |H| the decomposition is direct.
bool npi_membership(const Group& g, const IdSet& h, const PrimeSet& pi) {
  const auto n = static_cast<std::uint64_t>(h.size());
  IdSet pi_elems, piprime_elems;
  const PrimeSet pip = pi.complement();
  for (ElementId x : h) {
    const std::uint64_t o = g.element_order(x);
    if (pi.is_pi_number(o)) pi_elems.push_back(x);
    if (pip.is_pi_number(o)) piprime_elems.push_back(x);
  }
  if (pi_elems.size() != pi.pi_part(n)) return false;
  if (piprime_elems.size() != pip.pi_part(n)) return false;
  if (!closed_under_mul(g, pi_elems)) return false;
  if (!closed_under_mul(g, piprime_elems)) return false;
  return is_nilpotent_ids(g, piprime_elems);
}

}  // namespace

bool class_membership_ids(const Group& parent, const IdSet& h, const ClassSpec& spec) {
  switch (spec.tag) {
    case ClassSpec::Tag::All:
      return true;
    case ClassSpec::Tag::Trivial:
      return h.size() == 1;
    case ClassSpec::Tag::EPi:
      return spec.pi.is_pi_number(h.size());
    case ClassSpec::Tag::Nilpotent:
      return is_nilpotent_ids(parent, h);
    case ClassSpec::Tag::NPiPrime:
      return spec.pi.complement().is_pi_number(h.size()) && is_nilpotent_ids(parent, h);
    case ClassSpec::Tag::Npi:
      return npi_membership(parent, h, spec.pi);
    case ClassSpec::Tag::Intersection:
      return std::all_of(spec.parts.begin(), spec.parts.end(),
                         [&](const ClassSpec& s) { return class_membership_ids(parent, h, s); });
  }
  return false;
}

bool class_membership(const Group& g, const ClassSpec& spec) {
  return class_membership_ids(g, full_ids(g), spec);
}

ClassSpec ClassSpec::parse(std::string_view text, const PrimeSet& pi) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (auto amp = text.find('&'); amp != std::string_view::npos) {
    std::vector<ClassSpec> parts;
    std::size_t start = 0;
    while (true) {
      auto next = text.find('&', start);
      parts.push_back(parse(text.substr(start, next - start), pi));
      if (next == std::string_view::npos) break;
      start = next + 1;
    }
    return intersection(std::move(parts));
  }
  if (text == "npi" || text == "epi*npiprime") return npi(pi);
  if (text == "epi") return e_pi(pi);
  if (text == "npiprime") return n_piprime(pi);
  if (text == "nilpotent") return nilpotent();
  if (text == "all") return all();
  if (text == "trivial") return trivial();
  throw ParseError("unknown class spec: '" + std::string(text) + "'");
}

std::string ClassSpec::to_string() const {
  switch (tag) {
    case Tag::All:
      return "all";
    case Tag::Trivial:
      return "trivial";
    case Tag::Nilpotent:
      return "nilpotent";
    case Tag::EPi:
      return "epi" + pi.to_string();
    case Tag::NPiPrime:
      return "npiprime" + pi.to_string();
    case Tag::Npi:
      return "npi" + pi.to_string();
    case Tag::Intersection: {
      std::string out;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += "&";
        out += parts[i].to_string();
      }
      return out;
    }
  }
  return "?";
}

}  // namespace pifit
