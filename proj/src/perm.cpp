#include "pifit/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pifit {

Perm::Perm(std::vector<Point> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (Point v : img_) {
    if (v >= img_.size() || seen[v]) throw DomainError("image vector is not a bijection");
    seen[v] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  Perm p;
  p.img_ = std::move(img);
  return p;
}

Perm Perm::then(const Perm& q) const {
  if (degree() != q.degree()) throw DomainError("degree mismatch in composition");
  Perm r;
  r.img_.resize(degree());
  for (std::size_t i = 0; i < degree(); ++i) r.img_[i] = q.img_[img_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(degree());
  for (std::size_t i = 0; i < degree(); ++i) r.img_[img_[i]] = static_cast<Point>(i);
  return r;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::uint64_t Perm::order() const {
  std::vector<bool> seen(degree(), false);
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = img_[j];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string Perm::to_cycles() const {
  std::ostringstream out;
  std::vector<bool> seen(degree(), false);
  bool any = false;
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) {
      seen[i] = true;
      continue;
    }
    any = true;
    out << '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out << ' ';
      out << (j + 1);
      first = false;
      j = img_[j];
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Perm parse_perm(std::string_view text, std::size_t degree) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw ParseError("empty permutation text");
  bool saw_cycle = false;
  while (pos < text.size()) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '(') throw ParseError("expected '(' in cycle notation: " + std::string(text));
    ++pos;
    std::vector<Point> cycle;
    while (true) {
      skip_ws();
      if (pos == text.size()) throw ParseError("unterminated cycle: " + std::string(text));
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("expected point or ')' in cycle: " + std::string(text));
      std::size_t val = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        val = val * 10 + static_cast<std::size_t>(text[pos] - '0');
        ++pos;
        if (val > 100000) throw ParseError("point out of range: " + std::string(text));
      }
      if (val == 0) throw ParseError("points are 1-based; 0 is not a point");
      if (val > degree)
        throw ParseError("point " + std::to_string(val) + " exceeds degree " +
                         std::to_string(degree));
      Point pt = static_cast<Point>(val - 1);
      if (used[pt])
        throw ParseError("point " + std::to_string(val) + " repeated in " + std::string(text));
      used[pt] = true;
      cycle.push_back(pt);
    }
    saw_cycle = true;
    for (std::size_t k = 0; k < cycle.size(); ++k)
      img[cycle[k]] = cycle[(k + 1) % cycle.size()];
  }
  if (!saw_cycle) throw ParseError("no cycles found in: " + std::string(text));
  return Perm(std::move(img));
}

}  // namespace pifit
