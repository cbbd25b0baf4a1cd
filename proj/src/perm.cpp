#include "pbr/perm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "pbr/errors.hpp"

namespace pbr {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v])
      throw InvalidPermutation("image list is not a bijection");
    seen[v] = 1;
  }
}

Perm Perm::identity(int degree) {
  std::vector<int> im(degree);
  for (int i = 0; i < degree; ++i) im[i] = i;
  return Perm(std::move(im));
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> im(images_.size());
  for (int i = 0; i < degree(); ++i) im[images_[i]] = i;
  return Perm(std::move(im));
}

Perm operator*(const Perm &a, const Perm &b) {
  if (a.degree() != b.degree())
    throw InvalidPermutation("degree mismatch in composition");
  std::vector<int> im(a.degree());
  for (int i = 0; i < a.degree(); ++i) im[i] = a.images_[b.images_[i]];
  return Perm(std::move(im));
}

Perm Perm::extended(int degree) const {
  std::vector<int> im(images_);
  for (int i = this->degree(); i < degree; ++i) im.push_back(i);
  return Perm(std::move(im));
}

Perm Perm::shifted(int offset, int degree) const {
  std::vector<int> im(degree);
  for (int i = 0; i < degree; ++i) im[i] = i;
  for (int i = 0; i < this->degree(); ++i) im[i + offset] = images_[i] + offset;
  return Perm(std::move(im));
}

std::string Perm::cycle_string() const {
  std::vector<char> done(images_.size(), 0);
  std::ostringstream out;
  bool any = false;
  for (int start = 0; start < degree(); ++start) {
    if (done[start] || images_[start] == start) continue;
    any = true;
    out << '(';
    int p = start;
    bool first = true;
    while (!done[p]) {
      done[p] = 1;
      if (!first) out << ' ';
      out << (p + 1);
      first = false;
      p = images_[p];
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Perm perm_from_cycles(const std::string &text, int min_degree) {
  // First pass: find the largest point mentioned.
  int max_point = min_degree;
  std::vector<std::vector<int>> cycles;
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw SpecParseError("expected '(' in cycle notation: " + text);
    ++i;
    std::vector<int> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw SpecParseError("expected point in cycle notation: " + text);
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      if (v < 1) throw SpecParseError("points are 1-based in cycle notation");
      cyc.push_back(v - 1);
      max_point = std::max(max_point, v);
      skip_ws();
      if (i < text.size() && text[i] == ',') { ++i; skip_ws(); } // tolerate comma separators inside a cycle
    }
    if (i >= text.size()) throw SpecParseError("unterminated cycle: " + text);
    ++i; // ')'
    cycles.push_back(std::move(cyc));
    skip_ws();
  }
  std::vector<int> im(max_point);
  for (int p = 0; p < max_point; ++p) im[p] = p;
  for (const auto &cyc : cycles) {
    for (size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k];
      int to = cyc[(k + 1) % cyc.size()];
      if (im[from] != from) throw SpecParseError("point repeated across cycles: " + text);
      im[from] = to;
    }
  }
  return Perm(std::move(im));
}

} // namespace pbr
