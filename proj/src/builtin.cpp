#include "pbr/builtin.hpp"

#include <algorithm>
#include <cctype>

#include "pbr/errors.hpp"

namespace pbr {
namespace {

using MutableGroupPtr = std::shared_ptr<Group>;

int parse_int(const std::string &s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw SpecParseError("expected a positive integer, got '" + s + "'");
  long v = std::stol(s);
  if (v < 1 || v > 1 << 20) throw SpecParseError("integer out of range: " + s);
  return static_cast<int>(v);
}

MutableGroupPtr make_group(int degree, std::vector<Perm> gens, int cap) {
  return std::make_shared<Group>(degree, std::move(gens), cap);
}

MutableGroupPtr make_cyclic(int n, int cap) {
  if (n == 1) return make_group(1, {}, cap);
  std::vector<int> rot(n);
  for (int i = 0; i < n; ++i) rot[i] = (i + 1) % n;
  return make_group(n, {Perm(rot)}, cap);
}

MutableGroupPtr make_dihedral(int m, int cap) {
  // Coxeter group of type I2(m), order 2m, generators sigma (rotation) and
  // tau (reflection) with sigma^m = tau^2 = (sigma tau)^2 = 1.
  Perm sigma, tau;
  int degree;
  if (m == 1) {
    degree = 2;
    sigma = Perm::identity(2);
    tau = Perm({1, 0});
  } else if (m == 2) {
    // the polygon action is not faithful for m=2; use two blocks of 2 points
    degree = 4;
    sigma = Perm({1, 0, 2, 3});
    tau = Perm({0, 1, 3, 2});
  } else {
    degree = m;
    std::vector<int> rot(m), refl(m);
    for (int i = 0; i < m; ++i) {
      rot[i] = (i + 1) % m;
      refl[i] = (m - i) % m;
    }
    sigma = Perm(rot);
    tau = Perm(refl);
  }
  auto g = make_group(degree, {sigma, tau}, cap);
  if (g->order() != 2 * m) throw InternalInconsistency("dihedral group has wrong order");
  CoxeterData cox;
  cox.m = m;
  cox.tau = g->index_of(tau);
  cox.sigma_tau = g->index_of(sigma * tau);
  g->set_coxeter(cox);
  return g;
}

MutableGroupPtr make_symmetric(int n, int cap) {
  if (n == 1) return make_group(1, {}, cap);
  std::vector<int> cyc(n), swap01(n);
  for (int i = 0; i < n; ++i) { cyc[i] = (i + 1) % n; swap01[i] = i; }
  swap01[0] = 1;
  swap01[1] = 0;
  if (n == 2) return make_group(2, {Perm(swap01)}, cap);
  return make_group(n, {Perm(swap01), Perm(cyc)}, cap);
}

MutableGroupPtr make_alternating(int n, int cap) {
  if (n <= 2) return make_group(std::max(n, 1), {}, cap);
  std::vector<int> three(n);
  for (int i = 0; i < n; ++i) three[i] = i;
  three[0] = 1; three[1] = 2; three[2] = 0; // (0 1 2)
  if (n == 3) return make_group(3, {Perm(three)}, cap);
  std::vector<int> big(n);
  if (n % 2 == 1) {
    for (int i = 0; i < n; ++i) big[i] = (i + 1) % n; // n-cycle, even permutation
  } else {
    big[0] = 0;
    for (int i = 1; i < n; ++i) big[i] = i % (n - 1) + 1; // (1 2 ... n-1)
  }
  return make_group(n, {Perm(three), Perm(big)}, cap);
}

MutableGroupPtr make_quaternion(int cap) {
  // Left-regular action on {1,-1,i,-i,j,-j,k,-k}.
  Perm pi({2, 3, 1, 0, 6, 7, 5, 4});
  Perm pj({4, 5, 7, 6, 1, 0, 2, 3});
  auto g = make_group(8, {pi, pj}, cap);
  if (g->order() != 8) throw InternalInconsistency("quaternion group has wrong order");
  return g;
}

MutableGroupPtr parse_spec(const std::string &raw, int cap);

MutableGroupPtr make_product(const std::string &args, int cap) {
  int depth = 0;
  bool quoted = false;
  size_t comma = std::string::npos;
  for (size_t i = 0; i < args.size(); ++i) {
    char c = args[i];
    if (c == '"') quoted = !quoted;
    if (quoted) continue;
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      if (comma != std::string::npos) throw SpecParseError("prod takes exactly two specs");
      comma = i;
    }
  }
  if (comma == std::string::npos) throw SpecParseError("prod takes exactly two specs");
  auto a = parse_spec(args.substr(0, comma), cap);
  auto b = parse_spec(args.substr(comma + 1), cap);
  if (static_cast<long>(a->order()) * b->order() > cap)
    throw ClosureExceedsCap("direct product order exceeds " + std::to_string(cap));
  const int degree = a->degree() + b->degree();
  std::vector<Perm> gens;
  for (const Perm &p : a->generators()) gens.push_back(p.extended(degree));
  for (const Perm &p : b->generators()) gens.push_back(p.shifted(a->degree(), degree));
  auto g = make_group(degree, gens, cap);
  if (g->order() != a->order() * b->order())
    throw InternalInconsistency("direct product has wrong order");
  return g;
}

std::string strip(const std::string &s) {
  size_t b = s.find_first_not_of(" \t");
  size_t e = s.find_last_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

// Split generators of a perm spec on top-level commas (commas inside cycles
// sit behind '(' and are left alone).
std::vector<std::string> split_generators(const std::string &s) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
      continue;
    }
    cur += c;
  }
  parts.push_back(cur);
  return parts;
}

MutableGroupPtr parse_spec(const std::string &raw, int cap) {
  std::string s = strip(raw);
  if (s.empty()) throw SpecParseError("empty group spec");

  if (s.rfind("prod(", 0) == 0) {
    if (s.back() != ')') throw SpecParseError("unterminated prod(...): " + s);
    return make_product(s.substr(5, s.size() - 6), cap);
  }

  size_t colon = s.find(':');
  if (colon == std::string::npos) throw SpecParseError("unknown group spec: " + s);
  std::string head = s.substr(0, colon);
  std::string rest = strip(s.substr(colon + 1));

  if (head == "cyclic") return make_cyclic(parse_int(rest), cap);
  if (head == "dihedral") return make_dihedral(parse_int(rest), cap);
  if (head == "sym") return make_symmetric(parse_int(rest), cap);
  if (head == "alt") return make_alternating(parse_int(rest), cap);
  if (head == "quaternion") {
    if (parse_int(rest) != 8) throw SpecParseError("only quaternion:8 is supported");
    return make_quaternion(cap);
  }
  if (head == "perm") {
    if (rest.size() >= 2 && rest.front() == '"' && rest.back() == '"')
      rest = rest.substr(1, rest.size() - 2);
    if (strip(rest).empty()) throw SpecParseError("perm spec needs at least one generator");
    std::vector<std::string> gen_texts = split_generators(rest);
    int degree = 0;
    for (const std::string &t : gen_texts)
      degree = std::max(degree, perm_from_cycles(strip(t)).degree());
    std::vector<Perm> gens;
    for (const std::string &t : gen_texts) gens.push_back(perm_from_cycles(strip(t), degree));
    return make_group(degree, gens, cap);
  }
  throw SpecParseError("unknown group spec: " + s);
}

} // namespace

GroupPtr builtin_group(const std::string &spec, int order_cap) {
  MutableGroupPtr g = parse_spec(spec, order_cap);
  g->set_spec(strip(spec));
  return g;
}

} // namespace pbr
