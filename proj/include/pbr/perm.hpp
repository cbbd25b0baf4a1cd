#ifndef PBR_PERM_HPP
#define PBR_PERM_HPP

#include <string>
#include <vector>

namespace pbr {

/// A permutation of {0,...,degree-1}, stored as its image sequence.
class Perm {
public:
  Perm() = default;
  explicit Perm(std::vector<int> images); // throws InvalidPermutation

  static Perm identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point]; }
  const std::vector<int> &images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;

  /// Function composition: (a*b)(x) = a(b(x)).
  friend Perm operator*(const Perm &a, const Perm &b);

  bool operator==(const Perm &rhs) const { return images_ == rhs.images_; }
  bool operator!=(const Perm &rhs) const { return !(*this == rhs); }
  bool operator<(const Perm &rhs) const { return images_ < rhs.images_; }

  /// Pad with fixed points up to a larger degree.
  Perm extended(int degree) const;
  /// Shift all points up by an offset (acting on a later block of points).
  Perm shifted(int offset, int degree) const;

  /// Cycle notation with 1-based points, e.g. "(1 2 3)(4 5)"; identity is "()".
  std::string cycle_string() const;

private:
  std::vector<int> images_;
};

/// Parse one product of cycles with 1-based points, e.g. "(1 2 3)(4 5)".
/// Points not mentioned are fixed; degree is at least min_degree.
Perm perm_from_cycles(const std::string &text, int min_degree = 0);

} // namespace pbr

#endif
