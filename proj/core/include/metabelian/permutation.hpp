#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace metabelian {

/// A bijection of {1, ..., n}. Acts on variables by x_i -> x_{sigma(i)}.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t n);
  /// `images[i-1] = sigma(i)`, 1-based values. Throws DomainError unless
  /// the sequence is a bijection.
  static Permutation from_images(const std::vector<std::size_t>& images);
  /// The transposition (a b), 1-based.
  static Permutation transposition(std::size_t n, std::size_t a, std::size_t b);
  /// The cycle (c_0 c_1 ... c_k), 1-based.
  static Permutation cycle(std::size_t n, const std::vector<std::size_t>& points);

  std::size_t size() const noexcept { return images_.size(); }
  /// sigma(i) for 1-based i.
  std::size_t operator()(std::size_t i) const { return images_.at(i - 1) + 1; }
  /// 0-based image of a 0-based point.
  std::size_t image0(std::size_t i) const { return images_[i]; }

  bool is_identity() const;
  Permutation inverse() const;

  /// 1-based image list.
  std::vector<std::size_t> images() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.images_ < b.images_;
  }

 private:
  std::vector<std::size_t> images_;
};

/// (a * b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);
inline Permutation operator*(const Permutation& a, const Permutation& b) {
  return compose(a, b);
}

/// The transposition (1 2) and the n-cycle (1 2 ... n). Requires n >= 2.
std::array<Permutation, 2> sn_generators(std::size_t n);

inline constexpr std::size_t kMaxEnumerationRank = 8;

/// Calls `visit` once for each of the n! elements of S_n, in lexicographic
/// order of image lists. Throws ResourceError for n > kMaxEnumerationRank.
void for_each_permutation(std::size_t n,
                          const std::function<void(const Permutation&)>& visit);
std::vector<Permutation> enumerate_sn(std::size_t n);

/// Parses cycle notation such as `(1 2)(3 4)`; `()` is the identity.
/// Throws ParseError on malformed text and DomainError on repeated points.
Permutation parse_cycle_notation(std::string_view text, std::size_t n);

/// Disjoint-cycle rendering, fixed points omitted; identity is `()`.
std::string to_cycle_string(const Permutation& sigma);

}  // namespace metabelian
