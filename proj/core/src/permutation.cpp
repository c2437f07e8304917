#include "metabelian/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "metabelian/errors.hpp"

namespace metabelian {

Permutation Permutation::identity(std::size_t n) {
  Permutation p;
  p.images_.resize(n);
  std::iota(p.images_.begin(), p.images_.end(), std::size_t{0});
  return p;
}

Permutation Permutation::from_images(const std::vector<std::size_t>& images) {
  const std::size_t n = images.size();
  std::vector<bool> seen(n, false);
  Permutation p;
  p.images_.reserve(n);
  for (std::size_t v : images) {
    if (v < 1 || v > n || seen[v - 1]) {
      throw DomainError("image list is not a permutation of 1.." +
                        std::to_string(n));
    }
    seen[v - 1] = true;
    p.images_.push_back(v - 1);
  }
  return p;
}

Permutation Permutation::transposition(std::size_t n, std::size_t a, std::size_t b) {
  return cycle(n, {a, b});
}

Permutation Permutation::cycle(std::size_t n, const std::vector<std::size_t>& points) {
  Permutation p = identity(n);
  std::vector<bool> used(n, false);
  for (std::size_t pt : points) {
    if (pt < 1 || pt > n) {
      throw DomainError("cycle point " + std::to_string(pt) + " outside 1.." +
                        std::to_string(n));
    }
    if (used[pt - 1]) {
      throw DomainError("cycle repeats point " + std::to_string(pt));
    }
    used[pt - 1] = true;
  }
  for (std::size_t k = 0; k < points.size(); ++k) {
    p.images_[points[k] - 1] = points[(k + 1) % points.size()] - 1;
  }
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv.images_[images_[i]] = i;
  return inv;
}

std::vector<std::size_t> Permutation::images() const {
  std::vector<std::size_t> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1;
  return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) {
    throw DimensionError("composing permutations of different degree");
  }
  std::vector<std::size_t> images(a.size());
  for (std::size_t i = 1; i <= a.size(); ++i) images[i - 1] = a(b(i));
  return Permutation::from_images(images);
}

std::array<Permutation, 2> sn_generators(std::size_t n) {
  if (n < 2) throw DomainError("S_n generators need n >= 2");
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{1});
  return {Permutation::transposition(n, 1, 2), Permutation::cycle(n, all)};
}

void for_each_permutation(std::size_t n,
                          const std::function<void(const Permutation&)>& visit) {
  if (n > kMaxEnumerationRank) {
    throw ResourceError("refusing to enumerate S_" + std::to_string(n) +
                        " (limit " + std::to_string(kMaxEnumerationRank) + ")");
  }
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{1});
  do {
    visit(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
}

std::vector<Permutation> enumerate_sn(std::size_t n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

Permutation parse_cycle_notation(std::string_view text, std::size_t n) {
  Permutation result = Permutation::identity(n);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  if (pos == text.size()) throw ParseError("empty permutation", pos);
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '('", pos);
    ++pos;
    std::vector<std::size_t> points;
    skip_space();
    while (pos < text.size() && text[pos] != ')') {
      if (text[pos] == ',') {
        ++pos;
        skip_space();
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw ParseError("expected a point number", pos);
      }
      std::size_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        ++pos;
      }
      points.push_back(value);
      skip_space();
    }
    if (pos == text.size()) throw ParseError("unterminated cycle", pos);
    ++pos;
    skip_space();
    if (!points.empty()) {
      // Cycles compose right to left, so (1 2)(2 3) applies (2 3) first.
      result = compose(result, Permutation::cycle(n, points));
    }
  }
  return result;
}

std::string to_cycle_string(const Permutation& sigma) {
  std::string out;
  std::vector<bool> seen(sigma.size(), false);
  for (std::size_t start = 0; start < sigma.size(); ++start) {
    if (seen[start] || sigma.image0(start) == start) continue;
    out += '(';
    std::size_t i = start;
    bool first = true;
    while (!seen[i]) {
      seen[i] = true;
      if (!first) out += ' ';
      out += std::to_string(i + 1);
      first = false;
      i = sigma.image0(i);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace metabelian
