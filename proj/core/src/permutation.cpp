#include "arcsym/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "arcsym/error.hpp"

namespace arcsym {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw InvalidArgument("image list is not a bijection on {0.." +
                            std::to_string(images_.size()) + "}");
    }
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point x = cycle[i];
      if (x >= degree) {
        throw InvalidArgument("point " + std::to_string(x + 1) + " exceeds degree " +
                              std::to_string(degree));
      }
      if (used[x]) {
        throw InvalidArgument("point " + std::to_string(x + 1) +
                              " repeated in cycle notation");
      }
      used[x] = true;
      images[x] = cycle[(i + 1) % cycle.size()];
    }
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Point Permutation::first_moved() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return static_cast<Point>(i);
  }
  return static_cast<Point>(images_.size());
}

std::size_t Permutation::fixed_point_count() const noexcept {
  std::size_t count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) count += images_[i] == i;
  return count;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    r.images_[images_[i]] = static_cast<Point>(i);
  }
  return r;
}

Permutation Permutation::pow(std::int64_t exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-(exponent + 1)) + 1
                                 : static_cast<std::uint64_t>(exponent);
  Permutation result(degree());
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Permutation Permutation::conjugate(const Permutation& g) const {
  // (g^-1 p g)[g[i]] = g[p[i]]
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    r.images_[g.images_[i]] = g.images_[images_[i]];
  }
  return r;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (std::size_t len : cycle_type()) {
    std::uint64_t g = std::gcd(result, static_cast<std::uint64_t>(len));
    std::uint64_t factor = len / g;
    if (result > UINT64_MAX / factor) {
      throw std::overflow_error("permutation order exceeds 64 bits");
    }
    result *= factor;
  }
  return result;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    for (Point x = static_cast<Point>(start); !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (Point x = static_cast<Point>(start); !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::string Permutation::to_cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& cycle : cs) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(cycle[i] + 1);
    }
    out += ')';
  }
  return out;
}

Permutation operator*(const Permutation& lhs, const Permutation& rhs) {
  Permutation r;
  r.images_.resize(lhs.images_.size());
  for (std::size_t i = 0; i < lhs.images_.size(); ++i) {
    r.images_[i] = rhs.images_[lhs.images_[i]];
  }
  return r;
}

Permutation& Permutation::operator*=(const Permutation& rhs) {
  for (auto& x : images_) x = rhs.images_[x];
  return *this;
}

std::strong_ordering operator<=>(const Permutation& lhs, const Permutation& rhs) {
  if (auto c = lhs.images_.size() <=> rhs.images_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(lhs.images_.begin(), lhs.images_.end(),
                                                rhs.images_.begin(), rhs.images_.end());
}

Permutation parse_permutation(std::string_view text, std::size_t degree) {
  if (degree == 0) throw InvalidArgument("degree must be positive");
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) -> void {
    throw InvalidArgument("malformed cycle notation '" + std::string(text) + "': " + why);
  };
  skip_space();
  if (i == text.size()) fail("empty text");
  while (i < text.size()) {
    if (text[i] != '(') fail("expected '('");
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_space();
      if (i == text.size()) fail("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',' && !cycle.empty()) {
        ++i;
        skip_space();
      }
      if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
        fail("expected a point");
      }
      std::uint64_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (value > degree) {
          throw InvalidArgument("point in '" + std::string(text) + "' exceeds degree " +
                                std::to_string(degree));
        }
        ++i;
      }
      if (value == 0) fail("points are 1-based");
      cycle.push_back(static_cast<Point>(value - 1));
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_space();
  }
  return Permutation::from_cycles(degree, cycles);
}

std::size_t PermutationHash::operator()(std::span<const Point> images) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ images.size();
  for (Point x : images) {
    h ^= x;
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  return (*this)(p.images());
}

}  // namespace arcsym
