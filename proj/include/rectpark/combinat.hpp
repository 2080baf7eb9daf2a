#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rectpark/rational.hpp"

namespace rectpark {

// Weakly decreasing sequence of positive integers. The empty partition is
// the index of the constant 1 in every basis.
class Partition {
 public:
  Partition() = default;
  // Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  // Sorts into decreasing order and drops zero entries.
  static Partition from_unsorted(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vec() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  // Number of parts equal to `part`.
  int multiplicity(int part) const;

  // Concatenation followed by sorting; the index of a product in p, h or e.
  Partition merged(const Partition& other) const;

  std::string str() const;  // "[2,1]"

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Ordered sequence of positive integers.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vec() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](std::size_t i) const { return parts_[i]; }

  Partition sorted() const { return Partition::from_unsorted(parts_); }
  // Partial sums c1, c1+c2, ..., excluding the total.
  std::vector<int> partial_sums() const;

  std::string str() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition& a, const Composition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Display order: by size, then reverse lexicographic.
struct CanonicalOrder {
  bool operator()(const Partition& a, const Partition& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a > b;
  }
};

Partition conjugate(const Partition& p);

// z_lambda = prod_i i^{d_i} d_i!
Integer z_of(const Partition& p);

// n! / prod c_i!; throws std::invalid_argument when |c| != n.
Integer multinomial(int n, const Composition& c);
Integer multinomial(int n, std::span<const int> parts);

// Partitions of n in reverse lexicographic order, optionally with exactly
// `length` parts.
std::vector<Partition> partitions_of(int n, std::optional<int> length = std::nullopt);
void for_each_partition(int n, const std::function<void(const Partition&)>& visit,
                        std::optional<int> length = std::nullopt);

// Compositions of n in lexicographic order, optionally with exactly `length` parts.
std::vector<Composition> compositions_of(int n, std::optional<int> length = std::nullopt);

// lambda(mu): the sorted multiset of part multiplicities of mu.
Partition multiplicity_partition(const Partition& p);

// Irreducible character chi^lambda evaluated on cycle type mu, by the
// Murnaghan-Nakayama rule. Memoized; safe to call concurrently.
Integer character(const Partition& lambda, const Partition& mu);

// Hook length of cell (row, col), 1-based, English convention.
int hook_length(const Partition& p, int row, int col);

// s_lambda(1^m) by the hook-content formula; zero when length(lambda) > m.
Rational schur_principal_eval(const Partition& lambda, int m);

}  // namespace rectpark

template <>
struct std::hash<rectpark::Partition> {
  std::size_t operator()(const rectpark::Partition& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.parts()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
  }
};
