#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rectpark/paths.hpp"
#include "rectpark/symfunc.hpp"

namespace rectpark {

// Which Dyck shapes contribute: all of them, the primitive ones, or those
// whose returns composition equals a given composition of d.
struct PathFilter {
  enum class Kind { All, Primitive, Returns };
  Kind kind = Kind::All;
  Composition returns;

  static PathFilter all() { return {}; }
  static PathFilter primitive() { return {Kind::Primitive, {}}; }
  static PathFilter with_returns(Composition gamma) { return {Kind::Returns, std::move(gamma)}; }

  // Throws std::invalid_argument when a returns filter is not a composition of d.
  void validate(const RectangleParams& params) const;
  bool accepts(const RectDyckPath& path) const;

  // "all", "primitive", "returns=1,2"
  std::string str() const;
  static PathFilter parse(const std::string& text);
};

// Word b_1..b_n whose decreasing rearrangement is an (m, n)-Dyck path.
class ParkingFunction {
 public:
  // Throws std::invalid_argument when the word is not an (m, n)-parking function.
  ParkingFunction(RectangleParams params, std::vector<int> word);

  const RectangleParams& params() const { return params_; }
  const std::vector<int>& word() const { return word_; }
  RectDyckPath shape() const;
  std::string str() const;

  friend bool operator==(const ParkingFunction&, const ParkingFunction&) = default;
  friend auto operator<=>(const ParkingFunction& a, const ParkingFunction& b) {
    return a.word_ <=> b.word_;
  }

 private:
  RectangleParams params_;
  std::vector<int> word_;
};

bool is_parking(const std::vector<int>& word, int m, int n);

// Distinct rearrangements of the shape's sequence, lexicographic.
std::vector<ParkingFunction> enumerate_parking_for_shape(const RectDyckPath& shape);
void for_each_parking_for_shape(const RectDyckPath& shape,
                                const std::function<void(const std::vector<int>&)>& visit);

// Visits every parking function whose shape passes the filter, in
// lexicographic order of words, without storing them.
void for_each_parking(int m, int n, const PathFilter& filter,
                      const std::function<void(const std::vector<int>&)>& visit);
// Union over qualifying shapes, sorted lexicographically.
std::vector<ParkingFunction> enumerate_parking(int m, int n, const PathFilter& filter = {});
// Number of parking functions by visiting every one of them.
long long count_parking_brute(int m, int n, const PathFilter& filter = {});
// Same count by summing multinomials over shapes.
Integer count_parking_by_shapes(int m, int n, const PathFilter& filter = {});

// Sum over qualifying shapes of h indexed by the sorted riser composition.
SymFunc brute_frobenius(int m, int n, const PathFilter& filter = {});
// Sum over shapes alpha of h_{rho(alpha)}(x) h_{rho(alpha')}(y).
BiSymFunc brute_bifrobenius(int m, int n);

}  // namespace rectpark
