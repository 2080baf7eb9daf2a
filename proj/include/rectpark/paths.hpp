#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rectpark/combinat.hpp"

namespace rectpark {

// An m x n rectangle (m east steps, n south steps) with m = a d, n = b d,
// d = gcd(m, n).
struct RectangleParams {
  int m = 1;
  int n = 1;
  int d = 1;
  int a = 1;
  int b = 1;

  // Throws std::invalid_argument unless m, n >= 1.
  RectangleParams(int m, int n);
  RectangleParams() = default;

  friend bool operator==(const RectangleParams&, const RectangleParams&) = default;
};

enum class Step : char { South = 'S', East = 'E' };

// Lattice point; paths run from (0, n) to (m, 0).
struct Point {
  int x = 0;
  int y = 0;
  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

// Word over {S, E} with n south and m east steps, last step east.
class FreePath {
 public:
  // Throws std::invalid_argument when the step counts or the final east
  // step are wrong.
  FreePath(RectangleParams params, std::vector<Step> word);

  const RectangleParams& params() const { return params_; }
  const std::vector<Step>& word() const { return word_; }
  bool starts_south() const { return !word_.empty() && word_.front() == Step::South; }

  // The m + n + 1 lattice points visited, starting at (0, n).
  std::vector<Point> points() const;
  // Lengths of the maximal runs of south steps, in path order.
  Composition riser_composition() const;
  std::string str() const;  // "SSEE"

  friend bool operator==(const FreePath&, const FreePath&) = default;

 private:
  RectangleParams params_;
  std::vector<Step> word_;
};

// An (m, n)-Dyck path encoded as a_1 >= ... >= a_n >= 0 where a_k is the
// abscissa of the south step from height k to k - 1, subject to
// a_k <= floor((n - k) m / n).
class RectDyckPath {
 public:
  // Throws std::invalid_argument when seq is not under the staircase.
  RectDyckPath(RectangleParams params, std::vector<int> seq);

  const RectangleParams& params() const { return params_; }
  const std::vector<int>& seq() const { return seq_; }

  std::vector<Step> word() const;
  FreePath as_free_path() const { return FreePath(params_, word()); }
  std::vector<Point> points() const;
  std::string str() const;  // "3210"

  friend bool operator==(const RectDyckPath&, const RectDyckPath&) = default;
  friend auto operator<=>(const RectDyckPath& a, const RectDyckPath& b) { return a.seq_ <=> b.seq_; }

 private:
  RectangleParams params_;
  std::vector<int> seq_;
};

// d_k = floor((n - k) m / n), k = 1..n.
std::vector<int> staircase(int m, int n);

// All (m, n)-Dyck paths, lexicographic in seq.
std::vector<RectDyckPath> enumerate_dyck(int m, int n);
void for_each_dyck(int m, int n, const std::function<void(const RectDyckPath&)>& visit);
long long count_dyck(int m, int n);

// Multiplicities of the distinct values of seq, ordered by increasing value.
Composition riser_composition(const RectDyckPath& path);

// The (n, m)-path of the conjugate partition, padded with zeros to length m.
RectDyckPath conjugate_path(const RectDyckPath& path);

// Gaps between successive points where the path meets the diagonal, read
// from (0, n); a composition of d. Endpoints are not returns.
Composition returns_composition(const RectDyckPath& path);
bool is_primitive(const RectDyckPath& path);

// Words with n south and m east steps ending in east, lexicographic with
// South < East. With require_south_start only those beginning with south.
// For n = 0 the single all-east word.
std::vector<FreePath> enumerate_free(int m, int n, bool require_south_start);

// rank(x, y) = m y + n x.
long long rank(const RectangleParams& params, const Point& p);

// Path points, (m, 0) excluded, of maximal rank, in path order.
std::vector<Point> highest_rank_points(const FreePath& path);
std::vector<Point> highest_rank_points(const RectDyckPath& path);

// Points between a south step and a following east step, in path order.
std::vector<Point> corners(const FreePath& path);
std::vector<Point> corners(const RectDyckPath& path);

// Cuts after the j-th east step (1 <= j <= m) and swaps the two pieces.
// Throws std::out_of_range for j outside [1, m].
FreePath cyclic_shift(const FreePath& path, int j);

// Bijection Dyck^t x [m] -> Bin^t x [t]: cut the Dyck path after its j-th
// east step. The second component is the 1-based position, among the
// highest points of the image, of the image of the path's last point.
struct BizleyImage {
  FreePath path;
  int highest_index;
};
BizleyImage bizley_forward(const RectDyckPath& path, int j);
// Inverse: rotate so that the highest_index-th highest point becomes the
// start. Returns the Dyck path and the cut index j.
std::pair<RectDyckPath, int> bizley_backward(const FreePath& path, int highest_index);

// Corner-restricted variant Dyck^{t,c} x [c] -> cBin^{t,c} x [t]: the cut
// is placed after the east step that ends the j-th east run followed by a
// south step (cyclically), so that the image starts with a south step.
BizleyImage corner_forward(const RectDyckPath& path, int j);
std::pair<RectDyckPath, int> corner_backward(const FreePath& path, int highest_index);

// Reads a free path that stays weakly below the diagonal back as a Dyck path.
RectDyckPath dyck_from_word(const RectangleParams& params, const std::vector<Step>& word);

}  // namespace rectpark
