#include "rectpark/paths.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rectpark {

RectangleParams::RectangleParams(int m_, int n_) : m(m_), n(n_) {
  if (m < 1 || n < 1) throw std::invalid_argument("rectangle sides must be positive");
  d = std::gcd(m, n);
  a = m / d;
  b = n / d;
}

namespace {

int count_steps(const std::vector<Step>& word, Step s) {
  return static_cast<int>(std::count(word.begin(), word.end(), s));
}

std::vector<Point> walk(const RectangleParams& params, const std::vector<Step>& word) {
  std::vector<Point> pts;
  pts.reserve(word.size() + 1);
  Point cur{0, params.n};
  pts.push_back(cur);
  for (Step s : word) {
    if (s == Step::East) ++cur.x;
    else --cur.y;
    pts.push_back(cur);
  }
  return pts;
}

std::string word_str(const std::vector<Step>& word) {
  std::string s;
  for (Step st : word) s += static_cast<char>(st);
  return s;
}

}  // namespace

FreePath::FreePath(RectangleParams params, std::vector<Step> word)
    : params_(params), word_(std::move(word)) {
  if (count_steps(word_, Step::South) != params_.n || count_steps(word_, Step::East) != params_.m)
    throw std::invalid_argument("free path has the wrong number of steps");
  if (word_.back() != Step::East) throw std::invalid_argument("free path must end with an east step");
}

std::vector<Point> FreePath::points() const { return walk(params_, word_); }

Composition FreePath::riser_composition() const {
  std::vector<int> runs;
  int run = 0;
  for (Step s : word_) {
    if (s == Step::South) {
      ++run;
    } else if (run) {
      runs.push_back(run);
      run = 0;
    }
  }
  if (run) runs.push_back(run);
  return Composition(std::move(runs));
}

std::string FreePath::str() const { return word_str(word_); }

std::vector<int> staircase(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("staircase: m and n must be positive");
  std::vector<int> d(n);
  for (int k = 1; k <= n; ++k) d[k - 1] = static_cast<int>((static_cast<long long>(n - k) * m) / n);
  return d;
}

RectDyckPath::RectDyckPath(RectangleParams params, std::vector<int> seq)
    : params_(params), seq_(std::move(seq)) {
  if (static_cast<int>(seq_.size()) != params_.n)
    throw std::invalid_argument("Dyck path sequence must have length n");
  const auto bound = staircase(params_.m, params_.n);
  for (int k = 0; k < params_.n; ++k) {
    if (seq_[k] < 0 || seq_[k] > bound[k])
      throw std::invalid_argument("Dyck path sequence exceeds the staircase");
    if (k > 0 && seq_[k] > seq_[k - 1])
      throw std::invalid_argument("Dyck path sequence must be weakly decreasing");
  }
}

std::vector<Step> RectDyckPath::word() const {
  std::vector<Step> w;
  w.reserve(params_.m + params_.n);
  int x = 0;
  // Top to bottom: a_n first.
  for (int k = params_.n - 1; k >= 0; --k) {
    for (; x < seq_[k]; ++x) w.push_back(Step::East);
    w.push_back(Step::South);
  }
  for (; x < params_.m; ++x) w.push_back(Step::East);
  return w;
}

std::vector<Point> RectDyckPath::points() const { return walk(params_, word()); }

std::string RectDyckPath::str() const {
  std::string s;
  for (std::size_t i = 0; i < seq_.size(); ++i) {
    if (i && (seq_[i] >= 10 || seq_[i - 1] >= 10)) s += ',';
    s += std::to_string(seq_[i]);
  }
  return s;
}

RectDyckPath dyck_from_word(const RectangleParams& params, const std::vector<Step>& word) {
  std::vector<int> seq(params.n);
  int x = 0;
  int y = params.n;
  for (Step s : word) {
    if (s == Step::East) {
      ++x;
    } else {
      if (y < 1) throw std::invalid_argument("word has too many south steps");
      seq[y - 1] = x;
      --y;
    }
  }
  return RectDyckPath(params, std::move(seq));
}

namespace {

void dyck_rec(const RectangleParams& params, const std::vector<int>& bound, std::vector<int>& seq,
              int k, const std::function<void(const RectDyckPath&)>& visit) {
  if (k == params.n) {
    visit(RectDyckPath(params, seq));
    return;
  }
  const int hi = k == 0 ? bound[0] : std::min(bound[k], seq[k - 1]);
  for (int v = 0; v <= hi; ++v) {
    seq[k] = v;
    dyck_rec(params, bound, seq, k + 1, visit);
  }
}

}  // namespace

void for_each_dyck(int m, int n, const std::function<void(const RectDyckPath&)>& visit) {
  const RectangleParams params(m, n);
  const auto bound = staircase(m, n);
  std::vector<int> seq(n, 0);
  dyck_rec(params, bound, seq, 0, visit);
}

std::vector<RectDyckPath> enumerate_dyck(int m, int n) {
  std::vector<RectDyckPath> out;
  for_each_dyck(m, n, [&](const RectDyckPath& p) { out.push_back(p); });
  return out;
}

long long count_dyck(int m, int n) {
  long long count = 0;
  for_each_dyck(m, n, [&](const RectDyckPath&) { ++count; });
  return count;
}

Composition riser_composition(const RectDyckPath& path) {
  std::vector<int> sorted = path.seq();
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> mults;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    mults.push_back(static_cast<int>(j - i));
    i = j;
  }
  return Composition(std::move(mults));
}

RectDyckPath conjugate_path(const RectDyckPath& path) {
  const auto& p = path.params();
  const Partition conj = conjugate(Partition::from_unsorted(path.seq()));
  std::vector<int> seq(p.m, 0);
  std::copy(conj.vec().begin(), conj.vec().end(), seq.begin());
  return RectDyckPath(RectangleParams(p.n, p.m), std::move(seq));
}

Composition returns_composition(const RectDyckPath& path) {
  const auto& p = path.params();
  std::vector<int> touches;  // multiples s of (a, -b) from the start, 0 < s < d
  for (const Point& pt : path.points()) {
    if (pt.x <= 0 || pt.x >= p.m) continue;
    if (static_cast<long long>(p.n) * pt.x + static_cast<long long>(p.m) * pt.y ==
        static_cast<long long>(p.m) * p.n)
      touches.push_back(pt.x / p.a);
  }
  std::vector<int> parts;
  int prev = 0;
  for (int s : touches) {
    parts.push_back(s - prev);
    prev = s;
  }
  parts.push_back(p.d - prev);
  return Composition(std::move(parts));
}

bool is_primitive(const RectDyckPath& path) { return returns_composition(path).length() == 1; }

std::vector<FreePath> enumerate_free(int m, int n, bool require_south_start) {
  if (m < 1) throw std::invalid_argument("enumerate_free: m must be positive");
  std::vector<FreePath> out;
  if (n == 0) {
    if (!require_south_start) {
      RectangleParams params;
      params.m = m;
      params.n = 0;
      params.d = m;
      params.a = 1;
      params.b = 0;
      out.emplace_back(params, std::vector<Step>(m, Step::East));
    }
    return out;
  }
  const RectangleParams params(m, n);
  // Choose positions of the n south steps among the first m + n - 1 letters.
  const int len = m + n - 1;
  std::vector<bool> pick(len, false);
  std::fill(pick.begin(), pick.begin() + n, true);
  do {
    if (require_south_start && !pick[0]) continue;
    std::vector<Step> w(m + n, Step::East);
    for (int i = 0; i < len; ++i)
      if (pick[i]) w[i] = Step::South;
    out.emplace_back(params, std::move(w));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

long long rank(const RectangleParams& params, const Point& p) {
  return static_cast<long long>(params.m) * p.y + static_cast<long long>(params.n) * p.x;
}

namespace {

// Positions (indices into points()) of the highest rank points, (m, 0) excluded.
std::vector<int> highest_positions(const RectangleParams& params, const std::vector<Point>& pts) {
  long long best = 0;
  std::vector<int> pos;
  for (int i = 0; i + 1 < static_cast<int>(pts.size()); ++i) {
    const long long r = rank(params, pts[i]);
    if (pos.empty() || r > best) {
      best = r;
      pos.assign(1, i);
    } else if (r == best) {
      pos.push_back(i);
    }
  }
  return pos;
}

std::vector<Point> select(const std::vector<Point>& pts, const std::vector<int>& pos) {
  std::vector<Point> out;
  for (int i : pos) out.push_back(pts[i]);
  return out;
}

std::vector<Step> rotate_word(const std::vector<Step>& word, int cut) {
  std::vector<Step> out(word.begin() + cut, word.end());
  out.insert(out.end(), word.begin(), word.begin() + cut);
  return out;
}

// Letter index i (1-based) such that the cut is after the j-th east step.
int east_cut_position(const std::vector<Step>& word, int j) {
  int seen = 0;
  for (int i = 0; i < static_cast<int>(word.size()); ++i) {
    if (word[i] == Step::East && ++seen == j) return i + 1;
  }
  throw std::out_of_range("cut index exceeds the number of east steps");
}

// Cut positions i (1-based) with letter i east and letter i+1 (cyclically) south.
std::vector<int> valley_cuts(const std::vector<Step>& word) {
  std::vector<int> cuts;
  const int len = static_cast<int>(word.size());
  for (int i = 0; i < len; ++i)
    if (word[i] == Step::East && word[(i + 1) % len] == Step::South) cuts.push_back(i + 1);
  return cuts;
}

BizleyImage rotate_at(const RectDyckPath& path, int cut) {
  const auto word = path.word();
  const int len = static_cast<int>(word.size());
  FreePath image(path.params(), rotate_word(word, cut));
  // The start of the Dyck path lands at position len - cut of the image.
  const auto pos = highest_positions(image.params(), image.points());
  const auto it = std::find(pos.begin(), pos.end(), (len - cut) % len);
  if (it == pos.end()) throw std::logic_error("path start is not a highest point of its rotation");
  return {std::move(image), static_cast<int>(it - pos.begin()) + 1};
}

// Rotates so that the chosen highest point becomes the start; returns the
// Dyck path and the letter index of the original cut.
std::pair<RectDyckPath, int> unrotate(const FreePath& path, int highest_index) {
  const auto pos = highest_positions(path.params(), path.points());
  if (highest_index < 1 || highest_index > static_cast<int>(pos.size()))
    throw std::out_of_range("highest point index out of range");
  const int p = pos[highest_index - 1];
  const int len = static_cast<int>(path.word().size());
  const auto word = rotate_word(path.word(), p);
  return {dyck_from_word(path.params(), word), len - p};
}

}  // namespace

std::vector<Point> highest_rank_points(const FreePath& path) {
  const auto pts = path.points();
  return select(pts, highest_positions(path.params(), pts));
}

std::vector<Point> highest_rank_points(const RectDyckPath& path) {
  const auto pts = path.points();
  return select(pts, highest_positions(path.params(), pts));
}

namespace {

std::vector<Point> corners_of(const RectangleParams& params, const std::vector<Step>& word) {
  const auto pts = walk(params, word);
  std::vector<Point> out;
  for (std::size_t i = 0; i + 1 < word.size(); ++i)
    if (word[i] == Step::South && word[i + 1] == Step::East) out.push_back(pts[i + 1]);
  return out;
}

}  // namespace

std::vector<Point> corners(const FreePath& path) { return corners_of(path.params(), path.word()); }
std::vector<Point> corners(const RectDyckPath& path) { return corners_of(path.params(), path.word()); }

FreePath cyclic_shift(const FreePath& path, int j) {
  if (j < 1 || j > path.params().m) throw std::out_of_range("cyclic_shift: j must lie in [1, m]");
  return FreePath(path.params(), rotate_word(path.word(), east_cut_position(path.word(), j)));
}

BizleyImage bizley_forward(const RectDyckPath& path, int j) {
  if (j < 1 || j > path.params().m) throw std::out_of_range("bizley_forward: j must lie in [1, m]");
  return rotate_at(path, east_cut_position(path.word(), j));
}

std::pair<RectDyckPath, int> bizley_backward(const FreePath& path, int highest_index) {
  auto [dyck, cut] = unrotate(path, highest_index);
  const auto word = dyck.word();
  const int j = static_cast<int>(std::count(word.begin(), word.begin() + cut, Step::East));
  return {std::move(dyck), j};
}

BizleyImage corner_forward(const RectDyckPath& path, int j) {
  const auto cuts = valley_cuts(path.word());
  if (j < 1 || j > static_cast<int>(cuts.size()))
    throw std::out_of_range("corner_forward: j must lie in [1, corners]");
  return rotate_at(path, cuts[j - 1]);
}

std::pair<RectDyckPath, int> corner_backward(const FreePath& path, int highest_index) {
  if (!path.starts_south()) throw std::invalid_argument("corner_backward: path must start south");
  auto [dyck, cut] = unrotate(path, highest_index);
  const auto cuts = valley_cuts(dyck.word());
  const auto it = std::find(cuts.begin(), cuts.end(), cut);
  if (it == cuts.end()) throw std::logic_error("cut is not a valley of the recovered path");
  return {std::move(dyck), static_cast<int>(it - cuts.begin()) + 1};
}

}  // namespace rectpark
