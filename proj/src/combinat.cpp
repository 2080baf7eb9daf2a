#include "rectpark/combinat.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

namespace rectpark {

namespace {

std::string join_parts(std::span<const int> parts) {
  std::string s = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts[i]);
  }
  return s + "]";
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::multiplicity(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

Partition Partition::merged(const Partition& other) const {
  std::vector<int> out;
  out.reserve(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
             std::back_inserter(out), std::greater<>());
  return Partition(std::move(out));
}

std::string Partition::str() const { return join_parts(parts_); }

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int v : parts_) {
    if (v < 1) throw std::invalid_argument("composition parts must be positive");
    size_ += v;
  }
}

std::vector<int> Composition::partial_sums() const {
  std::vector<int> sums;
  int acc = 0;
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
    acc += parts_[i];
    sums.push_back(acc);
  }
  return sums;
}

std::string Composition::str() const { return join_parts(parts_); }

Partition conjugate(const Partition& p) {
  if (p.empty()) return {};
  std::vector<int> out(p[0], 0);
  for (int v : p.parts())
    for (int c = 0; c < v; ++c) ++out[c];
  return Partition(std::move(out));
}

Integer z_of(const Partition& p) {
  Integer z = 1;
  const auto parts = p.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const auto mult = static_cast<unsigned>(j - i);
    z *= power(Integer(parts[i]), mult) * factorial(mult);
    i = j;
  }
  return z;
}

Integer multinomial(int n, std::span<const int> parts) {
  if (std::accumulate(parts.begin(), parts.end(), 0) != n)
    throw std::invalid_argument("multinomial: parts do not sum to n");
  Integer r = factorial(static_cast<unsigned>(n));
  for (int v : parts) r /= factorial(static_cast<unsigned>(v));
  return r;
}

Integer multinomial(int n, const Composition& c) { return multinomial(n, c.parts()); }

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::optional<int> length, const std::function<void(const Partition&)>& visit) {
  if (remaining == 0) {
    if (!length || static_cast<int>(cur.size()) == *length) visit(Partition(cur));
    return;
  }
  if (length && static_cast<int>(cur.size()) >= *length) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    if (length) {
      // The remaining slots must be fillable with parts <= part.
      const int slots = *length - static_cast<int>(cur.size());
      if (static_cast<long>(part) * slots < remaining) break;
      if (remaining - part < slots - 1) continue;
    }
    cur.push_back(part);
    partitions_rec(remaining - part, part, cur, length, visit);
    cur.pop_back();
  }
}

void compositions_rec(int remaining, std::vector<int>& cur, std::optional<int> length,
                      std::vector<Composition>& out) {
  if (remaining == 0) {
    if (!length || static_cast<int>(cur.size()) == *length) out.emplace_back(cur);
    return;
  }
  if (length && static_cast<int>(cur.size()) >= *length) return;
  for (int part = 1; part <= remaining; ++part) {
    cur.push_back(part);
    compositions_rec(remaining - part, cur, length, out);
    cur.pop_back();
  }
}

}  // namespace

void for_each_partition(int n, const std::function<void(const Partition&)>& visit,
                        std::optional<int> length) {
  if (n < 0) return;
  std::vector<int> cur;
  partitions_rec(n, n, cur, length, visit);
}

std::vector<Partition> partitions_of(int n, std::optional<int> length) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); }, length);
  return out;
}

std::vector<Composition> compositions_of(int n, std::optional<int> length) {
  std::vector<Composition> out;
  if (n < 1) return out;
  std::vector<int> cur;
  compositions_rec(n, cur, length, out);
  return out;
}

Partition multiplicity_partition(const Partition& p) {
  std::vector<int> mults;
  const auto parts = p.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    mults.push_back(static_cast<int>(j - i));
    i = j;
  }
  return Partition::from_unsorted(std::move(mults));
}

namespace {

// Beta-set (first-column hook lengths) of a partition, decreasing.
std::vector<int> beta_set(const Partition& p) {
  const int len = p.length();
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = p[i] + (len - 1 - i);
  return beta;
}

Partition from_beta_set(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int len = static_cast<int>(beta.size());
  std::vector<int> parts(len);
  for (int i = 0; i < len; ++i) parts[i] = beta[i] - (len - 1 - i);
  return Partition::from_unsorted(std::move(parts));
}

struct CharacterMemo {
  std::shared_mutex mutex;
  std::map<std::pair<Partition, Partition>, Integer> values;
};

CharacterMemo& character_memo() {
  static CharacterMemo memo;
  return memo;
}

Integer character_rec(const Partition& lambda, const Partition& mu) {
  if (mu.empty()) return 1;
  auto& memo = character_memo();
  const auto key = std::make_pair(lambda, mu);
  {
    std::shared_lock lock(memo.mutex);
    if (auto it = memo.values.find(key); it != memo.values.end()) return it->second;
  }

  const int k = mu[0];
  const Partition rest(std::vector<int>(mu.vec().begin() + 1, mu.vec().end()));
  const auto beta = beta_set(lambda);
  Integer total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int target = beta[i] - k;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    // Sign is the parity of the number of beads jumped over (the hook's leg length).
    int between = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++between;
    auto moved = beta;
    moved[i] = target;
    const Integer sub = character_rec(from_beta_set(std::move(moved)), rest);
    if (between % 2) total -= sub;
    else total += sub;
  }

  std::unique_lock lock(memo.mutex);
  memo.values.emplace(key, total);
  return total;
}

}  // namespace

Integer character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("character: |lambda| != |mu|");
  return character_rec(lambda, mu);
}

int hook_length(const Partition& p, int row, int col) {
  const Partition conj = conjugate(p);
  return (p[row - 1] - col) + (conj[col - 1] - row) + 1;
}

Rational schur_principal_eval(const Partition& lambda, int m) {
  if (lambda.length() > m) return 0;
  const Partition conj = conjugate(lambda);
  Rational value = 1;
  for (int row = 1; row <= lambda.length(); ++row) {
    for (int col = 1; col <= lambda[row - 1]; ++col) {
      const int hook = (lambda[row - 1] - col) + (conj[col - 1] - row) + 1;
      value *= make_rational(m + col - row, hook);
    }
  }
  return value;
}

}  // namespace rectpark
