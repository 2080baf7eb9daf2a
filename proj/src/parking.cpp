#include "rectpark/parking.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rectpark {

void PathFilter::validate(const RectangleParams& params) const {
  if (kind == Kind::Returns && returns.size() != params.d)
    throw std::invalid_argument("returns filter " + returns.str() + " is not a composition of d = " +
                                std::to_string(params.d));
}

bool PathFilter::accepts(const RectDyckPath& path) const {
  switch (kind) {
    case Kind::All: return true;
    case Kind::Primitive: return is_primitive(path);
    case Kind::Returns: return returns_composition(path) == returns;
  }
  return false;
}

std::string PathFilter::str() const {
  switch (kind) {
    case Kind::All: return "all";
    case Kind::Primitive: return "primitive";
    case Kind::Returns: {
      std::string s = "returns=";
      for (int i = 0; i < returns.length(); ++i) {
        if (i) s += ',';
        s += std::to_string(returns[i]);
      }
      return s;
    }
  }
  return "?";
}

PathFilter PathFilter::parse(const std::string& text) {
  if (text == "all") return all();
  if (text == "primitive") return primitive();
  const std::string prefix = "returns=";
  if (text.rfind(prefix, 0) == 0) {
    std::vector<int> parts;
    std::stringstream ss(text.substr(prefix.size()));
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(item, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad returns composition '" + text + "'");
      }
      if (used != item.size()) throw std::invalid_argument("bad returns composition '" + text + "'");
      parts.push_back(v);
    }
    if (parts.empty()) throw std::invalid_argument("empty returns composition");
    return with_returns(Composition(std::move(parts)));
  }
  throw std::invalid_argument("unknown filter '" + text + "'");
}

bool is_parking(const std::vector<int>& word, int m, int n) {
  if (static_cast<int>(word.size()) != n) return false;
  std::vector<int> sorted = word;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  const auto bound = staircase(m, n);
  for (int k = 0; k < n; ++k)
    if (sorted[k] < 0 || sorted[k] > bound[k]) return false;
  return true;
}

ParkingFunction::ParkingFunction(RectangleParams params, std::vector<int> word)
    : params_(params), word_(std::move(word)) {
  if (!is_parking(word_, params_.m, params_.n))
    throw std::invalid_argument("word is not an (m, n)-parking function");
}

RectDyckPath ParkingFunction::shape() const {
  std::vector<int> sorted = word_;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  return RectDyckPath(params_, std::move(sorted));
}

std::string ParkingFunction::str() const {
  const bool wide = std::any_of(word_.begin(), word_.end(), [](int v) { return v >= 10; });
  std::string s;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i && wide) s += ',';
    s += std::to_string(word_[i]);
  }
  return s;
}

void for_each_parking_for_shape(const RectDyckPath& shape,
                                const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> word = shape.seq();
  std::sort(word.begin(), word.end());
  do {
    visit(word);
  } while (std::next_permutation(word.begin(), word.end()));
}

std::vector<ParkingFunction> enumerate_parking_for_shape(const RectDyckPath& shape) {
  std::vector<ParkingFunction> out;
  for_each_parking_for_shape(shape, [&](const std::vector<int>& w) { out.emplace_back(shape.params(), w); });
  return out;
}

void for_each_parking(int m, int n, const PathFilter& filter,
                      const std::function<void(const std::vector<int>&)>& visit) {
  const RectangleParams params(m, n);
  filter.validate(params);
  const auto bound = staircase(m, n);
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(n));
  // A prefix extends to a parking function iff padding it with zeros does.
  auto extendable = [&] {
    std::vector<int> sorted = word;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    for (std::size_t k = 0; k < sorted.size(); ++k)
      if (sorted[k] > bound[k]) return false;
    return true;
  };
  std::function<void()> extend = [&] {
    if (static_cast<int>(word.size()) == n) {
      if (filter.kind == PathFilter::Kind::All || filter.accepts(ParkingFunction(params, word).shape())) visit(word);
      return;
    }
    for (int v = 0; v <= bound[0]; ++v) {
      word.push_back(v);
      if (extendable()) extend();
      word.pop_back();
    }
  };
  extend();
}

std::vector<ParkingFunction> enumerate_parking(int m, int n, const PathFilter& filter) {
  const RectangleParams params(m, n);
  std::vector<ParkingFunction> out;
  for_each_parking(m, n, filter, [&](const std::vector<int>& w) { out.emplace_back(params, w); });
  return out;
}

long long count_parking_brute(int m, int n, const PathFilter& filter) {
  filter.validate(RectangleParams(m, n));
  long long count = 0;
  for_each_dyck(m, n, [&](const RectDyckPath& shape) {
    if (!filter.accepts(shape)) return;
    for_each_parking_for_shape(shape, [&](const std::vector<int>&) { ++count; });
  });
  return count;
}

Integer count_parking_by_shapes(int m, int n, const PathFilter& filter) {
  filter.validate(RectangleParams(m, n));
  Integer total = 0;
  for_each_dyck(m, n, [&](const RectDyckPath& shape) {
    if (filter.accepts(shape)) total += multinomial(n, riser_composition(shape));
  });
  return total;
}

SymFunc brute_frobenius(int m, int n, const PathFilter& filter) {
  filter.validate(RectangleParams(m, n));
  SymFunc f(Basis::h);
  for_each_dyck(m, n, [&](const RectDyckPath& shape) {
    if (filter.accepts(shape)) f.add_term(riser_composition(shape).sorted(), 1);
  });
  return f;
}

BiSymFunc brute_bifrobenius(int m, int n) {
  BiSymFunc f(BiBasis::hh);
  for_each_dyck(m, n, [&](const RectDyckPath& shape) {
    f.add_term(riser_composition(shape).sorted(), riser_composition(conjugate_path(shape)).sorted(), 1);
  });
  return f;
}

}  // namespace rectpark
