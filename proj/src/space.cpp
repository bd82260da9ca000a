#include "semimetric/space.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "semimetric/error.hpp"

namespace semimetric {
namespace {

std::string pos(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

bool is_token(const std::string& label) {
  return !label.empty() && std::none_of(label.begin(), label.end(), [](unsigned char c) {
    return std::isspace(c) != 0 || std::iscntrl(c) != 0;
  });
}

}  // namespace

Dist::Dist(Rational sq) : sq_(std::move(sq)) {
  if (sgn(sq_) < 0) throw Error(ErrorKind::NegativeEntry, "distance square " + to_string(sq_));
}

Dist Dist::from_length(const Rational& length) {
  if (sgn(length) < 0) throw Error(ErrorKind::NegativeEntry, "distance " + to_string(length));
  return Dist(Rational(length * length));
}

SemimetricSpace::SemimetricSpace(std::vector<std::string> labels, SqMatrix sq_matrix)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw Error(ErrorKind::ParseError, "a space needs at least one point");
  if (sq_matrix.size() != n) {
    throw Error(ErrorKind::DimensionMismatch, std::to_string(n) + " labels but " +
                                                  std::to_string(sq_matrix.size()) + " rows");
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : labels_) {
    if (!is_token(label)) throw Error(ErrorKind::ParseError, "invalid label \"" + label + "\"");
    if (!seen.insert(label).second) throw Error(ErrorKind::DuplicateLabel, label);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (sq_matrix[i].size() != n) {
      throw Error(ErrorKind::DimensionMismatch,
                  "row " + std::to_string(i) + " has " + std::to_string(sq_matrix[i].size()) +
                      " entries, expected " + std::to_string(n));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(sq_matrix[i][j]) < 0) {
        throw Error(ErrorKind::NegativeEntry, pos(i, j) + " = " + to_string(sq_matrix[i][j]));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (sq_matrix[i][i] != 0) throw Error(ErrorKind::BadDiagonal, "(" + std::to_string(i) + ")");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (sq_matrix[i][j] != sq_matrix[j][i]) {
        throw Error(ErrorKind::NotSymmetric, pos(i, j) + " " + labels_[i] + "," + labels_[j]);
      }
      if (sq_matrix[i][j] == 0) {
        throw Error(ErrorKind::NonpositiveOffDiagonal, pos(i, j) + " " + labels_[i] + "," + labels_[j]);
      }
    }
  }

  sq_.reserve(n * n);
  for (auto& row : sq_matrix) {
    for (auto& v : row) sq_.push_back(std::move(v));
  }

  std::vector<Rational> values;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) values.push_back(sq(i, j));
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  distinct_values_ = static_cast<int>(values.size());

  rank_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      auto it = std::lower_bound(values.begin(), values.end(), sq(i, j));
      rank_[i * n + j] = static_cast<int>(it - values.begin()) + 1;
    }
  }
}

std::optional<std::size_t> SemimetricSpace::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

std::size_t SemimetricSpace::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw Error(ErrorKind::UnknownLabel, std::string(label));
}

std::vector<std::size_t> SemimetricSpace::indices_of(std::span<const std::string> labels) const {
  std::vector<std::size_t> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(index_of(l));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

LabelSet SemimetricSpace::labels_of(std::span<const std::size_t> indices) const {
  LabelSet out;
  out.reserve(indices.size());
  for (auto i : indices) out.push_back(labels_.at(i));
  return out;
}

SqMatrix SemimetricSpace::sq_matrix() const {
  const std::size_t n = size();
  SqMatrix m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = sq(i, j);
  }
  return m;
}

SemimetricSpace validate_space(std::vector<std::string> labels, SqMatrix sq_matrix) {
  return SemimetricSpace(std::move(labels), std::move(sq_matrix));
}

SemimetricSpace from_rational_points(const std::vector<std::vector<Rational>>& coords,
                                     std::vector<std::string> labels) {
  const std::size_t n = coords.size();
  if (labels.size() != n) {
    throw Error(ErrorKind::DimensionMismatch, std::to_string(labels.size()) + " labels but " +
                                                  std::to_string(n) + " coordinate tuples");
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (coords[i].size() != coords[0].size()) {
      throw Error(ErrorKind::DimensionMismatch,
                  "tuple " + std::to_string(i) + " has dimension " +
                      std::to_string(coords[i].size()) + ", expected " +
                      std::to_string(coords[0].size()));
    }
  }
  SqMatrix m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < coords[i].size(); ++k) {
        Rational diff = coords[i][k] - coords[j][k];
        s += diff * diff;
      }
      if (s == 0) throw Error(ErrorKind::CoincidentPoints, pos(i, j));
      m[i][j] = s;
      m[j][i] = s;
    }
  }
  return SemimetricSpace(std::move(labels), std::move(m));
}

DistanceSet distance_set(const SemimetricSpace& space) {
  DistanceSet out;
  const std::size_t n = space.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) out.values.push_back(space.dist(i, j));
  }
  std::sort(out.values.begin(), out.values.end());
  out.values.erase(std::unique(out.values.begin(), out.values.end()), out.values.end());
  return out;
}

SemimetricSpace subspace(const SemimetricSpace& space, std::span<const std::string> subset) {
  if (subset.empty()) throw Error(ErrorKind::EmptySubset, "subspace of no points");
  auto idx = space.indices_of(subset);
  return subspace(space, std::span<const std::size_t>(idx));
}

SemimetricSpace subspace(const SemimetricSpace& space, std::span<const std::size_t> indices) {
  if (indices.empty()) throw Error(ErrorKind::EmptySubset, "subspace of no points");
  std::vector<std::size_t> idx(indices.begin(), indices.end());
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  for (auto i : idx) {
    if (i >= space.size()) throw Error(ErrorKind::UnknownLabel, "index " + std::to_string(i));
  }
  SqMatrix m(idx.size(), std::vector<Rational>(idx.size()));
  for (std::size_t r = 0; r < idx.size(); ++r) {
    for (std::size_t c = 0; c < idx.size(); ++c) m[r][c] = space.sq(idx[r], idx[c]);
  }
  return SemimetricSpace(space.labels_of(idx), std::move(m));
}

bool is_metric(const SemimetricSpace& space) {
  const std::size_t n = space.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x) continue;
      const Rational& a = space.sq(x, y);
      for (std::size_t z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        const Rational& b = space.sq(x, z);
        const Rational& c = space.sq(z, y);
        Rational excess = a - b - c;
        if (sgn(excess) <= 0) continue;
        if (excess * excess > 4 * b * c) return false;
      }
    }
  }
  return true;
}

bool is_ultrametric_space(const SemimetricSpace& space) {
  const std::size_t n = space.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        if (space.rank(x, y) > std::max(space.rank(x, z), space.rank(z, y))) return false;
      }
    }
  }
  return true;
}

}  // namespace semimetric
