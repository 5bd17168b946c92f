#include "permloc/distinct_code.hpp"

#include <string>

#include "permloc/errors.hpp"

namespace permloc {

DistinctCode::DistinctCode(FieldSpec field, int t, std::vector<int> eval_points,
                           std::vector<FieldPoly> polys)
    : field_(field), t_(t), k_(0), eval_points_(std::move(eval_points)), polys_(std::move(polys)) {
  int max_deg = 0;
  for (const FieldPoly& f : polys_) max_deg = std::max(max_deg, f.degree());
  k_ = max_deg + 1;
  if (t_ < k_)
    raise(Errc::OutOfRange, "length t=" + std::to_string(t_) + " below dimension " + std::to_string(k_));
  if (static_cast<int>(eval_points_.size()) != t_)
    raise(Errc::OutOfRange, "need exactly t evaluation points");
  std::vector<char> seen(static_cast<std::size_t>(field_.n()), 0);
  for (int x : eval_points_) {
    if (x < 0 || x >= field_.n()) raise(Errc::OutOfRange, "evaluation point outside the field");
    if (seen[static_cast<std::size_t>(x)])
      raise(Errc::DuplicateEvalPoint, "evaluation point " + std::to_string(x) + " repeats");
    seen[static_cast<std::size_t>(x)] = 1;
  }

  codewords_.reserve(polys_.size());
  for (const FieldPoly& f : polys_) {
    std::vector<int> word(static_cast<std::size_t>(t_));
    std::vector<char> used(static_cast<std::size_t>(field_.n()), 0);
    for (int i = 0; i < t_; ++i) {
      const int y = field_.eval(f.coeffs, eval_points_[static_cast<std::size_t>(i)]);
      if (used[static_cast<std::size_t>(y)])
        raise(Errc::DuplicateSymbol, "codeword symbols repeat; polynomial is not injective");
      used[static_cast<std::size_t>(y)] = 1;
      word[static_cast<std::size_t>(i)] = y;
    }
    index_.insert(word);
    codewords_.push_back(std::move(word));
  }
  if (index_.size() != codewords_.size())
    raise(Errc::DuplicateSymbol, "two polynomials produced the same codeword");
}

bool DistinctCode::contains(const std::vector<int>& word) const {
  return index_.find(word) != index_.end();
}

DistinctCode build_distinct_code(const FieldSpec& field, int t,
                                 std::optional<std::vector<int>> eval_points, int max_deg,
                                 const Caps& caps) {
  if (t < max_deg + 1 || t > field.n())
    raise(Errc::OutOfRange, "length t=" + std::to_string(t) + " outside " +
                                std::to_string(max_deg + 1) + ".." + std::to_string(field.n()));
  std::vector<int> points;
  if (eval_points) {
    points = std::move(*eval_points);
  } else {
    points.resize(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) points[static_cast<std::size_t>(i)] = i;
  }
  return DistinctCode(field, t, std::move(points), enumerate_pp(field, max_deg, PpMode::Auto, caps));
}

std::vector<int> lagrange_fit(const FieldSpec& field,
                              const std::vector<std::pair<int, int>>& points) {
  if (points.empty()) raise(Errc::EmptyInput, "interpolation needs at least one point");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first)
        raise(Errc::DuplicateEvalPoint, "interpolation points repeat");

  std::vector<int> acc(points.size(), 0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    // basis_i = y_i * prod_{j != i} (x - x_j) / (x_i - x_j)
    std::vector<int> basis{1};
    int denom = 1;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      basis.push_back(0);
      for (std::size_t c = basis.size() - 1; c > 0; --c)
        basis[c] = field.add(field.mul(basis[c], points[j].first), basis[c - 1]);
      basis[0] = field.mul(basis[0], points[j].first);
      denom = field.mul(denom, field.add(points[i].first, points[j].first));
    }
    const int scale = field.mul(points[i].second, field.inv(denom));
    for (std::size_t c = 0; c < basis.size(); ++c)
      acc[c] = field.add(acc[c], field.mul(scale, basis[c]));
  }
  return acc;
}

std::vector<int> erasure_interpolate(const DistinctCode& code,
                                     const std::vector<std::optional<int>>& partial) {
  const int t = code.t();
  if (static_cast<int>(partial.size()) != t)
    raise(Errc::OutOfRange, "partial word length does not match t");

  std::vector<std::pair<int, int>> known;
  for (int i = 0; i < t; ++i)
    if (partial[static_cast<std::size_t>(i)])
      known.emplace_back(code.eval_points()[static_cast<std::size_t>(i)],
                         *partial[static_cast<std::size_t>(i)]);
  if (static_cast<int>(known.size()) < code.k())
    raise(Errc::InsufficientKnownSymbols, "need " + std::to_string(code.k()) + " known symbols, have " +
                                              std::to_string(known.size()));

  known.resize(static_cast<std::size_t>(code.k()));
  std::vector<int> coeffs = lagrange_fit(code.field(), known);
  if (!is_permutation_poly(code.field(), coeffs))
    raise(Errc::NotInCode, "interpolated polynomial does not permute the field");

  std::vector<int> word(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) {
    word[static_cast<std::size_t>(i)] =
        code.field().eval(coeffs, code.eval_points()[static_cast<std::size_t>(i)]);
    if (partial[static_cast<std::size_t>(i)] && *partial[static_cast<std::size_t>(i)] != word[static_cast<std::size_t>(i)])
      raise(Errc::NotInCode, "known symbol disagrees with the interpolated polynomial");
  }
  return word;
}

}  // namespace permloc
