#include "agcolor/space.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <stdexcept>

namespace agcolor {

std::uint64_t encode(const Vec& v, std::uint32_t q) {
  std::uint64_t code = 0;
  for (auto e : v) code = code * q + e.index;
  return code;
}

namespace linalg {

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Element e) { return e.index == 0; });
}

Vec normalize(const Field& f, Vec v) {
  auto it = std::find_if(v.begin(), v.end(), [](Element e) { return e.index != 0; });
  if (it == v.end()) throw std::invalid_argument("the zero vector is not a projective point");
  const Element s = f.inv(*it);
  for (auto& e : v) e = f.mul(e, s);
  return v;
}

Vec axpy(const Field& f, Element a, const Vec& x, const Vec& y) {
  Vec out(y);
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = f.add(out[i], f.mul(a, x[i]));
  return out;
}

std::vector<Vec> rref(const Field& f, std::vector<Vec> rows) {
  if (rows.empty()) return rows;
  const std::size_t ncols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].index == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Element s = f.inv(rows[rank][col]);
    for (auto& e : rows[rank]) e = f.mul(e, s);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].index == 0) continue;
      rows[r] = axpy(f, f.neg(rows[r][col]), rows[rank], rows[r]);
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

std::vector<Vec> nullspace(const Field& f, const std::vector<Vec>& rows, std::size_t ncols) {
  const auto r = rref(f, rows);
  std::vector<std::size_t> pivots;
  for (const auto& row : r) {
    auto it = std::find_if(row.begin(), row.end(), [](Element e) { return e.index != 0; });
    pivots.push_back(static_cast<std::size_t>(it - row.begin()));
  }
  std::vector<Vec> basis;
  for (std::size_t col = 0; col < ncols; ++col) {
    if (std::find(pivots.begin(), pivots.end(), col) != pivots.end()) continue;
    Vec x(ncols, f.zero());
    x[col] = f.one();
    for (std::size_t i = 0; i < r.size(); ++i) x[pivots[i]] = f.neg(r[i][col]);
    basis.push_back(std::move(x));
  }
  return rref(f, std::move(basis));
}

}  // namespace linalg

// ---------------------------------------------------------------------------

Subspace Subspace::from_rows(const Field& f, std::size_t vector_length, std::vector<Vec> rows) {
  for (const auto& r : rows)
    if (r.size() != vector_length) throw std::invalid_argument("subspace rows have inconsistent length");
  Subspace s(vector_length);
  s.rows_ = linalg::rref(f, std::move(rows));
  return s;
}

bool Subspace::contains(const Field& f, const Vec& v) const {
  if (v.size() != length_) throw std::invalid_argument("vector length does not match subspace ambient");
  auto rows = rows_;
  rows.push_back(v);
  return linalg::rref(f, std::move(rows)).size() == rows_.size();
}

bool Subspace::contains(const Field& f, const Subspace& other) const {
  return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const Vec& v) { return contains(f, v); });
}

std::uint64_t Subspace::point_count(const Field& f) const {
  std::uint64_t count = 0, power = 1;
  for (std::size_t i = 0; i < rows_.size(); ++i, power *= f.order()) count += power;
  return count;
}

std::vector<Vec> normalized_vectors(const Field& f, std::size_t len) {
  const std::uint32_t q = f.order();
  std::vector<Vec> out;
  Vec v(len, f.zero());
  std::vector<std::uint32_t> digits(len, 0);
  while (true) {
    auto first = std::find_if(digits.begin(), digits.end(), [](auto d) { return d != 0; });
    if (first != digits.end() && *first == 1) {
      for (std::size_t i = 0; i < len; ++i) v[i] = Element{digits[i]};
      out.push_back(v);
    }
    std::size_t pos = len;
    while (pos > 0 && ++digits[pos - 1] == q) digits[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

std::vector<ProjectivePoint> Subspace::points(const Field& f) const {
  std::vector<ProjectivePoint> out;
  if (rows_.empty()) return out;
  for (const auto& coeffs : normalized_vectors(f, rows_.size())) {
    Vec v(length_, f.zero());
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (coeffs[i].index != 0) v = linalg::axpy(f, coeffs[i], rows_[i], v);
    out.push_back({linalg::normalize(f, std::move(v))});
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subspace span(const Field& f, const Subspace& a, const Subspace& b) {
  if (a.vector_length() != b.vector_length()) throw std::invalid_argument("span of subspaces from different spaces");
  auto rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return Subspace::from_rows(f, a.vector_length(), std::move(rows));
}

Subspace span_points(const Field& f, std::span<const Vec> points) {
  if (points.empty()) throw std::invalid_argument("span of an empty point set");
  return Subspace::from_rows(f, points.front().size(), {points.begin(), points.end()});
}

Subspace intersect(const Field& f, const Subspace& a, const Subspace& b) {
  if (a.vector_length() != b.vector_length())
    throw std::invalid_argument("intersection of subspaces from different spaces");
  const std::size_t len = a.vector_length();
  if (a.empty() || b.empty()) return Subspace(len);
  auto ann = linalg::nullspace(f, a.basis(), len);
  auto ann_b = linalg::nullspace(f, b.basis(), len);
  ann.insert(ann.end(), ann_b.begin(), ann_b.end());
  if (ann.empty()) return a;  // both are the whole space
  return Subspace::from_rows(f, len, linalg::nullspace(f, ann, len));
}

// ---------------------------------------------------------------------------

namespace {

std::uint64_t checked_power(std::uint64_t base, int exp, std::uint64_t limit, const char* what) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    r *= base;
    if (r > limit) throw std::length_error(std::string(what) + " exceeds the configured size limit");
  }
  return r;
}

}  // namespace

ProjectiveSpace::ProjectiveSpace(Field f, int n, SpaceLimits limits) : field_(std::move(f)), n_(n) {
  if (n < 1) throw std::invalid_argument("projective dimension must be at least 1");
  if (n > limits.max_dimension) throw std::length_error("projective dimension exceeds the configured limit");
  checked_power(field_.order(), n + 1, limits.max_points * field_.order(), "projective space");
  points_ = normalized_vectors(field_, static_cast<std::size_t>(n) + 1);
  for (PointId i = 0; i < points_.size(); ++i) index_.emplace(encode(points_[i], field_.order()), i);
}

PointId ProjectiveSpace::index_of(const Vec& v) const {
  if (v.size() != static_cast<std::size_t>(n_) + 1) throw std::invalid_argument("point has wrong length");
  return index_.at(encode(linalg::normalize(field_, v), field_.order()));
}

std::vector<PointId> ProjectiveSpace::points_of(const Subspace& s) const {
  std::vector<PointId> out;
  for (const auto& p : s.points(field_)) out.push_back(index_of(p.coords));
  std::sort(out.begin(), out.end());
  return out;
}

Subspace ProjectiveSpace::whole() const {
  const std::size_t len = static_cast<std::size_t>(n_) + 1;
  std::vector<Vec> rows(len, Vec(len, field_.zero()));
  for (std::size_t i = 0; i < len; ++i) rows[i][i] = field_.one();
  return Subspace::from_rows(field_, len, std::move(rows));
}

// ---------------------------------------------------------------------------

AffineSpace::AffineSpace(Field f, int n, SpaceLimits limits) : field_(std::move(f)), n_(n) {
  if (n < 1) throw std::invalid_argument("affine dimension must be at least 1");
  if (n > limits.max_dimension) throw std::length_error("affine dimension exceeds the configured limit");
  const std::uint32_t q = field_.order();
  point_count_ = checked_power(q, n, limits.max_points, "affine point count");
  directions_ = normalized_vectors(field_, static_cast<std::size_t>(n));
  if (directions_.size() * point_count_ / q > limits.max_lines)
    throw std::length_error("affine line count exceeds the configured size limit");
  for (DirectionId d = 0; d < directions_.size(); ++d) direction_index_.emplace(encode(directions_[d], q), d);

  const std::size_t ndir = directions_.size();
  line_of_.assign(ndir * point_count_, 0);
  lines_.reserve(ndir * point_count_ / q);
  line_points_.reserve(ndir * point_count_);
  const auto elems = field_.elements();
  for (DirectionId d = 0; d < ndir; ++d) {
    const Vec& dir = directions_[d];
    const std::size_t pivot = static_cast<std::size_t>(
        std::find_if(dir.begin(), dir.end(), [](Element e) { return e.index != 0; }) - dir.begin());
    for (PointId p = 0; p < point_count_; ++p) {
      const Vec base = point(p);
      if (base[pivot].index != 0) continue;
      const LineId l = static_cast<LineId>(lines_.size());
      lines_.push_back({d, p});
      std::vector<PointId> pts;
      for (auto t : elems) pts.push_back(point_id(linalg::axpy(field_, t, dir, base)));
      std::sort(pts.begin(), pts.end());
      for (auto x : pts) {
        line_points_.push_back(x);
        line_of_[d * point_count_ + x] = l;
      }
    }
  }
  lines_through_.resize(point_count_ * ndir);
  for (PointId p = 0; p < point_count_; ++p)
    for (DirectionId d = 0; d < ndir; ++d) lines_through_[p * ndir + d] = line_of_[d * point_count_ + p];
}

Vec AffineSpace::point(PointId id) const {
  if (id >= point_count_) throw std::out_of_range("point id out of range");
  const std::uint32_t q = field_.order();
  Vec v(static_cast<std::size_t>(n_));
  for (std::size_t i = v.size(); i-- > 0; id /= q) v[i] = Element{id % q};
  return v;
}

PointId AffineSpace::point_id(const Vec& coords) const {
  if (coords.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("affine point has wrong length");
  return static_cast<PointId>(encode(coords, field_.order()));
}

DirectionId AffineSpace::direction_id(const Vec& v) const {
  if (v.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("direction has wrong length");
  return direction_index_.at(encode(linalg::normalize(field_, v), field_.order()));
}

std::span<const PointId> AffineSpace::line_points(LineId l) const {
  if (l >= lines_.size()) throw std::out_of_range("line id out of range");
  return {line_points_.data() + std::size_t(l) * order(), order()};
}

std::span<const LineId> AffineSpace::lines_through(PointId p) const {
  if (p >= point_count_) throw std::out_of_range("point id out of range");
  return {lines_through_.data() + std::size_t(p) * directions_.size(), directions_.size()};
}

LineId AffineSpace::line_through(PointId a, PointId b) const {
  if (a == b) throw std::invalid_argument("line_through needs two distinct points");
  return line_with(a, direction_id(sub(point(b), point(a))));
}

std::optional<PointId> AffineSpace::common_point(LineId a, LineId b) const {
  auto pa = line_points(a);
  auto pb = line_points(b);
  auto ia = pa.begin();
  auto ib = pb.begin();
  while (ia != pa.end() && ib != pb.end()) {
    if (*ia == *ib) return *ia;
    if (*ia < *ib) ++ia;
    else ++ib;
  }
  return std::nullopt;
}

bool AffineSpace::lines_meet(LineId a, LineId b) const { return common_point(a, b).has_value(); }

namespace {

std::string join_indices(const Vec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i].index);
  }
  return out;
}

Vec parse_indices(std::string_view s, std::uint32_t q, std::size_t n) {
  Vec out;
  while (true) {
    auto comma = s.find(',');
    auto tok = s.substr(0, comma);
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size() || value >= q)
      throw std::invalid_argument("malformed coordinate in line key");
    out.push_back(Element{value});
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  if (out.size() != n) throw std::invalid_argument("line key has wrong number of coordinates");
  return out;
}

}  // namespace

std::string AffineSpace::line_key(LineId l) const {
  const auto& line = lines_.at(l);
  return "d:" + join_indices(directions_[line.direction]) + "|b:" + join_indices(point(line.base));
}

LineId AffineSpace::parse_line_key(std::string_view key) const {
  const auto bar = key.find("|b:");
  if (key.substr(0, 2) != "d:" || bar == std::string_view::npos)
    throw std::invalid_argument("malformed line key '" + std::string(key) + "'");
  const Vec dir = parse_indices(key.substr(2, bar - 2), order(), n_);
  const Vec base = parse_indices(key.substr(bar + 3), order(), n_);
  if (linalg::is_zero(dir)) throw std::invalid_argument("line key has zero direction");
  const LineId l = line_with(point_id(base), direction_id(dir));
  if (line_key(l) != key) throw std::invalid_argument("line key '" + std::string(key) + "' is not canonical");
  return l;
}

Vec AffineSpace::embed(PointId p) const {
  Vec v = point(p);
  v.push_back(field_.one());
  return v;
}

ProjectivePoint AffineSpace::point_at_infinity(LineId l) const {
  Vec v = directions_.at(lines_.at(l).direction);
  v.push_back(field_.zero());
  return {std::move(v)};
}

Subspace AffineSpace::closure(LineId l) const {
  const auto pts = line_points(l);
  return Subspace::from_rows(field_, n_ + 1, {embed(pts[0]), embed(pts[1])});
}

Subspace AffineSpace::hyperplane_at_infinity() const {
  const std::size_t len = static_cast<std::size_t>(n_) + 1;
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < len - 1; ++i) {
    Vec r(len, field_.zero());
    r[i] = field_.one();
    rows.push_back(std::move(r));
  }
  return Subspace::from_rows(field_, len, std::move(rows));
}

bool AffineSpace::inside_infinity(const Subspace& s) const {
  if (s.vector_length() != static_cast<std::size_t>(n_) + 1)
    throw std::invalid_argument("subspace does not live in the projective closure");
  return std::all_of(s.basis().begin(), s.basis().end(), [](const Vec& r) { return r.back().index == 0; });
}

std::vector<PointId> AffineSpace::affine_points(const Subspace& s) const {
  std::vector<PointId> out;
  if (inside_infinity(s)) return out;
  for (const auto& p : s.points(field_)) {
    if (p.coords.back().index == 0) continue;
    const Element s_inv = field_.inv(p.coords.back());
    Vec a(p.coords.begin(), p.coords.end() - 1);
    for (auto& e : a) e = field_.mul(e, s_inv);
    out.push_back(point_id(a));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<LineId> AffineSpace::affine_line(const Subspace& s) const {
  if (s.dim() != 1) throw std::invalid_argument("affine_line expects a projective line");
  if (inside_infinity(s)) return std::nullopt;
  const auto pts = affine_points(s);
  return line_through(pts[0], pts[1]);
}

std::vector<std::vector<PointId>> AffineSpace::parallel_flats(const std::vector<Vec>& directions) const {
  const auto rows = linalg::rref(field_, directions);
  std::vector<std::size_t> pivots;
  for (const auto& r : rows)
    pivots.push_back(static_cast<std::size_t>(
        std::find_if(r.begin(), r.end(), [](Element e) { return e.index != 0; }) - r.begin()));
  std::map<PointId, std::vector<PointId>> cosets;
  for (PointId p = 0; p < point_count_; ++p) {
    Vec v = point(p);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (v[pivots[i]].index != 0) v = linalg::axpy(field_, field_.neg(v[pivots[i]]), rows[i], v);
    cosets[point_id(v)].push_back(p);
  }
  std::vector<std::vector<PointId>> out;
  out.reserve(cosets.size());
  for (auto& [rep, pts] : cosets) out.push_back(std::move(pts));
  return out;
}

std::vector<LineId> AffineSpace::lines_in(std::span<const PointId> flat, DirectionId d) const {
  std::vector<LineId> out;
  for (auto p : flat) out.push_back(line_with(p, d));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (auto l : out)
    for (auto x : line_points(l))
      if (!std::binary_search(flat.begin(), flat.end(), x))
        throw std::logic_error("direction is not parallel to the flat");
  return out;
}

Vec AffineSpace::add(const Vec& a, const Vec& b) const {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = field_.add(a[i], b[i]);
  return out;
}

Vec AffineSpace::sub(const Vec& a, const Vec& b) const {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = field_.sub(a[i], b[i]);
  return out;
}

}  // namespace agcolor
