#include "cubecrys/walls.hpp"

#include <random>
#include <sstream>

#include "cubecrys/error.hpp"

namespace cubecrys {

using boost::multiprecision::gcd;

std::pair<RatVector, Rational> canonical_direction(const RatVector &v) {
  BigInt denom_lcm = 1;
  std::size_t lead = v.size();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero())
      continue;
    if (lead == v.size())
      lead = i;
    denom_lcm = denom_lcm / gcd(denom_lcm, v[i].den()) * v[i].den();
  }
  if (lead == v.size())
    throw InputError("direction of a zero vector");
  BigInt content = 0;
  std::vector<BigInt> ints(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    ints[i] = v[i].num() * (denom_lcm / v[i].den());
    content = gcd(content, BigInt(abs(ints[i])));
  }
  if (ints[lead].sign() < 0)
    content = -content;
  RatVector canon(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    canon[i] = Rational(ints[i] / content);
  return {canon, Rational(content, denom_lcm)};
}

GeometricWall canonical_wall(const RatVector &normal, const Rational &offset) {
  auto [canon, scale] = canonical_direction(normal);
  return {canon, offset / scale};
}

namespace {

RatMatrix basis_matrix(const CrystGroup &g, const std::vector<RatVector> &basis) {
  if (basis.size() != g.dimension)
    throw RankError("expected " + std::to_string(g.dimension) + " basis vectors, got " +
                    std::to_string(basis.size()));
  for (const auto &b : basis)
    if (b.size() != g.dimension)
      throw DimensionError("basis vector of wrong length");
  RatMatrix m = RatMatrix::from_columns(basis);
  if (rank(m) != g.dimension)
    throw RankError("basis vectors are linearly dependent");
  return m;
}

/// gcd of <covector, lattice column j> over j.
Rational lattice_spacing(const RatVector &covector, const RatMatrix &lattice) {
  Rational d;
  for (std::size_t j = 0; j < lattice.cols(); ++j)
    d = rational_gcd(d, dot(covector, lattice.column(j)));
  return d;
}

/// Number of points of spacing * Z strictly between a and b.
BigInt lattice_points_between(const Rational &a, const Rational &b, const Rational &spacing) {
  Rational lo = a < b ? a : b;
  Rational hi = a < b ? b : a;
  if (lo == hi)
    return 0;
  BigInt count = (hi / spacing).ceil() - (lo / spacing).floor() - 1;
  return count.sign() > 0 ? count : BigInt(0);
}

/// Image of a wall normal under the linear map P is P^-T * normal.
std::vector<RatMatrix> normal_actions(const CrystGroup &g) {
  std::vector<RatMatrix> out;
  for (const auto &p : point_group_real(g))
    out.push_back(inverse(p).transpose());
  return out;
}

std::size_t find_class(const WallFamily &fam, const RatVector &canon) {
  for (std::size_t k = 0; k < fam.classes.size(); ++k)
    if (fam.classes[k].normal == canon)
      return k;
  return fam.classes.size();
}

} // namespace

std::vector<GeometricWall> standard_walls(const CrystGroup &g, const std::vector<RatVector> &basis) {
  RatMatrix b = basis_matrix(g, basis);
  RatMatrix b_inv = inverse(b);
  std::vector<GeometricWall> walls;
  for (std::size_t i = 0; i < g.dimension; ++i)
    walls.push_back(canonical_wall(b_inv.row(i), 0));
  return walls;
}

WallFamily direction_class_count(const CrystGroup &g, const std::vector<RatVector> &basis) {
  RatMatrix b = basis_matrix(g, basis);
  RatMatrix b_inv = inverse(b);
  WallFamily fam;
  fam.dimension = g.dimension;
  fam.basis = basis;
  for (std::size_t i = 0; i < g.dimension; ++i) {
    fam.dual.push_back(b_inv.row(i));
    fam.base_spacing.push_back(lattice_spacing(fam.dual.back(), g.lattice_basis));
  }
  fam.base_walls = standard_walls(g, basis);

  const auto actions = normal_actions(g);
  for (std::size_t i = 0; i < g.dimension; ++i) {
    const RatVector &normal = fam.base_walls[i].normal;
    std::size_t own = find_class(fam, normal);
    if (own == fam.classes.size())
      fam.classes.push_back({normal, lattice_spacing(normal, g.lattice_basis), i});
    fam.base_class.push_back(own);
    for (const auto &a : actions) {
      RatVector image = canonical_direction(a * normal).first;
      if (find_class(fam, image) == fam.classes.size())
        fam.classes.push_back({image, lattice_spacing(image, g.lattice_basis), i});
    }
  }
  return fam;
}

std::size_t separation_count(const RatVector &p, const RatVector &q, const WallFamily &fam) {
  if (p.size() != fam.dimension || q.size() != fam.dimension)
    throw DimensionError("separation_count: point of wrong dimension");
  BigInt total = 0;
  for (std::size_t i = 0; i < fam.dimension; ++i)
    total += lattice_points_between(dot(fam.dual[i], p), dot(fam.dual[i], q), fam.base_spacing[i]);
  return total.convert_to<std::size_t>();
}

SeparationReport check_linear_separation(const CrystGroup &g, const WallFamily &fam,
                                         const std::vector<std::pair<RatVector, RatVector>> &samples) {
  if (samples.empty())
    throw InputError("check_linear_separation: no sample pairs");
  const std::size_t n = fam.dimension;
  if (g.dimension != n)
    throw DimensionError("check_linear_separation: family and group dimensions differ");

  // Effective basis: spacing_i * t_i, so that translates of X_i sit at
  // integer values of nu_i / spacing_i.
  SeparationReport report;
  for (std::size_t i = 0; i < n; ++i) {
    RatVector t = fam.base_spacing[i] * fam.basis[i];
    Rational norm = dot(t, t);
    if (norm > report.max_norm_squared)
      report.max_norm_squared = norm;
  }

  bool first = true;
  for (const auto &[p, q] : samples) {
    RatVector diff = p - q;
    Rational dist_sq = dot(diff, diff);
    Rational count(static_cast<std::int64_t>(separation_count(p, q, fam)));
    Rational bound = report.max_norm_squared * (count + Rational(static_cast<std::int64_t>(n))) *
                     (count + Rational(static_cast<std::int64_t>(n)));
    Rational nu_sum;
    for (std::size_t i = 0; i < n; ++i)
      nu_sum += (dot(fam.dual[i], diff) / fam.base_spacing[i]).abs();
    Rational slack = count - (nu_sum - Rational(static_cast<std::int64_t>(n)));

    if (dist_sq > bound || slack.sign() < 0) {
      std::ostringstream msg;
      msg << "linear separation fails for p = (";
      for (std::size_t i = 0; i < n; ++i)
        msg << (i ? ", " : "") << p[i];
      msg << "), q = (";
      for (std::size_t i = 0; i < n; ++i)
        msg << (i ? ", " : "") << q[i];
      msg << "): |p-q|^2 = " << dist_sq << ", bound = " << bound << ", #(p,q) = " << count
          << ", sum|nu| - n = " << nu_sum - Rational(static_cast<std::int64_t>(n));
      throw PropertyViolationError(msg.str());
    }
    Rational ratio = bound.is_zero() ? Rational(0) : dist_sq / bound;
    if (first || ratio > report.worst_ratio)
      report.worst_ratio = ratio;
    if (first || slack < report.min_lower_bound_slack)
      report.min_lower_bound_slack = slack;
    first = false;
    ++report.pairs_checked;
  }
  return report;
}

std::vector<std::pair<RatVector, RatVector>> sample_pairs(std::size_t dim, std::size_t count,
                                                          std::uint64_t seed,
                                                          std::int64_t window) {
  // Raw engine output only, so samples are identical across standard
  // library implementations.
  std::mt19937_64 rng(seed);
  auto coordinate = [&]() {
    auto den = static_cast<std::int64_t>(rng() % 12 + 1);
    auto num = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(window * den + 1));
    return Rational(num, den);
  };
  std::vector<std::pair<RatVector, RatVector>> out;
  for (std::size_t s = 0; s < count; ++s) {
    RatVector p(dim), q(dim);
    for (auto &x : p)
      x = coordinate();
    for (auto &x : q)
      x = coordinate();
    out.emplace_back(std::move(p), std::move(q));
  }
  return out;
}

std::vector<SignedPermutation> induced_action_on_RN(const CrystGroup &g, const WallFamily &fam) {
  const std::size_t classes = fam.class_count();
  std::vector<SignedPermutation> out;
  for (const auto &a : normal_actions(g)) {
    std::vector<std::size_t> perm(classes);
    std::vector<int> signs(classes);
    for (std::size_t k = 0; k < classes; ++k) {
      auto [canon, scale] = canonical_direction(a * fam.classes[k].normal);
      std::size_t j = find_class(fam, canon);
      if (j == classes)
        throw InternalError("point element does not preserve the wall classes");
      perm[k] = j;
      signs[k] = scale.sign();
    }
    out.emplace_back(std::move(perm), std::move(signs));
  }
  return out;
}

CrystGroup stabilize(const CrystGroup &g) {
  std::vector<RatVector> lattice_basis;
  for (std::size_t i = 0; i < g.dimension; ++i)
    lattice_basis.push_back(g.lattice_basis.column(i));
  return stabilize(g, direction_class_count(g, lattice_basis));
}

CrystGroup stabilize(const CrystGroup &g, const WallFamily &fam) {
  const auto &pg = g.points();
  const auto action = induced_action_on_RN(g, fam);
  const std::size_t big_n = fam.class_count();

  CrystGroup out;
  out.name = g.name + "_stabilized";
  out.dimension = big_n;
  out.lattice_basis = RatMatrix::identity(big_n);
  out.expected_point_group_order = pg.order();
  for (std::size_t k = 0; k < g.point_generators.size(); ++k) {
    out.point_generators.push_back(to_matrix(action[pg.generator_elements[k]]));
    RatVector real = g.lattice_basis * g.translation_parts[k];
    RatVector t(big_n);
    for (std::size_t c = 0; c < big_n; ++c)
      t[c] = dot(fam.classes[c].normal, real) / fam.classes[c].spacing;
    out.translation_parts.push_back(std::move(t));
  }
  validate(out);
  return out;
}

} // namespace cubecrys
