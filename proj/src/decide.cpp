#include "cubecrys/decide.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "cubecrys/error.hpp"

namespace cubecrys {

std::string to_string(RejectionReason r) {
  switch (r) {
  case RejectionReason::OrderObstruction:
    return "order-obstruction";
  case RejectionReason::CharacterMismatch:
    return "character-mismatch";
  case RejectionReason::NoEmbedding:
    return "no-embedding";
  }
  return "unknown";
}

std::string Obstruction::describe() const {
  std::ostringstream os;
  os << "element " << matrix.str() << " has order " << order << ", det " << determinant
     << ", trace " << trace;
  if (kind == RejectionReason::OrderObstruction) {
    os << "; O(" << matrix.rows() << ",Z) has no element of order " << order
       << " (orders present:";
    for (auto o : available_orders)
      os << " " << o;
    os << ")";
  } else {
    os << "; every order-" << order << " element of O(" << matrix.rows()
       << ",Z) has (trace, det) in {";
    for (std::size_t i = 0; i < same_order_characters.size(); ++i)
      os << (i ? ", " : "") << "(" << same_order_characters[i].first << ", "
         << same_order_characters[i].second << ")";
    os << "}";
  }
  return os.str();
}

std::string RejectionCertificate::describe() const {
  if (obstruction)
    return to_string(reason) + ": " + obstruction->describe();
  return to_string(reason) + ": no injective character-preserving homomorphism into O(n,Z) (" +
         std::to_string(assignments_examined) + " generator assignments examined)";
}

namespace {

struct Character {
  std::size_t order;
  int determinant;
  int trace;
  auto operator<=>(const Character &) const = default;
};

struct HyperoctahedralGroup {
  std::vector<SignedPermutation> elements;
  std::vector<Character> characters;
  std::set<std::size_t> orders;
  std::set<Character> realized;
};

const HyperoctahedralGroup &hyperoctahedral_group(std::size_t n) {
  static std::vector<HyperoctahedralGroup> cache = [] {
    std::vector<HyperoctahedralGroup> out(kDecideDimensionCap + 1);
    for (std::size_t d = 1; d <= kDecideDimensionCap; ++d) {
      auto &h = out[d];
      h.elements = enumerate_group(d);
      for (const auto &s : h.elements) {
        auto cls = classify_element(s);
        Character c{cls.order, cls.determinant, s.trace()};
        h.characters.push_back(c);
        h.orders.insert(c.order);
        h.realized.insert(c);
      }
    }
    return out;
  }();
  return cache.at(n);
}

Character lattice_character(const RatMatrix &m) {
  Character c{};
  c.order = *element_order(m, kPointGroupCap);
  c.determinant = det(m).sign();
  c.trace = m.trace().num().convert_to<int>();
  return c;
}

void require_decidable(const CrystGroup &g) {
  if (!g.validated())
    throw InputError("group '" + g.name + "' must be validated before classification");
  if (g.dimension > kDecideDimensionCap)
    throw SizeError("dimension " + std::to_string(g.dimension) +
                    " exceeds the classification cap of " + std::to_string(kDecideDimensionCap));
}

/// For each element e > 0, a generator k and an earlier element with
/// generator_k * parent = e.
std::vector<std::pair<std::size_t, std::size_t>> spanning_tree(const PointGroup &pg) {
  std::vector<std::pair<std::size_t, std::size_t>> tree(pg.order(), {0, 0});
  std::vector<bool> reached(pg.order(), false);
  reached[0] = true;
  for (std::size_t e = 0; e < pg.order(); ++e) {
    if (!reached[e])
      throw InternalError("point group enumeration is not breadth-first");
    for (std::size_t k = 0; k < pg.left_mult.size(); ++k) {
      std::size_t next = pg.left_mult[k][e];
      if (!reached[next]) {
        reached[next] = true;
        tree[next] = {k, e};
      }
    }
  }
  return tree;
}

/// Extends generator images to the whole group; empty result if they do not
/// define an injective homomorphism with matching characters.
std::vector<SignedPermutation>
extend_to_group(const PointGroup &pg, const std::vector<std::pair<std::size_t, std::size_t>> &tree,
                const std::vector<Character> &characters,
                const std::vector<SignedPermutation> &images) {
  const std::size_t n = images.empty() ? 0 : images.front().degree();
  std::vector<SignedPermutation> iota(pg.order());
  iota[0] = SignedPermutation::identity(n == 0 ? pg.elements[0].rows() : n);
  for (std::size_t e = 1; e < pg.order(); ++e)
    iota[e] = images[tree[e].first] * iota[tree[e].second];
  for (std::size_t k = 0; k < images.size(); ++k)
    for (std::size_t e = 0; e < pg.order(); ++e)
      if (iota[pg.left_mult[k][e]] != images[k] * iota[e])
        return {};
  std::set<SignedPermutation> distinct(iota.begin(), iota.end());
  if (distinct.size() != iota.size())
    return {};
  for (std::size_t e = 0; e < pg.order(); ++e) {
    if (iota[e].trace() != characters[e].trace ||
        iota[e].determinant() != characters[e].determinant)
      return {};
  }
  return iota;
}

} // namespace

RatMatrix seed_matrix(std::size_t n, const RatMatrix &lattice_basis, std::size_t k) {
  if (k == 0)
    return lattice_basis;
  if (k == 1)
    return RatMatrix::identity(n);
  std::size_t j = k - 2;
  const std::size_t cells = n * n;
  RatMatrix m(n, n);
  if (cells < 63 && j < (std::size_t{1} << cells)) {
    for (std::size_t c = 0; c < cells; ++c)
      m(c / n, c % n) = (j >> c) & 1U ? 1 : 0;
    return m;
  }
  if (cells < 63)
    j -= std::size_t{1} << cells;
  for (std::size_t c = 0; c < cells; ++c) {
    int digit = static_cast<int>(j % 3);
    j /= 3;
    m(c / n, c % n) = digit == 2 ? -1 : digit;
  }
  return m;
}

std::vector<Obstruction> quick_obstructions(const CrystGroup &g) {
  require_decidable(g);
  const auto &pg = g.points();
  const auto &oct = hyperoctahedral_group(g.dimension);

  std::vector<Obstruction> all;
  std::vector<bool> obstructed(pg.order(), false);
  for (std::size_t e = 0; e < pg.order(); ++e) {
    Character c = lattice_character(pg.elements[e]);
    if (oct.realized.count(c))
      continue;
    obstructed[e] = true;
  }

  // Cyclic subgroup of every obstructed element, as a sorted index set.
  std::vector<std::vector<std::size_t>> cyclic(pg.order());
  for (std::size_t e = 0; e < pg.order(); ++e) {
    if (!obstructed[e])
      continue;
    std::size_t p = e;
    std::vector<std::size_t> powers{0};
    while (p != 0) {
      powers.push_back(p);
      p = pg.multiply(p, e);
    }
    std::sort(powers.begin(), powers.end());
    cyclic[e] = std::move(powers);
  }

  for (std::size_t e = 0; e < pg.order(); ++e) {
    if (!obstructed[e])
      continue;
    bool dominated = false;
    for (std::size_t q = 0; q < pg.order() && !dominated; ++q) {
      if (q == e || !obstructed[q])
        continue;
      bool contained = std::includes(cyclic[q].begin(), cyclic[q].end(), cyclic[e].begin(),
                                     cyclic[e].end());
      if (!contained)
        continue;
      // Strictly larger subgroup, or the same subgroup with an earlier generator.
      dominated = cyclic[q].size() > cyclic[e].size() || q < e;
    }
    if (dominated)
      continue;

    Character c = lattice_character(pg.elements[e]);
    Obstruction ob;
    ob.element = e;
    ob.matrix = pg.elements[e];
    ob.order = c.order;
    ob.determinant = c.determinant;
    ob.trace = c.trace;
    ob.available_orders.assign(oct.orders.begin(), oct.orders.end());
    ob.kind = oct.orders.count(c.order) ? RejectionReason::CharacterMismatch
                                        : RejectionReason::OrderObstruction;
    std::set<std::pair<int, int>> chars;
    for (const auto &h : oct.characters)
      if (h.order == c.order)
        chars.emplace(h.trace, h.determinant);
    ob.same_order_characters.assign(chars.begin(), chars.end());
    all.push_back(std::move(ob));
  }
  return all;
}

Verdict is_hyperoctahedral(const CrystGroup &g) {
  require_decidable(g);
  const auto &pg = g.points();
  const std::size_t n = g.dimension;

  auto obstructions = quick_obstructions(g);
  for (auto kind : {RejectionReason::OrderObstruction, RejectionReason::CharacterMismatch}) {
    for (auto &ob : obstructions)
      if (ob.kind == kind) {
        RejectionCertificate cert;
        cert.reason = kind;
        cert.obstruction = std::move(ob);
        return cert;
      }
  }

  const auto &oct = hyperoctahedral_group(n);
  std::vector<Character> characters;
  for (const auto &m : pg.elements)
    characters.push_back(lattice_character(m));

  // Candidate images per generator: same (order, det, trace). The
  // generator's own matrix comes first when it is already a signed
  // permutation, then O(n,Z) in enumeration order.
  std::vector<std::vector<SignedPermutation>> candidates;
  for (const auto &gen : g.point_generators) {
    Character c = lattice_character(gen);
    std::vector<SignedPermutation> list;
    std::optional<SignedPermutation> own;
    if (is_signed_permutation_matrix(gen)) {
      own = SignedPermutation::from_matrix(gen);
      list.push_back(*own);
    }
    for (std::size_t i = 0; i < oct.elements.size(); ++i)
      if (oct.characters[i] == c && (!own || oct.elements[i] != *own))
        list.push_back(oct.elements[i]);
    candidates.push_back(std::move(list));
  }

  const auto tree = spanning_tree(pg);
  std::vector<SignedPermutation> images(g.point_generators.size());
  std::vector<SignedPermutation> iota;
  std::size_t examined = 0;
  std::function<bool(std::size_t)> assign = [&](std::size_t k) -> bool {
    if (k == images.size()) {
      ++examined;
      iota = extend_to_group(pg, tree, characters, images);
      return !iota.empty();
    }
    for (const auto &cand : candidates[k]) {
      images[k] = cand;
      if (assign(k + 1))
        return true;
    }
    return false;
  };
  if (!assign(0)) {
    RejectionCertificate cert;
    cert.reason = RejectionReason::NoEmbedding;
    cert.assignments_examined = examined;
    return cert;
  }

  const auto theta = point_group_real(g);
  std::vector<RatMatrix> iota_matrices;
  for (const auto &s : iota)
    iota_matrices.push_back(to_matrix(s));
  const Rational scale = Rational(1) / Rational(static_cast<std::int64_t>(pg.order()));

  for (std::size_t k = 0; k < kSeedCap; ++k) {
    RatMatrix a = average_intertwiner(theta, iota_matrices, seed_matrix(n, g.lattice_basis, k));
    a *= scale;
    if (det(a).is_zero())
      continue;
    HyperoctahedralWitness w;
    w.generator_images = images;
    w.iota = iota;
    w.conjugator = a;
    w.seed_index = k;
    for (std::size_t c = 0; c < n; ++c)
      w.basis.push_back(a.column(c));
    for (const auto &r : conjugation_residuals(g, w))
      if (!r.is_zero())
        throw InternalError("averaged conjugator fails the conjugation identity");
    return w;
  }
  throw InternalError("group '" + g.name + "': characters match but no seed among the first " +
                      std::to_string(kSeedCap) + " gives an invertible conjugator");
}

std::vector<RatMatrix> conjugation_residuals(const CrystGroup &g,
                                             const HyperoctahedralWitness &w) {
  const auto theta = point_group_real(g);
  if (w.iota.size() != theta.size())
    throw WitnessCorruptionError("witness does not cover every point element");
  RatMatrix a_inv = inverse(w.conjugator);
  std::vector<RatMatrix> out;
  for (std::size_t p = 0; p < theta.size(); ++p)
    out.push_back(theta[p] - w.conjugator * to_matrix(w.iota[p]) * a_inv);
  return out;
}

std::vector<RatVector> hyperoctahedral_basis(const CrystGroup &g,
                                             const HyperoctahedralWitness &w) {
  const std::size_t n = g.dimension;
  if (w.conjugator.rows() != n || w.conjugator.cols() != n)
    throw WitnessCorruptionError("conjugator has the wrong shape");
  std::vector<RatVector> basis;
  for (std::size_t i = 0; i < n; ++i)
    basis.push_back(w.conjugator.column(i));
  if (rank(w.conjugator) != n)
    throw WitnessCorruptionError("conjugator is singular");
  const auto theta = point_group_real(g);
  if (w.iota.size() != theta.size())
    throw WitnessCorruptionError("witness does not cover every point element");
  for (std::size_t p = 0; p < theta.size(); ++p)
    for (std::size_t i = 0; i < n; ++i) {
      RatVector expected = Rational(w.iota[p].sign(i)) * basis[w.iota[p].image(i)];
      if (theta[p] * basis[i] != expected)
        throw WitnessCorruptionError("point element " + std::to_string(p) +
                                     " does not permute the basis as iota dictates");
    }
  return basis;
}

} // namespace cubecrys
