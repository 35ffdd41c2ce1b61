#include "cubecrys/boundary.hpp"

#include <algorithm>
#include <cctype>

#include "cubecrys/error.hpp"

namespace cubecrys {

FactorDescriptor FactorDescriptor::regular_tree(std::size_t valence) {
  if (valence < 3)
    throw InputError("RegularTree valence must be at least 3, got " + std::to_string(valence));
  return {Kind::RegularTree, valence};
}

std::string FactorDescriptor::str() const {
  switch (kind) {
  case Kind::Point:
    return "Point";
  case Kind::HalfLine:
    return "HalfLine";
  case Kind::Line:
    return "Line";
  case Kind::RegularTree:
    return "RegularTree(" + std::to_string(valence) + ")";
  }
  return "?";
}

const SimplicialComplex &BoundaryDescriptor::finite() const {
  if (!is_finite())
    throw InputError("boundary has an infinite discrete join factor");
  return finite_;
}

std::string BoundaryDescriptor::str() const {
  std::string out;
  for (std::size_t k = 0; k < infinite_discrete_; ++k)
    out += (k ? " * " : "") + std::string(kInfiniteDiscrete);
  if (!is_finite() && finite_.vertex_count() == 0)
    return out;
  if (!is_finite())
    out += " * ";
  out += "finite complex (" + std::to_string(finite_.vertex_count()) + " vertices, " +
         std::to_string(finite_.edge_count()) + " edges)";
  return out;
}

BoundaryDescriptor atomic_boundary(const FactorDescriptor &f) {
  switch (f.kind) {
  case FactorDescriptor::Kind::Point:
    return BoundaryDescriptor(SimplicialComplex{});
  case FactorDescriptor::Kind::HalfLine:
    return BoundaryDescriptor(SimplicialComplex({"+"}, {}));
  case FactorDescriptor::Kind::Line:
    return BoundaryDescriptor(SimplicialComplex({"+", "-"}, {}));
  case FactorDescriptor::Kind::RegularTree:
    return BoundaryDescriptor(SimplicialComplex{}, 1);
  }
  throw InternalError("unknown factor kind");
}

BoundaryDescriptor product_boundary(const std::vector<FactorDescriptor> &factors) {
  if (factors.empty())
    throw InputError("product_boundary: empty factor list");
  SimplicialComplex joined;
  std::size_t symbolic = 0;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    BoundaryDescriptor b = atomic_boundary(factors[k]);
    symbolic += b.infinite_discrete_factors();
    joined = simplicial_join(joined, b.finite_part().relabeled("f" + std::to_string(k) + ":"));
  }
  return BoundaryDescriptor(std::move(joined), symbolic);
}

SimplicialComplex boundary_of_Rn(std::size_t n) {
  if (n < 1 || n > 8)
    throw SizeError("boundary_of_Rn: n must be in 1..8, got " + std::to_string(n));
  return product_boundary(std::vector<FactorDescriptor>(n, FactorDescriptor::line())).finite();
}

std::vector<FactorDescriptor> parse_factor_expression(const std::string &expr) {
  std::string s;
  std::copy_if(expr.begin(), expr.end(), std::back_inserter(s),
               [](unsigned char c) { return !std::isspace(c); });
  if (s.empty())
    throw ParseError("empty factor expression");

  std::vector<FactorDescriptor> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = s.find('*', pos);
    std::string token = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    if (token == "Line") {
      out.push_back(FactorDescriptor::line());
    } else if (token == "HalfLine") {
      out.push_back(FactorDescriptor::half_line());
    } else if (token == "Point") {
      out.push_back(FactorDescriptor::point());
    } else if (token.starts_with("RegularTree(") && token.ends_with(")")) {
      std::string digits = token.substr(12, token.size() - 13);
      if (digits.empty() || digits.size() > 9 ||
          !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw ParseError("bad RegularTree valence '" + digits + "'");
      try {
        out.push_back(FactorDescriptor::regular_tree(std::stoul(digits)));
      } catch (const InputError &e) {
        throw ParseError(e.what());
      }
    } else {
      throw ParseError("unknown factor '" + token + "' at position " + std::to_string(pos) +
                       " (expected Line, HalfLine, Point or RegularTree(k))");
    }
    if (end == std::string::npos)
      break;
    pos = end + 1;
  }
  return out;
}

} // namespace cubecrys
