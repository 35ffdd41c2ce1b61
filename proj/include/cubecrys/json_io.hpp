#ifndef CUBECRYS_JSON_IO_HPP
#define CUBECRYS_JSON_IO_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "cubecrys/crystallographic_group.hpp"
#include "cubecrys/matrix.hpp"
#include "cubecrys/signed_permutation.hpp"
#include "cubecrys/simplicial_complex.hpp"

namespace cubecrys {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kGroupFormat = "cubecrys-group/1";
inline constexpr std::string_view kWallsFormat = "cubecrys-walls/1";
inline constexpr std::string_view kComplexFormat = "cubecrys-complex/1";

Json to_json(const Rational &r);
Json to_json(const RatVector &v);
Json to_json(const RatMatrix &m);
Json to_json(const SignedPermutation &s);
Json to_json(const SimplicialComplex &c);

// Readers accept rationals as "p/q" strings or JSON integers.
Rational rational_from_json(const Json &j);
RatVector vector_from_json(const Json &j);
RatMatrix matrix_from_json(const Json &j);
SignedPermutation signed_permutation_from_json(const Json &j);
SimplicialComplex simplicial_complex_from_json(const Json &j);

/// GroupFile (format "cubecrys-group/1").
Json group_to_json(const CrystGroup &g);
/// Parses but does not validate.
CrystGroup group_from_json(const Json &j);

/// Parses text, converting nlohmann parse errors into ParseError with the
/// byte position.
Json parse_json_text(const std::string &text);

std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &contents);

} // namespace cubecrys

#endif
