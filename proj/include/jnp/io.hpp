#ifndef JNP_IO_HPP
#define JNP_IO_HPP

#include <nlohmann/json.hpp>
#include <string>

#include "jnp/algebra.hpp"
#include "jnp/laws.hpp"
#include "jnp/modules.hpp"

namespace jnp {

using Json = nlohmann::ordered_json;

// Algebra file format (sparse structure constants, scalars as strings).
// Serialization is canonical: fixed key order, entries sorted by (i, j, k),
// scalars in lowest terms, so write -> read -> write is byte-identical.

Json field_to_json(const Field& f);
Field field_from_json(const Json& j);

Json algebra_to_json(const Algebra& alg);
Algebra algebra_from_json(const Json& j);

Json module_to_json(const Algebra& alg, const ModuleStructure& mod);
ModuleStructure module_from_json(const Field& f, const Json& j);

Json verdict_to_json(const Verdict& v);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Field& f, const Json& j);

Json vec_to_json(const Vec& v);
Vec vec_from_json(const Field& f, const Json& j, std::size_t expect_len);

/// Parses "a,b,c" into a coefficient vector.
Vec parse_vec(const Field& f, const std::string& text, std::size_t expect_len);

std::string canonical_dump(const Json& j);

Algebra read_algebra_file(const std::string& path);
void write_algebra_file(const std::string& path, const Algebra& alg);
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

} // namespace jnp

#endif
