#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>

#include <json.hpp>

#include "lietriple/cochain.hpp"
#include "lietriple/crossed.hpp"
#include "lietriple/errors.hpp"
#include "lietriple/lya.hpp"
#include "lietriple/rep.hpp"
#include "lietriple/twoterm.hpp"

namespace lietriple::io {

using Json = nlohmann::json;  // std::map objects: keys come out sorted

inline constexpr const char* kSchemaVersion = "1";

// Carries the JSON path of the offending field, e.g. payload.binary[2][1].
class SchemaError : public InputError {
 public:
  SchemaError(const std::string& path, const std::string& what) : InputError(path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct LieDocument {
  LieAlgebra lie;
  std::optional<std::pair<Subspace, Subspace>> decomposition;  // (h, m)
  friend bool operator==(const LieDocument&, const LieDocument&) = default;
};

struct RepDocument {
  Representation rep;
  std::optional<LYAlgebra> target;  // the algebra acted on, when the document describes an action
  friend bool operator==(const RepDocument&, const RepDocument&) = default;
};

struct HomomorphismDocument {
  TwoTermAlgebra source;
  TwoTermAlgebra target;
  TwoTermHomomorphism map;
  friend bool operator==(const HomomorphismDocument&, const HomomorphismDocument&) = default;
};

using Payload = std::variant<LYAlgebra, LieDocument, LeibnizAlgebra, RepDocument, Cochain, CochainQuadruple,
                             TwoTermAlgebra, HomomorphismDocument, CrossedModuleLYA, LeibnizCrossedModule,
                             ReductiveCrossedModule, CrossedExtension>;

// Kind names in Payload order.
inline constexpr const char* kKinds[] = {"lya",    "lie",          "leibniz", "rep",
                                         "cochain", "quadruple",   "twoterm", "homomorphism",
                                         "crossed", "leibniz-crossed", "reductive-crossed", "extension"};

struct Document {
  Payload payload;
  std::string kind() const { return kKinds[payload.index()]; }
};

inline bool operator==(const Document& a, const Document& b) { return a.payload == b.payload; }

template <class T, std::size_t I = 0>
constexpr std::size_t payload_index() {
  if constexpr (std::is_same_v<T, std::variant_alternative_t<I, Payload>>)
    return I;
  else
    return payload_index<T, I + 1>();
}

Json to_json(const Document& doc);
Document from_json(const Json& j);
// Sorted keys, two-space indent, short object-free arrays kept on one line.
std::string pretty_json(const Json& j);
std::string render(const Document& doc);
Document parse(std::string_view text);
Document load(const std::string& path);
void save(const std::string& path, const Document& doc);

// Throws SchemaError unless the document holds a T.
template <class T>
const T& expect(const Document& doc, const std::string& origin) {
  if (const T* p = std::get_if<T>(&doc.payload)) return *p;
  throw SchemaError(origin + ".kind",
                    std::string("expected \"") + kKinds[payload_index<T>()] + "\", got \"" + doc.kind() + "\"");
}

// Building blocks shared with report rendering.
Json rational_json(const Rational& q);
Json vector_json(const Vector& v);
Json subspace_json(const Subspace& s);
Json cochain_json(const Cochain& c);

}  // namespace lietriple::io
