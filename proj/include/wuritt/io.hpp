#ifndef WURITT_IO_HPP
#define WURITT_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <wuritt/charset.hpp>
#include <wuritt/poly.hpp>
#include <wuritt/pseudo.hpp>
#include <wuritt/triset.hpp>
#include <wuritt/zeroset.hpp>

namespace wuritt {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "wuritt/1";

/// Parsed system file: declared variable order (least first), coefficient
/// field, one polynomial per line, optional conclusion for `prove`.
struct SystemFile {
    VarOrderPtr order;
    Field field = Field::rationals();
    std::vector<Polynomial> polys;
    std::optional<Polynomial> conclusion;
};

/// Format:
///   # comment to end of line
///   vars: x y z
///   field: QQ          (or: field: GF 5)
///   polys:
///   x^2 - 1
///   x*y - 1
///   conclusion: y^2 - 1   (optional)
/// Expressions use + - * ^ ( ), integer and a/b rational literals (rationals
/// only over QQ), declared variable names; multiplication is always explicit.
SystemFile parseSystem(const std::string& text);

/// Single expression, for programmatic use; diagnostics report the given line.
Polynomial parseExpression(const std::string& text, const Field& field, const VarOrderPtr& order,
                           int line = 1);

/// Canonical rendering; parseExpression(renderPolynomial(p)) == p.
std::string renderPolynomial(const Polynomial& p);

Json rankJson(const RankKey& rank, const VarOrder& order);
Json polyListJson(const std::vector<Polynomial>& ps);
Json pointJson(const Point& z);

/// Result serializers. Every payload starts with schema/command/field/vars
/// and carries the full certificate; key order is fixed.
Json resultHeader(const std::string& command, const Field& field, const VarOrder& order);
Json serializePseudo(const std::string& command, const Polynomial& g, const Polynomial& f,
                     const PseudoResult& res);
Json serializeSetPseudo(const std::string& command, const Polynomial& g, const TriangularSet& s,
                        const SetPseudoResult& res);
Json serializeBasicSet(const TriangularSet& bs);
Json serializeCharset(const TriangularSet& cs, const CharsetTrace& trace, bool includeTrace,
                      const std::vector<Polynomial>& inputs);
Json serializeDecomposition(const ZeroDecomposition& zd, const std::vector<Polynomial>& inputs,
                            bool pruned);
Json serializeProof(const GeometricProof& proof, const Polynomial& conclusion);

/// Deterministic flat text view of a serialized result (same data as the
/// JSON form, one `key: value` per line, nested blocks indented).
std::string renderResultText(const Json& j);

}  // namespace wuritt

#endif
