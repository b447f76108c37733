#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "spincover/errors.hpp"
#include "spincover/lorentz.hpp"
#include "spincover/minkowski.hpp"
#include "spincover/pauli.hpp"

namespace spincover::cli {

enum class DocumentKind { spin, lorentz, fourvector };

std::string_view kind_name(DocumentKind kind);

/// {"kind": ..., "payload": ..., "meta": {...}}
///   spin:       [[[re, im], [re, im]], [[re, im], [re, im]]]
///   lorentz:    4x4 row-major reals
///   fourvector: [x0, x1, x2, x3]
struct Document {
    std::variant<SpinMatrix, Matrix4, FourVector> payload;
    std::optional<std::map<std::string, std::string>> meta;

    DocumentKind kind() const { return static_cast<DocumentKind>(payload.index()); }
    bool operator==(const Document&) const = default;
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error("ParseError", "reason=" + quote(what)) {}

private:
    static std::string quote(const std::string& s);
};

Document parse_document(std::string_view text);

/// Numbers use the shortest decimal form that reads back to the same double.
std::string serialize(const Document& doc, bool pretty = false);
std::string serialize(const std::vector<Document>& docs, bool pretty = false);

} // namespace spincover::cli
