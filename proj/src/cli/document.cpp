#include "spincover/cli/document.hpp"

#include <cstdint>

#include "json.hpp"

namespace spincover::cli {

using nlohmann::json;

namespace {

double number(const json& j, const char* where) {
    if (!j.is_number())
        throw ParseError(std::string("expected a number in ") + where);
    // "-0" arrives as a signed integer zero.
    if (j.is_number_integer() && !j.is_number_unsigned() && j.get<std::int64_t>() == 0)
        return -0.0;
    return j.get<double>();
}

const json& array_of(const json& j, std::size_t n, const char* where) {
    if (!j.is_array() || j.size() != n)
        throw ParseError(std::string("expected an array of ") + std::to_string(n) + " in " + where);
    return j;
}

Complex complex_number(const json& j) {
    array_of(j, 2, "complex entry");
    return {number(j[0], "complex entry"), number(j[1], "complex entry")};
}

std::string json_string(const std::string& s) { return json(s).dump(); }

/// Joins items inside open/close. Multiline puts each item on its own line at
/// `indent` + 2 spaces and the closing bracket at `indent`.
std::string render(const char* open, const std::vector<std::string>& items, const char* close, bool multiline,
                   const std::string& indent, const char* inline_sep = ",") {
    std::string out = open;
    for (std::size_t n = 0; n < items.size(); ++n) {
        if (multiline)
            out += "\n" + indent + "  ";
        out += items[n];
        if (n + 1 < items.size())
            out += multiline ? "," : inline_sep;
    }
    if (multiline && !items.empty())
        out += "\n" + indent;
    return out + close;
}

std::string flat_array(const std::vector<std::string>& items, bool pretty) {
    return render("[", items, "]", false, "", pretty ? ", " : ",");
}

std::string payload_text(const Document& doc, bool pretty, const std::string& indent) {
    std::vector<std::string> rows;
    if (const auto* m = std::get_if<SpinMatrix>(&doc.payload)) {
        for (int r = 0; r < 2; ++r) {
            std::vector<std::string> cells;
            for (int c = 0; c < 2; ++c)
                cells.push_back(flat_array({format_number((*m)(r, c).real()), format_number((*m)(r, c).imag())}, pretty));
            rows.push_back(flat_array(cells, pretty));
        }
    } else if (const auto* t = std::get_if<Matrix4>(&doc.payload)) {
        for (const auto& row : *t) {
            std::vector<std::string> cells;
            for (double x : row)
                cells.push_back(format_number(x));
            rows.push_back(flat_array(cells, pretty));
        }
    } else {
        std::vector<std::string> cells;
        for (double x : std::get<FourVector>(doc.payload).components())
            cells.push_back(format_number(x));
        return flat_array(cells, pretty);
    }
    return render("[", rows, "]", pretty, indent);
}

std::string document_text(const Document& doc, bool pretty, const std::string& indent) {
    const std::string sep = pretty ? ": " : ":";
    const std::string inner = indent + "  ";
    std::vector<std::string> fields;
    fields.push_back(json_string("kind") + sep + json_string(std::string(kind_name(doc.kind()))));
    fields.push_back(json_string("payload") + sep + payload_text(doc, pretty, inner));
    if (doc.meta) {
        std::vector<std::string> entries;
        for (const auto& [key, value] : *doc.meta)
            entries.push_back(json_string(key) + sep + json_string(value));
        fields.push_back(json_string("meta") + sep + render("{", entries, "}", pretty, inner));
    }
    return render("{", fields, "}", pretty, indent);
}

} // namespace

std::string_view kind_name(DocumentKind kind) {
    switch (kind) {
    case DocumentKind::spin:
        return "spin";
    case DocumentKind::lorentz:
        return "lorentz";
    default:
        return "fourvector";
    }
}

std::string ParseError::quote(const std::string& s) { return json(s).dump(); }

Document parse_document(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
    if (!j.is_object())
        throw ParseError("document must be a JSON object");
    for (const auto& [key, _] : j.items())
        if (key != "kind" && key != "payload" && key != "meta")
            throw ParseError("unknown field " + key);
    if (!j.contains("kind") || !j["kind"].is_string())
        throw ParseError("missing string field kind");
    if (!j.contains("payload"))
        throw ParseError("missing field payload");

    const std::string kind = j["kind"].get<std::string>();
    const json& p = j["payload"];
    Document doc;
    try {
        if (kind == "spin") {
            array_of(p, 2, "spin payload");
            array_of(p[0], 2, "spin payload row");
            array_of(p[1], 2, "spin payload row");
            doc.payload = SpinMatrix{complex_number(p[0][0]), complex_number(p[0][1]), complex_number(p[1][0]),
                                     complex_number(p[1][1])};
        } else if (kind == "lorentz") {
            array_of(p, 4, "lorentz payload");
            Matrix4 t{};
            for (std::size_t r = 0; r < 4; ++r) {
                array_of(p[r], 4, "lorentz payload row");
                for (std::size_t c = 0; c < 4; ++c)
                    t[r][c] = number(p[r][c], "lorentz payload");
            }
            doc.payload = t;
        } else if (kind == "fourvector") {
            array_of(p, 4, "fourvector payload");
            doc.payload = FourVector{number(p[0], "fourvector payload"), number(p[1], "fourvector payload"),
                                     number(p[2], "fourvector payload"), number(p[3], "fourvector payload")};
        } else {
            throw ParseError("unknown kind " + kind);
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }

    if (j.contains("meta")) {
        const json& m = j["meta"];
        if (!m.is_object())
            throw ParseError("meta must be an object");
        std::map<std::string, std::string> meta;
        for (const auto& [key, value] : m.items()) {
            if (!value.is_string())
                throw ParseError("meta values must be strings");
            meta[key] = value.get<std::string>();
        }
        doc.meta = std::move(meta);
    }
    return doc;
}

std::string serialize(const Document& doc, bool pretty) { return document_text(doc, pretty, ""); }

std::string serialize(const std::vector<Document>& docs, bool pretty) {
    std::vector<std::string> items;
    for (const Document& d : docs)
        items.push_back(document_text(d, pretty, pretty ? "  " : ""));
    return render("[", items, "]", pretty, "");
}

} // namespace spincover::cli
