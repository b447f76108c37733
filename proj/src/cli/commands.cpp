#include "spincover/cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "spincover/cli/document.hpp"
#include "spincover/covering.hpp"
#include "spincover/generators.hpp"

namespace spincover::cli {

namespace {

class UsageError : public Error {
public:
    explicit UsageError(const std::string& why) : Error("UsageError", "reason=" + quoted(why)) {}

private:
    static std::string quoted(std::string s) {
        std::replace(s.begin(), s.end(), '\n', ' ');
        return "\"" + s + "\"";
    }
};

class IoError : public Error {
public:
    explicit IoError(const std::string& path) : Error("IoError", "path=" + path) {}
};

class KindMismatch : public Error {
public:
    KindMismatch(DocumentKind expected, DocumentKind got)
        : Error("KindMismatch",
                "expected=" + std::string(kind_name(expected)) + " got=" + std::string(kind_name(got))) {}
};

class PathMismatch : public Error {
public:
    explicit PathMismatch(double defect) : Error("PathMismatch", "defect=" + format_number(defect)) {}
};

struct Options {
    double tol = kValidationTolerance;
    bool pretty = false;

    std::string input = "-";
    std::vector<std::string> inputs;
    std::string index = "auto";
    std::string sign = "canonical";
    std::string level;

    std::string matrix_input;
    std::string vector_input;

    std::string generator;
    std::optional<double> alpha;
    std::optional<double> theta;
    std::vector<double> axis;
};

class Runner {
public:
    Runner(const Options& opts, std::istream& in) : opts_(opts), in_(in) {}

    std::string to_lorentz() const {
        const UnitSpinMatrix a = unit_spin(read(opts_.input, DocumentKind::spin));
        return emit(Document{phi(a).matrix(), std::nullopt});
    }

    std::string to_spin() const {
        const LorentzMatrix t = LorentzMatrix::validate(std::get<Matrix4>(read(opts_.input, DocumentKind::lorentz).payload), opts_.tol);
        const ComponentClass cls = classify(t);
        if (!(cls == kProperOrthochronous))
            throw NotProperOrthochronous(cls.name(), determinant(t.matrix()), t(0, 0));

        const int index = opts_.index == "auto" ? best_index(t) : std::stoi(opts_.index);
        const UnitSpinMatrix a = canonical_sign(phi_hat_indexed(t, index).plus);
        const std::map<std::string, std::string> meta{{"index", std::to_string(index)}};
        if (opts_.sign == "both")
            return emit(std::vector<Document>{{a.matrix(), meta}, {(-a).matrix(), meta}});
        return emit(Document{a.matrix(), meta});
    }

    std::string compose() const {
        if (opts_.inputs.size() < 2)
            throw UsageError("compose needs at least two inputs");
        std::vector<Document> docs;
        for (const std::string& path : opts_.inputs)
            docs.push_back(read(path));
        const DocumentKind level = opts_.level.empty() ? docs.front().kind()
                                   : opts_.level == "spin" ? DocumentKind::spin
                                                           : DocumentKind::lorentz;
        for (const Document& d : docs)
            if (d.kind() != level)
                throw Error("MixedKinds", "expected=" + std::string(kind_name(level)) +
                                              " got=" + std::string(kind_name(d.kind())));

        if (level == DocumentKind::spin) {
            UnitSpinMatrix product = unit_spin(docs.front());
            for (std::size_t n = 1; n < docs.size(); ++n)
                product = product * unit_spin(docs[n]);
            return emit(Document{product.matrix(), std::nullopt});
        }
        if (level == DocumentKind::lorentz) {
            LorentzMatrix product = LorentzMatrix::validate(std::get<Matrix4>(docs.front().payload), opts_.tol);
            for (std::size_t n = 1; n < docs.size(); ++n)
                product = spincover::compose(product, LorentzMatrix::validate(std::get<Matrix4>(docs[n].payload), opts_.tol));
            return emit(Document{product.matrix(), std::nullopt});
        }
        throw KindMismatch(DocumentKind::lorentz, level);
    }

    std::string apply() const {
        const Document m = read(opts_.matrix_input);
        const FourVector v = std::get<FourVector>(read(opts_.vector_input, DocumentKind::fourvector).payload);
        if (m.kind() == DocumentKind::lorentz) {
            const LorentzMatrix t = LorentzMatrix::validate(std::get<Matrix4>(m.payload), opts_.tol);
            return emit(Document{spincover::apply(t, v), std::nullopt});
        }
        if (m.kind() != DocumentKind::spin)
            throw KindMismatch(DocumentKind::spin, m.kind());

        const UnitSpinMatrix a = unit_spin(m);
        const FourVector by_lorentz = spincover::apply(phi(a), v);
        const SpinMatrix conjugated = a.matrix() * psi(v).matrix() * dagger(a.matrix());
        const FourVector by_spin = psi_inv(HermitianMatrix(conjugated, 1e-11));
        double defect = 0.0;
        for (int k = 0; k < 4; ++k)
            defect = std::max(defect, relative_error(by_lorentz[k], by_spin[k]));
        if (defect > 1e-11)
            throw PathMismatch(defect);
        return emit(Document{by_lorentz, std::nullopt});
    }

    std::string check() const {
        const Matrix4 m = std::get<Matrix4>(read(opts_.input, DocumentKind::lorentz).payload);
        const LorentzMatrix t = LorentzMatrix::validate(m, opts_.tol);
        const std::string sep = opts_.pretty ? ": " : ":";
        const std::vector<std::pair<std::string, std::string>> fields{
            {"orthogonality_defect", format_number(orthogonality_defect(m))},
            {"determinant", format_number(determinant(m))},
            {"t00", format_number(m[0][0])},
            {"component", "\"" + classify(t).name() + "\""},
            {"trace_identity_defect", format_number(trace_identity_defect(t))},
        };
        std::string out = "{";
        for (std::size_t n = 0; n < fields.size(); ++n) {
            out += opts_.pretty ? "\n  " : "";
            out += "\"" + fields[n].first + "\"" + sep + fields[n].second;
            if (n + 1 < fields.size())
                out += ",";
        }
        return out + (opts_.pretty ? "\n}\n" : "}\n");
    }

    std::string generate() const {
        if (opts_.axis.size() != 3)
            throw UsageError("--axis takes three components");
        const Axis axis({opts_.axis[0], opts_.axis[1], opts_.axis[2]});
        const bool spin_level = opts_.level.empty() || opts_.level == "spin";
        if (opts_.generator == "boost") {
            if (!opts_.alpha || opts_.theta)
                throw UsageError("boost takes --alpha only");
            const Rapidity r{*opts_.alpha, axis};
            return spin_level ? emit(Document{boost_spin(r).matrix(), std::nullopt})
                              : emit(Document{boost_lorentz(r).matrix(), std::nullopt});
        }
        if (!opts_.theta || opts_.alpha)
            throw UsageError("rotation takes --theta only");
        const AxisAngle aa{*opts_.theta, axis};
        return spin_level ? emit(Document{rotation_spin(aa).matrix(), std::nullopt})
                          : emit(Document{rotation_lorentz(aa).matrix(), std::nullopt});
    }

private:
    std::string slurp(const std::string& path) const {
        if (path == "-")
            return {std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>()};
        std::ifstream file(path, std::ios::binary);
        if (!file)
            throw IoError(path);
        return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
    }

    Document read(const std::string& path) const { return parse_document(slurp(path)); }

    Document read(const std::string& path, DocumentKind expected) const {
        Document d = read(path);
        if (d.kind() != expected)
            throw KindMismatch(expected, d.kind());
        return d;
    }

    UnitSpinMatrix unit_spin(const Document& d) const {
        return UnitSpinMatrix(std::get<SpinMatrix>(d.payload), opts_.tol);
    }

    std::string emit(const Document& d) const { return serialize(d, opts_.pretty) + "\n"; }
    std::string emit(const std::vector<Document>& d) const { return serialize(d, opts_.pretty) + "\n"; }

    const Options& opts_;
    std::istream& in_;
};

bool is_usage_error(const Error& e) {
    return e.code() == "ParseError" || e.code() == "UsageError" || e.code() == "IoError";
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options opts;
    CLI::App app{"Convert between SL(2,C) spin matrices and proper orthochronous Lorentz matrices", "spincover"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--tol", opts.tol, "Validation tolerance")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_flag("--pretty", opts.pretty, "Indent JSON output");

    auto* to_lorentz = app.add_subcommand("to-lorentz", "Map a spin document to its Lorentz matrix");
    to_lorentz->add_option("input", opts.input, "Spin document path, - for stdin");

    auto* to_spin = app.add_subcommand("to-spin", "Recover the spin matrix of a proper orthochronous Lorentz matrix");
    to_spin->add_option("input", opts.input, "Lorentz document path, - for stdin");
    to_spin->add_option("--index", opts.index, "tau index: auto, 0, 1, 2 or 3")
        ->check(CLI::IsMember({"auto", "0", "1", "2", "3"}));
    to_spin->add_option("--sign", opts.sign, "canonical or both")->check(CLI::IsMember({"canonical", "both"}));

    auto* compose = app.add_subcommand("compose", "Multiply documents left to right");
    compose->add_option("inputs", opts.inputs, "Document paths")->required();
    compose->add_option("--level", opts.level, "spin or lorentz")->check(CLI::IsMember({"spin", "lorentz"}));

    auto* apply = app.add_subcommand("apply", "Apply a spin or Lorentz document to a four-vector");
    apply->add_option("matrix", opts.matrix_input, "Spin or Lorentz document")->required();
    apply->add_option("vector", opts.vector_input, "Four-vector document")->required();

    auto* check = app.add_subcommand("check", "Validate and classify a Lorentz matrix");
    check->add_option("input", opts.input, "Lorentz document path, - for stdin");

    auto* generate = app.add_subcommand("generate", "Build a boost or rotation");
    generate->add_option("kind", opts.generator, "boost or rotation")
        ->required()
        ->check(CLI::IsMember({"boost", "rotation"}));
    generate->add_option("--alpha", opts.alpha, "Rapidity (boost)");
    generate->add_option("--theta", opts.theta, "Angle in radians (rotation)");
    generate->add_option("--axis", opts.axis, "Unit axis x y z")->expected(3)->required();
    generate->add_option("--level", opts.level, "spin or lorentz")->check(CLI::IsMember({"spin", "lorentz"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << UsageError(e.what()).what() << "\n";
        return kUsageError;
    }

    const Runner runner(opts, in);
    try {
        std::string text;
        if (*to_lorentz)
            text = runner.to_lorentz();
        else if (*to_spin)
            text = runner.to_spin();
        else if (*compose)
            text = runner.compose();
        else if (*apply)
            text = runner.apply();
        else if (*check)
            text = runner.check();
        else
            text = runner.generate();
        out << text;
        return kSuccess;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return is_usage_error(e) ? kUsageError : kDomainError;
    } catch (const std::exception& e) {
        std::string what = e.what();
        std::replace(what.begin(), what.end(), '\n', ' ');
        err << "InternalError reason=\"" << what << "\"\n";
        return kDomainError;
    }
}

} // namespace spincover::cli
