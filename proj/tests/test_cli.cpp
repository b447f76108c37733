#include "doctest.h"

#include <fstream>
#include <iterator>
#include <sstream>

#include "spincover/cli/commands.hpp"
#include "spincover/cli/document.hpp"
#include "spincover/covering.hpp"
#include "spincover/generators.hpp"
#include "spincover/sampling.hpp"
#include "support.hpp"

using namespace spincover;
using namespace spincover::cli;

namespace {

const std::string kGolden = SPINCOVER_GOLDEN_DIR;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE_MESSAGE(f.good(), "missing " << path);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

struct GoldenCase {
    std::string name;
    int code;
    std::vector<std::string> args;
};

std::vector<GoldenCase> golden_cases() {
    std::ifstream f(kGolden + "/cases.txt");
    std::vector<GoldenCase> cases;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream words(line);
        GoldenCase c;
        words >> c.name >> c.code;
        for (std::string w; words >> w;)
            c.args.push_back(w.rfind("inputs/", 0) == 0 ? kGolden + "/" + w : w);
        cases.push_back(std::move(c));
    }
    return cases;
}

Document output_document(const Result& r) {
    REQUIRE(r.code == 0);
    return parse_document(r.out);
}

std::string input(const std::string& name) { return kGolden + "/inputs/" + name; }

} // namespace

TEST_CASE("golden outputs are reproduced byte for byte") {
    const auto cases = golden_cases();
    REQUIRE(cases.size() >= 18);
    for (const GoldenCase& c : cases) {
        CAPTURE(c.name);
        const Result r = invoke(c.args);
        CHECK(r.code == c.code);
        CHECK(r.out == slurp(kGolden + "/expected/" + c.name + ".stdout"));
        CHECK(r.err == slurp(kGolden + "/expected/" + c.name + ".stderr"));
        if (c.code != 0) {
            // No partial output; one machine-readable line on stderr.
            CHECK(r.out.empty());
            CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
            CHECK(r.err.find('=') != std::string::npos);
        }
    }
}

TEST_CASE("to-lorentz values") {
    const Matrix4 t = std::get<Matrix4>(output_document(invoke({"to-lorentz", input("spin_boost_x_1.json")})).payload);
    CHECK(t[0][0] == doctest::Approx(1.5430806348).epsilon(1e-10));
    CHECK(t[0][1] == doctest::Approx(1.1752011936).epsilon(1e-10));
    CHECK(max_relative_error(t, test::boost_x(1.0)) <= 1e-12);

    const Result bad = invoke({"to-lorentz", input("spin_det2.json")});
    CHECK(bad.code == 1);
    CHECK(bad.err.rfind("NotUnitDeterminant det_defect=1", 0) == 0);
}

TEST_CASE("to-spin values and errors") {
    const Document d = output_document(invoke({"to-spin", input("lorentz_diag_1_-1_-1_1.json")}));
    CHECK(std::get<SpinMatrix>(d.payload) == test::I * pauli_basis(3));

    for (const char* index : {"0", "1", "auto"}) {
        const Document a = output_document(invoke({"to-spin", "--index", index, input("lorentz_boost_x_1.json")}));
        CHECK(max_relative_error(std::get<SpinMatrix>(a.payload), test::half_angle_x(1.0)) <= 1e-12);
    }

    const Result degenerate = invoke({"to-spin", "--index", "0", input("lorentz_diag_1_-1_-1_1.json")});
    CHECK(degenerate.code == 1);
    CHECK(degenerate.err.rfind("DegenerateIndex index=0", 0) == 0);

    const Result anti = invoke({"to-spin", input("lorentz_diag_-1_-1_1_1.json")});
    CHECK(anti.code == 1);
    CHECK(anti.err.rfind("NotProperOrthochronous class=proper-antichronous", 0) == 0);

    const Result parity = invoke({"to-spin", input("lorentz_diag_1_-1_-1_-1.json")});
    CHECK(parity.code == 1);
    CHECK(parity.err.find("det=-1") != std::string::npos);

    const Result not_lorentz = invoke({"to-spin", input("lorentz_diag_2_1_1_1.json")});
    CHECK(not_lorentz.code == 1);
    CHECK(not_lorentz.err.rfind("NotLorentz", 0) == 0);
}

TEST_CASE("compose values") {
    const SpinMatrix spin = std::get<SpinMatrix>(
        output_document(invoke({"compose", input("spin_boost_x_0.4.json"), input("spin_boost_x_0.7.json")})).payload);
    CHECK(max_relative_error(spin, test::half_angle_x(1.1)) <= 1e-12);

    const Matrix4 lorentz = std::get<Matrix4>(output_document(invoke({"compose", "--level", "lorentz",
                                                                       input("lorentz_boost_x_0.4.json"),
                                                                       input("lorentz_boost_x_0.7.json")}))
                                                  .payload);
    CHECK(max_relative_error(lorentz, test::boost_x(1.1)) <= 1e-12);

    const SpinMatrix perpendicular = std::get<SpinMatrix>(
        output_document(invoke({"compose", "--level", "spin", input("spin_boost_x_0.4.json"), input("spin_boost_y_0.5.json")}))
            .payload);
    CHECK(classify(phi(UnitSpinMatrix(perpendicular))) == kProperOrthochronous);

    CHECK(invoke({"compose", "--level", "lorentz", input("spin_identity.json"), input("spin_identity.json")}).code == 1);
    CHECK(invoke({"compose", input("spin_identity.json")}).code == 2);
    CHECK(invoke({"compose", input("fourvector_1_0_0_0.json"), input("fourvector_1_0_0_0.json")}).code == 1);
}

TEST_CASE("apply agrees on both levels") {
    const FourVector boosted = std::get<FourVector>(
        output_document(invoke({"apply", input("spin_boost_x_1.json"), input("fourvector_1_0_0_0.json")})).payload);
    CHECK(boosted[0] == doctest::Approx(std::cosh(1.0)).epsilon(1e-14));
    CHECK(boosted[1] == doctest::Approx(std::sinh(1.0)).epsilon(1e-14));

    Rng rng(59);
    for (int n = 0; n < 100; ++n) {
        const UnitSpinMatrix a = random_unit_spin(rng);
        const FourVector v = random_four_vector(rng);
        const std::string spin_doc = serialize(Document{a.matrix(), std::nullopt});
        const std::string lorentz_doc = serialize(Document{phi(a).matrix(), std::nullopt});
        const std::string vector_doc = serialize(Document{v, std::nullopt});
        // One of the two inputs may come from stdin.
        const FourVector via_spin = std::get<FourVector>(output_document(invoke({"apply", "-", input("fourvector_1_0_0_0.json")}, spin_doc)).payload);
        const FourVector expected_e0 = apply(phi(a), {1, 0, 0, 0});
        for (int k = 0; k < 4; ++k)
            REQUIRE(relative_error(via_spin[k], expected_e0[k]) <= 1e-11);
        const Result lorentz_path = invoke({"apply", "-", input("fourvector_0_1_2_3.json")}, lorentz_doc);
        const Result spin_path = invoke({"apply", "-", input("fourvector_0_1_2_3.json")}, spin_doc);
        const FourVector lv = std::get<FourVector>(output_document(lorentz_path).payload);
        const FourVector sv = std::get<FourVector>(output_document(spin_path).payload);
        for (int k = 0; k < 4; ++k)
            REQUIRE(relative_error(lv[k], sv[k]) <= 1e-11);
        (void)vector_doc;
    }
}

TEST_CASE("check report") {
    const Result ok = invoke({"check", input("lorentz_boost_x_1.json")});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("\"component\":\"proper-orthochronous\"") != std::string::npos);
    const Result scaled = invoke({"check", input("lorentz_diag_2_1_1_1.json")});
    CHECK(scaled.code == 1);
    CHECK(scaled.err == "NotLorentz max_violation=3\n");
    // A looser tolerance admits the same matrix.
    CHECK(invoke({"check", "--tol", "4", input("lorentz_diag_2_1_1_1.json")}).code == 0);
    CHECK(invoke({"check", "--tol", "-1", input("lorentz_identity.json")}).code == 2);
}

TEST_CASE("generate values") {
    const SpinMatrix b = std::get<SpinMatrix>(
        output_document(invoke({"generate", "boost", "--alpha", "1", "--axis", "1", "0", "0"})).payload);
    CHECK(b(0, 0).real() == doctest::Approx(std::cosh(0.5)).epsilon(1e-15));
    CHECK(b(0, 1).real() == doctest::Approx(std::sinh(0.5)).epsilon(1e-15));

    const Matrix4 r = std::get<Matrix4>(output_document(invoke({"generate", "rotation", "--theta", "3.141592653589793",
                                                                "--axis", "0", "0", "1", "--level", "lorentz"}))
                                            .payload);
    CHECK(max_relative_error(r, diagonal4(1, -1, -1, 1)) <= 1e-15);

    const SpinMatrix full = std::get<SpinMatrix>(
        output_document(invoke({"generate", "rotation", "--theta", "6.283185307179586", "--axis", "0", "0", "1"})).payload);
    CHECK(max_relative_error(full, -SpinMatrix::identity()) <= 1e-15);

    CHECK(invoke({"generate", "boost", "--theta", "1", "--axis", "1", "0", "0"}).code == 2);
    CHECK(invoke({"generate", "spiral", "--alpha", "1", "--axis", "1", "0", "0"}).code == 2);
    CHECK(invoke({"generate", "boost", "--alpha", "1", "--axis", "0", "0", "0"}).code == 1);
}

TEST_CASE("to-spin after to-lorentz is the canonical sign") {
    Rng rng(61);
    for (int n = 0; n < 100; ++n) {
        const UnitSpinMatrix a = random_unit_spin(rng);
        const std::string doc = serialize(Document{a.matrix(), std::nullopt});
        const Result lorentz = invoke({"to-lorentz"}, doc);
        REQUIRE(lorentz.code == 0);
        const Result spin = invoke({"to-spin"}, lorentz.out);
        REQUIRE(spin.code == 0);
        const SpinMatrix back = std::get<SpinMatrix>(parse_document(spin.out).payload);
        REQUIRE(max_relative_error(back, canonical_sign(a).matrix()) <= 1e-9);
    }
}

TEST_CASE("usage errors") {
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"to-lorentz", "/nonexistent/file.json"}).code == 2);
    CHECK(invoke({"to-lorentz"}, "not json").code == 2);
    CHECK(invoke({"to-lorentz", input("lorentz_identity.json")}).code == 1);
    const Result help = invoke({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("to-spin") != std::string::npos);
}
