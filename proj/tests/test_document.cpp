#include "doctest.h"

#include <cstring>
#include <limits>

#include "spincover/cli/document.hpp"
#include "spincover/sampling.hpp"

using namespace spincover;
using namespace spincover::cli;

namespace {

bool bit_identical(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

double wild(Rng& rng) {
    // Mix of ordinary magnitudes, extremes and signed zero.
    std::uniform_int_distribution<int> pick(0, 5);
    std::normal_distribution<double> normal;
    std::uniform_int_distribution<int> exponent(-300, 300);
    switch (pick(rng)) {
    case 0:
        return -0.0;
    case 1:
        return std::numeric_limits<double>::denorm_min();
    case 2:
        return normal(rng) * std::pow(10.0, exponent(rng));
    default:
        return normal(rng);
    }
}

Document random_document(Rng& rng, int kind) {
    Document d;
    if (kind == 0) {
        d.payload = SpinMatrix{Complex(wild(rng), wild(rng)), Complex(wild(rng), wild(rng)),
                               Complex(wild(rng), wild(rng)), Complex(wild(rng), wild(rng))};
    } else if (kind == 1) {
        Matrix4 m{};
        for (auto& row : m)
            for (double& x : row)
                x = wild(rng);
        d.payload = m;
    } else {
        d.payload = FourVector{wild(rng), wild(rng), wild(rng), wild(rng)};
    }
    if (std::uniform_int_distribution<int>(0, 1)(rng))
        d.meta = std::map<std::string, std::string>{{"source", "test \"quoted\"\n"}, {"n", "1"}};
    return d;
}

} // namespace

TEST_CASE("serialize then parse is the identity, bit for bit") {
    Rng rng(53);
    for (int n = 0; n < 3000; ++n) {
        const Document d = random_document(rng, n % 3);
        for (bool pretty : {false, true}) {
            const std::string text = serialize(d, pretty);
            const Document back = parse_document(text);
            REQUIRE(back.kind() == d.kind());
            REQUIRE(back.meta == d.meta);
            REQUIRE(serialize(back, pretty) == text);
            if (const auto* v = std::get_if<FourVector>(&d.payload))
                for (int k = 0; k < 4; ++k)
                    REQUIRE(bit_identical((*v)[k], std::get<FourVector>(back.payload)[k]));
        }
    }
}

TEST_CASE("compact layout and field names") {
    const Document v{FourVector{1, 0.5, -0.0, 1e300}, std::nullopt};
    CHECK(serialize(v) == R"({"kind":"fourvector","payload":[1,0.5,-0,1e+300]})");
    const Document s{SpinMatrix{1.0, Complex(0, -1), Complex(0, 1), 0.0}, std::map<std::string, std::string>{{"a", "b"}}};
    CHECK(serialize(s) == R"({"kind":"spin","payload":[[[1,0],[0,-1]],[[0,1],[0,0]]],"meta":{"a":"b"}})");
    CHECK(serialize(std::vector<Document>{v, v}) ==
          R"([{"kind":"fourvector","payload":[1,0.5,-0,1e+300]},{"kind":"fourvector","payload":[1,0.5,-0,1e+300]}])");
    CHECK(serialize(v, true) == "{\n  \"kind\": \"fourvector\",\n  \"payload\": [1, 0.5, -0, 1e+300]\n}");
}

TEST_CASE("parse accepts integers and whitespace") {
    const Document d = parse_document(R"( { "payload" : [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], "kind": "lorentz" } )");
    CHECK(d.kind() == DocumentKind::lorentz);
    CHECK(std::get<Matrix4>(d.payload) == identity4());
    CHECK_FALSE(d.meta.has_value());
}

TEST_CASE("parse errors") {
    const char* bad[] = {
        "",
        "[]",
        R"({"kind":"spin"})",
        R"({"payload":[1,2,3,4]})",
        R"({"kind":"tensor","payload":[1,2,3,4]})",
        R"({"kind":"fourvector","payload":[1,2,3]})",
        R"({"kind":"fourvector","payload":[1,2,3,"4"]})",
        R"({"kind":"fourvector","payload":[1,2,3,4],"extra":1})",
        R"({"kind":"fourvector","payload":[1,2,3,4],"meta":{"k":1}})",
        R"({"kind":"fourvector","payload":[1,2,3,4],"meta":[]})",
        R"({"kind":"spin","payload":[[1,0],[0,1]]})",
        R"({"kind":"spin","payload":[[[1,0],[0,0]],[[0,0],[1,0,0]]]})",
        R"({"kind":"lorentz","payload":[[1,0,0,0],[0,1,0,0],[0,0,1,0]]})",
        R"({"kind":"fourvector","payload":[1,2,3,1e999]})",
    };
    for (const char* text : bad) {
        CAPTURE(text);
        CHECK_THROWS_AS(parse_document(text), ParseError);
    }
}
