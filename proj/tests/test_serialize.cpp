#include "cx2/instances.hpp"
#include "cx2/report.hpp"

#include <doctest.h>

using namespace cx2;

namespace {

const char* minimal = R"({"ring": {"field": 2}, "objects": {"x": {"top": {"dim": 1}, "bottom": {"dim": 2}, "d": [[1], [0]]}}})";

}  // namespace

TEST_CASE("minimal workspace") {
    const Workspace w = parseWorkspace(minimal);
    CHECK(w.ring == BaseRing::field(2));
    REQUIRE(w.objects.size() == 1);
    CHECK(w.object("x").top().size() == 1);
    CHECK(w.object("x").bottom().size() == 2);
    CHECK(parseWorkspace(serializeWorkspace(w)) == w);
}

TEST_CASE("empty workspace") {
    Workspace w;
    const std::string text = serializeWorkspace(w);
    CHECK(text == "{\n  \"ring\": {\n    \"ring\": \"Z\"\n  },\n  \"objects\": {},\n  \"morphisms\": {},\n  \"cells\": {},\n  \"complexes\": {}\n}\n");
    CHECK(parseWorkspace(text) == w);
}

TEST_CASE("malformed documents are rejected") {
    CHECK_THROWS_WITH_AS(parseWorkspace(R"({"ring": {"field": 2}, "objects": {"x": {"top": {"dim": 1}, "bottom": {"dim": 2}, "d": [[1, 0]]}}})"),
                         doctest::Contains("matrix shape"), FormatError);
    CHECK_THROWS_WITH_AS(parseWorkspace("{\"ring\": {\"field\": 2},\n \"objects\": ["), doctest::Contains("line 2"),
                         FormatError);
    CHECK_THROWS_AS(parseWorkspace(R"({"ring": {"field": 4}})"), FormatError);
    CHECK_THROWS_WITH_AS(parseWorkspace(R"({"ring": {"ring": "Z"}, "morphisms": {"u": {"src": "nope", "tgt": "nope", "u1": [], "u0": []}}})"),
                         doctest::Contains("unknown object"), FormatError);
    // Z/2 -> Z has no nonzero morphism.
    CHECK_THROWS_WITH_AS(parseWorkspace(R"({"ring": {"ring": "Z"}, "objects": {"x": {"top": {"free": 0, "torsion": [2]}, "bottom": {"free": 1}, "d": [[1]]}}})"),
                         doctest::Contains("object x"), FormatError);
    CHECK_THROWS_AS(parseWorkspace(R"({"ring": {"field": 2}, "objects": {"x": {"top": {"free": 1}, "bottom": {"dim": 0}, "d": []}}})"),
                    FormatError);
}

TEST_CASE("rings and big integers") {
    CHECK(parseRing("Z") == BaseRing::integers());
    CHECK(parseRing("fp:5") == BaseRing::field(5));
    CHECK_THROWS_AS(parseRing("fp:6"), FormatError);
    CHECK_THROWS_AS(parseRing("Q"), FormatError);
    const Int big = Int(1) << 80;
    CHECK(intFromJson(toJson(big)) == big);
    CHECK(intFromJson(toJson(Int(-7))) == -7);
}

TEST_CASE("generated instances round-trip") {
    for (const std::string& kind : instanceKinds()) {
        for (BaseRing r : {BaseRing::field(2), BaseRing::field(3), BaseRing::integers()}) {
            if (r == BaseRing::integers() && (kind == "complexExtension" || kind == "grid3x3")) continue;
            for (std::uint64_t seed = 0; seed < 4; ++seed) {
                const Workspace w = genInstance(seed, kind, r, {.maxGens = 2});
                const std::string text = serializeWorkspace(w);
                const Workspace back = parseWorkspace(text);
                CHECK_MESSAGE(back == w, kind, " ", r.name(), " seed ", seed);
                CHECK(serializeWorkspace(back) == text);
                CHECK(serializeWorkspace(genInstance(seed, kind, r, {.maxGens = 2})) == text);
            }
        }
    }
}

TEST_CASE("generated entities satisfy their invariants") {
    const BaseRing F2 = BaseRing::field(2);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Workspace e = genInstance(seed, "extension", F2);
        CHECK(isExtension(e.morphism("f"), e.cell("eta"), e.morphism("g")));
        const ComplexExtension E = complexExtensionFrom(genInstance(seed, "complexExtension", F2, {.maxGens = 2}));
        CHECK_NOTHROW(validateComplexExtension(E));
        const SnakeDiagram D = snakeDiagramFrom(genInstance(seed, "lemmaDiagram", F2, {.maxGens = 2}));
        CHECK(snakeHypothesisFailure(D, canonicalColumns(D), true).empty());
        CHECK(check3x3(gridFrom(genInstance(seed, "grid3x3", F2, {.maxGens = 2}))).failure.empty());
        CHECK(genInstance(seed, "loop", F2).cell("loop").isLoop());
    }
    CHECK_THROWS_AS(genInstance(0, "object", F2, {.maxGens = 7}), ValidationError);
}

TEST_CASE("seed 0 object over F_2 is fixed") {
    const Workspace w = genInstance(0, "object", BaseRing::field(2));
    CHECK(toJson(w.object("x")).dump() == R"({"top":{"dim":0},"bottom":{"dim":3},"d":[[],[],[]]})");
}

TEST_CASE("non-split square file") {
    const Workspace w = loadWorkspace(std::string(CX2_DATA_DIR) + "/nonsplit.json");
    CHECK(w.ring == BaseRing::integers());
    CHECK(w.morphism("u") == nonSplitSquare());
    CHECK(serializeWorkspace(w) == serializeWorkspace(genInstance(0, "nonsplit", BaseRing::integers())));
    const Json demo = demoNonSplit();
    CHECK(demo["nonsplit"]["classification"]["equivalence"] == false);
    CHECK(demo["nonsplit"]["classification"]["fullyFaithful"] == true);
    CHECK(demo["contrast"]["classification"]["equivalence"] == true);
}
