#include "doctest.h"
#include "test_util.hpp"

using namespace skhodge;
using testutil::load_case;
using testutil::parse_ideal;

namespace {

struct Golden {
    const char* file;
    std::vector<std::string> i0;
    int genlevel;  // -1 = skip the generating-level run
};

// Published I_0 ideals and generating levels for the corpus.
const std::vector<Golden>& golden() {
    static const std::vector<Golden> g{
        {"nc2.div", {"1"}, 0},
        {"nc3.div", {"1"}, 0},
        {"a2.div", {"y - z", "x - z"}, 0},
        {"d3.div",
         {"y^2*z - z^3", "x^2*z - z^3", "y^3 - y*z^2", "x*y^2 - x*z^2", "x^2*y - y*z^2",
          "x^3 - x*z^2"},
         0},
        {"sekA1.div", {"9*y^2 - 32*x*z", "x^2 + 12*z"}, 0},
        {"sekA2.div", {"y^2", "x^2 - z"}, 0},
        {"sekB1.div", {"y^2 - 3*x*z", "x*y - 9*z", "x^2*z - 3*y*z"}, 0},
        {"sekB3.div", {"z", "y^2"}, 0},
        {"sekH2.div", {"y^2 - x*z", "12*x^2*y*z - z^2", "12*x^3*z - y*z"}, 0},
        {"sekH5.div", {"y^2", "y*z", "z^2"}, 0},
        {"nr3.div", {"y", "z"}, 0},
        {"nr4a.div", {"y", "z"}, 0},
        {"nr4b.div", {"z", "w"}, 0},
        {"nr4c.div", {"x", "y^2"}, 0},
        {"sym3.div", {"x*v - y*z", "x*u - y^2", "x*z*u - x*y*v"}, 0},
        {"bincub.div",
         {"z^2 - 3*y*w", "y*z - 9*x*w", "y^2 - 3*x*z"},
         1},
        {"d4.div",
         {"a13*a22 - a12*a23", "a13*a21 - a11*a23", "a12*a21 - a11*a22"},
         1},
    };
    return g;
}

}  // namespace

TEST_SUITE("corpus") {

TEST_CASE("published I_0 ideals are reproduced exactly") {
    for (const auto& g : golden()) {
        CAPTURE(std::string(g.file));
        auto c = load_case(g.file);
        HodgePipeline pipe(c.spec, c.b);
        auto res = pipe.hodge_ideal_0_direct();
        CHECK(ideal_equal(res.gens, parse_ideal(c.spec.ring, g.i0)));
    }
}

TEST_CASE("published generating levels are reproduced") {
    for (const auto& g : golden()) {
        if (g.genlevel < 0) continue;
        CAPTURE(std::string(g.file));
        auto c = load_case(g.file);
        int kmax = std::max(2, g.genlevel + 1);
        auto gl = generating_level(c.spec, c.b, kmax);
        CHECK(gl.level == g.genlevel);
        CHECK(gl.level <= gl.r);  // computed level never exceeds the bound r
    }
}

TEST_CASE("b-function symmetry holds on every strongly Koszul example") {
    for (const auto& g : golden()) {
        CAPTURE(std::string(g.file));
        auto f = testutil::load(g.file);
        REQUIRE(f.bfun.has_value());
        auto v = bfunction_validate(*f.bfun);
        CHECK(v.roots_in_range);
        CHECK(v.symmetric);
    }
}

TEST_CASE("inclusion chain and goodness for k <= 2 on every corpus example") {
    // F_k^H ⊆ F_k^ord ⊆ P_k, h^r * Ord_{k-r} ⊆ I_k, h * I_k ⊆ I_{k+1},
    // and D_i-stability, via the pipeline's own checker plus independent
    // containment assertions.
    std::vector<std::string> files;
    for (const auto& g : golden()) files.push_back(g.file);
    files.push_back("whitney.div");
    for (const auto& file : files) {
        CAPTURE(std::string(file));
        auto c = load_case(file);
        HodgePipeline pipe(c.spec, c.b);
        auto rep = pipe.check_inclusions(2);
        CAPTURE(rep.witness);
        CHECK(rep.hodge_in_ord);
        CHECK(rep.shifted_ord_in_hodge);
        CHECK(rep.monotone);
        CHECK(rep.d_stable);

        // Independent spot check at k = 1: I_1 inside the gradient ideal.
        auto ord1 = PolyIdeal(pipe.ord_ideal(1));
        for (const auto& ggen : pipe.hodge_ideal(1).gens) CHECK(ord1.contains(ggen));
        // h * I_0 inside I_1.
        auto i1 = PolyIdeal(pipe.hodge_ideal(1).gens);
        for (const auto& ggen : pipe.hodge_ideal(0).gens)
            CHECK(i1.contains(c.spec.h * ggen));
    }
}

TEST_CASE("two-route I_0 agreement on every corpus example") {
    for (const auto& g : golden()) {
        CAPTURE(std::string(g.file));
        auto c = load_case(g.file);
        HodgePipeline pipe(c.spec, c.b);
        CHECK(ideal_equal(pipe.hodge_ideal(0).gens, pipe.hodge_ideal_0_direct().gens));
    }
}

TEST_CASE("determinism: repeated pipeline runs give identical generator lists") {
    for (const char* file : {"a2.div", "sekH5.div", "bincub.div"}) {
        CAPTURE(std::string(file));
        auto c = load_case(file);
        HodgePipeline p1(c.spec, c.b), p2(c.spec, c.b);
        for (int k = 0; k <= 1; ++k) {
            const auto& a = p1.hodge_ideal(k).gens;
            const auto& b = p2.hodge_ideal(k).gens;
            REQUIRE(a.size() == b.size());
            for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].str() == b[i].str());
        }
    }
}

}  // TEST_SUITE
