#include <doctest.h>

#include <cmath>

#include "hypwalk/group.hpp"

using namespace hypwalk;

TEST_CASE("build_group: reflection family") {
    const GroupModel g = build_group(Family::Reflection, 4, 6);
    CHECK(g.generators.size() == 4);
    for (const Generator& gen : g.generators) {
        CHECK(gen.iso.reversing);
        CHECK(gen.inverse_label == gen.label);
        CHECK(approx_identity(compose(gen.iso, gen.iso), 1e-9));
    }
    // (r_i r_{i+1})^3 = e for m = 6
    const Isometry rot = compose(g.generators[0].iso, g.generators[1].iso);
    CHECK(approx_identity(compose(rot, compose(rot, rot)), 1e-9));
}

TEST_CASE("build_group: fuchsian family") {
    const GroupModel f = build_group(Family::Fuchsian, 4, 5);
    CHECK(f.generators.size() == 4);
    for (const Generator& gen : f.generators) CHECK_FALSE(gen.iso.reversing);
    CHECK(f.generators[0].inverse_label == "t3");
    CHECK(approx_identity(evaluate(f, Word{{"t1", "t3"}}), 1e-9));
    CHECK(approx_identity(evaluate(f, Word{{"t2", "t4"}}), 1e-9));
    // each t_i is a translation of length 2h through the center
    for (const Generator& gen : f.generators)
        CHECK(translation_length(gen.iso) ==
              doctest::Approx(2.0 * f.spec.inradius).epsilon(1e-9));
}

TEST_CASE("build_group: base-point stabilizer") {
    // generic pairs: only the identity fixes the center
    CHECK(build_group(Family::Reflection, 4, 8).trivial_stabilizer);
    CHECK(build_group(Family::Fuchsian, 4, 8).trivial_stabilizer);

    // some fuchsian pairs carry a central elliptic element, e.g. t1 t3 t5 t1
    // in (6,4) rotates by 2*pi/3 about the center; the model is still built,
    // with the flag recording the nontrivial stabilizer
    const GroupModel f = build_group(Family::Fuchsian, 6, 4);
    CHECK_FALSE(f.trivial_stabilizer);
    const Isometry w = evaluate(f, Word{{"t1", "t3", "t5", "t1"}});
    CHECK(dist(apply(w, f.base_point), f.base_point) < 1e-9);
    CHECK_FALSE(approx_identity(w, 1e-7));
    CHECK_FALSE(build_group(Family::Fuchsian, 8, 3).trivial_stabilizer);

    // skipping the check leaves the flag optimistic
    CHECK(build_group(Family::Fuchsian, 6, 4, 0).trivial_stabilizer);
}

TEST_CASE("displacement matches dist for moderate words and extends past it") {
    const GroupModel g = build_group(Family::Reflection, 4, 8);
    const Word w{{"r1", "r2", "r1", "r3", "r4"}};
    const Isometry iso = evaluate(g, w);
    CHECK(displacement(iso) ==
          doctest::Approx(dist(g.base_point, apply(iso, g.base_point)))
              .epsilon(1e-12));

    // a power so large its image point would collapse onto the unit circle
    const double L = translation_length(evaluate(g, Word{{"r1", "r3"}}));
    Isometry big = identity_isometry();
    const Isometry step = evaluate(g, Word{{"r1", "r3"}});
    for (int k = 0; k < 60; ++k) big = compose(big, step);
    CHECK(displacement(big) == doctest::Approx(60.0 * L).epsilon(1e-9));
}

TEST_CASE("build_group: constraint errors") {
    CHECK_THROWS_AS(build_group(Family::Fuchsian, 5, 4), std::invalid_argument);
    CHECK_THROWS_AS(build_group(Family::Reflection, 4, 5), std::invalid_argument);
    CHECK_THROWS_AS(build_group(Family::Reflection, 4, 4), std::invalid_argument);
    CHECK_THROWS_AS(build_group(Family::Fuchsian, 4, 2), std::invalid_argument);
}

TEST_CASE("evaluate") {
    const GroupModel g = build_group(Family::Reflection, 6, 4);
    CHECK(approx_identity(evaluate(g, Word{}), 1e-12));
    CHECK(approx_identity(evaluate(g, Word{{"r1", "r1"}}), 1e-9));
    const Isometry t = evaluate(g, Word{{"r1", "r4"}});
    CHECK_FALSE(t.reversing);
    CHECK(translation_length(t) ==
          doctest::Approx(4.0 * g.spec.inradius).epsilon(1e-9));
    CHECK_THROWS_AS(evaluate(g, Word{{"r7"}}), std::invalid_argument);
}

TEST_CASE("geo_distance") {
    const GroupModel g = build_group(Family::Reflection, 4, 8);
    CHECK(geo_distance(g, Word{}) == 0.0);
    CHECK(geo_distance(g, Word{{"r1"}}) ==
          doctest::Approx(2.0 * g.spec.inradius).epsilon(1e-9));

    // the base point lies on the axis of r1 r3, so powers add up exactly
    const double L = translation_length(evaluate(g, Word{{"r1", "r3"}}));
    Word w;
    for (int k = 1; k <= 4; ++k) {
        w.letters.push_back("r1");
        w.letters.push_back("r3");
        CHECK(geo_distance(g, w) == doctest::Approx(k * L).epsilon(1e-9));
    }
}

TEST_CASE("geo_distance obeys the path triangle inequality") {
    const GroupModel g = build_group(Family::Reflection, 5, 6);
    double max_step = 0.0;
    for (const Generator& gen : g.generators)
        max_step = std::max(max_step, geo_distance(g, Word{{gen.label}}));
    const Word w{{"r1", "r3", "r5", "r2", "r4", "r1"}};
    CHECK(geo_distance(g, w) <= w.letters.size() * max_step + 1e-12);
}

TEST_CASE("relator suite across the parameter grid") {
    for (int n = 3; n <= 14; ++n) {
        for (int m = 4; m <= 12; m += 2) {
            if (!is_hyperbolic_pair(n, m)) continue;
            const GroupModel g = build_group(Family::Reflection, n, m, 2);
            for (int i = 0; i < n; ++i) {
                const std::string ri = "r" + std::to_string(i + 1);
                const std::string rj = "r" + std::to_string((i + 1) % n + 1);
                CHECK(approx_identity(evaluate(g, Word{{ri, ri}}), 1e-9));
                Word braid;
                for (int k = 0; k < m / 2; ++k) {
                    braid.letters.push_back(ri);
                    braid.letters.push_back(rj);
                }
                CHECK(approx_identity(evaluate(g, braid), 1e-9));
            }
        }
    }
    for (int n = 4; n <= 14; n += 2) {
        for (int m = 3; m <= 12; ++m) {
            if (!is_hyperbolic_pair(n, m)) continue;
            const GroupModel f = build_group(Family::Fuchsian, n, m, 2);
            for (int i = 0; i < n; ++i) {
                const std::string ti = "t" + std::to_string(i + 1);
                const std::string tj = "t" + std::to_string((i + n / 2) % n + 1);
                CHECK(approx_identity(evaluate(f, Word{{ti, tj}}), 1e-9));
            }
        }
    }
}
