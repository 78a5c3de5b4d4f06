#include "doctest.h"

#include "autoforma/group.hpp"
#include "autoforma/rng.hpp"

using namespace autoforma;

namespace {
GroupElement random_element(DeterministicRng& rng, double b_box) {
    const double angle = rng.uniform(0.0, 6.283185307179586);
    return {std::polar(1.0, angle), rng.box(b_box)};
}
} // namespace

TEST_CASE("group law on hand-expanded pairs") {
    const GroupElement id = GroupElement::identity();
    const GroupElement g{cnum{0.0, 1.0}, cnum{0.0, 0.0}};
    const GroupElement h{cnum{1.0, 0.0}, cnum{1.0, 0.0}};

    const GroupElement idg = compose(id, g);
    CHECK(std::abs(idg.a - g.a) <= 1e-15);
    CHECK(std::abs(idg.b - g.b) <= 1e-15);

    // (i,0)(1,1) = (i, i): a(a'z+b') + b expanded by hand
    const GroupElement gh = compose(g, h);
    CHECK(std::abs(gh.a - cnum{0.0, 1.0}) <= 1e-15);
    CHECK(std::abs(gh.b - cnum{0.0, 1.0}) <= 1e-15);

    const GroupElement k{cnum{0.0, 1.0}, cnum{1.0, 0.0}};
    const GroupElement kk = compose(k, inverse(k));
    CHECK(std::abs(kk.a - 1.0) <= 1e-14);
    CHECK(std::abs(kk.b) <= 1e-14);
}

TEST_CASE("inverse formula") {
    const GroupElement id = inverse(GroupElement::identity());
    CHECK(std::abs(id.a - 1.0) == 0.0);
    CHECK(std::abs(id.b) == 0.0);

    // (i,1)^{-1} = (-i, i), checked by composing back
    const GroupElement g{cnum{0.0, 1.0}, cnum{1.0, 0.0}};
    const GroupElement gi = inverse(g);
    CHECK(std::abs(gi.a - cnum{0.0, -1.0}) <= 1e-15);
    CHECK(std::abs(gi.b - cnum{0.0, 1.0}) <= 1e-15);

    DeterministicRng rng(11);
    for (int k = 0; k < 50; ++k) {
        const cnum gamma = rng.box(10.0);
        const cnum p = act(inverse(GroupElement::translation(gamma)), cnum{0.0, 0.0});
        CHECK(std::abs(p + gamma) <= 1e-14);
    }
}

TEST_CASE("action and inverse law") {
    const cnum z{2.0, 0.0};
    CHECK(std::abs(act(GroupElement::identity(), z) - z) == 0.0);
    CHECK(std::abs(act(GroupElement{cnum{0.0, 1.0}, cnum{1.0, 0.0}}, z) - cnum{1.0, 2.0}) <= 1e-15);

    DeterministicRng rng(12);
    for (int k = 0; k < 100; ++k) {
        const GroupElement g = random_element(rng, 10.0);
        const cnum w = rng.box(10.0);
        CHECK(std::abs(act(g, act(inverse(g), w)) - w) <= 1e-12);
    }
}

TEST_CASE("construction rejects bad elements") {
    CHECK_THROWS_AS(GroupElement(cnum{1.1, 0.0}, cnum{}), std::invalid_argument);
    CHECK_THROWS_AS(GroupElement(cnum{1.0, 0.0}, cnum{std::nan(""), 0.0}), std::invalid_argument);
}

TEST_CASE("modulus preservation and associativity") {
    DeterministicRng rng(13);
    for (int k = 0; k < 200; ++k) {
        const GroupElement g = random_element(rng, 10.0);
        const GroupElement h = random_element(rng, 10.0);
        const GroupElement e = random_element(rng, 10.0);
        CHECK(std::abs(std::abs(compose(g, h).a) - 1.0) <= 1e-14);
        CHECK(std::abs(std::abs(inverse(g).a) - 1.0) <= 1e-14);

        const cnum z = rng.box(10.0);
        const cnum lhs = act(compose(compose(g, h), e), z);
        const cnum rhs = act(g, act(h, act(e, z)));
        CHECK(std::abs(lhs - rhs) <= 1e-12);
    }
}
