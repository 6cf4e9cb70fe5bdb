#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wsrn/energy.hpp"
#include "wsrn/rng.hpp"

using namespace wsrn;

TEST_CASE("energy_loss matches the movement cost model") {
    const EnergyParams p;
    CHECK(energy_loss(0.0, p) == 0.0);
    // 6.25*0.76 + 9.79 + 3.66/0.76 per meter
    CHECK(energy_loss(1.0, p) == doctest::Approx(19.3557894736842).epsilon(1e-12));
    CHECK(energy_loss(2.85, p) == doctest::Approx(55.164).epsilon(1e-3));
}

TEST_CASE("energy_loss is linear and monotone") {
    const EnergyParams p;
    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        const double d1 = rng.uniform01() * 5.0;
        const double d2 = rng.uniform01() * 5.0;
        CHECK(energy_loss(d1 + d2, p) ==
              doctest::Approx(energy_loss(d1, p) + energy_loss(d2, p)).epsilon(1e-12));
        if (d1 < d2) CHECK(energy_loss(d1, p) < energy_loss(d2, p));
    }
}

TEST_CASE("can_afford boundary is inclusive") {
    const EnergyParams p;
    CHECK(can_afford(100.0, 0.0, p));
    CHECK(can_afford(energy_loss(1.0, p), 1.0, p));
    CHECK_FALSE(can_afford(19.35, 1.0, p));
}

TEST_CASE("consume updates energy, travel and reactions") {
    const EnergyParams p;
    Robot r{0, {0.5, 0.5}, 100.0, 0.0, 0, 0};

    SUBCASE("zero-distance task only counts the reaction") {
        consume(r, 0.0, p);
        CHECK(r.energy == 100.0);
        CHECK(r.traveled == 0.0);
        CHECK(r.reactions == 1);
    }
    SUBCASE("one meter at defaults") {
        consume(r, 1.0, p);
        CHECK(r.energy == doctest::Approx(80.6442105263158).epsilon(1e-12));
        CHECK(r.traveled == 1.0);
    }
    SUBCASE("two 1 m tasks equal one 2 m task in energy") {
        Robot r2 = r;
        consume(r, 1.0, p);
        consume(r, 1.0, p);
        consume(r2, 2.0, p);
        CHECK(r.energy == doctest::Approx(r2.energy).epsilon(1e-12));
        CHECK(r.reactions == 2);
        CHECK(r2.reactions == 1);
    }
    SUBCASE("unaffordable task is a logic error") {
        r.energy = 1.0;
        CHECK_THROWS_AS(consume(r, 1.0, p), std::logic_error);
    }
}

TEST_CASE("percent reporting coincides with joules at the default capacity") {
    const EnergyParams p;
    const double percent = 100.0 * 55.5 / p.initial_energy;
    CHECK(percent == doctest::Approx(55.5));
}
