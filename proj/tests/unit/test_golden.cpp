#include <doctest.h>

#include "golden_impl.hpp"

TEST_CASE("golden values")
{
    const auto data = golden::load(STARRAD_GOLDEN_PATH);
    const auto& values = data.at("values");
    CHECK(values.size() == golden::implementations().size());
    for (const auto& [key, entry] : values.items()) {
        CAPTURE(key);
        const auto it = golden::implementations().find(key);
        REQUIRE(it != golden::implementations().end());
        const double expected = entry.at("value").get<double>();
        const double got = it->second();
        CAPTURE(got);
        CAPTURE(expected);
        CHECK(std::abs(got - expected) <= 1e-10);
    }
}
