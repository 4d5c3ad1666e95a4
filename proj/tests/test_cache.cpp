#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "petersson/arith.hpp"
#include "petersson/cache.hpp"

using namespace petersson;

TEST_CASE("cache round trip") {
    std::string path = (std::filesystem::temp_directory_path() / "petersson_cache_test.json").string();
    std::remove(path.c_str());

    cache::configure(path);
    Rat b = bernoulli(14);
    Rat h = cohen_H(3, 7);
    cache::save();
    CHECK(std::filesystem::exists(path));

    // fresh load sees the stored values
    cache::configure(path);
    auto b2 = cache::lookup_bernoulli(14);
    REQUIRE(b2.has_value());
    CHECK(*b2 == b);
    auto h2 = cache::lookup_cohen(3, 7);
    REQUIRE(h2.has_value());
    CHECK(*h2 == h);

    // stored strings are canonical "p/q"
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str().find("\"version\"") != std::string::npos);

    cache::reset();
    std::remove(path.c_str());
}

TEST_CASE("corrupt cache files are ignored") {
    std::string path = (std::filesystem::temp_directory_path() / "petersson_cache_bad.json").string();
    {
        std::ofstream out(path);
        out << "{not json";
    }
    cache::configure(path);
    CHECK_FALSE(cache::lookup_bernoulli(2).has_value());
    cache::reset();
    std::remove(path.c_str());
}
