#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "recgrow/cache.hpp"
#include "recgrow/errors.hpp"

using namespace recgrow;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        std::random_device rd;
        path = fs::temp_directory_path() / ("recgrow-cache-test-" + std::to_string(rd()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
    std::ofstream(p, std::ios::trunc) << text;
}

}  // namespace

TEST_CASE("sha256_hex known digests") {
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("cache keys are canonical") {
    CHECK(cache_key({1, 1, 1}) == "a=1;b=1;d0=1");
    CHECK(cache_key({parse_rational("2/8"), 1, 1}) == "a=1/4;b=1;d0=1");
    CHECK(cache_file_for("d", {1, 1, 1}) == cache_file_for("d", {parse_rational("3/3"), 1, 1}));
    CHECK(cache_file_for("d", {1, 1, 1}) != cache_file_for("d", {1, 9, 1}));
}

TEST_CASE("round trip") {
    TempDir dir;
    for (const Params& p : {Params{1, 1}, Params{Rational(1, 4), 1}, Params{2, Rational(1, 2), 3}}) {
        const auto table = evaluate(p, 7);
        const fs::path file = cache_file_for(dir.path, p);
        CHECK(cache_roundtrip(table, file) == table);
        CHECK(read_cache(file) == table);
    }
    CHECK(to_string(read_cache(cache_file_for(dir.path, {1, 1}))[5]) == "458330");
}

TEST_CASE("missing or truncated files are corrupted") {
    TempDir dir;
    const fs::path file = dir.path / "x.json";
    CHECK_THROWS_AS(read_cache(file), CacheCorrupted);

    write_cache(evaluate({1, 1}, 6), file);
    const std::string text = slurp(file);
    spit(file, text.substr(0, text.size() / 2));
    CHECK_THROWS_AS(read_cache(file), CacheCorrupted);

    spit(file, "[]");
    CHECK_THROWS_AS(read_cache(file), CacheCorrupted);
}

TEST_CASE("tampered values fail the checksum") {
    TempDir dir;
    const fs::path file = dir.path / "x.json";
    write_cache(evaluate({1, 1}, 6), file);
    std::string text = slurp(file);
    const auto pos = text.find("\"677\"");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 5, "\"678\"");
    spit(file, text);
    CHECK_THROWS_AS(read_cache(file), CacheCorrupted);
}

TEST_CASE("schema and key mismatches are corrupted") {
    TempDir dir;
    const fs::path file = dir.path / "x.json";
    write_cache(evaluate({1, 1}, 3), file);
    const std::string text = slurp(file);

    std::string bumped = text;
    bumped.replace(bumped.find("\"schema_version\":1"), 18, "\"schema_version\":2");
    spit(file, bumped);
    CHECK_THROWS_AS(read_cache(file), CacheCorrupted);

    std::string rekeyed = text;
    rekeyed.replace(rekeyed.find("a=1;b=1"), 7, "a=2;b=1");
    spit(file, rekeyed);
    CHECK_THROWS_AS(read_cache(file), CacheCorrupted);
}

TEST_CASE("cache directory from the environment") {
    ::unsetenv(kCacheDirEnv);
    CHECK_FALSE(cache_dir_from_env().has_value());
    ::setenv(kCacheDirEnv, "", 1);
    CHECK_FALSE(cache_dir_from_env().has_value());
    ::setenv(kCacheDirEnv, "/tmp/somewhere", 1);
    CHECK(cache_dir_from_env() == fs::path("/tmp/somewhere"));
    ::unsetenv(kCacheDirEnv);
}
