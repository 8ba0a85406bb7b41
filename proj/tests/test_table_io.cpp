#include <filesystem>
#include <unistd.h>

#include <fstream>

#include "doctest.h"
#include "so5cg/table_io.hpp"

using namespace so5cg;
namespace fs = std::filesystem;

namespace {
HalfInt h(int twice) { return HalfInt::from_twice(twice); }
IrrepLabel L(int a2, int b2) { return IrrepLabel::make(h(a2), h(b2)); }

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("so5cg_test_" + std::to_string(::getpid()))) {
        fs::remove_all(path);
    }
    ~TempDir() { fs::remove_all(path); }
};
}  // namespace

TEST_CASE("table layout") {
    const ReducedTable t = reduced_table(L(0, 0), Channel::make(1, 1));
    REQUIRE(t.rows.size() == 14);
    int ones = 0;
    for (const auto& r : t.rows) {
        CHECK((r.value.is_zero() || r.value == SqrtSum(1)));
        ones += r.value.is_zero() ? 0 : 1;
    }
    CHECK(ones == 3);
    CHECK(reduced_table(L(3, 1), Channel::make(0, 0, 2)).rows.size() == 14 * branching(L(3, 1)).size());
    CHECK_THROWS_AS(reduced_table(L(2, 2), Channel::make(h(1), h(1))), ChannelAbsent);
}

TEST_CASE("table JSON round trip is exact") {
    for (const auto& [src, ch] : {std::pair{L(3, 1), Channel::make(0, 0, 2)}, std::pair{L(4, 2), Channel::make(1, -1)},
                                  std::pair{L(2, 1), Channel::make(h(-1), h(-1))}}) {
        const ReducedTable t = reduced_table(src, ch);
        const nlohmann::json j = table_to_json(t);
        CHECK(j["schema"] == "so5cg/1");
        const ReducedTable back = table_from_json(nlohmann::json::parse(j.dump()));
        REQUIRE(back.rows.size() == t.rows.size());
        for (std::size_t k = 0; k < t.rows.size(); ++k) {
            CHECK(back.rows[k].value == t.rows[k].value);
            CHECK(back.rows[k].entry == t.rows[k].entry);
            CHECK(back.rows[k].source_so4 == t.rows[k].source_so4);
        }
        CHECK(table_to_csv(back) == table_to_csv(t));
    }
}

TEST_CASE("cache keys") {
    CHECK(cache_key(L(2, 2), Channel::make(1, 1)) == cache_key(L(2, 2), Channel::make(1, 1)));
    CHECK(cache_key(L(2, 2), Channel::make(1, 1)) != cache_key(L(2, 2), Channel::make(1, 0)));
    CHECK(cache_key(L(3, 1), Channel::make(0, 0, 1)) != cache_key(L(3, 1), Channel::make(0, 0, 2)));
    CHECK(cache_key(L(0, 0), Channel::make(1, 1)).size() == 16);
}

TEST_CASE("cache store, load and corruption") {
    TempDir dir;
    const TableCache cache(dir.path);
    const IrrepLabel src = L(3, 1);
    const Channel ch = Channel::make(0, 0, 2);
    CHECK_FALSE(cache.load(src, ch).has_value());
    const ReducedTable fresh = cache.get(src, ch);
    REQUIRE(fs::exists(cache.path_for(src, ch)));
    const auto hit = cache.load(src, ch);
    REQUIRE(hit.has_value());
    CHECK(table_to_csv(*hit) == table_to_csv(fresh));
    {
        std::ofstream out(cache.path_for(src, ch));
        out << "{ truncated";
    }
    CHECK_FALSE(cache.load(src, ch).has_value());
    CHECK(table_to_csv(cache.get(src, ch)) == table_to_csv(fresh));
    CHECK(cache.load(src, ch).has_value());
}
