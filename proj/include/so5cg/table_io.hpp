#pragma once

// Reduced coefficient tables for one (source, channel) pair, their CSV/JSON
// renderings, and an on-disk cache of the JSON payload.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "so5cg/error.hpp"
#include "so5cg/reduced_cg.hpp"

namespace so5cg {

inline constexpr const char* kEngineVersion = "so5cg-1.0.0";
inline constexpr const char* kSchema = "so5cg/1";

/// Filesystem failure: unreadable input, unwritable output or cache.
class IoError : public Error {
public:
    using Error::Error;
};

struct TableRow {
    So4Label source_so4;
    EntryShift entry;
    SqrtSum value;  // 0 where s + dj leaves the SO(4) range
};

struct ReducedTable {
    IrrepLabel source;
    Channel channel;
    std::vector<TableRow> rows;  // source multiplets in branching order, then the 14 entries
};

/// Throws ChannelAbsent when the channel does not occur.
ReducedTable reduced_table(const IrrepLabel& source, const Channel& channel);

nlohmann::json table_to_json(const ReducedTable& t);
ReducedTable table_from_json(const nlohmann::json& j);
std::string table_to_csv(const ReducedTable& t);

/// FNV-1a over (engine version, source, channel), 16 hex digits.
std::string cache_key(const IrrepLabel& source, const Channel& channel);

class TableCache {
public:
    explicit TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}
    /// $SO5CG_CACHE, or nullopt when unset or empty.
    static std::optional<TableCache> from_env();

    /// nullopt on a miss or an unreadable/mismatched entry.
    std::optional<ReducedTable> load(const IrrepLabel& source, const Channel& channel) const;
    /// Atomic write via rename. Throws IoError.
    void store(const ReducedTable& t) const;
    /// Cached table, computing and storing it on a miss.
    ReducedTable get(const IrrepLabel& source, const Channel& channel) const;

    std::filesystem::path path_for(const IrrepLabel& source, const Channel& channel) const;

private:
    std::filesystem::path dir_;
};

}  // namespace so5cg
