#include "so5cg/table_io.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace so5cg {

namespace {

namespace fs = std::filesystem;

nlohmann::json channel_json(const Channel& c) {
    return {{"twice_shift1", c.shift1.twice()}, {"twice_shift2", c.shift2.twice()}, {"copy", c.copy}};
}

HalfInt twice_at(const nlohmann::json& j, const char* key) { return HalfInt::from_twice(j.at(key).get<int>()); }

std::string float_str(const SqrtSum& v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", to_double(v));
    return buf;
}

}  // namespace

ReducedTable reduced_table(const IrrepLabel& source, const Channel& channel) {
    ReducedTable t{source, channel, {}};
    for (const auto& s : branching(source))
        for (const auto& e : all_entry_shifts())
            t.rows.push_back(TableRow{s, e, coefficient_or_zero(ReducedKey{source, channel, s, e})});
    return t;
}

nlohmann::json table_to_json(const ReducedTable& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : t.rows) {
        rows.push_back({{"source_so4", to_json_label(r.source_so4)},
                        {"twice_dj1", r.entry.dj1.twice()},
                        {"twice_dj2", r.entry.dj2.twice()},
                        {"part", to_json_label(r.entry.part)},
                        {"value", r.value.to_export_string()}});
    }
    return {{"schema", kSchema},
            {"source", to_json_label(t.source)},
            {"target", to_json_label(t.channel.target_of(t.source))},
            {"channel", channel_json(t.channel)},
            {"rows", rows}};
}

ReducedTable table_from_json(const nlohmann::json& j) {
    if (j.at("schema") != kSchema) throw MalformedKey("unknown table schema");
    ReducedTable t;
    t.source = IrrepLabel::make(twice_at(j.at("source"), "twice_j1"), twice_at(j.at("source"), "twice_j2"));
    const auto& c = j.at("channel");
    t.channel = Channel::make(twice_at(c, "twice_shift1"), twice_at(c, "twice_shift2"), c.at("copy").get<int>());
    for (const auto& r : j.at("rows")) {
        const auto& s = r.at("source_so4");
        const auto& p = r.at("part");
        t.rows.push_back(TableRow{
            So4Label::make(twice_at(s, "twice_j1"), twice_at(s, "twice_j2")),
            EntryShift::make(twice_at(r, "twice_dj1"), twice_at(r, "twice_dj2"),
                             So4Label::make(twice_at(p, "twice_j1"), twice_at(p, "twice_j2"))),
            SqrtSum::parse_export_string(r.at("value").get<std::string>())});
    }
    return t;
}

std::string table_to_csv(const ReducedTable& t) {
    std::ostringstream out;
    out << "src_twice_j1,src_twice_j2,twice_dj1,twice_dj2,part_twice_j1,part_twice_j2,tgt_twice_j1,tgt_twice_j2,"
           "value,float\n";
    for (const auto& r : t.rows) {
        out << r.source_so4.j1.twice() << ',' << r.source_so4.j2.twice() << ',' << r.entry.dj1.twice() << ','
            << r.entry.dj2.twice() << ',' << r.entry.part.j1.twice() << ',' << r.entry.part.j2.twice() << ',';
        const HalfInt t1 = r.source_so4.j1 + r.entry.dj1, t2 = r.source_so4.j2 + r.entry.dj2;
        if (So4Label::is_valid(t1, t2))
            out << t1.twice() << ',' << t2.twice() << ',';
        else
            out << ",,";
        out << r.value.to_export_string() << ',' << float_str(r.value) << '\n';
    }
    return out.str();
}

std::string cache_key(const IrrepLabel& source, const Channel& channel) {
    const std::string text = std::string(kEngineVersion) + '|' + source.to_string() + '|' + channel.to_string();
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::optional<TableCache> TableCache::from_env() {
    const char* dir = std::getenv("SO5CG_CACHE");
    if (dir == nullptr || *dir == '\0') return std::nullopt;
    return TableCache(dir);
}

fs::path TableCache::path_for(const IrrepLabel& source, const Channel& channel) const {
    return dir_ / (cache_key(source, channel) + ".json");
}

std::optional<ReducedTable> TableCache::load(const IrrepLabel& source, const Channel& channel) const {
    std::ifstream in(path_for(source, channel));
    if (!in) return std::nullopt;
    try {
        const auto j = nlohmann::json::parse(in);
        if (j.at("key") != cache_key(source, channel) || j.at("engine") != kEngineVersion) return std::nullopt;
        ReducedTable t = table_from_json(j.at("payload"));
        if (t.source != source || t.channel != channel) return std::nullopt;
        return t;
    } catch (const std::exception&) {
        return std::nullopt;  // stale or truncated entry: recompute
    }
}

void TableCache::store(const ReducedTable& t) const {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw IoError("cannot create cache directory " + dir_.string() + ": " + ec.message());
    const auto now = std::chrono::duration_cast<std::chrono::seconds>(
                         std::chrono::system_clock::now().time_since_epoch())
                         .count();
    const nlohmann::json entry{{"schema", kSchema},
                               {"key", cache_key(t.source, t.channel)},
                               {"engine", kEngineVersion},
                               {"created_at", now},
                               {"payload", table_to_json(t)}};
    const fs::path final_path = path_for(t.source, t.channel);
    fs::path tmp = final_path;
    tmp += ".tmp" + std::to_string(std::chrono::steady_clock::now().time_since_epoch().count());
    {
        std::ofstream out(tmp);
        out << entry.dump(1) << '\n';
        if (!out) throw IoError("cannot write cache entry " + tmp.string());
    }
    fs::rename(tmp, final_path, ec);
    if (ec) throw IoError("cannot move cache entry into place: " + ec.message());
}

ReducedTable TableCache::get(const IrrepLabel& source, const Channel& channel) const {
    if (auto hit = load(source, channel)) return *hit;
    ReducedTable t = reduced_table(source, channel);
    store(t);
    return t;
}

}  // namespace so5cg
