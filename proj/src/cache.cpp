#include "recgrow/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

#include <openssl/evp.h>

#include "json.hpp"
#include "recgrow/errors.hpp"

namespace recgrow {

namespace {

using json = nlohmann::ordered_json;

std::string checksum_payload(const std::string& key, const std::vector<std::string>& values) {
    std::string payload = key;
    for (const auto& v : values) {
        payload += '\n';
        payload += v;
    }
    return payload;
}

}  // namespace

std::string cache_key(const Params& params) {
    return "a=" + to_string(params.a) + ";b=" + to_string(params.b) + ";d0=" + to_string(params.d0);
}

std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw Error("SHA-256 digest failed");
    }
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i) {
        hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    }
    return hex.str();
}

std::filesystem::path cache_file_for(const std::filesystem::path& dir, const Params& params) {
    return dir / ("seq-" + sha256_hex(cache_key(params)).substr(0, 24) + ".json");
}

void write_cache(const SequenceTable& table, const std::filesystem::path& path) {
    const std::string key = cache_key(table.params());
    std::vector<std::string> values;
    values.reserve(table.size());
    for (const auto& v : table.values()) {
        values.push_back(to_string(v));
    }
    json doc;
    doc["schema_version"] = kCacheSchemaVersion;
    doc["key"] = key;
    doc["params"] = {{"a", to_string(table.params().a)},
                     {"b", to_string(table.params().b)},
                     {"d0", to_string(table.params().d0)}};
    doc["values"] = values;
    doc["checksum"] = sha256_hex(checksum_payload(key, values));

    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error("cannot open cache file " + tmp.string() + " for writing");
        }
        out << doc.dump() << '\n';
        if (!out.flush()) {
            throw Error("failed writing cache file " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

SequenceTable read_cache(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CacheCorrupted("cannot open cache file " + path.string());
    }
    json doc;
    try {
        doc = json::parse(in);
        if (doc.at("schema_version").get<int>() != kCacheSchemaVersion) {
            throw CacheCorrupted("unsupported cache schema in " + path.string());
        }
        const auto key = doc.at("key").get<std::string>();
        const auto values = doc.at("values").get<std::vector<std::string>>();
        if (sha256_hex(checksum_payload(key, values)) != doc.at("checksum").get<std::string>()) {
            throw CacheCorrupted("checksum mismatch in " + path.string());
        }
        const auto& p = doc.at("params");
        Params params{parse_rational(p.at("a").get<std::string>()),
                      parse_rational(p.at("b").get<std::string>()),
                      parse_rational(p.at("d0").get<std::string>())};
        if (cache_key(params) != key || values.empty()) {
            throw CacheCorrupted("inconsistent cache entry in " + path.string());
        }
        std::vector<Rational> parsed;
        parsed.reserve(values.size());
        for (const auto& v : values) {
            parsed.push_back(parse_rational(v));
        }
        return SequenceTable(std::move(params), std::move(parsed));
    } catch (const json::exception& e) {
        throw CacheCorrupted("malformed cache file " + path.string() + ": " + e.what());
    } catch (const ParseError& e) {
        throw CacheCorrupted("malformed value in " + path.string() + ": " + e.what());
    }
}

SequenceTable cache_roundtrip(const SequenceTable& table, const std::filesystem::path& path) {
    write_cache(table, path);
    return read_cache(path);
}

std::optional<std::filesystem::path> cache_dir_from_env() {
    const char* dir = std::getenv(kCacheDirEnv);
    if (dir == nullptr || *dir == '\0') {
        return std::nullopt;
    }
    return std::filesystem::path(dir);
}

}  // namespace recgrow
