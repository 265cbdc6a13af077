#include "kgprobe/manifest.hpp"

#include <openssl/evp.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <memory>

#include <json.hpp>

#include "kgprobe/error.hpp"

namespace kgprobe {

std::string_view tool_version() { return "0.1.0"; }

namespace {

struct EvpDeleter {
    void operator()(EVP_MD_CTX* ctx) const { EVP_MD_CTX_free(ctx); }
};

std::string hex_digest(const unsigned char* digest, unsigned len) {
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(len * 2);
    for (unsigned i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

}  // namespace

std::string sha256_bytes(std::string_view bytes) {
    std::unique_ptr<EVP_MD_CTX, EvpDeleter> ctx(EVP_MD_CTX_new());
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned len = 0;
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
        EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1)
        throw Error(Errc::io_error, "SHA-256 digest failed");
    return hex_digest(digest, len);
}

std::string sha256_file(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw Error(Errc::io_error, "cannot open " + file.string());
    std::unique_ptr<EVP_MD_CTX, EvpDeleter> ctx(EVP_MD_CTX_new());
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1)
        throw Error(Errc::io_error, "SHA-256 digest failed");
    std::array<char, 1 << 16> buf;
    while (in) {
        in.read(buf.data(), buf.size());
        std::streamsize got = in.gcount();
        if (got > 0 &&
            EVP_DigestUpdate(ctx.get(), buf.data(),
                             static_cast<std::size_t>(got)) != 1)
            throw Error(Errc::io_error, "SHA-256 digest failed");
    }
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned len = 0;
    if (EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1)
        throw Error(Errc::io_error, "SHA-256 digest failed");
    return hex_digest(digest, len);
}

void RunManifest::add_parameter(std::string_view key, std::string_view value) {
    parameters.emplace_back(key, value);
}

void RunManifest::add_input(std::string_view label,
                            const std::filesystem::path& file) {
    input_digests.emplace_back(std::string(label) + ":" + file.string(),
                               sha256_file(file));
}

void RunManifest::add_output(const std::filesystem::path& file) {
    outputs.push_back(file.string());
}

RunManifest make_manifest(std::string_view command) {
    RunManifest m;
    m.command = command;
    m.tool = std::string("kg-probe ") + std::string(tool_version());
    auto now = std::chrono::system_clock::now();
    std::time_t tt = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02dZ",
                  tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday, tm.tm_hour,
                  tm.tm_min, tm.tm_sec);
    m.timestamp = buf;
    return m;
}

std::string manifest_to_json(const RunManifest& m) {
    nlohmann::json j;
    j["command"] = m.command;
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : m.parameters) params[k] = v;
    j["parameters"] = std::move(params);
    nlohmann::json digests = nlohmann::json::object();
    for (const auto& [k, v] : m.input_digests) digests[k] = v;
    j["inputs_sha256"] = std::move(digests);
    j["outputs"] = m.outputs;
    j["tool"] = m.tool;
    j["timestamp"] = m.timestamp;
    return j.dump(2) + "\n";
}

void write_manifest(const RunManifest& m, const std::filesystem::path& file) {
    std::ofstream out(file);
    if (!out) throw Error(Errc::io_error, "cannot write " + file.string());
    out << manifest_to_json(m);
    if (!out.good())
        throw Error(Errc::io_error, "failed writing " + file.string());
}

}  // namespace kgprobe
