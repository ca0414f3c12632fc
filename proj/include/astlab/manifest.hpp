#pragma once

// Run manifest: what was run, how long it took, and a digest of everything
// written to the output stream. Needs libcrypto.

#include <cstdio>
#include <memory>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include "astlab/error.hpp"

namespace astlab {

inline constexpr const char* kManifestSchema = "astlab.manifest/1";
inline constexpr const char* kToolVersion = "1.0.0";

class Sha256 {
public:
    Sha256() : ctx_(EVP_MD_CTX_new(), EVP_MD_CTX_free) {
        if (!ctx_ || EVP_DigestInit_ex(ctx_.get(), EVP_sha256(), nullptr) != 1)
            throw internal_error("cannot initialise SHA-256");
    }

    void update(const std::string& data) {
        if (EVP_DigestUpdate(ctx_.get(), data.data(), data.size()) != 1) throw internal_error("SHA-256 update failed");
    }

    /// Hex digest; the object cannot be updated afterwards.
    std::string hex() {
        unsigned char md[EVP_MAX_MD_SIZE];
        unsigned int len = 0;
        if (EVP_DigestFinal_ex(ctx_.get(), md, &len) != 1) throw internal_error("SHA-256 final failed");
        std::string out;
        char buf[3];
        for (unsigned i = 0; i < len; ++i) {
            std::snprintf(buf, sizeof buf, "%02x", md[i]);
            out += buf;
        }
        return out;
    }

private:
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx_;
};

inline std::string sha256_hex(const std::string& data) {
    Sha256 h;
    h.update(data);
    return h.hex();
}

/// Writes lines to a stream while hashing them.
class DigestingSink {
public:
    explicit DigestingSink(std::ostream& out) : out_(out) {}

    void line(const std::string& s) {
        out_ << s << '\n';
        hash_.update(s);
        hash_.update("\n");
        ++lines_;
    }

    std::string digest() { return hash_.hex(); }
    long lines() const { return lines_; }

private:
    std::ostream& out_;
    Sha256 hash_;
    long lines_ = 0;
};

struct RunManifest {
    std::string version = kToolVersion;
    std::string command;
    nlohmann::json params = nlohmann::json::object();
    double wall_clock_ms = 0;
    std::string output_sha256;
    long cache_hits = 0;

    nlohmann::json to_json() const {
        return {{"schema", kManifestSchema}, {"version", version},         {"command", command},
                {"params", params},          {"wall_clock_ms", wall_clock_ms}, {"output_sha256", output_sha256},
                {"cache_hits", cache_hits}};
    }
};

}  // namespace astlab
