#include "sted/errors.hpp"
#include "sted/semantic.hpp"

#include <chrono>
#include <cstdlib>
#include <semaphore>
#include <thread>

#include "httplib.h"
#include "json.hpp"

namespace sted {

struct RemoteHttpProvider::Impl {
    std::string host; // scheme://host:port
    std::string request_path;
    std::string bearer_token;
    std::counting_semaphore<256> in_flight;

    explicit Impl(int max_in_flight) : in_flight(std::max(1, max_in_flight)) {}
};

namespace {

// Split "http://host:port/path" into client base and request path.
void split_endpoint(const std::string& endpoint, std::string& base, std::string& path) {
    std::size_t scheme = endpoint.find("://");
    std::size_t slash = endpoint.find('/', scheme == std::string::npos ? 0 : scheme + 3);
    if (slash == std::string::npos) {
        base = endpoint;
        path = "/";
    } else {
        base = endpoint.substr(0, slash);
        path = endpoint.substr(slash);
    }
}

} // namespace

RemoteHttpProvider::RemoteHttpProvider(EmbeddingProviderSpec spec)
    : spec_(std::move(spec)), impl_(std::make_unique<Impl>(spec_.max_in_flight)) {
    spec_.kind = ProviderKind::RemoteHttp;
    spec_.validate();
    split_endpoint(spec_.endpoint, impl_->host, impl_->request_path);
    if (const char* token = std::getenv("STED_PROVIDER_TOKEN")) {
        impl_->bearer_token = token;
    }
}

RemoteHttpProvider::~RemoteHttpProvider() = default;

std::vector<EmbeddingVector> RemoteHttpProvider::embed(const std::vector<std::string>& texts) {
    std::vector<EmbeddingVector> out;
    out.reserve(texts.size());

    for (std::size_t off = 0; off < texts.size(); off += spec_.max_batch) {
        const std::size_t count = std::min(spec_.max_batch, texts.size() - off);
        nlohmann::json body;
        body["model"] = spec_.model_id;
        body["texts"] = nlohmann::json::array();
        for (std::size_t i = 0; i < count; ++i) {
            body["texts"].push_back(texts[off + i]);
        }
        const std::string payload = body.dump();

        impl_->in_flight.acquire();
        std::string response_body;
        std::string last_error;
        bool ok = false;
        for (int attempt = 0; attempt <= spec_.max_retries && !ok; ++attempt) {
            if (attempt > 0) {
                std::this_thread::sleep_for(std::chrono::milliseconds(50 * attempt));
            }
            httplib::Client client(impl_->host);
            client.set_connection_timeout(0, spec_.timeout_ms * 1000);
            client.set_read_timeout(0, spec_.timeout_ms * 1000);
            httplib::Headers headers;
            if (!impl_->bearer_token.empty()) {
                headers.emplace("Authorization", "Bearer " + impl_->bearer_token);
            }
            auto res = client.Post(impl_->request_path, headers, payload, "application/json");
            if (!res) {
                last_error = "transport error: " + httplib::to_string(res.error());
                continue;
            }
            if (res->status != 200) {
                last_error = "http status " + std::to_string(res->status);
                continue;
            }
            response_body = res->body;
            ok = true;
        }
        impl_->in_flight.release();

        if (!ok) {
            throw ProviderUnavailable("embedding endpoint " + spec_.endpoint +
                                      " unavailable: " + last_error);
        }

        nlohmann::json parsed = nlohmann::json::parse(response_body, nullptr, false);
        if (parsed.is_discarded() || !parsed.contains("vectors") || !parsed["vectors"].is_array() ||
            parsed["vectors"].size() != count) {
            throw ProviderUnavailable("embedding endpoint returned a malformed response");
        }
        for (const auto& raw : parsed["vectors"]) {
            if (!raw.is_array() || raw.size() != spec_.dimension) {
                throw DimensionMismatch("provider returned dimension " +
                                        std::to_string(raw.size()) + ", declared " +
                                        std::to_string(spec_.dimension));
            }
            EmbeddingVector vec;
            vec.components.reserve(spec_.dimension);
            double norm_sq = 0.0;
            for (const auto& v : raw) {
                const double d = v.get<double>();
                norm_sq += d * d;
                vec.components.push_back(static_cast<float>(d));
            }
            // Remote models need not return unit vectors; normalize on receipt.
            const double norm = std::sqrt(norm_sq);
            if (norm > 0.0) {
                for (float& f : vec.components) {
                    f = static_cast<float>(static_cast<double>(f) / norm);
                }
            }
            out.push_back(std::move(vec));
        }
    }
    return out;
}

} // namespace sted
