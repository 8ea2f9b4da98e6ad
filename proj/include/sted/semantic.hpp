#ifndef STED_SEMANTIC_HPP
#define STED_SEMANTIC_HPP

#include "sted/tree.hpp"

#include <cstdint>
#include <filesystem>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace sted {

/// Canonical lowercase space-separated word form of a key string.
/// camelCase boundaries, underscores, hyphens and digit/letter boundaries
/// become single spaces; an uppercase run stays one word until the last
/// capital before a lowercase letter ("HTTPResponseCode" -> "http response
/// code"). Idempotent. Throws EmptyName on empty input.
std::string normalize_field_name(const std::string& name);

struct EmbeddingVector {
    std::vector<float> components;
    std::size_t dimension() const noexcept { return components.size(); }
};

/// Cosine of two unit vectors, clamped into [0,1].
double cosine01(const EmbeddingVector& a, const EmbeddingVector& b);

enum class ProviderKind { DeterministicLocal, RemoteHttp };

struct EmbeddingProviderSpec {
    std::string provider_id = "deterministic-local";
    ProviderKind kind = ProviderKind::DeterministicLocal;
    std::string endpoint;           // required for remote-http
    std::string model_id;
    std::size_t dimension = 256;
    int timeout_ms = 5000;
    std::size_t max_batch = 32;
    int max_retries = 2;
    int max_in_flight = 8;

    void validate() const;
};

class EmbeddingProvider {
public:
    virtual ~EmbeddingProvider() = default;
    virtual const EmbeddingProviderSpec& spec() const = 0;
    /// Unit-norm vectors, one per input, in input order.
    virtual std::vector<EmbeddingVector> embed(const std::vector<std::string>& texts) = 0;
};

/// Pure, reentrant provider hashing word tokens and character trigrams of the
/// lowercased text into a fixed-dimension bag, L2-normalized. The scheme is
/// pinned so independent implementations agree:
///   - lowercase ASCII; every maximal run of bytes outside [a-z0-9] and
///     non-ASCII collapses to one space, ends trimmed;
///   - word features: "w"+US+token for each space-separated token;
///   - trigram features: "t"+US+s[i..i+3) over the collapsed string (the
///     whole string as one feature when shorter than 3);
///   - each feature adds 1.0 at index FNV-1a-64(feature) mod dimension.
class DeterministicProvider final : public EmbeddingProvider {
public:
    explicit DeterministicProvider(EmbeddingProviderSpec spec = {});
    const EmbeddingProviderSpec& spec() const override { return spec_; }
    std::vector<EmbeddingVector> embed(const std::vector<std::string>& texts) override;

    static EmbeddingVector embed_one(const std::string& text, std::size_t dimension);

private:
    EmbeddingProviderSpec spec_;
};

/// HTTP provider speaking the wire protocol
///   POST {endpoint}  {"model": <model_id>, "texts": [<string>, ...]}
///   ->               {"vectors": [[<number>, ...], ...]}   (request order)
/// Retries transient failures up to max_retries, then throws
/// ProviderUnavailable; DimensionMismatch on a wrong-sized vector. Requests
/// are batched at most max_batch texts and bounded to max_in_flight
/// concurrent calls. A bearer token is read from STED_PROVIDER_TOKEN.
class RemoteHttpProvider final : public EmbeddingProvider {
public:
    explicit RemoteHttpProvider(EmbeddingProviderSpec spec);
    ~RemoteHttpProvider() override;
    const EmbeddingProviderSpec& spec() const override { return spec_; }
    std::vector<EmbeddingVector> embed(const std::vector<std::string>& texts) override;

private:
    struct Impl;
    EmbeddingProviderSpec spec_;
    std::unique_ptr<Impl> impl_;
};

std::shared_ptr<EmbeddingProvider> make_provider(const EmbeddingProviderSpec& spec);

/// Append-only persistent embedding cache: one record per (provider_id,
/// model_id, input text), named by the content hash. Record layout: a JSON
/// meta line, then the vector as a 4-byte little-endian dimension followed by
/// little-endian 32-bit floats. Hits are bit-identical to the stored vector.
/// Reads are concurrent; writes serialized. Eviction only via clear().
class EmbeddingCache {
public:
    /// In-memory only when path is empty.
    explicit EmbeddingCache(std::filesystem::path storage_path = {});

    bool lookup(const std::string& provider_id, const std::string& model_id,
                const std::string& text, EmbeddingVector& out) const;
    void store(const std::string& provider_id, const std::string& model_id,
               const std::string& text, const EmbeddingVector& vec);

    struct Stats {
        std::size_t entries = 0;
        std::uint64_t bytes = 0;
    };
    Stats disk_stats() const;
    void clear();

    const std::filesystem::path& storage_path() const noexcept { return path_; }

    static std::string content_hash(const std::string& provider_id, const std::string& model_id,
                                    const std::string& text);

private:
    std::filesystem::path path_;
    mutable std::shared_mutex mutex_;
    mutable std::unordered_map<std::string, EmbeddingVector> memory_;
};

struct ScalarComparisonPolicy {
    bool coercion_enabled = true;
    double coercion_penalty = 0.2;
    std::size_t string_threshold_chars = 300;
    std::size_t chunk_overlap_chars = 50;

    void validate() const;
};

/// Provider + cache + policy bundle threaded through the comparators.
/// Thread-safe; pairwise comparisons may share one context.
class SimilarityContext {
public:
    explicit SimilarityContext(std::shared_ptr<EmbeddingProvider> provider = nullptr,
                               std::shared_ptr<EmbeddingCache> cache = nullptr,
                               ScalarComparisonPolicy policy = {});

    const ScalarComparisonPolicy& policy() const noexcept { return policy_; }
    EmbeddingProvider& provider() const { return *provider_; }
    EmbeddingCache& cache() const { return *cache_; }

    EmbeddingVector embedding(const std::string& text);
    /// Memoized text pair similarity (the text_similarity below).
    double text_pair_similarity(const std::string& a, const std::string& b);

private:
    std::shared_ptr<EmbeddingProvider> provider_;
    std::shared_ptr<EmbeddingCache> cache_;
    ScalarComparisonPolicy policy_;
    std::shared_mutex memo_mutex_;
    std::unordered_map<std::string, double> pair_memo_;
};

/// Embed via cache; identical text and provider yield identical bits.
EmbeddingVector embed_text(const std::string& text, EmbeddingProvider& provider,
                           EmbeddingCache& cache);

/// Semantic similarity in [0,1]. Texts shorter than the policy threshold are
/// compared by clamped cosine; otherwise both sides are split into
/// threshold-sized chunks with the configured overlap and the score is the
/// mean over the longer side's chunks of the best cosine against any chunk of
/// the shorter side. Both empty -> 1.0, exactly one empty -> 0.0.
double text_similarity(const std::string& a, const std::string& b, EmbeddingProvider& provider,
                       EmbeddingCache& cache, const ScalarComparisonPolicy& policy);
double text_similarity(const std::string& a, const std::string& b, SimilarityContext& ctx);

/// Type-aware leaf similarity in [0,1]: semantic for strings, exact for
/// numbers (on normalized values), equality for booleans/null; cross-type
/// pairs score 1 - coercion_penalty when coercible to equal values (e.g.
/// "123" vs 123), otherwise 0. Throws NotALeaf for containers.
double scalar_similarity(const TreeNode& a, const TreeNode& b, SimilarityContext& ctx);

} // namespace sted

#endif // STED_SEMANTIC_HPP
