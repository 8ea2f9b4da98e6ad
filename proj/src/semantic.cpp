#include "sted/semantic.hpp"

#include "sted/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace sted {

namespace {

enum class CharClass { None, Lower, Upper, Digit };

CharClass classify(unsigned char c) {
    if (c >= 'a' && c <= 'z') return CharClass::Lower;
    if (c >= 'A' && c <= 'Z') return CharClass::Upper;
    if (c >= '0' && c <= '9') return CharClass::Digit;
    if (c >= 0x80) return CharClass::Lower; // non-ASCII bytes join the current word
    return CharClass::None;
}

constexpr std::uint64_t kFnvOffset = 14695981039346656037ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = kFnvOffset;
    for (unsigned char c : data) {
        h ^= c;
        h *= kFnvPrime;
    }
    return h;
}

std::string to_hex(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

// Lowercase and collapse every non-alphanumeric run to one space.
std::string collapse_text(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    bool pending_space = false;
    for (unsigned char c : text) {
        const bool word = classify(c) != CharClass::None;
        if (!word) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) {
            out += ' ';
            pending_space = false;
        }
        out += static_cast<char>(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c);
    }
    return out;
}

constexpr char kUS = '\x1f';

} // namespace

std::string normalize_field_name(const std::string& name) {
    if (name.empty()) {
        throw EmptyName();
    }
    std::string out;
    out.reserve(name.size() + 4);
    CharClass prev = CharClass::None;
    for (std::size_t i = 0; i < name.size(); ++i) {
        const unsigned char c = static_cast<unsigned char>(name[i]);
        const CharClass cur = classify(c);
        if (cur == CharClass::None) {
            prev = CharClass::None;
            continue;
        }
        bool boundary = false;
        if (prev != CharClass::None) {
            if (prev == CharClass::Lower && cur == CharClass::Upper) boundary = true;
            if (prev == CharClass::Digit && cur != CharClass::Digit) boundary = true;
            if (prev != CharClass::Digit && cur == CharClass::Digit) boundary = true;
            if (prev == CharClass::Upper && cur == CharClass::Upper && i + 1 < name.size() &&
                classify(static_cast<unsigned char>(name[i + 1])) == CharClass::Lower) {
                boundary = true; // end of an acronym run: last capital starts the next word
            }
        }
        if ((boundary || prev == CharClass::None) && !out.empty()) {
            out += ' ';
        }
        out += static_cast<char>(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c);
        prev = cur;
    }
    if (out.empty()) {
        // Name had no word characters at all; keep a stable canonical form.
        return "";
    }
    return out;
}

double cosine01(const EmbeddingVector& a, const EmbeddingVector& b) {
    if (a.dimension() != b.dimension()) {
        throw DimensionMismatch("cosine over vectors of different dimension");
    }
    double dot = 0.0;
    for (std::size_t i = 0; i < a.components.size(); ++i) {
        dot += static_cast<double>(a.components[i]) * static_cast<double>(b.components[i]);
    }
    return std::clamp(dot, 0.0, 1.0);
}

void EmbeddingProviderSpec::validate() const {
    if (dimension == 0) throw std::invalid_argument("embedding dimension must be positive");
    if (timeout_ms <= 0) throw std::invalid_argument("timeout_ms must be positive");
    if (max_batch == 0) throw std::invalid_argument("max_batch must be positive");
    if (kind == ProviderKind::RemoteHttp && endpoint.empty()) {
        throw std::invalid_argument("remote-http provider requires an endpoint");
    }
    if (kind == ProviderKind::DeterministicLocal && !endpoint.empty()) {
        throw std::invalid_argument("deterministic-local provider takes no endpoint");
    }
}

DeterministicProvider::DeterministicProvider(EmbeddingProviderSpec spec) : spec_(std::move(spec)) {
    spec_.kind = ProviderKind::DeterministicLocal;
    spec_.endpoint.clear();
    if (spec_.provider_id.empty()) spec_.provider_id = "deterministic-local";
    spec_.validate();
}

EmbeddingVector DeterministicProvider::embed_one(const std::string& text, std::size_t dimension) {
    std::vector<double> accum(dimension, 0.0);
    const std::string collapsed = collapse_text(text);

    auto add_feature = [&](const std::string& feature) {
        accum[fnv1a64(feature) % dimension] += 1.0;
    };

    // word tokens
    std::size_t start = 0;
    while (start <= collapsed.size()) {
        std::size_t end = collapsed.find(' ', start);
        if (end == std::string::npos) end = collapsed.size();
        if (end > start) {
            add_feature(std::string("w") + kUS + collapsed.substr(start, end - start));
        }
        start = end + 1;
    }
    // character trigrams
    if (collapsed.size() < 3) {
        add_feature(std::string("t") + kUS + collapsed);
    } else {
        for (std::size_t i = 0; i + 3 <= collapsed.size(); ++i) {
            add_feature(std::string("t") + kUS + collapsed.substr(i, 3));
        }
    }

    double norm_sq = 0.0;
    for (double v : accum) norm_sq += v * v;
    const double norm = std::sqrt(norm_sq);
    EmbeddingVector out;
    out.components.resize(dimension, 0.0f);
    if (norm > 0.0) {
        for (std::size_t i = 0; i < dimension; ++i) {
            out.components[i] = static_cast<float>(accum[i] / norm);
        }
    }
    return out;
}

std::vector<EmbeddingVector> DeterministicProvider::embed(const std::vector<std::string>& texts) {
    std::vector<EmbeddingVector> out;
    out.reserve(texts.size());
    for (const std::string& t : texts) {
        out.push_back(embed_one(t, spec_.dimension));
    }
    return out;
}

std::shared_ptr<EmbeddingProvider> make_provider(const EmbeddingProviderSpec& spec) {
    spec.validate();
    if (spec.kind == ProviderKind::DeterministicLocal) {
        return std::make_shared<DeterministicProvider>(spec);
    }
    return std::make_shared<RemoteHttpProvider>(spec);
}

EmbeddingCache::EmbeddingCache(std::filesystem::path storage_path) : path_(std::move(storage_path)) {
    if (!path_.empty()) {
        std::filesystem::create_directories(path_);
    }
}

std::string EmbeddingCache::content_hash(const std::string& provider_id,
                                         const std::string& model_id, const std::string& text) {
    std::string key;
    key.reserve(provider_id.size() + model_id.size() + text.size() + 2);
    key += provider_id;
    key += kUS;
    key += model_id;
    key += kUS;
    key += text;
    return to_hex(fnv1a64(key));
}

bool EmbeddingCache::lookup(const std::string& provider_id, const std::string& model_id,
                            const std::string& text, EmbeddingVector& out) const {
    const std::string hash = content_hash(provider_id, model_id, text);
    {
        std::shared_lock lock(mutex_);
        auto it = memory_.find(hash);
        if (it != memory_.end()) {
            out = it->second;
            return true;
        }
    }
    if (path_.empty()) return false;
    std::ifstream in(path_ / (hash + ".emb"), std::ios::binary);
    if (!in) return false;

    std::uint32_t meta_len = 0;
    in.read(reinterpret_cast<char*>(&meta_len), sizeof(meta_len));
    if (!in || meta_len > (1u << 20)) return false;
    std::string meta(meta_len, '\0');
    in.read(meta.data(), meta_len);
    std::uint32_t dim = 0;
    in.read(reinterpret_cast<char*>(&dim), sizeof(dim));
    if (!in || dim == 0 || dim > (1u << 20)) return false;
    EmbeddingVector vec;
    vec.components.resize(dim);
    in.read(reinterpret_cast<char*>(vec.components.data()),
            static_cast<std::streamsize>(sizeof(float) * dim));
    if (!in) return false;

    {
        std::unique_lock lock(mutex_);
        memory_.emplace(hash, vec);
    }
    out = std::move(vec);
    return true;
}

void EmbeddingCache::store(const std::string& provider_id, const std::string& model_id,
                           const std::string& text, const EmbeddingVector& vec) {
    const std::string hash = content_hash(provider_id, model_id, text);
    {
        std::unique_lock lock(mutex_);
        if (!memory_.emplace(hash, vec).second) {
            return; // append-only: first write wins
        }
    }
    if (path_.empty()) return;

    const std::filesystem::path final_path = path_ / (hash + ".emb");
    if (std::filesystem::exists(final_path)) return;

    nlohmann::json meta = {{"provider_id", provider_id},
                           {"model_id", model_id},
                           {"input_hash", hash},
                           {"text_bytes", text.size()}};
    const std::string meta_str = meta.dump();
    const std::uint32_t meta_len = static_cast<std::uint32_t>(meta_str.size());
    const std::uint32_t dim = static_cast<std::uint32_t>(vec.components.size());

    const std::filesystem::path tmp_path = path_ / (hash + ".tmp");
    {
        std::ofstream outf(tmp_path, std::ios::binary | std::ios::trunc);
        outf.write(reinterpret_cast<const char*>(&meta_len), sizeof(meta_len));
        outf.write(meta_str.data(), meta_len);
        outf.write(reinterpret_cast<const char*>(&dim), sizeof(dim));
        outf.write(reinterpret_cast<const char*>(vec.components.data()),
                   static_cast<std::streamsize>(sizeof(float) * dim));
    }
    std::error_code ec;
    std::filesystem::rename(tmp_path, final_path, ec);
    if (ec) {
        std::filesystem::remove(tmp_path, ec);
    }
}

EmbeddingCache::Stats EmbeddingCache::disk_stats() const {
    Stats stats;
    if (path_.empty() || !std::filesystem::exists(path_)) return stats;
    for (const auto& entry : std::filesystem::directory_iterator(path_)) {
        if (entry.is_regular_file() && entry.path().extension() == ".emb") {
            ++stats.entries;
            stats.bytes += entry.file_size();
        }
    }
    return stats;
}

void EmbeddingCache::clear() {
    {
        std::unique_lock lock(mutex_);
        memory_.clear();
    }
    if (path_.empty() || !std::filesystem::exists(path_)) return;
    for (const auto& entry : std::filesystem::directory_iterator(path_)) {
        if (entry.is_regular_file() && entry.path().extension() == ".emb") {
            std::error_code ec;
            std::filesystem::remove(entry.path(), ec);
        }
    }
}

void ScalarComparisonPolicy::validate() const {
    if (coercion_penalty < 0.0 || coercion_penalty > 1.0) {
        throw std::invalid_argument("coercion_penalty must be in [0,1]");
    }
    if (string_threshold_chars == 0 || chunk_overlap_chars >= string_threshold_chars) {
        throw std::invalid_argument("chunk thresholds must satisfy 0 < overlap < threshold");
    }
}

EmbeddingVector embed_text(const std::string& text, EmbeddingProvider& provider,
                           EmbeddingCache& cache) {
    const EmbeddingProviderSpec& spec = provider.spec();
    EmbeddingVector out;
    if (cache.lookup(spec.provider_id, spec.model_id, text, out)) {
        return out;
    }
    std::vector<EmbeddingVector> got = provider.embed({text});
    if (got.size() != 1 || got[0].dimension() != spec.dimension) {
        throw DimensionMismatch("provider returned unexpected vector shape");
    }
    cache.store(spec.provider_id, spec.model_id, text, got[0]);
    return std::move(got[0]);
}

namespace {

std::vector<std::string> chunk_text(const std::string& text, std::size_t size, std::size_t overlap) {
    std::vector<std::string> chunks;
    if (text.size() <= size) {
        chunks.push_back(text);
        return chunks;
    }
    const std::size_t stride = size - overlap;
    std::size_t off = 0;
    while (true) {
        chunks.push_back(text.substr(off, size));
        if (off + size >= text.size()) break;
        off += stride;
    }
    return chunks;
}

} // namespace

double text_similarity(const std::string& a, const std::string& b, EmbeddingProvider& provider,
                       EmbeddingCache& cache, const ScalarComparisonPolicy& policy) {
    if (a == b) return 1.0;
    if (a.empty() || b.empty()) return 0.0;

    if (a.size() < policy.string_threshold_chars && b.size() < policy.string_threshold_chars) {
        return cosine01(embed_text(a, provider, cache), embed_text(b, provider, cache));
    }

    // Longer side chosen by (length, content) so the score is exactly symmetric.
    const bool b_longer = b.size() != a.size() ? b.size() > a.size() : b > a;
    const std::string& longer = b_longer ? b : a;
    const std::string& shorter = b_longer ? a : b;

    const auto long_chunks = chunk_text(longer, policy.string_threshold_chars, policy.chunk_overlap_chars);
    const auto short_chunks = chunk_text(shorter, policy.string_threshold_chars, policy.chunk_overlap_chars);

    std::vector<EmbeddingVector> short_vecs;
    short_vecs.reserve(short_chunks.size());
    for (const auto& c : short_chunks) short_vecs.push_back(embed_text(c, provider, cache));

    double sum = 0.0;
    for (const auto& lc : long_chunks) {
        const EmbeddingVector lv = embed_text(lc, provider, cache);
        double best = 0.0;
        for (const auto& sv : short_vecs) best = std::max(best, cosine01(lv, sv));
        sum += best;
    }
    return std::clamp(sum / static_cast<double>(long_chunks.size()), 0.0, 1.0);
}

double text_similarity(const std::string& a, const std::string& b, SimilarityContext& ctx) {
    return ctx.text_pair_similarity(a, b);
}

SimilarityContext::SimilarityContext(std::shared_ptr<EmbeddingProvider> provider,
                                     std::shared_ptr<EmbeddingCache> cache,
                                     ScalarComparisonPolicy policy)
    : provider_(std::move(provider)), cache_(std::move(cache)), policy_(policy) {
    if (!provider_) provider_ = std::make_shared<DeterministicProvider>();
    if (!cache_) cache_ = std::make_shared<EmbeddingCache>();
    policy_.validate();
}

EmbeddingVector SimilarityContext::embedding(const std::string& text) {
    return embed_text(text, *provider_, *cache_);
}

double SimilarityContext::text_pair_similarity(const std::string& a, const std::string& b) {
    if (a == b) return 1.0;
    // Symmetric memo key; texts themselves are memoized by the cache.
    const std::string* lo = &a;
    const std::string* hi = &b;
    if (*hi < *lo) std::swap(lo, hi);
    std::string key;
    key.reserve(lo->size() + hi->size() + 1);
    key += *lo;
    key += kUS;
    key += *hi;
    {
        std::shared_lock lock(memo_mutex_);
        auto it = pair_memo_.find(key);
        if (it != pair_memo_.end()) return it->second;
    }
    const double sim = text_similarity(*lo, *hi, *provider_, *cache_, policy_);
    {
        std::unique_lock lock(memo_mutex_);
        pair_memo_.emplace(std::move(key), sim);
    }
    return sim;
}

namespace {

bool string_as_number(const TreeNode& s, long double& out) {
    if (s.string_value.empty()) return false;
    const char* begin = s.string_value.c_str();
    char* end = nullptr;
    out = std::strtold(begin, &end);
    return end == begin + s.string_value.size();
}

bool string_as_bool(const TreeNode& s, bool& out) {
    if (s.string_value == "true") {
        out = true;
        return true;
    }
    if (s.string_value == "false") {
        out = false;
        return true;
    }
    return false;
}

// "123" vs 123, "true" vs true: equal after coercion.
bool coercible_equal(const TreeNode& a, const TreeNode& b) {
    const TreeNode* str = nullptr;
    const TreeNode* other = nullptr;
    if (a.type == NodeType::String) {
        str = &a;
        other = &b;
    } else if (b.type == NodeType::String) {
        str = &b;
        other = &a;
    } else {
        return false;
    }
    if (other->type == NodeType::Number) {
        long double v;
        return string_as_number(*str, v) && v == other->number_value;
    }
    if (other->type == NodeType::Boolean) {
        bool v;
        return string_as_bool(*str, v) && v == other->bool_value;
    }
    return false;
}

} // namespace

double scalar_similarity(const TreeNode& a, const TreeNode& b, SimilarityContext& ctx) {
    if (a.is_container() || b.is_container()) {
        throw NotALeaf("scalar_similarity requires primitive leaves");
    }
    if (a.type == b.type) {
        switch (a.type) {
        case NodeType::String:
            return ctx.text_pair_similarity(a.string_value, b.string_value);
        case NodeType::Number:
            return numbers_equal(a, b) ? 1.0 : 0.0;
        case NodeType::Boolean:
            return a.bool_value == b.bool_value ? 1.0 : 0.0;
        case NodeType::Null:
            return 1.0;
        default:
            return 0.0;
        }
    }
    if (ctx.policy().coercion_enabled && coercible_equal(a, b)) {
        return 1.0 - ctx.policy().coercion_penalty;
    }
    return 0.0;
}

} // namespace sted
