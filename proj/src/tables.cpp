#include "sted/variation.hpp"

namespace sted {

namespace {

// Key synonym dictionary: naming-convention variants, stem-sharing
// extensions, and plain synonyms, mirroring how real schemas drift.
constexpr const char* kSynonymPairs[][2] = {
    // convention variants
    {"user_name", "userName"}, {"first_name", "firstName"}, {"last_name", "lastName"},
    {"created_at", "createdAt"}, {"updated_at", "updatedAt"}, {"phone_number", "phoneNumber"},
    {"zip_code", "zipCode"}, {"is_active", "isActive"}, {"order_id", "orderId"},
    {"start_date", "startDate"}, {"end_date", "endDate"}, {"unit_price", "unitPrice"},
    {"account_id", "accountId"}, {"due_date", "dueDate"}, {"full_name", "fullName"},
    {"middle_name", "middleName"}, {"date_of_birth", "dateOfBirth"}, {"user_id", "userId"},
    {"item_count", "itemCount"}, {"tax_rate", "taxRate"}, {"is_enabled", "isEnabled"},
    {"is_deleted", "isDeleted"}, {"has_children", "hasChildren"}, {"max_value", "maxValue"},
    {"min_value", "minValue"}, {"avg_score", "avgScore"}, {"total_count", "totalCount"},
    {"page_size", "pageSize"}, {"page_number", "pageNumber"}, {"sort_order", "sortOrder"},
    {"last_login", "lastLogin"}, {"session_id", "sessionId"}, {"request_id", "requestId"},
    {"response_time", "responseTime"}, {"error_code", "errorCode"},
    {"error_message", "errorMessage"}, {"file_name", "fileName"}, {"file_size", "fileSize"},
    {"mime_type", "mimeType"}, {"content_type", "contentType"}, {"api_key", "apiKey"},
    {"access_token", "accessToken"}, {"refresh_token", "refreshToken"},
    {"expires_in", "expiresIn"}, {"redirect_uri", "redirectUri"}, {"client_id", "clientId"},
    {"is_verified", "isVerified"}, {"postal_code", "postalCode"},
    {"country_code", "countryCode"}, {"currency_code", "currencyCode"},
    {"exchange_rate", "exchangeRate"}, {"billing_address", "billingAddress"},
    {"shipping_address", "shippingAddress"}, {"payment_method", "paymentMethod"},
    {"card_number", "cardNumber"}, {"expiry_date", "expiryDate"},
    {"invoice_number", "invoiceNumber"}, {"line_items", "lineItems"},
    {"discount_rate", "discountRate"}, {"shipping_cost", "shippingCost"},
    // stem-sharing extensions
    {"email", "email_address"}, {"id", "identifier"}, {"desc", "description"},
    {"amount", "total_amount"}, {"phone", "telephone"}, {"name", "display_name"},
    {"address", "street_address"}, {"lat", "latitude"}, {"lon", "longitude"},
    {"tag", "tag_label"}, {"url", "url_link"}, {"status", "current_status"},
    {"title", "title_text"}, {"note", "note_text"}, {"code", "code_value"},
    {"type", "type_name"}, {"rank", "ranking"}, {"count", "counter"},
    {"image", "image_url"}, {"token", "auth_token"}, {"time", "timestamp"},
    {"user", "username"}, {"group", "group_name"}, {"key", "key_name"},
    {"label", "label_text"}, {"level", "level_number"}, {"score", "score_value"},
    {"weight", "net_weight"}, {"height", "total_height"}, {"width", "total_width"},
    {"length", "total_length"}, {"color", "color_name"}, {"brand", "brand_name"},
    {"model", "model_name"}, {"version", "version_number"}, {"author", "author_name"},
    {"category", "category_name"}, {"comment", "comment_text"}, {"message", "message_body"},
    {"subject", "subject_line"}, {"body", "body_text"}, {"summary", "summary_text"},
    {"detail", "detail_info"}, {"info", "info_text"}, {"config", "configuration"},
    {"param", "parameter"}, {"arg", "argument"}, {"env", "environment"},
    {"dir", "directory"}, {"dest", "destination"}, {"ref", "reference"},
    {"org", "organization"}, {"dept", "department"}, {"addr", "address_line"},
    {"temp", "temperature"}, {"alt", "altitude"}, {"freq", "frequency"},
    {"lang", "language"}, {"loc", "location"}, {"pos", "position"},
    {"max", "maximum"}, {"min", "minimum"}, {"avg", "average"},
    {"qty", "quantity"}, {"src", "source"}, {"seq", "sequence"},
    // plain synonyms
    {"city", "town"}, {"start", "begin"}, {"end", "finish"}, {"error", "fault"},
    {"price", "cost"}, {"owner", "holder"}, {"size", "extent"}, {"speed", "pace"},
    {"country", "nation"}, {"job", "role"}, {"shop", "store"}, {"car", "vehicle"},
    {"house", "dwelling"}, {"money", "funds"}, {"goal", "target"}, {"task", "chore"},
    {"item", "article"}, {"list", "roster"}, {"photo", "picture"}, {"movie", "film"},
    {"song", "track"}, {"book", "volume"}, {"road", "street"}, {"area", "zone"},
    {"spot", "place"}, {"trip", "journey"}, {"buy", "purchase"}, {"sell", "vend"},
    {"make", "build"}, {"state", "province"}, {"kind", "sort"}, {"firm", "company"},
    {"staff", "crew"}, {"boss", "manager"}, {"pay", "wage"}, {"fee", "charge"},
    {"tax", "levy"}, {"debt", "liability"}, {"gain", "profit"}, {"loss", "deficit"},
    {"risk", "hazard"}, {"rule", "policy"}, {"law", "statute"}, {"case", "matter"},
    {"plan", "scheme"}, {"idea", "concept"}, {"view", "opinion"}, {"vote", "ballot"},
    {"poll", "survey"}, {"test", "exam"}, {"quiz", "assessment"}, {"grade", "mark"},
    {"team", "squad"}, {"game", "match"}, {"win", "victory"}, {"tie", "draw"},
    {"luck", "fortune"}, {"power", "strength"}, {"sound", "audio"}, {"noise", "din"},
    {"smell", "odor"}, {"taste", "flavor"}, {"touch", "contact"}, {"health", "wellness"},
    {"sick", "ill"}, {"drug", "medicine"}, {"gift", "present"}, {"help", "aid"},
    {"talk", "speech"}, {"walk", "stroll"}, {"rest", "pause"}, {"fear", "dread"},
    {"joy", "delight"}, {"anger", "rage"}, {"hope", "wish"}, {"need", "requirement"},
};

// Keys the base-document generator draws from. The leading block overlaps the
// synonym table so rename sweeps have eligible sites at a stable fraction.
constexpr const char* kKeyPool[] = {
    // covered: convention variants
    "user_name", "first_name", "created_at", "phone_number", "is_active", "start_date",
    // covered: extensions
    "email", "desc", "amount", "name", "address", "status", "title", "note", "count",
    "token", "time", "label", "config",
    // covered: synonyms
    "city", "start", "error", "price", "owner", "size", "country", "job", "item", "list",
    "area", "plan", "team", "state",
    // uncovered
    "session", "timeout", "retries", "payload", "headers", "method", "endpoint",
    "protocol", "domain", "port", "host", "region", "district", "building", "floor",
    "room", "capacity", "threshold", "interval", "duration", "offset", "limit", "cursor",
    "filter", "fields", "include", "exclude", "expand", "embed", "locale", "timezone",
    "currency", "balance", "credit", "debit", "total", "subtotal", "discount", "shipping",
    "handling", "insurance", "warranty", "manufacturer", "supplier", "vendor", "customer",
    "recipient", "sender", "carrier", "tracking", "delivery", "pickup", "warehouse",
    "inventory", "stock", "reserved", "available", "allocated", "pending", "approved",
    "rejected", "cancelled", "archived", "published", "draft", "revision", "branch",
    "commit", "release", "build_tag", "artifact", "pipeline", "stage", "step", "runner",
    "worker", "queue", "topic", "partition", "replica", "shard", "cluster", "node_name",
    "rack", "datacenter", "latency", "throughput", "bandwidth", "memory", "storage",
    "quota", "usage", "billing", "invoice", "receipt", "statement", "period", "cycle",
    "schedule", "calendar", "reminder", "notification", "priority", "severity",
    "visibility", "assignee", "reporter", "reviewer", "approver", "window", "batch",
    "chunk", "segment", "bucket", "prefix", "suffix", "checksum", "encoding", "compression",
};

// String values for generated documents; the paraphrase table covers most.
constexpr const char* kPhrasePool[] = {
    "operation completed successfully",
    "payment processed without errors",
    "user account created successfully",
    "request accepted for processing",
    "document uploaded to the archive",
    "order shipped to the customer",
    "invoice generated for the period",
    "report delivered to the recipient",
    "session expired after inactivity",
    "password updated by the user",
    "profile synchronized with the server",
    "subscription renewed for another year",
    "notification sent to all members",
    "backup finished without warnings",
    "record inserted into the table",
    "message queued for delivery",
    "token refreshed before expiry",
    "file converted to the target format",
    "image resized to the requested width",
    "search returned several matches",
    "cache cleared during maintenance",
    "job scheduled for the next window",
    "task assigned to the reviewer",
    "ticket escalated to the supervisor",
    "issue resolved after investigation",
    "feature enabled for the account",
    "setting restored to the default",
    "license validated against the registry",
    "address verified by the carrier",
    "shipment delayed by the weather",
    "refund issued to the original card",
    "coupon applied to the order total",
    "inventory updated after the sale",
    "threshold exceeded during the test",
    "metric recorded at the checkpoint",
    "alert acknowledged by the operator",
    "service restarted after the patch",
    "timeout increased for slow clients",
    "quota reached for the current month",
    "upload rejected due to file size",
    "download resumed from the last byte",
    "stream interrupted by the network",
    "device registered to the account",
    "sensor calibrated before the run",
    "firmware updated to the latest build",
    "battery charged to full capacity",
    "temperature stable within the range",
    "pressure measured at the valve",
    "sample collected from the site",
    "analysis queued behind other work",
    "model trained on the full dataset",
    "prediction stored with the request",
    "experiment archived with its logs",
    "dashboard refreshed every minute",
    "export completed with all columns",
    "import skipped the malformed rows",
    "migration applied to the schema",
    "index rebuilt during the night",
    "query optimized by the planner",
    "transaction committed on the primary",
    "replica synchronized with the leader",
    "snapshot taken before the upgrade",
    "cluster scaled to meet the demand",
    "container deployed to the region",
    "endpoint responded within budget",
    "certificate renewed before expiry",
    "domain transferred to the new owner",
    "policy enforced on every request",
    "audit finished with no findings",
    "review approved by two maintainers",
    "draft saved with minor changes",
    "comment posted on the thread",
    "reaction added to the message",
    "poll closed after the deadline",
    "winner announced at the ceremony",
    "score published on the board",
    "match rescheduled to the weekend",
    "season extended by two weeks",
    "membership upgraded to premium",
    "trial started for fourteen days",
    "reminder delivered at nine",
    "meeting moved to the larger room",
    "agenda shared with the attendees",
    "summary written after the call",
    "decision recorded in the minutes",
    "action item tracked to completion",
    "budget approved for the quarter",
    "forecast revised after the results",
    "contract signed by both parties",
    "proposal submitted before the cutoff",
    "estimate prepared for the client",
    "survey completed by most users",
    "feedback grouped into themes",
    "roadmap updated for the release",
    "milestone reached ahead of plan",
    "bug reproduced on the test rig",
    "patch verified on three platforms",
    "regression caught by the suite",
    "coverage improved in the parser",
    "latency reduced by the cache",
    "memory freed after the request",
    "log rotated at midnight",
    "trace sampled at one percent",
    "blue heron by the quiet river",
    "old lighthouse above the cliffs",
    "maple leaves over the stone path",
    "winter market near the harbor",
    "evening train through the valley",
    "paper kite against the grey sky",
    "copper kettle on the iron stove",
    "garden gate behind the willow",
    "long shadow across the courtyard",
    "small boat beside the pier",
    "wool blanket over the armchair",
    "glass bottle full of river sand",
    "wooden ladder against the barn",
    "late harvest under a bright moon",
    "narrow bridge over the creek",
    "quiet library after closing time",
    "distant thunder beyond the hills",
    "fresh bread from the corner bakery",
    "red bicycle outside the station",
    "warm lantern light on the snow",
};

// Near-lexical rewrites preserving meaning: one word swapped or added.
constexpr const char* kParaphrasePairs[][2] = {
    {"operation completed successfully", "operation finished successfully"},
    {"payment processed without errors", "payment handled without errors"},
    {"user account created successfully", "user account set up successfully"},
    {"request accepted for processing", "request taken for processing"},
    {"document uploaded to the archive", "document added to the archive"},
    {"order shipped to the customer", "order dispatched to the customer"},
    {"invoice generated for the period", "invoice produced for the period"},
    {"report delivered to the recipient", "report handed to the recipient"},
    {"session expired after inactivity", "session lapsed after inactivity"},
    {"password updated by the user", "password changed by the user"},
    {"profile synchronized with the server", "profile synced with the server"},
    {"subscription renewed for another year", "subscription extended for another year"},
    {"notification sent to all members", "notification mailed to all members"},
    {"backup finished without warnings", "backup completed without warnings"},
    {"record inserted into the table", "record added into the table"},
    {"message queued for delivery", "message lined up for delivery"},
    {"token refreshed before expiry", "token renewed before expiry"},
    {"file converted to the target format", "file transformed to the target format"},
    {"image resized to the requested width", "image scaled to the requested width"},
    {"search returned several matches", "search produced several matches"},
    {"cache cleared during maintenance", "cache emptied during maintenance"},
    {"job scheduled for the next window", "job booked for the next window"},
    {"task assigned to the reviewer", "task given to the reviewer"},
    {"ticket escalated to the supervisor", "ticket raised to the supervisor"},
    {"issue resolved after investigation", "issue fixed after investigation"},
    {"feature enabled for the account", "feature switched on for the account"},
    {"setting restored to the default", "setting reverted to the default"},
    {"license validated against the registry", "license checked against the registry"},
    {"address verified by the carrier", "address confirmed by the carrier"},
    {"shipment delayed by the weather", "shipment held up by the weather"},
    {"refund issued to the original card", "refund sent to the original card"},
    {"coupon applied to the order total", "coupon added to the order total"},
    {"inventory updated after the sale", "inventory adjusted after the sale"},
    {"threshold exceeded during the test", "threshold crossed during the test"},
    {"metric recorded at the checkpoint", "metric logged at the checkpoint"},
    {"alert acknowledged by the operator", "alert confirmed by the operator"},
    {"service restarted after the patch", "service rebooted after the patch"},
    {"timeout increased for slow clients", "timeout raised for slow clients"},
    {"quota reached for the current month", "quota hit for the current month"},
    {"upload rejected due to file size", "upload refused due to file size"},
    {"download resumed from the last byte", "download continued from the last byte"},
    {"stream interrupted by the network", "stream broken by the network"},
    {"device registered to the account", "device linked to the account"},
    {"sensor calibrated before the run", "sensor tuned before the run"},
    {"firmware updated to the latest build", "firmware upgraded to the latest build"},
    {"battery charged to full capacity", "battery filled to full capacity"},
    {"temperature stable within the range", "temperature steady within the range"},
    {"pressure measured at the valve", "pressure read at the valve"},
    {"sample collected from the site", "sample gathered from the site"},
    {"analysis queued behind other work", "analysis waiting behind other work"},
    {"model trained on the full dataset", "model fitted on the full dataset"},
    {"prediction stored with the request", "prediction saved with the request"},
    {"experiment archived with its logs", "experiment stored with its logs"},
    {"dashboard refreshed every minute", "dashboard reloaded every minute"},
    {"export completed with all columns", "export finished with all columns"},
    {"import skipped the malformed rows", "import ignored the malformed rows"},
    {"migration applied to the schema", "migration run on the schema"},
    {"index rebuilt during the night", "index recreated during the night"},
    {"query optimized by the planner", "query improved by the planner"},
    {"transaction committed on the primary", "transaction applied on the primary"},
    {"replica synchronized with the leader", "replica aligned with the leader"},
    {"snapshot taken before the upgrade", "snapshot captured before the upgrade"},
    {"cluster scaled to meet the demand", "cluster grown to meet the demand"},
    {"container deployed to the region", "container rolled out to the region"},
    {"endpoint responded within budget", "endpoint answered within budget"},
    {"certificate renewed before expiry", "certificate reissued before expiry"},
    {"domain transferred to the new owner", "domain moved to the new owner"},
    {"policy enforced on every request", "policy applied on every request"},
    {"audit finished with no findings", "audit closed with no findings"},
    {"review approved by two maintainers", "review accepted by two maintainers"},
    {"draft saved with minor changes", "draft stored with minor changes"},
    {"comment posted on the thread", "comment added on the thread"},
    {"reaction added to the message", "reaction attached to the message"},
    {"poll closed after the deadline", "poll ended after the deadline"},
    {"winner announced at the ceremony", "winner revealed at the ceremony"},
    {"score published on the board", "score posted on the board"},
    {"match rescheduled to the weekend", "match moved to the weekend"},
    {"season extended by two weeks", "season lengthened by two weeks"},
    {"membership upgraded to premium", "membership raised to premium"},
    {"trial started for fourteen days", "trial opened for fourteen days"},
    {"reminder delivered at nine", "reminder dropped at nine"},
    {"meeting moved to the larger room", "meeting shifted to the larger room"},
    {"agenda shared with the attendees", "agenda circulated with the attendees"},
    {"summary written after the call", "summary drafted after the call"},
    {"decision recorded in the minutes", "decision noted in the minutes"},
    {"action item tracked to completion", "action item followed to completion"},
    {"budget approved for the quarter", "budget cleared for the quarter"},
    {"forecast revised after the results", "forecast adjusted after the results"},
    {"contract signed by both parties", "contract executed by both parties"},
    {"proposal submitted before the cutoff", "proposal filed before the cutoff"},
    {"estimate prepared for the client", "estimate drawn up for the client"},
    {"survey completed by most users", "survey finished by most users"},
    {"feedback grouped into themes", "feedback sorted into themes"},
    {"roadmap updated for the release", "roadmap refreshed for the release"},
    {"milestone reached ahead of plan", "milestone hit ahead of plan"},
    {"bug reproduced on the test rig", "bug replayed on the test rig"},
    {"patch verified on three platforms", "patch validated on three platforms"},
    {"regression caught by the suite", "regression detected by the suite"},
    {"coverage improved in the parser", "coverage increased in the parser"},
    {"latency reduced by the cache", "latency lowered by the cache"},
    {"memory freed after the request", "memory released after the request"},
    {"log rotated at midnight", "log rolled at midnight"},
    {"trace sampled at one percent", "trace captured at one percent"},
    {"blue heron by the quiet river", "blue heron near the quiet river"},
    {"old lighthouse above the cliffs", "old lighthouse over the cliffs"},
    {"maple leaves over the stone path", "maple leaves across the stone path"},
    {"winter market near the harbor", "winter market beside the harbor"},
    {"evening train through the valley", "evening train across the valley"},
    {"paper kite against the grey sky", "paper kite under the grey sky"},
    {"copper kettle on the iron stove", "copper kettle upon the iron stove"},
    {"garden gate behind the willow", "garden gate beneath the willow"},
    {"long shadow across the courtyard", "long shadow along the courtyard"},
    {"small boat beside the pier", "small boat against the pier"},
    {"wool blanket over the armchair", "wool blanket across the armchair"},
    {"glass bottle full of river sand", "glass bottle filled with river sand"},
    {"wooden ladder against the barn", "wooden ladder beside the barn"},
    {"late harvest under a bright moon", "late harvest beneath a bright moon"},
    {"narrow bridge over the creek", "narrow bridge across the creek"},
    {"quiet library after closing time", "quiet library past closing time"},
    {"distant thunder beyond the hills", "distant thunder behind the hills"},
    {"fresh bread from the corner bakery", "fresh bread out of the corner bakery"},
    {"red bicycle outside the station", "red bicycle in front of the station"},
    {"warm lantern light on the snow", "warm lantern glow on the snow"},
};

// Replacement values with vocabulary disjoint from the phrase pool, so
// semantic variants read as genuine content changes.
constexpr const char* kSubstitutionStrings[] = {
    "zebra umbrella xylophone parade",
    "crimson asteroid belt survey",
    "velvet walrus juggling oranges",
    "turquoise glacier canyon echo",
    "paper volcano eruption drill",
    "midnight cactus bloom festival",
    "granite pelican diving contest",
    "amber jellyfish drifting east",
    "silver mongoose chasing kites",
    "cobalt tundra expedition camp",
    "lunar beetle migration chart",
    "scarlet origami dragon pile",
    "frozen mango lantern parade",
    "emerald yak caravan crossing",
    "plastic meteor shower rehearsal",
    "violet penguin orchestra tour",
    "rusty submarine garden maze",
    "golden porcupine quill auction",
    "misty bamboo rocket workshop",
    "charcoal flamingo skating rink",
    "neon walnut telescope array",
    "arctic mandolin tuning ritual",
    "bronze chameleon mural wall",
    "sapphire tumbleweed derby race",
    "crystal octopus weather vane",
    "maroon accordion repair shed",
    "ivory comet tail measurement",
    "olive kangaroo trampoline hall",
    "indigo sawdust sculpture yard",
    "pearl hedgehog lantern walk",
    "onyx giraffe periscope tower",
    "magenta driftwood violin camp",
    "teal armadillo compass club",
    "umber falcon kite regatta",
    "lilac iceberg referee whistle",
    "copper toadstool archive vault",
    "azure millipede marching band",
    "tangerine anchor knitting circle",
    "slate otter juggling gala",
    "fuchsia asteroid mining rumor",
    "hazel walrus typewriter museum",
    "mint dragonfly radar station",
    "burgundy yeti dance recital",
    "steel papaya launch platform",
    "coral badger semaphore school",
    "ochre narwhal compass parade",
    "plum raccoon observatory shift",
    "jade scorpion weather almanac",
};

constexpr std::int64_t kSubstitutionNumbers[] = {
    100003, 100019, 100043, 100057, 100069, 100103, 100129, 100151, 100193, 100213,
    100237, 100267, 100271, 100279, 100291, 100297, 100313, 100333, 100343, 100357,
    100361, 100363, 100379, 100391, 100393, 100403, 100411, 100417, 100447, 100459,
};

} // namespace

const std::map<std::string, std::string>& default_synonym_table() {
    static const std::map<std::string, std::string> table = [] {
        std::map<std::string, std::string> t;
        for (const auto& pair : kSynonymPairs) {
            t.emplace(pair[0], pair[1]);
        }
        return t;
    }();
    return table;
}

const std::map<std::string, std::string>& default_paraphrase_table() {
    static const std::map<std::string, std::string> table = [] {
        std::map<std::string, std::string> t;
        for (const auto& pair : kParaphrasePairs) {
            t.emplace(pair[0], pair[1]);
        }
        return t;
    }();
    return table;
}

const SubstitutionPool& default_substitution_pool() {
    static const SubstitutionPool pool = [] {
        SubstitutionPool p;
        for (const char* s : kSubstitutionStrings) p.strings.emplace_back(s);
        for (std::int64_t n : kSubstitutionNumbers) p.numbers.push_back(n);
        return p;
    }();
    return pool;
}

const std::vector<std::string>& default_key_pool() {
    static const std::vector<std::string> pool = [] {
        std::vector<std::string> p;
        for (const char* k : kKeyPool) p.emplace_back(k);
        return p;
    }();
    return pool;
}

const std::vector<std::string>& default_phrase_pool() {
    static const std::vector<std::string> pool = [] {
        std::vector<std::string> p;
        for (const char* s : kPhrasePool) p.emplace_back(s);
        return p;
    }();
    return pool;
}

} // namespace sted
