#ifndef WGMCOOL_CONFIG_HPP
#define WGMCOOL_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wgmcool {

enum class ValueType { real, positive, non_negative, integer, count, boolean, text };

struct KeySpec {
    std::string key;
    ValueType type;
    std::string description;
    std::vector<std::string> choices;  // for enumerated text values
};

// Every key the configuration accepts, with its type.
const std::vector<KeySpec>& known_keys();

struct KeyValueLine {
    std::string key;
    std::string value;
    int line;
};

// Splits "key = value" text into trimmed pairs without interpreting keys.
std::vector<KeyValueLine> read_key_values(std::string_view text, std::string_view origin = "<text>");

// Flat "namespace.key = value" configuration. Values are validated and
// normalised when set (numbers to their shortest round-trip form), so two
// configurations that mean the same thing compare equal.
class RunConfig {
public:
    // '#' starts a comment; blank lines are ignored. Unknown keys and
    // malformed values throw UsageError naming the key and origin line.
    static RunConfig parse(std::string_view text, std::string_view origin = "<text>");
    static RunConfig load(const std::filesystem::path& path);
    // The [config] section of a report written by the CLI.
    static RunConfig from_report(std::string_view report);

    void set(const std::string& key, const std::string& value);
    void erase(const std::string& key);
    // Values in `overrides` replace those here.
    void merge(const RunConfig& overrides);

    bool has(const std::string& key) const;
    std::string text(const std::string& key) const;
    double real(const std::string& key) const;
    std::int64_t integer(const std::string& key) const;
    std::uint64_t count(const std::string& key) const;
    bool boolean(const std::string& key) const;

    std::optional<double> real_or(const std::string& key) const;
    double real_or(const std::string& key, double fallback) const;
    std::int64_t integer_or(const std::string& key, std::int64_t fallback) const;
    bool boolean_or(const std::string& key, bool fallback) const;
    std::string text_or(const std::string& key, const std::string& fallback) const;

    // Throws UsageError listing every absent key of `required`.
    void require(const std::vector<std::string>& required, const std::string& command) const;

    // Sorted "key = value" lines.
    std::string serialize() const;
    const std::map<std::string, std::string>& entries() const { return values_; }

    bool operator==(const RunConfig&) const = default;

private:
    std::map<std::string, std::string> values_;
};

}  // namespace wgmcool

#endif
