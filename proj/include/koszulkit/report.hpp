#pragma once

#include <string>
#include <vector>

namespace koszulkit {

inline constexpr const char* kEngineVersion = "0.1.0";

// Ordered key/value report. The structured rendering is byte-stable for
// identical inputs; timing lives outside the comparable payload and only
// appears in the text rendering.
class Report {
public:
    explicit Report(const std::string& command);

    void add(const std::string& key, const std::string& value);
    void add(const std::string& key, const char* value) { add(key, std::string(value)); }
    void add(const std::string& key, int64_t value);
    void add(const std::string& key, size_t value);
    void add(const std::string& key, bool value);
    void add_dims(const std::string& key, const std::vector<size_t>& dims);

    std::string structured() const;
    std::string text(double elapsed_ms) const;

private:
    std::vector<std::pair<std::string, std::string>> lines_;
};

}  // namespace koszulkit
