#include "koszulkit/report.hpp"

#include <sstream>

namespace koszulkit {

Report::Report(const std::string& command) {
    add("format", "koszulkit.report.v1");
    add("command", command);
    add("engine.version", kEngineVersion);
}

void Report::add(const std::string& key, const std::string& value) {
    lines_.emplace_back(key, value);
}

void Report::add(const std::string& key, int64_t value) { add(key, std::to_string(value)); }

void Report::add(const std::string& key, size_t value) { add(key, std::to_string(value)); }

void Report::add(const std::string& key, bool value) {
    add(key, std::string(value ? "true" : "false"));
}

void Report::add_dims(const std::string& key, const std::vector<size_t>& dims) {
    std::ostringstream out;
    for (size_t i = 0; i < dims.size(); ++i)
        out << (i ? " " : "") << dims[i];
    add(key, out.str());
}

std::string Report::structured() const {
    std::ostringstream out;
    for (const auto& [key, value] : lines_)
        out << key << " = " << value << "\n";
    return out.str();
}

std::string Report::text(double elapsed_ms) const {
    std::ostringstream out;
    out << structured();
    out << "# elapsed-ms " << static_cast<int64_t>(elapsed_ms) << "\n";
    return out.str();
}

}  // namespace koszulkit
