#include "posetrack/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "posetrack/errors.hpp"

namespace posetrack {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& source, int line, const std::string& what) {
    throw Error(ErrorCode::ConfigParse, source + ":" + std::to_string(line) + ": " + what);
}

double parse_double(const std::string& source, int line, const std::string& key,
                    const std::string& value) {
    try {
        size_t used = 0;
        double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        fail(source, line, "'" + key + "' needs a number, got '" + value + "'");
    }
}

int parse_int(const std::string& source, int line, const std::string& key, const std::string& value) {
    try {
        size_t used = 0;
        int v = std::stoi(value, &used);
        if (used != value.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        fail(source, line, "'" + key + "' needs an integer, got '" + value + "'");
    }
}

} // namespace

SkeletonTopology RunConfig::topology() const {
    std::vector<std::optional<int>> parent(parts.size());
    for (size_t i = 0; i < parts.size(); ++i) {
        if (!parent_names[i]) continue;
        auto it = std::find(parts.begin(), parts.end(), *parent_names[i]);
        if (it == parts.end())
            throw Error(ErrorCode::ConfigParse,
                        "part '" + parts[i] + "' names unknown parent '" + *parent_names[i] + "'");
        parent[i] = static_cast<int>(it - parts.begin());
    }
    return SkeletonTopology::create(parts, parent);
}

RunConfig parse_config(const std::string& text, const std::string& source) {
    RunConfig config;
    std::istringstream in(text);
    std::string raw;
    std::string section;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        size_t cut = raw.find_first_of("#;");
        std::string line = trim(cut == std::string::npos ? raw : raw.substr(0, cut));
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') fail(source, line_no, "unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "topology" && section != "descriptor" && section != "model" &&
                section != "tracker")
                fail(source, line_no, "unknown section '" + section + "'");
            continue;
        }

        size_t eq = line.find('=');
        if (eq == std::string::npos) fail(source, line_no, "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) fail(source, line_no, "expected 'key = value'");

        if (section == "topology") {
            if (key != "part") fail(source, line_no, "unknown topology key '" + key + "'");
            std::istringstream fields(value);
            std::string name, parent, extra;
            fields >> name >> parent >> extra;
            if (name.empty() || !extra.empty())
                fail(source, line_no, "'part' takes a name and an optional parent");
            config.parts.push_back(name);
            config.parent_names.push_back(parent.empty() ? std::nullopt
                                                         : std::optional<std::string>(parent));
        } else if (section == "descriptor") {
            if (key == "rings")
                config.rings = parse_int(source, line_no, key, value);
            else if (key == "ring_stride")
                config.ring_stride = parse_int(source, line_no, key, value);
            else
                fail(source, line_no, "unknown descriptor key '" + key + "'");
        } else if (section == "model") {
            if (key == "clusters")
                config.clusters = parse_int(source, line_no, key, value);
            else if (key == "epsilon")
                config.epsilon = parse_double(source, line_no, key, value);
            else
                fail(source, line_no, "unknown model key '" + key + "'");
        } else if (section == "tracker") {
            if (key == "lambda1")
                config.lambda1 = parse_double(source, line_no, key, value);
            else if (key == "lambda2")
                config.lambda2 = parse_double(source, line_no, key, value);
            else if (key == "window_radius")
                config.window_radius = parse_int(source, line_no, key, value);
            else if (key == "reinit_interval")
                config.reinit_interval = parse_int(source, line_no, key, value);
            else
                fail(source, line_no, "unknown tracker key '" + key + "'");
        } else {
            fail(source, line_no, "key '" + key + "' before any section header");
        }
    }

    if (config.parts.empty())
        throw Error(ErrorCode::ConfigParse, source + ": no [topology] parts defined");
    if (config.rings < 1) throw Error(ErrorCode::ConfigParse, source + ": rings must be >= 1");
    if (config.ring_stride < 1)
        throw Error(ErrorCode::ConfigParse, source + ": ring_stride must be >= 1");
    if (config.clusters < 1) throw Error(ErrorCode::ConfigParse, source + ": clusters must be >= 1");
    if (config.window_radius < 0)
        throw Error(ErrorCode::ConfigParse, source + ": window_radius must be >= 0");
    if (config.reinit_interval && *config.reinit_interval < 1)
        throw Error(ErrorCode::ConfigParse, source + ": reinit_interval must be >= 1");
    return config;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoFailure, "cannot open '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str(), path);
}

} // namespace posetrack
