#include "regpump/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace regpump {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::size_t parse_positive(std::string_view value, const std::string& where) {
    std::size_t out = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size() || out == 0)
        throw std::invalid_argument(where + ": expected a positive integer");
    return out;
}

} // namespace

void apply_config_text(CliConfig& config, std::string_view text) {
    CliConfig updated = config;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        const auto line = trim(text.substr(start, end - start));
        start = end + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') continue;

        const std::string where = "config line " + std::to_string(line_no);
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw std::invalid_argument(where + ": expected key=value");
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));

        auto single_char = [&]() {
            if (value.size() != 1) throw std::invalid_argument(where + ": expected a single character");
            return value.front();
        };

        if (key == "union")
            updated.reserved.union_op = single_char();
        else if (key == "concat")
            updated.reserved.concat_op = single_char();
        else if (key == "star")
            updated.reserved.star_op = single_char();
        else if (key == "empty")
            updated.reserved.empty_language = single_char();
        else if (key == "epsilon")
            updated.reserved.epsilon = single_char();
        else if (key == "max_len")
            updated.max_len = parse_positive(value, where);
        else if (key == "state_cap")
            updated.limits.state_cap = parse_positive(value, where);
        else
            throw std::invalid_argument(where + ": unknown key '" + std::string(key) + "'");
    }
    if (!updated.reserved.distinct()) throw std::invalid_argument("config: reserved symbols must be pairwise distinct");
    config = updated;
}

void apply_config_file(CliConfig& config, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    apply_config_text(config, text.str());
}

} // namespace regpump
