#include "et/mobile_code.hpp"

#include <cstdio>
#include <stdexcept>

namespace et {

bool MobileCode::is_strict_prefix_of(const MobileCode& other) const {
    if (path_.size() >= other.path_.size()) return false;
    for (std::size_t i = 0; i < path_.size(); ++i)
        if (path_[i] != other.path_[i]) return false;
    return true;
}

std::string MobileCode::to_string() const {
    if (path_.empty()) return "*";
    std::string out;
    char buf[32];
    for (std::size_t i = 0; i < path_.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%s%u:%u", i == 0 ? "" : ".", path_[i].event, path_[i].child);
        out += buf;
    }
    return out;
}

MobileCode MobileCode::parse(const std::string& text) {
    if (text == "*") return MobileCode{};
    std::vector<CodeStep> path;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t colon = text.find(':', pos);
        if (colon == std::string::npos) throw std::runtime_error("bad mobile code: " + text);
        std::size_t dot = text.find('.', colon);
        if (dot == std::string::npos) dot = text.size();
        CodeStep step;
        try {
            step.event = static_cast<std::uint32_t>(std::stoul(text.substr(pos, colon - pos)));
            step.child = static_cast<std::uint32_t>(std::stoul(text.substr(colon + 1, dot - colon - 1)));
        } catch (const std::exception&) {
            throw std::runtime_error("bad mobile code: " + text);
        }
        path.push_back(step);
        pos = dot == text.size() ? dot : dot + 1;
    }
    if (path.empty()) throw std::runtime_error("bad mobile code: " + text);
    return MobileCode{std::move(path)};
}

}  // namespace et
