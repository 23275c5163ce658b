#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace et {

/// One step of a driver lineage path: which change event created the driver
/// and its index among the drivers placed by that event.
struct CodeStep {
    std::uint32_t event = 0;
    std::uint32_t child = 0;

    friend auto operator<=>(const CodeStep&, const CodeStep&) = default;
};

/// Hierarchical driver-cell identifier. The zygote carries the empty (root)
/// path; every driver placed by a change event extends its parent's path by
/// exactly one step, so codes are unique within a developmental run and a
/// child's code always has its creator's code as a strict prefix.
class MobileCode {
public:
    MobileCode() = default;
    explicit MobileCode(std::vector<CodeStep> path) : path_(std::move(path)) {}

    static MobileCode root() { return MobileCode{}; }

    MobileCode extend(std::uint32_t event, std::uint32_t child) const {
        std::vector<CodeStep> p = path_;
        p.push_back({event, child});
        return MobileCode{std::move(p)};
    }

    bool is_root() const { return path_.empty(); }
    std::size_t depth() const { return path_.size(); }
    const std::vector<CodeStep>& path() const { return path_; }

    bool is_strict_prefix_of(const MobileCode& other) const;

    /// Text form used by the genome file format: "*" for the root path,
    /// otherwise dot-separated "event:child" pairs, e.g. "0:2.3:0".
    std::string to_string() const;
    static MobileCode parse(const std::string& text);

    friend auto operator<=>(const MobileCode&, const MobileCode&) = default;

private:
    std::vector<CodeStep> path_;
};

}  // namespace et
