#pragma once

// Minimal XML well-formedness check for the SVG writer: balanced tags,
// quoted attributes, a single root element. Enough for generated documents,
// not a general parser.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace xml_check {

inline bool well_formed(std::string_view doc, std::string* why = nullptr) {
    const auto fail = [&](std::string msg) {
        if (why) *why = std::move(msg);
        return false;
    };
    std::vector<std::string> open;
    int roots = 0;
    std::size_t i = 0;
    while (i < doc.size()) {
        if (doc[i] != '<') {
            if (open.empty() && doc[i] != '\n' && doc[i] != ' ') return fail("text outside root");
            if (doc[i] == '&') {
                const auto semi = doc.find(';', i);
                if (semi == std::string_view::npos) return fail("bare ampersand");
            }
            ++i;
            continue;
        }
        const auto close = doc.find('>', i);
        if (close == std::string_view::npos) return fail("unterminated tag");
        std::string_view tag = doc.substr(i + 1, close - i - 1);
        i = close + 1;
        if (tag.starts_with("?")) {
            if (!tag.ends_with("?")) return fail("bad declaration");
            continue;
        }
        if (tag.starts_with("/")) {
            const std::string name(tag.substr(1));
            if (open.empty() || open.back() != name) return fail("mismatched </" + name + ">");
            open.pop_back();
            continue;
        }
        const bool self_closing = tag.ends_with("/");
        if (self_closing) tag.remove_suffix(1);
        const auto name_end = tag.find_first_of(" \n");
        const std::string name(tag.substr(0, name_end));
        if (name.empty()) return fail("empty tag name");
        std::size_t quotes = 0;
        for (char c : tag) quotes += c == '"';
        if (quotes % 2) return fail("unbalanced quotes in <" + name + ">");
        if (open.empty()) ++roots;
        if (!self_closing) open.push_back(name);
    }
    if (!open.empty()) return fail("unclosed <" + open.back() + ">");
    if (roots != 1) return fail("expected one root element");
    return true;
}

inline std::size_t count(std::string_view doc, std::string_view needle) {
    std::size_t n = 0;
    for (auto at = doc.find(needle); at != std::string_view::npos; at = doc.find(needle, at + 1)) {
        ++n;
    }
    return n;
}

}  // namespace xml_check
