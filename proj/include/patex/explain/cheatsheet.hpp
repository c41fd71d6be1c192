#pragma once

#include <string>
#include <string_view>

#include "patex/explain/repository.hpp"

namespace patex {

inline std::string html_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&#39;"; break;
            default: out += c;
        }
    }
    return out;
}

/// Printable page listing every card of one visualization: icons (as asset
/// placeholders), texts and variations. No data facts, no related instances.
inline std::string export_cheatsheet(const PatternRepository& repo, Viz viz) {
    const std::string title = "Network patterns in " + to_string(viz);
    std::string html;
    html += "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n<title>" + html_escape(title) +
            "</title>\n<style>\n"
            "@page { size: A4; margin: 12mm; }\n"
            "body { font-family: sans-serif; font-size: 9pt; margin: 0; }\n"
            "h1 { font-size: 14pt; }\n"
            ".sheet { display: grid; grid-template-columns: 1fr 1fr; gap: 6mm; }\n"
            ".card { border: 1px solid #999; padding: 3mm; break-inside: avoid; }\n"
            ".icon { display: inline-block; width: 18mm; height: 18mm; border: 1px solid #666; font-size: 6pt; "
            "overflow: hidden; vertical-align: top; }\n"
            ".icon.network { background: #000; color: #fff; }\n"
            ".icon.visual, .icon.variation { background: #fff; color: #000; }\n"
            ".variations { display: flex; gap: 2mm; }\n"
            "</style>\n</head>\n<body>\n<h1>" +
            html_escape(title) + "</h1>\n<div class=\"sheet\">\n";
    for (const auto& c : repo.for_viz(viz)) {
        html += "<section class=\"card\" data-motif=\"" + to_string(c.motif) + "\">\n";
        html += "<h2>" + html_escape(info(c.motif).singular) + " / " + html_escape(c.visual_name) + "</h2>\n";
        html += "<div class=\"icon network\" data-asset=\"" + html_escape(c.network_icon) + "\">" +
                html_escape(c.network_icon) + "</div>\n";
        html += "<p class=\"network-text\">" + html_escape(c.network_text) + "</p>\n";
        html += "<div class=\"icon visual\" data-asset=\"" + html_escape(c.visual_icon) + "\">" +
                html_escape(c.visual_icon) + "</div>\n";
        html += "<p class=\"visual-text\">" + html_escape(c.visual_text) + "</p>\n";
        html += "<div class=\"variations\">\n";
        for (const auto& v : c.variations)
            html += "<figure><div class=\"icon variation\" data-asset=\"" + html_escape(v.icon) + "\">" +
                    html_escape(v.icon) + "</div><figcaption>" + html_escape(v.text) + "</figcaption></figure>\n";
        html += "</div>\n</section>\n";
    }
    html += "</div>\n</body>\n</html>\n";
    return html;
}

}  // namespace patex
