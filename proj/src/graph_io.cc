// Copyright 2026 The lcopt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lcopt/graph_io.h"

#include <cctype>

#include "json.hpp"

using namespace lcopt;

namespace {

constexpr std::string_view GRAPH6_HEADER = ">>graph6<<";

void append_size(std::string &out, std::size_t n) {
    if (n <= 62) {
        out.push_back((char)(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) {
            out.push_back((char)(63 + ((n >> shift) & 63)));
        }
    } else {
        throw GraphFormatError("graph6: node count too large.");
    }
}

}  // namespace

std::string lcopt::to_graph6(const Graph &g) {
    std::string out;
    std::size_t n = g.num_nodes();
    append_size(out, n);
    int acc = 0;
    int filled = 0;
    for (Node j = 1; j < n; j++) {
        for (Node i = 0; i < j; i++) {
            acc = (acc << 1) | (int)g.has_edge(i, j);
            if (++filled == 6) {
                out.push_back((char)(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled) {
        out.push_back((char)(63 + (acc << (6 - filled))));
    }
    return out;
}

Graph lcopt::from_graph6(std::string_view text) {
    if (text.starts_with(GRAPH6_HEADER)) {
        text.remove_prefix(GRAPH6_HEADER.size());
    }
    while (!text.empty() && std::isspace((unsigned char)text.back())) {
        text.remove_suffix(1);
    }
    auto take = [&](std::size_t k) {
        int v = (unsigned char)text[k] - 63;
        if (v < 0 || v > 63) {
            throw GraphFormatError("graph6: invalid character at offset " + std::to_string(k) + ".");
        }
        return v;
    };
    if (text.empty()) {
        throw GraphFormatError("graph6: empty input.");
    }
    std::size_t pos = 0;
    std::size_t n;
    if ((unsigned char)text[0] == 126) {
        if (text.size() < 4 || (unsigned char)text[1] == 126) {
            throw GraphFormatError("graph6: unsupported or truncated size field.");
        }
        n = ((std::size_t)take(1) << 12) | ((std::size_t)take(2) << 6) | (std::size_t)take(3);
        pos = 4;
    } else {
        n = (std::size_t)take(0);
        pos = 1;
    }
    if (n == 0 || n > Graph::MAX_NODES) {
        throw GraphFormatError("graph6: node count " + std::to_string(n) + " not supported.");
    }
    std::size_t bits = n * (n - 1) / 2;
    std::size_t expected = pos + (bits + 5) / 6;
    if (text.size() != expected) {
        throw GraphFormatError(
            "graph6: expected " + std::to_string(expected) + " characters for n=" + std::to_string(n) + ", got " +
            std::to_string(text.size()) + ".");
    }
    Graph g(n);
    std::size_t k = 0;
    for (Node j = 1; j < n; j++) {
        for (Node i = 0; i < j; i++) {
            int v = take(pos + k / 6);
            if ((v >> (5 - k % 6)) & 1) {
                g.set_edge(i, j);
            }
            k++;
        }
    }
    if (k % 6) {
        int v = take(pos + k / 6);
        if (v & ((1 << (6 - k % 6)) - 1)) {
            throw GraphFormatError("graph6: nonzero padding bits.");
        }
    }
    return g;
}

std::string lcopt::to_edge_list_json(const Graph &g) {
    nlohmann::json doc;
    doc["n"] = g.num_nodes();
    doc["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges()) {
        doc["edges"].push_back({u, v});
    }
    return doc.dump();
}

Graph lcopt::from_edge_list_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw GraphFormatError(std::string("edge list: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer()) {
        throw GraphFormatError("edge list: missing integer field \"n\".");
    }
    long long n = doc["n"].get<long long>();
    if (n <= 0 || n > (long long)Graph::MAX_NODES) {
        throw GraphFormatError("edge list: node count " + std::to_string(n) + " not supported.");
    }
    Graph g((std::size_t)n);
    if (!doc.contains("edges")) {
        return g;
    }
    if (!doc["edges"].is_array()) {
        throw GraphFormatError("edge list: \"edges\" must be an array.");
    }
    for (const auto &e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
            throw GraphFormatError("edge list: each edge must be a pair of integers.");
        }
        long long u = e[0].get<long long>();
        long long v = e[1].get<long long>();
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw GraphFormatError(
                "edge list: edge [" + std::to_string(u) + "," + std::to_string(v) + "] outside node range.");
        }
        if (u == v) {
            throw GraphFormatError("edge list: self-loop on node " + std::to_string(u) + ".");
        }
        g.set_edge((Node)u, (Node)v);
    }
    return g;
}

Graph lcopt::parse_graph(std::string_view text) {
    std::size_t k = 0;
    while (k < text.size() && std::isspace((unsigned char)text[k])) {
        k++;
    }
    text.remove_prefix(k);
    if (!text.empty() && text[0] == '{') {
        return from_edge_list_json(text);
    }
    return from_graph6(text);
}
