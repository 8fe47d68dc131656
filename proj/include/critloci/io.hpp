#pragma once

// JSON schemas: camera setups, ideals, and point parsing for the CLI.
//
// setup:  { "k": 3, "views": [ { "h": 2, "P": [["1","0",..],..],
//           "Q": [[..],..] }, ... ], "field": "Q" | "GF(p)" (optional) }
// ideal:  { "ring": { "vars": [..], "order": "grevlex",
//           "block_split": 0 (optional) }, "generators": ["2*x0*x1 - ..."] }

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "locus.hpp"

namespace critloci {

using nlohmann::json;

template <class K>
ProjectionSetup<K> setup_from_json(const json& j) {
    if (!j.contains("k") || !j.contains("views"))
        throw std::invalid_argument("setup: missing 'k' or 'views'");
    const int k = j.at("k").get<int>();
    std::vector<Camera<K>> Q, P;
    auto parse_camera = [&](const json& rows, int h) {
        std::vector<std::vector<K>> conv;
        for (const auto& row : rows) {
            std::vector<K> r;
            for (const auto& e : row) r.push_back(K::from_string(e.get<std::string>()));
            if (static_cast<int>(r.size()) != k + 1)
                throw std::invalid_argument("setup: camera row length is not k+1");
            conv.push_back(std::move(r));
        }
        if (static_cast<int>(conv.size()) != h + 1)
            throw std::invalid_argument("setup: camera row count is not h+1");
        return Camera<K>::make(Mat<K>::from_rows(conv));
    };
    int index = 0;
    for (const auto& view : j.at("views")) {
        const int h = view.at("h").get<int>();
        try {
            P.push_back(parse_camera(view.at("P"), h));
            Q.push_back(parse_camera(view.at("Q"), h));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("view " + std::to_string(index + 1) + ": " + e.what());
        }
        ++index;
    }
    return make_setup(std::move(Q), std::move(P));
}

template <class K>
json setup_to_json(const ProjectionSetup<K>& s) {
    json views = json::array();
    for (int j = 0; j < s.n(); ++j) {
        json view;
        view["h"] = s.hs[j];
        auto dump = [&](const Mat<K>& m) {
            json rows = json::array();
            for (int r = 0; r < m.rows(); ++r) {
                json row = json::array();
                for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
                rows.push_back(row);
            }
            return rows;
        };
        view["P"] = dump(s.P[j].matrix());
        view["Q"] = dump(s.Q[j].matrix());
        views.push_back(view);
    }
    return json{{"k", s.k}, {"views", views}};
}

template <class K>
json ideal_to_json(const Ideal<K>& ideal) {
    json ring;
    ring["vars"] = ideal.ring->vars;
    ring["order"] = ideal.ring->order.tag();
    if (ideal.ring->blocked()) ring["block_split"] = ideal.ring->block_split;
    json gens = json::array();
    for (const auto& g : ideal.gens) gens.push_back(g.str());
    return json{{"ring", ring}, {"generators", gens}, {"field", K::field_name()}};
}

template <class K>
Ideal<K> ideal_from_json(const json& j) {
    const json& ring = j.at("ring");
    std::vector<std::string> vars = ring.at("vars").get<std::vector<std::string>>();
    MonomialOrder order = MonomialOrder::from_tag(ring.value("order", "grevlex"));
    int split = ring.value("block_split", 0);
    RingPtr r = make_ring(std::move(vars), order, split);
    Ideal<K> ideal(r);
    for (const auto& g : j.at("generators"))
        ideal.gens.push_back(Poly<K>::parse(r, g.get<std::string>()));
    ideal.gens = tidy_generators(std::move(ideal.gens));
    return ideal;
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    json j;
    in >> j;
    return j;
}

inline void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

/// Parses "a,b,c,..." with rational entries into a projective point.
template <class K>
ProjectivePoint<K> point_from_string(const std::string& text) {
    std::vector<K> coords;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t b = item.find_first_not_of(" \t");
        size_t e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw std::invalid_argument("point: empty coordinate");
        coords.push_back(K::from_string(item.substr(b, e - b + 1)));
    }
    if (coords.empty()) throw std::invalid_argument("point: no coordinates");
    return ProjectivePoint<K>(coords);
}

} // namespace critloci
