#pragma once
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>
#include "objects.hpp"

namespace ricalc::qc {

using nlohmann::json;

inline json matrix_to_json(const Mat& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(row);
    }
    return rows;
}

inline Mat matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array()) fail(ErrorKind::ParseError, "matrix must be an array of rows");
    const auto rows = static_cast<Eigen::Index>(j.size()), cols = static_cast<Eigen::Index>(j[0].size());
    Mat m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const auto& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) fail(ErrorKind::ParseError, "ragged matrix");
        for (Eigen::Index k = 0; k < cols; ++k) {
            const auto& e = row[static_cast<std::size_t>(k)];
            if (e.is_number()) {
                m(i, k) = e.get<double>();
            } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
                m(i, k) = cplx(e[0].get<double>(), e[1].get<double>());
            } else {
                fail(ErrorKind::ParseError, "matrix entries must be [re,im] pairs");
            }
        }
    }
    return m;
}

inline json layout_to_json(const SystemLayout& l) {
    json out = json::array();
    for (std::size_t i = 0; i < l.size(); ++i) out.push_back({{"name", l.label(i)}, {"dim", l.dim(i)}});
    return out;
}

inline SystemLayout layout_from_json(const json& j) {
    if (!j.is_array()) fail(ErrorKind::ParseError, "labels must be an array");
    SystemLayout l;
    for (const auto& e : j) {
        if (!e.contains("name") || !e.contains("dim")) fail(ErrorKind::ParseError, "label entries need name and dim");
        l.push(e.at("name").get<std::string>(), e.at("dim").get<int>());
    }
    return l;
}

inline json state_to_json(const StateSpec& s) {
    return {{"labels", layout_to_json(s.layout())}, {"matrix", matrix_to_json(s.matrix())}};
}

inline StateSpec state_from_json(const json& j) {
    if (!j.is_object() || !j.contains("labels") || !j.contains("matrix")) fail(ErrorKind::ParseError, "state needs labels and matrix");
    return StateSpec(layout_from_json(j.at("labels")), matrix_from_json(j.at("matrix")));
}

// {"kraus":[...]} with optional "in"/"out" layouts (default A' -> B).
inline ChannelSpec channel_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kraus") || !j.at("kraus").is_array() || j.at("kraus").empty())
        fail(ErrorKind::ParseError, "channel needs a non-empty kraus list");
    std::vector<Mat> ks;
    for (const auto& k : j.at("kraus")) ks.push_back(matrix_from_json(k));
    SystemLayout in = j.contains("in") ? layout_from_json(j.at("in")) : SystemLayout{{"A'", static_cast<int>(ks[0].cols())}};
    SystemLayout out = j.contains("out") ? layout_from_json(j.at("out")) : SystemLayout{{"B", static_cast<int>(ks[0].rows())}};
    return ChannelSpec(in, out, ks);
}

inline json channel_to_json(const ChannelSpec& c) {
    json ks = json::array();
    for (const auto& k : c.kraus()) ks.push_back(matrix_to_json(k));
    return {{"in", layout_to_json(c.in_layout())}, {"out", layout_to_json(c.out_layout())}, {"kraus", ks}};
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::ParseError, "cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        fail(ErrorKind::ParseError, std::string("malformed JSON in '") + path + "': " + e.what());
    }
}

} // namespace ricalc::qc
