#pragma once
#include <optional>
#include <string>
#include <vector>

#include "../algebra/parser.hpp"
#include "lab.hpp"

namespace ricalc::sim {

struct SimResult {
    std::string protocol;
    StateSpec output;                 // environments traced out
    std::optional<StateSpec> qp;      // environments kept (keep_env runs only)
    double accuracy = 0;              // trace distance to the target output
    double residual = 0;              // decoupling residual, when the protocol defines one
    double validity = 0;              // worst deviation of a resource input from its test state
    alg::ResourceExpr consumed;       // tallied resource uses
    alg::ResourceExpr declared_consumed;
    alg::ResourceExpr declared_created;
    std::vector<std::string> untallied;
};

inline bool ledger_matches(const SimResult& r) { return alg::equivalent(r.consumed, r.declared_consumed, alg::Context{}); }

inline Mat ordered_matrix(const StateSpec& s, const std::vector<std::string>& order) {
    if (s.layout().labels() == order) return s.matrix();
    return qc::reorder(s, order).matrix();
}

enum class DecouplingMode { Incoherent, Coherent };

// || s^{XQ} - s^X (x) s^Q ||_1 with X = `classical` and Q = every other label.
// Uses the block structure when X is classical in its basis.
inline double product_residual(const StateSpec& s, const std::vector<std::string>& classical) {
    std::vector<std::string> rest;
    for (const auto& l : s.layout().labels())
        if (std::find(classical.begin(), classical.end(), l) == classical.end()) rest.push_back(l);
    for (const auto& l : classical) s.layout().index_of(l);
    if (rest.empty()) return 0.0;
    std::vector<std::string> order = classical;
    order.insert(order.end(), rest.begin(), rest.end());
    Mat m = ordered_matrix(s, order);
    const auto dx = static_cast<Eigen::Index>(s.layout().dim_of(classical));
    const auto dq = m.rows() / dx;
    Mat sq = Mat::Zero(dq, dq);
    for (Eigen::Index x = 0; x < dx; ++x) sq += m.block(x * dq, x * dq, dq, dq);
    Mat sx = Mat::Zero(dx, dx);
    for (Eigen::Index i = 0; i < dx; ++i)
        for (Eigen::Index j = 0; j < dx; ++j) sx(i, j) = m.block(i * dq, j * dq, dq, dq).trace();
    bool block_diagonal = true;
    for (Eigen::Index i = 0; i < dx && block_diagonal; ++i)
        for (Eigen::Index j = 0; j < dx && block_diagonal; ++j)
            if (i != j && m.block(i * dq, j * dq, dq, dq).cwiseAbs().maxCoeff() > 1e-14) block_diagonal = false;
    if (!block_diagonal) return qc::trace_norm_hermitian(m - qc::kron(sx, sq));
    double total = 0;
    for (Eigen::Index x = 0; x < dx; ++x) total += qc::trace_norm_hermitian(m.block(x * dq, x * dq, dq, dq) - sx(x, x) * sq);
    return total;
}

// ||a - b||_1 computed block by block when both are block diagonal in the `classical` labels.
inline double block_trace_distance(const StateSpec& a, const StateSpec& b, const std::vector<std::string>& classical) {
    std::vector<std::string> order = classical;
    for (const auto& l : a.layout().labels())
        if (std::find(classical.begin(), classical.end(), l) == classical.end()) order.push_back(l);
    if (a.layout().select(order) != b.layout().select(order)) fail(ErrorKind::DimensionMismatch, "layouts differ");
    Mat ma = ordered_matrix(a, order), mb = ordered_matrix(b, order);
    const auto dx = static_cast<Eigen::Index>(a.layout().dim_of(classical));
    const auto dq = ma.rows() / dx;
    Mat diff = ma - mb;
    for (Eigen::Index i = 0; i < dx; ++i)
        for (Eigen::Index j = 0; j < dx; ++j)
            if (i != j && diff.block(i * dq, j * dq, dq, dq).cwiseAbs().maxCoeff() > 1e-14) return qc::trace_norm_hermitian(diff);
    double total = 0;
    for (Eigen::Index x = 0; x < dx; ++x) total += qc::trace_norm_hermitian(diff.block(x * dq, x * dq, dq, dq));
    return total;
}

inline double check_decoupling(const SimResult& r, const std::vector<std::string>& classical, DecouplingMode mode) {
    if (mode == DecouplingMode::Incoherent) return product_residual(r.output, classical);
    if (!r.qp) fail(ErrorKind::InvalidObject, "coherent decoupling needs a run that kept the environment");
    return product_residual(*r.qp, classical);
}

inline SimResult finish(const Lab& lab, std::string name, const StateSpec& target, const std::string& consumed, const std::string& created) {
    SimResult r;
    r.protocol = std::move(name);
    r.output = lab.qq_state();
    if (lab.keeps_env()) r.qp = lab.state();
    r.accuracy = info::trace_distance(qc::reorder(qc::partial_trace(r.output, target.layout().labels()), target.layout().labels()), target);
    r.validity = lab.max_validity();
    r.consumed = lab.consumed();
    r.declared_consumed = alg::parse_expr(consumed);
    r.declared_created = alg::parse_expr(created);
    r.untallied = lab.untallied();
    return r;
}

} // namespace ricalc::sim
