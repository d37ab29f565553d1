#pragma once
#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "../util/error.hpp"

namespace ricalc::qc {

inline constexpr std::size_t kMaxTotalDim = 4096;

struct Subsystem {
    std::string name;
    int dim = 1;
};

// Ordered labelled subsystems; matrices act on the row-major Kronecker product
// of the subsystems in this order.
class SystemLayout {
public:
    SystemLayout() = default;
    SystemLayout(std::initializer_list<Subsystem> systems) : SystemLayout(std::vector<Subsystem>(systems)) {}
    explicit SystemLayout(const std::vector<Subsystem>& systems) {
        for (const auto& s : systems) push(s.name, s.dim);
    }
    SystemLayout(const std::vector<std::string>& labels, const std::vector<int>& dims) {
        if (labels.size() != dims.size()) fail(ErrorKind::DimensionMismatch, "labels/dims length differ");
        for (std::size_t i = 0; i < labels.size(); ++i) push(labels[i], dims[i]);
    }

    std::size_t size() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    int dim(std::size_t i) const { return dims_.at(i); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<int>& dims() const { return dims_; }
    std::size_t total_dim() const { return total_; }

    bool contains(const std::string& l) const { return std::find(labels_.begin(), labels_.end(), l) != labels_.end(); }
    std::size_t index_of(const std::string& l) const {
        auto it = std::find(labels_.begin(), labels_.end(), l);
        if (it == labels_.end()) fail(ErrorKind::UnknownLabel, "no subsystem '" + l + "'");
        return static_cast<std::size_t>(it - labels_.begin());
    }
    int dim_of(const std::string& l) const { return dims_[index_of(l)]; }
    std::size_t dim_of(const std::vector<std::string>& ls) const {
        std::size_t d = 1;
        for (const auto& l : ls) d *= static_cast<std::size_t>(dim_of(l));
        return d;
    }

    SystemLayout select(const std::vector<std::string>& ls) const {
        SystemLayout out;
        for (const auto& l : ls) out.push(l, dim_of(l));
        return out;
    }
    SystemLayout without(const std::vector<std::string>& ls) const {
        for (const auto& l : ls) index_of(l);
        SystemLayout out;
        for (std::size_t i = 0; i < size(); ++i)
            if (std::find(ls.begin(), ls.end(), labels_[i]) == ls.end()) out.push(labels_[i], dims_[i]);
        return out;
    }
    SystemLayout renamed(const std::map<std::string, std::string>& names) const {
        SystemLayout out;
        for (std::size_t i = 0; i < size(); ++i) {
            auto it = names.find(labels_[i]);
            out.push(it == names.end() ? labels_[i] : it->second, dims_[i]);
        }
        return out;
    }
    void push(const std::string& name, int dim) {
        if (name.empty()) fail(ErrorKind::InvalidObject, "empty subsystem label");
        if (dim < 1) fail(ErrorKind::DimensionMismatch, "subsystem '" + name + "' has dimension < 1");
        if (contains(name)) fail(ErrorKind::DuplicateLabel, "label '" + name + "' repeated");
        std::size_t t = (labels_.empty() ? 1 : total_) * static_cast<std::size_t>(dim);
        if (t > kMaxTotalDim) fail(ErrorKind::OutOfRange, "total dimension exceeds 4096");
        labels_.push_back(name);
        dims_.push_back(dim);
        total_ = t;
    }

    friend SystemLayout concat(const SystemLayout& a, const SystemLayout& b) {
        SystemLayout out = a;
        for (std::size_t i = 0; i < b.size(); ++i) out.push(b.labels_[i], b.dims_[i]);
        return out;
    }
    bool operator==(const SystemLayout& o) const { return labels_ == o.labels_ && dims_ == o.dims_; }
    bool operator!=(const SystemLayout& o) const { return !(*this == o); }

private:
    std::vector<std::string> labels_;
    std::vector<int> dims_;
    std::size_t total_ = 1;
};

} // namespace ricalc::qc
