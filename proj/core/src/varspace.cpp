#include "ssyn/varspace.hpp"

#include <stdexcept>
#include <unordered_set>

namespace ssyn {

VarSpace::VarSpace(std::vector<std::string> names, std::vector<VarKind> kinds)
    : names_(std::move(names)), kinds_(std::move(kinds)) {
    if (names_.size() != kinds_.size())
        throw std::invalid_argument("VarSpace: names/kinds size mismatch");
    std::unordered_set<std::string> seen;
    for (size_t i = 0; i < names_.size(); ++i) {
        if (!seen.insert(display_name(i)).second)
            throw std::invalid_argument("VarSpace: duplicate variable " + display_name(i));
    }
}

std::shared_ptr<const VarSpace> VarSpace::plain(std::vector<std::string> names) {
    std::vector<VarKind> kinds(names.size(), VarKind::Plain);
    return std::make_shared<VarSpace>(std::move(names), std::move(kinds));
}

std::shared_ptr<const VarSpace> VarSpace::plain_primed(const std::vector<std::string>& names) {
    std::vector<std::string> all = names;
    std::vector<VarKind> kinds(names.size(), VarKind::Plain);
    for (const auto& n : names) {
        all.push_back(n);
        kinds.push_back(VarKind::Primed);
    }
    return std::make_shared<VarSpace>(std::move(all), std::move(kinds));
}

std::shared_ptr<const VarSpace> VarSpace::dotted(const std::vector<std::string>& names) {
    std::vector<VarKind> kinds(names.size(), VarKind::Dotted);
    return std::make_shared<VarSpace>(names, std::move(kinds));
}

std::string VarSpace::display_name(size_t i) const {
    switch (kinds_[i]) {
        case VarKind::Plain: return names_[i];
        case VarKind::Primed: return names_[i] + "'";
        case VarKind::Dotted: return "d" + names_[i];
    }
    return names_[i];
}

int VarSpace::index_of(const std::string& base, VarKind kind) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (kinds_[i] == kind && names_[i] == base) return static_cast<int>(i);
    return -1;
}

bool VarSpace::same_as(const VarSpace& other) const {
    return names_ == other.names_ && kinds_ == other.kinds_;
}

}  // namespace ssyn
