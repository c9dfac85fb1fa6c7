#pragma once

#include <memory>
#include <string>
#include <vector>

namespace ssyn {

enum class VarKind { Plain, Primed, Dotted };

// Ordered, immutable list of named coordinates. The order defines the
// coordinate index of every variable for the lifetime of a model.
// Primed variables represent post-transition values, dotted variables
// first derivatives; display forms are "x'" and "dx".
class VarSpace {
  public:
    VarSpace(std::vector<std::string> names, std::vector<VarKind> kinds);

    static std::shared_ptr<const VarSpace> plain(std::vector<std::string> names);
    // Plain block followed by the primed copy of the same variables.
    static std::shared_ptr<const VarSpace> plain_primed(const std::vector<std::string>& names);
    static std::shared_ptr<const VarSpace> dotted(const std::vector<std::string>& names);

    size_t dim() const { return names_.size(); }
    const std::string& name(size_t i) const { return names_[i]; }
    VarKind kind(size_t i) const { return kinds_[i]; }
    std::string display_name(size_t i) const;

    // Index of a variable given base name and kind, or -1.
    int index_of(const std::string& base, VarKind kind) const;

    bool same_as(const VarSpace& other) const;

    const std::vector<std::string>& names() const { return names_; }

  private:
    std::vector<std::string> names_;
    std::vector<VarKind> kinds_;
};

using VarSpacePtr = std::shared_ptr<const VarSpace>;

inline bool same_space(const VarSpacePtr& a, const VarSpacePtr& b) {
    return a == b || (a && b && a->same_as(*b));
}

}  // namespace ssyn
