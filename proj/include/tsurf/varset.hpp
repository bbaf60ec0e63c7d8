#ifndef TSURF_VARSET_HPP
#define TSURF_VARSET_HPP

#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tsurf {

/// Ordered list of variable display names. Identity of a variable is its
/// position; names are presentation only, but must be unique and nonempty.
class VarSet {
public:
    VarSet() = default;
    VarSet(std::initializer_list<std::string> names) : names_(names) { check(); }
    explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) { check(); }

    static VarSet surface() { return VarSet{"x1", "x2", "x3"}; }
    static VarSet surface_t1() { return VarSet{"x1", "x2", "x3", "t1"}; }
    static VarSet single(const std::string& name) { return VarSet{name}; }

    int arity() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<int> index_of(const std::string& nm) const {
        for (int i = 0; i < arity(); ++i)
            if (names_[i] == nm) return i;
        return std::nullopt;
    }

    bool operator==(const VarSet& o) const { return names_ == o.names_; }
    bool operator!=(const VarSet& o) const { return !(*this == o); }

private:
    void check() const {
        for (size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty()) throw std::invalid_argument("VarSet: empty variable name");
            for (size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j])
                    throw std::invalid_argument("VarSet: duplicate variable name " + names_[i]);
        }
    }

    std::vector<std::string> names_;
};

} // namespace tsurf

#endif
