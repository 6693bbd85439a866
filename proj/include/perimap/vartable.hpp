#pragma once

#include <initializer_list>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "perimap/errors.hpp"

namespace perimap {

// Ordered set of variable names. Every polynomial holds a shared pointer to
// its table; the order is fixed for the lifetime of anything referencing it.
class VarTable {
  public:
    explicit VarTable(std::vector<std::string> names) : names_(std::move(names)) {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (!index_.emplace(names_[i], static_cast<int>(i)).second)
                throw DegenerateError("duplicate variable name: " + names_[i]);
        }
    }

    static std::shared_ptr<const VarTable> make(std::vector<std::string> names) {
        return std::make_shared<const VarTable>(std::move(names));
    }
    static std::shared_ptr<const VarTable> make(std::initializer_list<const char*> names) {
        std::vector<std::string> v(names.begin(), names.end());
        return std::make_shared<const VarTable>(std::move(v));
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }

    int index_of(const std::string& n) const {
        auto it = index_.find(n);
        return it == index_.end() ? -1 : it->second;
    }
    int require(const std::string& n) const {
        int i = index_of(n);
        if (i < 0) throw VarMismatchError("unknown variable: " + n);
        return i;
    }

    bool same_names(const VarTable& o) const { return names_ == o.names_; }

  private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

inline bool compatible(const VarTablePtr& a, const VarTablePtr& b) {
    return a == b || (a && b && a->same_names(*b));
}

}  // namespace perimap
