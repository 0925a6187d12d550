#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace logjets {

using Var = std::uint32_t;

// Interns variable names; the insertion index is the variable id and fixes the
// term order (earlier id = more significant in graded-lex comparisons).
class VarPool {
public:
    Var intern(const std::string& name) {
        auto it = index_.find(name);
        if (it != index_.end()) return it->second;
        Var id = static_cast<Var>(names_.size());
        names_.push_back(name);
        index_.emplace(name, id);
        return id;
    }

    Var lookup(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) throw std::out_of_range("unknown variable: " + name);
        return it->second;
    }

    bool contains(const std::string& name) const { return index_.count(name) != 0; }

    const std::string& name(Var id) const { return names_.at(id); }

    std::size_t size() const { return names_.size(); }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, Var> index_;
};

} // namespace logjets
