// Copyright 2026 the qaw authors
// SPDX-License-Identifier: Apache-2.0
//
// Bijective label <-> dense-index map for problem variables.  Labels are
// structured tags such as "x(2,3)", "y(4,2)", "z(1,0)", "a(2,3,4)" or
// "s(1,3,v2)"; the dense indices are what models and solvers operate on, so
// the hot paths stay allocation-free.

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace qaw {

class VariableRegistry {
  public:
    // Registers a new label and returns its dense index.  Throws on duplicates
    // (the registry must stay bijective).
    int add(const std::string& label) {
        auto [it, inserted] = index_.emplace(label, static_cast<int>(labels_.size()));
        if (!inserted) throw std::invalid_argument("duplicate variable label: " + label);
        labels_.push_back(label);
        return it->second;
    }

    int index_of(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end()) throw std::out_of_range("unknown variable label: " + label);
        return it->second;
    }

    bool contains(const std::string& label) const { return index_.count(label) != 0; }

    const std::string& label_of(int index) const { return labels_.at(static_cast<size_t>(index)); }

    int size() const { return static_cast<int>(labels_.size()); }

    const std::vector<std::string>& labels() const { return labels_; }

    nlohmann::json to_json() const { return nlohmann::json(labels_); }

    static VariableRegistry from_json(const nlohmann::json& j) {
        VariableRegistry r;
        for (const auto& l : j) r.add(l.get<std::string>());
        return r;
    }

  private:
    std::map<std::string, int> index_;
    std::vector<std::string> labels_;
};

}  // namespace qaw
