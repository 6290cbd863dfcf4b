#pragma once

#include <string>
#include <vector>

namespace rmx {

struct CheckItem {
    std::string name;
    bool pass = true;
    std::string witness; // first violating basis tuple, empty on pass
};

struct AxiomReport {
    std::vector<CheckItem> items;

    bool all_pass() const {
        for (const CheckItem &item : items)
            if (!item.pass)
                return false;
        return true;
    }
    void add(std::string name, bool pass, std::string witness = "") {
        items.push_back({std::move(name), pass, std::move(witness)});
    }
};

} // namespace rmx
