#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hesspoly {

/// An ordered list of variable names.  Spaces are interned: equal ids give the
/// same pointer, so polynomials can compare spaces by address.
struct VariableSpace {
    std::string id;
    std::vector<std::string> vars;

    int size() const { return static_cast<int>(vars.size()); }
    int index_of(const std::string& name) const;
};

/// Look up a registered space by id (e.g. "z3", "y5", "w6").  Throws on
/// unknown ids.
const VariableSpace* space(const std::string& id);

/// All registered space ids in registration order.
std::vector<std::string> space_ids();

struct space_mismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hesspoly
