#pragma once

#include <optional>

#include "hesspoly/mpoly.hpp"

namespace hesspoly {

struct FormDef {
    std::string name;
    std::string space_id;
    /// Declared homogeneous degree; empty for inhomogeneous forms.
    std::optional<int> degree;
};

namespace forms {

/// Build a registered form by name.  Results are cached; homogeneity of the
/// declared degree is asserted on first build.
const MPoly& build(const std::string& name);

bool is_registered(const std::string& name);
std::vector<FormDef> list();

/// The pullback along X->z1^3, Y->z2^3, Z->z3^3, ph->z1z2z3,
/// Q1->z1z2^2+z2z3^2+z3z1^2, Q2->z1^2z2+z2^2z3+z3^2z1.
MPoly pullback_z(const MPoly& f_in_w6);

/// The six pullback images in z3, in w6 variable order.
const std::vector<MPoly>& pullback_images();

}  // namespace forms

}  // namespace hesspoly
