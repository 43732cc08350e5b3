#include "hesspoly/space.hpp"

#include <map>
#include <memory>

namespace hesspoly {

int VariableSpace::index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (vars[i] == name) return i;
    throw space_mismatch("no variable '" + name + "' in space " + id);
}

namespace {

struct Registry {
    std::vector<std::unique_ptr<VariableSpace>> all;
    std::map<std::string, const VariableSpace*> by_id;

    void add(std::string id, std::vector<std::string> vars) {
        auto sp = std::make_unique<VariableSpace>();
        sp->id = std::move(id);
        sp->vars = std::move(vars);
        by_id[sp->id] = sp.get();
        all.push_back(std::move(sp));
    }

    Registry() {
        add("z3", {"z1", "z2", "z3"});
        add("y5", {"Y0", "Y1", "Y2", "Y3", "Y4"});
        add("w6", {"X", "Y", "Z", "ph", "Q1", "Q2"});
        add("fk4", {"f0", "f1", "H", "K"});
        add("hk2", {"H", "K"});
        add("a3", {"A0", "A1", "A2"});
        add("t1", {"t"});
        add("r1", {"r"});
        add("al1", {"al"});
        add("mu3", {"u", "v", "mu"});
        add("g6", {"g1", "g2", "g3", "g4", "g5", "g6"});
        add("x4", {"x1", "x2", "x3", "x4"});
        add("T2", {"T1", "T2"});
        add("zxy6", {"X", "Y", "Z", "ph", "Q1", "Q2", "x", "y", "z"});
        add("y5s", {"Y0", "Y1", "Y2", "Y3", "Y4", "s"});
        add("s1", {"s"});
        add("u1", {"u"});
        add("rho1", {"rho"});
    }
};

Registry& registry() {
    static Registry r;
    return r;
}

}  // namespace

const VariableSpace* space(const std::string& id) {
    auto& r = registry();
    auto it = r.by_id.find(id);
    if (it == r.by_id.end()) throw space_mismatch("unknown variable space: " + id);
    return it->second;
}

std::vector<std::string> space_ids() {
    std::vector<std::string> out;
    for (const auto& s : registry().all) out.push_back(s->id);
    return out;
}

}  // namespace hesspoly
