#ifndef OIDEAL_RING_HPP
#define OIDEAL_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "oideal/field.hpp"

namespace oideal {

// Descriptor of R = k[x_1..x_n] with a fixed grevlex order. Shared immutably
// by every value built over it.
struct Ring {
    Field field;
    std::vector<std::string> vars;

    int nvars() const { return static_cast<int>(vars.size()); }
    int var_index(const std::string& name) const {
        for (int i = 0; i < nvars(); ++i)
            if (vars[i] == name) return i;
        return -1;
    }
    std::string describe() const;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(Field field, std::vector<std::string> vars);

// Same ring object, or structurally identical descriptor.
bool same_ring(const RingPtr& a, const RingPtr& b);

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where);

}  // namespace oideal

#endif
