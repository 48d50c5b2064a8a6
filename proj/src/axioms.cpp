#include "mvspec/algebra.hpp"

namespace mvspec {

std::vector<AxiomViolation> checkAxioms(const Algebra& a) {
    std::vector<AxiomViolation> out;
    const auto n = static_cast<Element>(a.size());
    const Element zero = 0;
    const Element one = a.top();

    auto first1 = [&](const char* name, auto&& holds) {
        for (Element x = 0; x < n; ++x)
            if (!holds(x)) {
                out.push_back({name, {x}});
                return;
            }
    };
    auto first2 = [&](const char* name, auto&& holds) {
        for (Element x = 0; x < n; ++x)
            for (Element y = 0; y < n; ++y)
                if (!holds(x, y)) {
                    out.push_back({name, {x, y}});
                    return;
                }
    };
    auto first3 = [&](const char* name, auto&& holds) {
        for (Element x = 0; x < n; ++x)
            for (Element y = 0; y < n; ++y)
                for (Element z = 0; z < n; ++z)
                    if (!holds(x, y, z)) {
                        out.push_back({name, {x, y, z}});
                        return;
                    }
    };

    // Defining identities.
    first2("x+y = y+x", [&](Element x, Element y) { return a.oplus(x, y) == a.oplus(y, x); });
    first3("(x+y)+z = x+(y+z)",
           [&](Element x, Element y, Element z) { return a.oplus(a.oplus(x, y), z) == a.oplus(x, a.oplus(y, z)); });
    first1("x+0 = x", [&](Element x) { return a.oplus(x, zero) == x; });
    first1("~~x = x", [&](Element x) { return a.neg(a.neg(x)) == x; });
    first1("x+~0 = ~0", [&](Element x) { return a.oplus(x, one) == one; });
    first2("~(~x+y)+y = ~(~y+x)+x", [&](Element x, Element y) {
        return a.oplus(a.neg(a.oplus(a.neg(x), y)), y) == a.oplus(a.neg(a.oplus(a.neg(y), x)), x);
    });

    // Order and lattice structure read off the derived tables.
    first1("x <= x", [&](Element x) { return a.leq(x, x); });
    first2("x <= y and y <= x imply x = y",
           [&](Element x, Element y) { return !(a.leq(x, y) && a.leq(y, x)) || x == y; });
    first3("x <= y <= z implies x <= z",
           [&](Element x, Element y, Element z) { return !(a.leq(x, y) && a.leq(y, z)) || a.leq(x, z); });
    first1("0 <= x <= 1", [&](Element x) { return a.leq(zero, x) && a.leq(x, one); });
    first3("join is the least upper bound", [&](Element x, Element y, Element z) {
        const Element j = a.join(x, y);
        if (!a.leq(x, j) || !a.leq(y, j)) return false;
        return !(a.leq(x, z) && a.leq(y, z)) || a.leq(j, z);
    });
    first3("meet is the greatest lower bound", [&](Element x, Element y, Element z) {
        const Element m = a.meet(x, y);
        if (!a.leq(m, x) || !a.leq(m, y)) return false;
        return !(a.leq(z, x) && a.leq(z, y)) || a.leq(z, m);
    });
    first3("x*z <= y iff z <= x->y",
           [&](Element x, Element y, Element z) { return a.leq(a.otimes(x, z), y) == a.leq(z, a.imp(x, y)); });
    return out;
}

}  // namespace mvspec
