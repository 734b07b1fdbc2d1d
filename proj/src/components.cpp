#include "quartic/components.hpp"

#include "quartic/poly_parse.hpp"

namespace quartic {

namespace {

const char* const kX4J1[] = {
    "s^2*a^4-u^2*b^4+s^2*u*a^2-s*u^2*b^2-4*a^4+4*b^4-4*u*a^2+4*s*b^2+s^2-u^2",
    "r*u^2*a^2*b^2-r^2*a^4+u^2*a^4+u^2*b^4-r^2*u*a^2-4*r*a^2*b^2-4*b^4+4*u*a^2-r^2+4",
    "r*s^2*a^2*b^2-r^2*b^4+s^2*b^4+u^2*b^4-s^2*u*a^2-r^2*s*b^2+s*u^2*b^2-4*r*a^2*b^2-4*b^4+4*u*a^2-r^2-s^2+u^2+4",
    "s*u*a^2*b^4+u^2*b^6+s*u^2*b^4-2*r*a^2*b^4-2*r*s*a^2*b^2-r*u*b^4-4*b^6-r*s*u*b^2+4*u*a^2*b^2-2*s*b^4+s*u*a^2+u^2*b^2-2*r*a^2-r*u+4*b^2+2*s",
    "s^2*a^2*b^4+s*u*b^6+s^2*u*b^4-2*r*b^6-3*r*s*b^4-4*a^2*b^4-r*s^2*b^2+2*u*b^4-s^2*a^2+3*s*u*b^2-2*r*b^2-r*s+4*a^2+2*u",
    "r*s*a^2*b^4-r*u*b^6-r*s*u*b^4-2*u*a^2*b^4+2*s*b^6-2*s*u*a^2*b^2+r^2*b^4+r^2*s*b^2+4*r*a^2*b^2+r*s*a^2-r*u*b^2+4*b^4-2*u*a^2-2*s*b^2+r^2-4",
    "s*u*a^4*b^2+u^2*a^2*b^4+s*u^2*a^2*b^2-2*r*a^4*b^2-r*s*a^4-2*r*u*a^2*b^2-4*a^2*b^4-r*s*u*a^2+2*u*a^4+u^2*a^2+s*u*b^2-2*r*b^2-r*s+4*a^2+2*u",
    "r*s*a^4*b^2-r*u*a^2*b^4-2*u*a^4*b^2+2*s*a^2*b^4-s*u*a^4+s*u*b^4+2*r*a^4-2*r*b^4+r*u*a^2-r*s*b^2-2*s*a^2+2*u*b^2",
    "s*u*a^6+u^2*a^4*b^2+s*u^2*a^4-2*r*a^6-3*r*u*a^4-4*a^4*b^2-r*u^2*a^2+2*s*a^4+3*s*u*a^2-u^2*b^2-2*r*a^2-r*u+4*b^2+2*s",
    "r*s*a^6-r*u*a^4*b^2+r*s*u*a^4-2*u*a^6+2*s*a^4*b^2-r^2*a^4+2*s*u*a^2*b^2-r^2*u*a^2-4*r*a^2*b^2+r*s*a^2-4*a^4-r*u*b^2+2*u*a^2+2*s*b^2-r^2+4",
};

const char* const kX4J1Eliminant =
    "-b^4*s^2*u^2-2*b^6*s*u^2-2*b^2*s*u^2-b^8*u^2-2*b^4*u^2-u^2+b^6*r*s^2*u+b^2*r*s^2*u+b^8*r*s*u"
    "+6*b^4*r*s*u+r*s*u+4*b^6*r*u+4*b^2*r*u-b^4*r^2*s^2-b^8*s^2+2*b^4*s^2-s^2-2*b^6*r^2*s"
    "-2*b^2*r^2*s-b^8*r^2-2*b^4*r^2-r^2+4*b^8-8*b^4+4";

// coefficients of B^0 .. B^4
const char* const kX4J1QuarticB[] = {
    "r*s*u-s^2-r^2+4-u^2",
    "-2*s*u^2+r*s^2*u+4*r*u-2*r^2*s",
    "-s^2*u^2-2*u^2+6*r*s*u-r^2*s^2+2*s^2-2*r^2-8",
    "-2*s*u^2+r*s^2*u+4*r*u-2*r^2*s",
    "-u^2+r*s*u-s^2-r^2+4",
};

Component make(std::string tag, std::initializer_list<const char*> gens)
{
    Component c;
    c.tag = std::move(tag);
    for (const char* g : gens) c.generators.push_back(parse_polynomial(g, component_table()));
    return c;
}

}  // namespace

TablePtr component_table()
{
    static const TablePtr table = make_table({"a", "b"}, {"r", "s", "u"});
    return table;
}

const Polynomial& x4_j1_eliminant()
{
    static const Polynomial p = parse_polynomial(kX4J1Eliminant, component_table());
    return p;
}

std::vector<Polynomial> x4_j1_quartic_in_B()
{
    std::vector<Polynomial> out;
    for (const char* c : kX4J1QuarticB) out.push_back(parse_polynomial(c, component_table()));
    return out;
}

const std::vector<Component>& x4_components()
{
    static const std::vector<Component> comps = [] {
        Component j1;
        j1.tag = "X4.J1";
        for (const char* g : kX4J1) j1.generators.push_back(parse_polynomial(g, component_table()));
        j1.eliminants.push_back(x4_j1_eliminant());
        return std::vector<Component>{
            j1,
            make("X4.J2", {"a", "u^2*b^4+2*r*u*b^2-4*b^4-4*s*b^2+r^2-4"}),
            make("X4.J3", {"b", "s^2*a^4+2*r*s*a^2-4*a^4-4*u*a^2+r^2-4"}),
        };
    }();
    return comps;
}

const std::vector<Component>& x16_components()
{
    static const std::vector<Component> comps{
        make("X16.J1", {"a", "s^2*b^4+2*r*s*b^2-4*b^4-4*s*b^2+r^2-4"}),
        make("X16.J2", {"b", "s^2*a^4+2*r*s*a^2-4*a^4-4*s*a^2+r^2-4"}),
        make("X16.J5", {"a+b", "s^2*b^4-r*b^4-r*s*b^2-2*b^4+2*s*b^2-r+2"}),
        make("X16.J6", {"a-b", "s^2*b^4-r*b^4-r*s*b^2-2*b^4+2*s*b^2-r+2"}),
        make("X16.J7", {"a^2+b^2+s", "r*b^4+r*s*b^2-2*b^4-2*s*b^2-s^2+r+2"}),
    };
    return comps;
}

const std::vector<Component>& x24_components()
{
    static const std::vector<Component> comps{
        make("X24.J2", {"a", "r*b^4+2*b^4+2*r*b^2+r+2"}),
        make("X24.J3", {"b", "r*a^4+2*a^4+2*r*a^2+r+2"}),
        make("X24.J4", {"b+1", "a-1"}),
        make("X24.J5", {"b-1", "a+1"}),
        make("X24.J6", {"a+b", "r*b^2+b^2+1"}),
        make("X24.J7", {"b+1", "a+1"}),
        make("X24.J8", {"b-1", "a-1"}),
        make("X24.J9", {"a-b", "r*b^2+b^2+1"}),
        make("X24.J10", {"a+1", "b^2+r+1"}),
        make("X24.J11", {"a-1", "b^2+r+1"}),
        make("X24.J12", {"b+1", "a^2+r+1"}),
        make("X24.J13", {"b-1", "a^2+r+1"}),
    };
    return comps;
}

}  // namespace quartic
