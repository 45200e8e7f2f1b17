#include "eqt/spaces.hpp"

#include <stdexcept>

namespace eqt {

namespace {

Simplex ref(std::int64_t id, int dim, Word w = {})
{
    return {std::move(w), dim, {id}};
}

}  // namespace

std::shared_ptr<FiniteSpace> point_space()
{
    return std::make_shared<FiniteSpace>(std::vector<FiniteSpace::Gen>{{"pt", 0, {}}}, "pt");
}

std::shared_ptr<FiniteSpace> two_points()
{
    return std::make_shared<FiniteSpace>(std::vector<FiniteSpace::Gen>{{"a", 0, {}}, {"b", 0, {}}}, "2pt");
}

std::shared_ptr<FiniteSpace> circle1()
{
    std::vector<FiniteSpace::Gen> g{{"v", 0, {}}, {"e", 1, {ref(0, 0), ref(0, 0)}}};
    return std::make_shared<FiniteSpace>(g, "S1");
}

std::shared_ptr<FiniteSpace> sphere2()
{
    Simplex sv = ref(0, 0, {0});
    std::vector<FiniteSpace::Gen> g{{"v", 0, {}}, {"s", 2, {sv, sv, sv}}};
    return std::make_shared<FiniteSpace>(g, "S2");
}

MappedSpace sphere_over_circle_base(std::int64_t d)
{
    return {sphere2(), {Key{}, BarSpace::join({{}, {d}})}};
}

FilteredSpace pinched_torus()
{
    std::vector<FiniteSpace::Gen> g;
    for (const char* v : {"m0", "m1", "m2", "c"})
        g.push_back({v, 0, {}});
    const std::int64_t c = 3;
    for (int i = 0; i < 3; ++i)
        g.push_back({"e" + std::to_string(i), 1, {ref((i + 1) % 3, 0), ref(i, 0)}});
    for (const char* l : {"u", "w"})
        for (int i = 0; i < 3; ++i)
            g.push_back({l + std::to_string(i), 1, {ref(c, 0), ref(i, 0)}});
    for (int side = 0; side < 2; ++side)
        for (int i = 0; i < 3; ++i) {
            std::int64_t base = 7 + 3 * side;
            g.push_back({(side ? "B" : "T") + std::to_string(i), 2,
                         {ref(base + (i + 1) % 3, 1), ref(base + i, 1), ref(4 + i, 1)}});
        }
    FilteredSpace F{std::make_shared<FiniteSpace>(g, "pinched-torus"), std::vector<int>(g.size(), 0)};
    F.label[static_cast<std::size_t>(c)] = 2;
    return F;
}

const std::vector<std::string>& builtin_names()
{
    static const std::vector<std::string> n{"point", "two-points", "circle", "sphere", "pinched-torus"};
    return n;
}

std::shared_ptr<FiniteSpace> builtin_space(const std::string& name)
{
    if (name == "point")
        return point_space();
    if (name == "two-points")
        return two_points();
    if (name == "circle")
        return circle1();
    if (name == "sphere")
        return sphere2();
    if (name == "pinched-torus")
        return std::const_pointer_cast<FiniteSpace>(pinched_torus().X);
    throw std::invalid_argument("unknown builtin space: " + name);
}

}  // namespace eqt
