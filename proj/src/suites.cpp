#include "eqt/suites.hpp"

#include <stdexcept>

namespace eqt {

bool SuiteReport::ok() const
{
    for (const auto& c : checks)
        if (!c.ok && !c.informational)
            return false;
    return true;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"em", "classifying", "koszul", "torus", "ih"};
    return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& o)
{
    if (name == "em")
        return run_em_suite(o);
    if (name == "classifying")
        return run_classifying_suite(o);
    if (name == "koszul")
        return run_koszul_suite(o);
    if (name == "torus")
        return run_torus_suite(o);
    if (name == "ih")
        return run_ih_suite(o);
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace eqt
