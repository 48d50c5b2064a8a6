#include "support.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "cli.hpp"

namespace mvspec::testing {

CliResult runCli(std::vector<std::string> args) {
    std::ostringstream out, err;
    CliResult r;
    r.code = cli::run(std::move(args), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string fixture(const std::string& relative) { return std::string(MVSPEC_FIXTURES) + "/" + relative; }

std::string readText(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::vector<AlgebraCase>& suiteCases() {
    static const std::vector<AlgebraCase> cases = [] {
        std::vector<AlgebraCase> out;
        for (auto& a : defaultSuite()) out.push_back(prepareCase(a));
        return out;
    }();
    return cases;
}

AlgebraPtr share(Algebra a) { return std::make_shared<const Algebra>(std::move(a)); }

Algebra chains(std::initializer_list<std::size_t> lengths) {
    std::vector<Algebra> factors;
    for (auto k : lengths) factors.push_back(chain(k));
    return product(factors);
}

Element el(const Algebra& a, std::string_view name) {
    for (std::size_t x = 0; x < a.size(); ++x)
        if (a.name(static_cast<Element>(x)) == name) return static_cast<Element>(x);
    throw std::invalid_argument("no element named " + std::string(name));
}

ElementSet set(const Algebra& a, std::initializer_list<std::string_view> names) {
    ElementSet s(a.size());
    for (auto n : names) s.insert(el(a, n));
    return s;
}

}  // namespace mvspec::testing
