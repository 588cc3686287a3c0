#include "dtuple/families.hpp"

#include <stdexcept>

namespace dtuple {

namespace {

DTuple verified(const Int& n, std::vector<Int> elements, const char* what) {
    auto report = verify(n, std::move(elements));
    if (!report.valid)
        throw std::logic_error(std::string("family ") + what + " failed verification");
    return report.tuple;
}

}  // namespace

DTuple d1_quadruple(const Int& k) {
    if (k < 1) throw input_error("d1_quadruple: k must be >= 1");
    return verified(1, {k, k + 2, 4 * k + 4, 16 * k * k * k + 48 * k * k + 44 * k + 12},
                    "d1_quadruple");
}

DTuple dsq_triple(const Int& a) {
    if (a < 5) throw input_error("dsq_triple: a must be >= 5");
    return verified(a * a, {a * a + 1, a * a + 2 * a + 1, 4 * a * a + 4 * a + 4},
                    "dsq_triple");
}

const std::vector<Fixture>& catalog() {
    static const std::vector<Fixture> fixtures = [] {
        std::vector<Fixture> list;
        list.push_back({"diophantus",
                        verified(256, {1, 33, 68, 105}, "diophantus"),
                        "Diophantus"});
        list.push_back({"fermat",
                        verified(1, {1, 3, 8, 120}, "fermat"),
                        "Fermat"});
        list.push_back({"d256-quintuple",
                        verified(256, {1, 33, 105, 320, 18240}, "d256-quintuple"),
                        "regular extension chain of {1,33,105}"});
        list.push_back({"gibbs-sextuple",
                        verified(2985984, {99, 315, 9920, 32768, 44460, 19534284},
                                 "gibbs-sextuple"),
                        "Gibbs"});
        list.push_back({"d2-triple",
                        verified(2, {1, 2, 7}, "d2-triple"),
                        "smallest D(2) triple"});
        return list;
    }();
    return fixtures;
}

}  // namespace dtuple
