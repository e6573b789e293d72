#include <chrono>
#include <iostream>
#include <string>

#include "bei/family.hpp"
#include "bei/grobner.hpp"
#include "bei/hochster.hpp"
#include "bei/koszul.hpp"

using namespace bei;

namespace {

template <class F>
double time_call(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

void bench_expr(const std::string& text) {
    auto e = parse_expr(text);
    Graph g = build_graph(*e);
    auto gr = groebner_of_graph(g);
    std::cout << text << " (n=" << g.n << ", " << 2 * g.n << " vars)\n";

    if (2 * g.n <= kHochsterFullCap) {
        BettiTable a, b;
        double ts = time_call([&] { a = hochster_betti_serial(gr.inJ); });
        double tp = time_call([&] { b = hochster_betti(gr.inJ); });
        std::cout << "  hochster  serial " << ts << "s  parallel " << tp << "s  ("
                  << (tp > 0 ? ts / tp : 0) << "x, tables "
                  << (a.entries == b.entries ? "equal" : "DIFFER") << ")\n";
    }
    // the default Koszul degree bound is derived from the in(J) table,
    // so the full-table benchmark stops at the Hochster cap
    if (2 * g.n <= kHochsterFullCap) {
        BettiTable a, b;
        double ts = time_call([&] { a = koszul_betti_serial(gr); });
        double tp = time_call([&] { b = koszul_betti(gr); });
        std::cout << "  koszul    serial " << ts << "s  parallel " << tp << "s  ("
                  << (tp > 0 ? ts / tp : 0) << "x, tables "
                  << (a.entries == b.entries ? "equal" : "DIFFER") << ")\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) {
        for (int i = 1; i < argc; ++i) bench_expr(argv[i]);
        return 0;
    }
    for (const char* text : {"Fm(3)", "fan(4;2)", "cone(du(K(3),K(3)))", "K(7)"})
        bench_expr(text);
    return 0;
}
