// Scratch debugging harness for the OSp reduction (not part of the suite).
#include <iostream>
#include <random>

#include "loopslice/errors.hpp"
#include "loopslice/lattice.hpp"

using namespace loopslice;

int main() {
    struct Shape {
        int n, m;
        std::vector<long> a, b;
    };
    const std::vector<Shape> shapes{{1, 2, {2}, {}}, {2, 3, {2}, {1}}};
    const long prec = 8;
    for (const auto& sh : shapes) {
        std::mt19937_64 rng(0 ^ (0xc2b2ae35u * static_cast<unsigned>(sh.n * 8 + sh.m)));
        const FMatrix fixture = osp_fixture(sh.n, sh.m, sh.a, sh.b, prec);
        for (int t = 0; t < 100; ++t) {
            const FMatrix moved = osp_random_transform(fixture, rng, prec);
            try {
                sp_so_normal_form(moved);
            } catch (const std::exception& e) {
                std::cout << "shape (" << sh.n << "," << sh.m << ") trial " << t
                          << " failed: " << e.what() << "\n";
                std::cout << "input polar parts:\n";
                const FMatrix pol = moved.polar_part();
                for (int i = 0; i < pol.rows; ++i) {
                    for (int j = 0; j < pol.cols; ++j) std::cout << pol.at(i, j).str() << " | ";
                    std::cout << "\n";
                }
                return 1;
            }
        }
        std::cout << "shape (" << sh.n << "," << sh.m << ") ok\n";
    }
    return 0;
}
