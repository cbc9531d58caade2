// Small tour of the library: evaluation, monodromy, exact special values,
// the deformed polylogarithm ODE and one identity suite.
#include <iomanip>
#include <iostream>

#include "lerch/lerch.hpp"

using namespace lerch;

int main() {
    std::cout << std::setprecision(15);

    // Phi(2, 1/2, 1) = 2 Li_2(1/2)
    EvalResult r = phi(2.0, 0.5, 1.0);
    std::cout << "Phi(2, 1/2, 1) = " << r.value.real() << "  [" << to_string(r.method) << ", err "
              << r.error_estimate << "]\n";

    // the same function outside the unit disk, by reflection
    r = phi(cplx(0.5, 0.2), cplx(-3.0, 1.0), 0.7);
    std::cout << "Phi(0.5+0.2i, -3+i, 0.7) = " << r.value << "  [" << to_string(r.method) << "]\n";

    // continue along Z1: base value plus the f_0 term
    BranchValue bv = branch_value(parse_word("Z1"), 0.5, -1.0, 0.5);
    std::cout << "along Z1: base " << bv.base << ", total " << bv.total << "\n";
    for (const auto& c : bv.contributions) std::cout << "  " << c.term << " = " << c.value << "\n";

    // exact values at negative integer s
    std::cout << "r_4(z) = " << r_poly(4).to_string() << "\n";
    RationalEval li = negative_polylog(1).evaluate(Rational(2), Rational(0));
    std::cout << "Li_{-1}(2, 0) = " << to_string(*li.value) << "\n";

    // Fuchsian operator of Li_{2,1/2} and its monodromy
    std::cout << to_string(weyl_expand(2)) << "\n";
    Param c = Param::rational(Rational(1, 2));
    std::cout << "rho(Z0) for m=2, c=1/2:\n" << rho(LetterKind::Z0, 2, c).entries << "\n";
    std::cout << "class: " << to_string(unipotency_class(2, c)) << "\n";

    SuiteReport rep = run_suite("ladders");
    std::cout << "ladders suite: " << (rep.passed ? "passed" : "failed") << " (" << rep.reports.size()
              << " checks)\n";
    return rep.passed ? 0 : 1;
}
