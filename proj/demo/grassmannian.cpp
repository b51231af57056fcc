// Chern-class bookkeeping on Gr(G_x, n): tautological bundles, the tangent
// bundle as S_dual (x) Q, and the signed intersection numbers coming from
// the excess bundle.

#include <cstdio>
#include <string>

#include <nakafock/schubert.hpp>

using namespace nakafock;

namespace {

std::string render(const CohomClass& c) {
    if (c.is_zero()) return "0";
    std::string out;
    for (const auto& [mu, k] : c.terms()) {
        if (!out.empty()) out += " + ";
        out += k.str() + "*s" + mu.str();
    }
    return out;
}

}  // namespace

int main() {
    const GrassRing ring(4, 2);
    std::printf("Gr(2-dimensional quotients of C^4): top degree %d\n", ring.top_degree());

    const auto q = chern(Tautological::Q, ring);
    const auto s = chern(Tautological::S, ring);
    for (int i = 1; i <= 2; ++i)
        std::printf("  c_%d(Q) = %-22s c_%d(S) = %s\n", i,
                    render(q[static_cast<std::size_t>(i)]).c_str(), i,
                    render(s[static_cast<std::size_t>(i)]).c_str());

    const auto tangent = chern_tensor(ring, TensorVariant::Sdual_tensor_Q);
    for (std::size_t d = 1; d < tangent.size(); ++d)
        std::printf("  c_%zu(T) = %s\n", d, render(tangent[d]).c_str());
    std::printf("  integral of c_top(T) = %s  (Euler characteristic)\n",
                integrate(tangent.back(), ring).str().c_str());

    std::printf("\nsigned intersection numbers (-1)^((r-1)n) C(r,n):\n");
    for (int r = 1; r <= 5; ++r) {
        std::printf("  r=%d:", r);
        for (int n = 0; n <= r; ++n)
            std::printf(" %s", intersection_number(r, n).str().c_str());
        std::printf("\n");
    }

    std::printf("\nexcess class identity c(V) = c(S (x) Q_dual) on Gr(2 of 4): %s\n",
                excess_check(ring).pass ? "holds" : "FAILS");
    return excess_check(ring).pass ? 0 : 1;
}
