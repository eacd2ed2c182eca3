#include "wrp/lemma_suite.hpp"

#include <sstream>

#include "wrp/char_sums.hpp"

namespace wrp {

namespace {

void add(std::vector<LemmaCheck>& out, const std::string& name, bool pass, const std::string& detail = "") {
    out.push_back(LemmaCheck{name, pass, detail});
}

}  // namespace

std::vector<LemmaCheck> run_lemma_suite() {
    std::vector<LemmaCheck> out;

    // quadratic Gauss sums against (-1)^{m-1} G(eta)^m
    for (auto [p, m] : std::vector<std::pair<int, int>>{{5, 1}, {5, 2}, {5, 3}, {13, 1}, {13, 2}, {17, 1}}) {
        FieldSpec spec = FieldSpec::make(p, m);
        bool ok = gauss_sum(spec) == gauss_sum_closed(spec);
        add(out, "gauss-sum p=" + std::to_string(p) + " m=" + std::to_string(m), ok);
    }

    // G(eta)^2 = p* and the Galois twist sigma_z(G) = eta(z) G
    for (int p : {5, 13, 17}) {
        PrimeCharData pcd = PrimeCharData::make(p);
        CycInt g = gauss_sum_prime(p);
        bool ok = g * g == CycInt::integer(p, pcd.p_star);
        add(out, "gauss-square p=" + std::to_string(p), ok);
        bool twist = true;
        for (int z = 1; z < p; ++z) {
            CycInt want = pcd.eta(z) == 1 ? g : -g;
            twist = twist && g.galois(z) == want;
        }
        add(out, "gauss-galois-twist p=" + std::to_string(p), twist);
    }

    // completed-square identity, exhaustive over F_5
    {
        FieldSpec f5 = FieldSpec::make(5, 1);
        bool ok = true;
        int cases = 0;
        for (Elem a2 = 1; a2 < 5; ++a2)
            for (Elem a1 = 0; a1 < 5; ++a1)
                for (Elem a0 = 0; a0 < 5; ++a0) {
                    ok = ok && quad_exp_sum(f5, a2, a1, a0) == quad_exp_sum_closed(f5, a2, a1, a0);
                    ++cases;
                }
        add(out, "quad-sum-exhaustive F_5", ok, std::to_string(cases) + " cases");
    }
    for (auto [p, m] : std::vector<std::pair<int, int>>{{5, 2}, {13, 1}}) {
        FieldSpec spec = FieldSpec::make(p, m);
        bool ok = true;
        for (std::uint64_t k = 0; k < spec.q() - 1; k += 7) {
            Elem a2 = spec.exp(k);
            ok = ok && quad_exp_sum(spec, a2, spec.theta(), 1) == quad_exp_sum_closed(spec, a2, spec.theta(), 1);
        }
        add(out, "quad-sum-sampled p=" + std::to_string(p) + " m=" + std::to_string(m), ok);
    }

    // companion values and the doubling identity I_{2n} = I_n + H_n
    for (auto [p, m] : std::vector<std::pair<int, int>>{{5, 1}, {5, 2}, {5, 3}, {13, 1}, {17, 1}}) {
        FieldSpec spec = FieldSpec::make(p, m);
        bool i1 = true, i2 = true, dbl = true;
        for (std::uint64_t k = 0; k < spec.q() - 1; ++k) {
            Elem a = spec.exp(k);
            i1 = i1 && companion_sum(spec, 1, a) == 0;
            i2 = i2 && companion_sum(spec, 2, a) == -1;
            for (int n : {1, 2, 3, 4})
                dbl = dbl && companion_sum(spec, 2 * n, a) == companion_sum(spec, n, a) + jacobsthal_sum(spec, n, a);
        }
        std::string tag = " p=" + std::to_string(p) + " m=" + std::to_string(m);
        add(out, "companion-I1-zero" + tag, i1);
        add(out, "companion-I2-minus-one" + tag, i2);
        add(out, "companion-doubling" + tag, dbl);
    }

    // companion sum through Jacobi sums at p = 13, quartic character
    {
        FieldSpec f13 = FieldSpec::make(13, 1);
        bool ok = true;
        for (Elem a = 1; a < 13; ++a) ok = ok && companion_via_jacobi(f13, 4, a) == companion_sum(f13, 4, a);
        add(out, "companion-via-jacobi p=13 d=4", ok);
        MultChar lam = MultChar::make(f13, 4);
        bool norm_ok = jacobi_sum(lam, 1).norm() == 13 && jacobi_sum(lam, 3).norm() == 13;
        add(out, "jacobi-norm p=13", norm_ok);
    }

    // eta pair sums, both residue classes
    for (int p : {5, 13, 17, 29}) {
        PrimeCharData pcd = PrimeCharData::make(p);
        bool ok = eta_pair_sum(pcd, Residue::SQ) == eta_pair_sum_closed(pcd, Residue::SQ) &&
                  eta_pair_sum(pcd, Residue::NSQ) == eta_pair_sum_closed(pcd, Residue::NSQ);
        std::ostringstream det;
        det << "SQ=" << eta_pair_sum(pcd, Residue::SQ) << " NSQ=" << eta_pair_sum(pcd, Residue::NSQ);
        add(out, "eta-pair-sum p=" + std::to_string(p), ok, det.str());
    }

    return out;
}

bool all_pass(const std::vector<LemmaCheck>& checks) {
    for (const LemmaCheck& c : checks)
        if (!c.pass) return false;
    return true;
}

}  // namespace wrp
