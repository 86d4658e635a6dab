#include "fs19/classno.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <sstream>

namespace fs19 {

Rational minkowski_bound(const NumberField& nf) {
    int n = nf.degree();
    Rational nfact(1), npow(1);
    for (int i = 1; i <= n; ++i) {
        nfact *= i;
        npow *= n;
    }
    // 4/pi from above via pi from below.
    Rational four_over_pi = Rational(4) / Rational(314159, 100000);
    Rational factor = nfact / npow;
    for (int i = 0; i < nf.r2(); ++i) factor *= four_over_pi;
    Int ad = nf.disc() < 0 ? Int(-nf.disc()) : nf.disc();
    auto [lo, hi] = nth_root_enclosure(ad, 2, 6);
    (void)lo;
    Rational out = factor * hi;
    out.canonicalize();
    return out;
}

std::optional<std::pair<std::vector<long>, FieldElement>> search_norm_element(
    const NumberField& nf, const std::vector<FieldElement>& rows, const Rational& target,
    int radius) {
    int n = nf.degree();
    int m = static_cast<int>(rows.size());
    Rational tabs = target < 0 ? -target : target;
    double target_d = tabs.get_d();
    double lo_win = target_d / 4.0, hi_win = target_d * 4.0;

    // Complex embeddings of the lattice rows (prefilter only).
    const auto& emb = nf.embeddings();
    std::vector<std::vector<std::complex<double>>> row_emb(m,
        std::vector<std::complex<double>>(n));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            std::complex<double> acc(0, 0);
            for (int k = 0; k < n; ++k) acc += rows[i].c[k].get_d() * emb[k][j];
            row_emb[i][j] = acc;
        }

    std::vector<long> coords(m, 0);
    // partial[l][j] = sum over levels < l of coords * row embeddings
    std::vector<std::vector<std::complex<double>>> partial(m + 1,
        std::vector<std::complex<double>>(n, {0, 0}));

    std::optional<std::pair<std::vector<long>, FieldElement>> found;
    std::function<void(int)> rec = [&](int level) {
        if (found) return;
        if (level == m) {
            bool all_zero = std::all_of(coords.begin(), coords.end(),
                                        [](long c) { return c == 0; });
            if (all_zero) return;
            double prod = 1.0;
            for (int j = 0; j < n; ++j) prod *= std::abs(partial[m][j]);
            if (prod < lo_win || prod > hi_win) return;
            FieldElement x = nf.zero();
            for (int i = 0; i < m; ++i)
                if (coords[i] != 0)
                    x = nf.add(x, nf.mul_scalar(rows[i], Rational(coords[i])));
            Rational nr = nf.norm(x);
            if (nr < 0) nr = -nr;
            if (nr == tabs) found = std::make_pair(coords, x);
            return;
        }
        // Start at -radius and walk up, updating the partial sums in place.
        for (int j = 0; j < n; ++j)
            partial[level + 1][j] =
                partial[level][j] - double(radius) * row_emb[level][j];
        for (long c = -radius; c <= radius; ++c) {
            coords[level] = c;
            rec(level + 1);
            if (found) return;
            for (int j = 0; j < n; ++j) partial[level + 1][j] += row_emb[level][j];
        }
        coords[level] = 0;
    };
    rec(0);
    return found;
}

ClassNumberOutcome verify_class_number_one(const NumberField& nf, int search_radius) {
    ClassNumberOutcome out;
    out.bound = minkowski_bound(nf);

    // Staged radii with early exit.
    std::vector<int> radii;
    for (int r = 1; r <= 3 && r <= search_radius; ++r) radii.push_back(r);
    for (int r = 4; r < search_radius; r += (r < 8 ? 2 : 4)) radii.push_back(r);
    if (search_radius >= 4) radii.push_back(search_radius);

    bool all_found = true;
    std::ostringstream detail;
    for (Int p(2); Rational(p) <= out.bound; p = next_prime(p)) {
        auto factors = factor_rational_prime(nf, p);
        for (const auto& pf : factors) {
            Rational nrm = ideal_norm(nf, pf.ideal);
            if (nrm > out.bound) continue;
            PrincipalityCertificate cert;
            cert.p = p;
            cert.f = pf.f;
            cert.norm = nrm.get_num();
            int n = nf.degree();
            std::vector<FieldElement> rows(n);
            for (int i = 0; i < n; ++i) {
                QVec c(n);
                for (int k = 0; k < n; ++k) c[k] = Rational(pf.ideal.basis[i][k]);
                rows[i] = FieldElement{std::move(c)};
            }
            for (int r : radii) {
                auto hit = search_norm_element(nf, rows, Rational(cert.norm), r);
                out.radius_used = std::max(out.radius_used, r);
                if (hit) {
                    cert.found = true;
                    cert.generator_coords = hit->first;
                    cert.generator = hit->second;
                    break;
                }
            }
            if (!cert.found) {
                all_found = false;
                detail << "no generator found for a norm-" << to_string(cert.norm)
                       << " prime above " << to_string(p) << " within radius "
                       << search_radius << "; ";
            }
            out.primes.push_back(std::move(cert));
        }
    }
    out.status = all_found ? ClassNumberStatus::Verified : ClassNumberStatus::Inconclusive;
    if (all_found) {
        std::ostringstream ok;
        ok << "all " << out.primes.size()
           << " prime ideals below the Minkowski bound certified principal";
        out.detail = ok.str();
    } else {
        out.detail = detail.str();
    }
    return out;
}

}  // namespace fs19
