#include "wz/summation.hpp"

#include <algorithm>

namespace wz {

namespace {

using RF = RationalFunction;

// Dense polynomial in n whose coefficients are rational functions of k.
struct UPoly {
    std::vector<RF> c;   // c[i] multiplies n^i, trimmed so c.back() != 0

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool zero() const { return c.empty(); }
    const RF& coeff(int i) const {
        static const RF zero_rf{Rational(0)};
        return (i >= 0 && i <= deg()) ? c[static_cast<size_t>(i)] : zero_rf;
    }
};

UPoly up_from(const Poly& p) {
    UPoly u;
    for (const Poly& q : p.coefficients_in(Var::n)) u.c.emplace_back(q);
    u.trim();
    return u;
}

UPoly up_add(const UPoly& a, const UPoly& b) {
    UPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), RF(Rational(0)));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = r.c[i] + a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
    r.trim();
    return r;
}

UPoly up_scale(const UPoly& a, const RF& s) {
    UPoly r;
    if (s.is_zero()) return r;
    for (const RF& e : a.c) r.c.push_back(e * s);
    r.trim();
    return r;
}

UPoly up_sub(const UPoly& a, const UPoly& b) {
    return up_add(a, up_scale(b, RF(Rational(-1))));
}

UPoly up_mul(const UPoly& a, const UPoly& b) {
    UPoly r;
    if (a.zero() || b.zero()) return r;
    r.c.resize(a.c.size() + b.c.size() - 1, RF(Rational(0)));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (size_t j = 0; j < b.c.size(); ++j) {
            if (b.c[j].is_zero()) continue;
            r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        }
    }
    r.trim();
    return r;
}

// (n + h)^e as a UPoly.
UPoly up_shifted_monomial(int e, long h) {
    UPoly x;
    x.c.assign(2, RF(Rational(1)));
    x.c[0] = RF(Rational(h));
    UPoly r;
    r.c.assign(1, RF(Rational(1)));
    for (int i = 0; i < e; ++i) r = up_mul(r, x);
    return r;
}

// Assembles a UPoly into a bivariate fraction num/den with polynomial parts,
// clearing the k-denominators of its coefficients.
std::pair<Poly, Poly> up_clear(const UPoly& u) {
    Poly den(1);
    for (const RF& e : u.c) {
        if (e.is_zero()) continue;
        den = den * divide_exact(e.den(), poly_gcd(den, e.den()));
    }
    Poly num;
    for (size_t i = 0; i < u.c.size(); ++i) {
        if (u.c[i].is_zero()) continue;
        num += u.c[i].num() * divide_exact(den, u.c[i].den()) *
               Poly::monomial(static_cast<int>(i), 0, Rational(1));
    }
    return {num, den};
}

// Univariate gcd degree over the rationals, by Euclid's algorithm on
// coefficient vectors (index = power).
int uni_gcd_deg(std::vector<Rational> a, std::vector<Rational> b) {
    auto trim = [](std::vector<Rational>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        while (a.size() >= b.size() && !a.empty()) {
            Rational f = a.back() / b.back();
            size_t off = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
            trim(a);
            if (a.size() < b.size()) break;
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

std::vector<Rational> uni_coeffs(const Poly& p) {
    std::vector<Rational> v;
    for (const Poly& c : p.coefficients_in(Var::n)) v.push_back(c.constant_value());
    return v;
}

// 1 + max |c_i / c_d|, rounded up.
Integer cauchy_bound(const std::vector<Rational>& c) {
    Rational m(0);
    for (size_t i = 0; i + 1 < c.size(); ++i) {
        Rational q = abs(c[i] / c.back());
        if (q > m) m = q;
    }
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), m.get_num_mpz_t(), m.get_den_mpz_t());
    return r + 1;
}

// Shift distances h >= 0 at which a(n) and b(n+h) can share a factor. The
// pair is specialized at a k-value keeping both leading coefficients alive;
// with that choice every common divisor survives specialization, so scanning
// integer distances between the specialized root sets (bounded by the two
// Cauchy bounds) yields a superset of the true distances. Each candidate is
// confirmed or discarded later by a symbolic gcd.
std::vector<long> dispersion_candidates(const Poly& a, const Poly& b) {
    std::vector<long> out;
    if (a.degree(Var::n) < 1 || b.degree(Var::n) < 1) return out;
    Poly lca = a.coefficients_in(Var::n).back();
    Poly lcb = b.coefficients_in(Var::n).back();

    Rational k0;
    bool ok = false;
    for (long t = 0; t < 2000 && !ok; ++t) {
        long cand = (t % 2 == 0) ? t / 2 : -(t / 2 + 1);
        k0 = Rational(cand);
        ok = lca.eval(Rational(0), k0) != 0 && lcb.eval(Rational(0), k0) != 0;
    }
    if (!ok) throw Error("dispersion_candidates: no good specialization point");

    std::vector<Rational> A0 = uni_coeffs(a.eval_partial(Var::k, k0));
    std::vector<Rational> B0 = uni_coeffs(b.eval_partial(Var::k, k0));
    Integer H = cauchy_bound(A0) + cauchy_bound(B0);
    if (H > 200000) throw Error("dispersion_candidates: root bound too large");

    long Hl = H.get_si();
    Poly bk = b.eval_partial(Var::k, k0);
    for (long h = 0; h <= Hl; ++h) {
        if (uni_gcd_deg(A0, uni_coeffs(shift(bk, Var::n, h))) >= 1) out.push_back(h);
    }
    return out;
}

struct NormalForm {
    Poly A, B, C;   // ratio = (A/B) * (C(n+1)/C(n)), gcd(A(n), B(n+h)) = 1 for h >= 0
};

NormalForm normal_form(Poly a0, Poly b0) {
    Poly g = poly_gcd(a0, b0);
    if (!g.is_constant()) {
        a0 = divide_exact(a0, g);
        b0 = divide_exact(b0, g);
    }
    Poly C(1);
    for (long h : dispersion_candidates(a0, b0)) {
        Poly gh = poly_gcd(a0, shift(b0, Var::n, h));
        if (gh.degree(Var::n) < 1) continue;
        a0 = divide_exact(a0, gh);
        b0 = divide_exact(b0, shift(gh, Var::n, -h));
        for (long i = 1; i <= h; ++i) C *= shift(gh, Var::n, -i);
    }
    return {a0, b0, C};
}

// Largest possible degree of a polynomial x with
//   abar(n) x(n+1) - bbar(n) x(n) = rhs,  deg rhs <= gamma.
// Negative means no polynomial solution can exist.
int degree_bound(const UPoly& abar, const UPoly& bbar, int gamma) {
    int la = abar.deg(), lb = bbar.deg();
    if (la != lb || !(abar.coeff(la) == bbar.coeff(lb))) return gamma - std::max(la, lb);
    int l = la;
    int D = gamma - l + 1;
    if (l >= 1) {
        RF d0 = (bbar.coeff(l - 1) - abar.coeff(l - 1)) / abar.coeff(l);
        if (d0.is_constant()) {
            Rational v = d0.constant_value();
            if (v.get_den() == 1 && v >= 0 && v.get_num().fits_slong_p()) {
                long dv = v.get_num().get_si();
                if (dv > D) D = static_cast<int>(dv);
            }
        }
    }
    return D;
}

// Reduced row echelon form over Q(k); returns pivot row of each column
// (-1 for free columns).
std::vector<int> rref(std::vector<std::vector<RF>>& M) {
    int rows = static_cast<int>(M.size());
    int cols = rows ? static_cast<int>(M[0].size()) : 0;
    std::vector<int> prow(cols, -1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (!M[i][c].is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(M[r], M[pr]);
        RF inv = M[r][c].reciprocal();
        for (int j = c; j < cols; ++j) M[r][j] = M[r][j] * inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || M[i][c].is_zero()) continue;
            RF f = M[i][c];
            for (int j = c; j < cols; ++j) M[i][j] = M[i][j] - f * M[r][j];
        }
        prow[c] = r;
        ++r;
    }
    return prow;
}

// Nullspace basis, one vector per free column, that column's entry set to 1.
std::vector<std::vector<RF>> nullspace(std::vector<std::vector<RF>> M) {
    int cols = M.empty() ? 0 : static_cast<int>(M[0].size());
    std::vector<int> prow = rref(M);
    std::vector<std::vector<RF>> basis;
    for (int f = 0; f < cols; ++f) {
        if (prow[f] >= 0) continue;
        std::vector<RF> v(cols, RF(Rational(0)));
        v[f] = RF(Rational(1));
        for (int c = 0; c < cols; ++c)
            if (prow[c] >= 0) v[c] = RF(Rational(0)) - M[prow[c]][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solves M x = rhs, zeroing free variables; nullopt when inconsistent.
std::optional<std::vector<RF>> solve_linear(std::vector<std::vector<RF>> M, std::vector<RF> rhs) {
    int rows = static_cast<int>(M.size());
    int cols = rows ? static_cast<int>(M[0].size()) : 0;
    for (int i = 0; i < rows; ++i) M[i].push_back(rhs[static_cast<size_t>(i)]);
    std::vector<int> prow = rref(M);
    // The augmented column must not have become a pivot.
    if (cols < static_cast<int>(prow.size()) && prow[cols] >= 0) return std::nullopt;
    std::vector<RF> x(static_cast<size_t>(cols), RF(Rational(0)));
    for (int c = 0; c < cols; ++c)
        if (prow[c] >= 0) x[static_cast<size_t>(c)] = M[prow[c]][static_cast<size_t>(cols)];
    return x;
}

// Columns of the telescoping system for the unknown polynomial x.
std::vector<UPoly> x_columns(const UPoly& A, const UPoly& Bb, int D) {
    std::vector<UPoly> cols;
    for (int i = 0; i <= D; ++i)
        cols.push_back(up_sub(up_mul(A, up_shifted_monomial(i, 1)), up_mul(Bb, up_shifted_monomial(i, 0))));
    return cols;
}

RF assemble_certificate(const UPoly& Bb, const UPoly& X, const UPoly& CL, const RF& scale) {
    auto [bx, bxden] = up_clear(up_mul(Bb, X));
    auto [cl, clden] = up_clear(CL);
    return RF(bx * clden, bxden * cl) * scale;
}

}  // namespace

std::string DifferenceOperator::str() const {
    std::string out;
    for (int j = order(); j >= 0; --j) {
        if (coeffs[static_cast<size_t>(j)].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + coeffs[static_cast<size_t>(j)].str() + ")";
        if (j == 1)
            out += "*K";
        else if (j > 1)
            out += "*K^" + std::to_string(j);
    }
    return out.empty() ? "0" : out;
}

std::optional<GosperCertificate> gosper(const HyperTerm& t) {
    RF rn = ratio(t, Var::n);
    NormalForm nf = normal_form(rn.num(), rn.den());
    UPoly A  = up_from(nf.A);
    UPoly Bb = up_from(shift(nf.B, Var::n, -1));
    UPoly C  = up_from(nf.C);

    int D = degree_bound(A, Bb, C.deg());
    if (D < 0) return std::nullopt;

    std::vector<UPoly> cols = x_columns(A, Bb, D);
    int maxdeg = C.deg();
    for (const UPoly& u : cols) maxdeg = std::max(maxdeg, u.deg());

    std::vector<std::vector<RF>> M(static_cast<size_t>(maxdeg) + 1,
                                   std::vector<RF>(cols.size(), RF(Rational(0))));
    std::vector<RF> rhs(static_cast<size_t>(maxdeg) + 1, RF(Rational(0)));
    for (int row = 0; row <= maxdeg; ++row) {
        for (size_t j = 0; j < cols.size(); ++j) M[static_cast<size_t>(row)][j] = cols[j].coeff(row);
        rhs[static_cast<size_t>(row)] = C.coeff(row);
    }
    auto sol = solve_linear(std::move(M), std::move(rhs));
    if (!sol) return std::nullopt;

    UPoly X;
    X.c = *sol;
    X.trim();
    RF R = assemble_certificate(Bb, X, C, RF(Rational(1)));
    if (!(R.shifted(Var::n, 1) * rn - R == RF(Rational(1))))
        throw Error("gosper: certificate failed the ratio identity");
    return GosperCertificate{t, R, term_mul(t, HyperTerm::from_prefactor(R))};
}

TelescopingResult creative_telescoping(const HyperTerm& F, int max_order) {
    RF rn = ratio(F, Var::n);
    RF rk = ratio(F, Var::k);

    std::vector<RF> sigma{RF(Rational(1))};
    for (int r = 0; r <= max_order; ++r) {
        if (r > 0) sigma.push_back(sigma.back() * rk.shifted(Var::k, r - 1));

        Poly L(1);
        for (const RF& s : sigma) L = L * divide_exact(s.den(), poly_gcd(L, s.den()));
        std::vector<Poly> N;
        for (const RF& s : sigma) N.push_back(s.num() * divide_exact(L, s.den()));

        NormalForm nf = normal_form(rn.num() * L, rn.den() * shift(L, Var::n, 1));
        UPoly A  = up_from(nf.A);
        UPoly Bb = up_from(shift(nf.B, Var::n, -1));
        UPoly C  = up_from(nf.C);

        int degN = 0;
        for (const Poly& nj : N) degN = std::max(degN, nj.degree(Var::n));
        int D  = degree_bound(A, Bb, C.deg() + degN);
        int nx = D >= 0 ? D + 1 : 0;

        std::vector<UPoly> cols = x_columns(A, Bb, nx - 1);
        std::vector<UPoly> pcols;
        for (const Poly& nj : N) pcols.push_back(up_mul(C, up_from(nj)));

        int maxdeg = 0;
        for (const UPoly& u : cols) maxdeg = std::max(maxdeg, u.deg());
        for (const UPoly& u : pcols) maxdeg = std::max(maxdeg, u.deg());

        size_t ncols = cols.size() + pcols.size();
        std::vector<std::vector<RF>> M(static_cast<size_t>(maxdeg) + 1,
                                       std::vector<RF>(ncols, RF(Rational(0))));
        for (int row = 0; row <= maxdeg; ++row) {
            auto& mrow = M[static_cast<size_t>(row)];
            for (size_t j = 0; j < cols.size(); ++j) mrow[j] = cols[j].coeff(row);
            for (size_t j = 0; j < pcols.size(); ++j)
                mrow[cols.size() + j] = RF(Rational(0)) - pcols[j].coeff(row);
        }

        auto basis = nullspace(std::move(M));
        const std::vector<RF>* picked = nullptr;
        for (const auto& v : basis) {
            bool has_p = false;
            for (size_t j = static_cast<size_t>(nx); j < v.size(); ++j)
                if (!v[j].is_zero()) {
                    has_p = true;
                    break;
                }
            if (has_p) {
                picked = &v;
                break;
            }
        }
        if (!picked) continue;

        std::vector<RF> praw(picked->begin() + nx, picked->end());
        UPoly X;
        X.c.assign(picked->begin(), picked->begin() + nx);
        X.trim();

        Poly Lp(1);
        for (const RF& p : praw)
            if (!p.is_zero()) Lp = Lp * divide_exact(p.den(), poly_gcd(Lp, p.den()));
        std::vector<Poly> cleared;
        for (const RF& p : praw)
            cleared.push_back(p.is_zero() ? Poly() : p.num() * divide_exact(Lp, p.den()));
        std::vector<Poly> norm = content_normalize(cleared);

        Rational gs(1);
        for (size_t j = 0; j < cleared.size(); ++j)
            if (!cleared[j].is_zero()) {
                gs = cleared[j].leading_coeff() / norm[j].leading_coeff();
                break;
            }
        RF scale = RF(Lp.scaled(1 / gs));

        while (norm.size() > 1 && norm.back().is_zero()) norm.pop_back();

        RF R(Rational(0));
        if (!X.zero()) R = assemble_certificate(Bb, X, up_mul(C, up_from(L)), scale);

        TelescopingResult res;
        res.input = F;
        res.op    = DifferenceOperator{std::move(norm)};
        res.R     = R;
        if (!R.is_zero()) res.G = term_mul(F, HyperTerm::from_prefactor(R));
        return res;
    }
    throw OrderExceeded("creative_telescoping: no operator up to order " + std::to_string(max_order));
}

VerificationReport verify_ct(const HyperTerm& F, const TelescopingResult& res, int grid) {
    VerificationReport rep;
    RF rn = ratio(F, Var::n);
    RF rk = ratio(F, Var::k);

    RF lhs(Rational(0));
    RF sig(Rational(1));
    for (int j = 0; j <= res.op.order(); ++j) {
        if (j > 0) sig = sig * rk.shifted(Var::k, j - 1);
        lhs = lhs + RF(res.op.coeffs[static_cast<size_t>(j)]) * sig;
    }
    RF rhs        = res.R.shifted(Var::n, 1) * rn - res.R;
    rep.identity_ok = (lhs == rhs);

    rep.grid_ok = true;
    for (long n = 0; n < grid; ++n) {
        for (long k = 0; k < grid; ++k) {
            bool skip = false;
            Rational lv(0);
            for (int j = 0; j <= res.op.order(); ++j) {
                ExtendedValue fv = F.eval(n, k + j);
                if (fv.is_pole) {
                    skip = true;
                    break;
                }
                lv += res.op.coeffs[static_cast<size_t>(j)].eval(Rational(0), Rational(k)) * fv.value;
            }
            ExtendedValue f0 = F.eval(n, k), f1 = F.eval(n + 1, k);
            auto r0 = res.R.eval(Rational(n), Rational(k));
            auto r1 = res.R.eval(Rational(n + 1), Rational(k));
            if (skip || f0.is_pole || f1.is_pole || !r0 || !r1) {
                ++rep.points_skipped;
                continue;
            }
            if (lv != *r1 * f1.value - *r0 * f0.value) rep.grid_ok = false;
            ++rep.points_checked;
        }
    }
    return rep;
}

}  // namespace wz
