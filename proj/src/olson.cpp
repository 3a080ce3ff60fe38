#include "nullsolve/olson.hpp"

#include <algorithm>
#include <string>

namespace nullsolve {

OlsonInstance::OlsonInstance(std::int64_t p, std::vector<int> d,
                             std::vector<std::vector<std::int64_t>> a,
                             std::vector<ResidueSet> Q)
    : p_(p), d_(std::move(d)), a_(std::move(a)), Q_(std::move(Q)) {
    if (!is_prime_i64(p_))
        throw Error("instance modulus base must be prime");
    const std::size_t n = d_.size();
    if (n == 0)
        throw Error("instance needs at least one row");
    for (std::size_t i = 0; i < n; ++i) {
        if (d_[i] < 0)
            throw RangeViolation("modulus exponents must be nonnegative");
        if (i > 0 && d_[i] > d_[i - 1])
            throw Error("modulus exponents must be nonincreasing");
    }
    if (a_.size() != n || Q_.size() != n)
        throw Error("row count mismatch between d, a and Q");
    m_ = static_cast<int>(a_[0].size());
    for (std::size_t i = 0; i < n; ++i) {
        if (static_cast<int>(a_[i].size()) != m_)
            throw Error("matrix rows have unequal lengths");
        if (Q_[i].p() != p_ || Q_[i].d() != d_[i])
            throw Error("target set modulus mismatch on row " +
                        std::to_string(i + 1));
        if (!Q_[i].contains(0))
            throw ZeroMissing("target set on row " + std::to_string(i + 1) +
                              " must contain 0");
    }
}

bool OlsonInstance::satisfied_by(const std::vector<int>& J) const {
    if (J.empty()) return false;
    for (int i = 0; i < n(); ++i) {
        std::int64_t sum = 0;
        for (int j : J) {
            if (j < 0 || j >= m_)
                throw RangeViolation("column index out of range");
            sum += a_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        if (!Q_[static_cast<std::size_t>(i)].contains(
                mod_floor(sum, Q_[static_cast<std::size_t>(i)].modulus())))
            return false;
    }
    return true;
}

namespace {

std::vector<int> mask_to_columns(Mask s, int m) {
    std::vector<int> J;
    for (int j = 0; j < m; ++j)
        if (s & (Mask{1} << j)) J.push_back(j);
    return J;
}

} // namespace

GeneralFormPoly build_ppa_instance(const OlsonInstance& inst) {
    if (inst.p() != 2)
        throw EngineUnsupported("the path-following engine requires p = 2");
    const int m = inst.m();
    if (m < 1 || m > kMaxVars)
        throw CapExceeded("variable count out of range");
    std::int64_t bound = 0;
    std::vector<UnitSumPoly> fs;
    std::vector<CoveringFamily> Hs;
    for (int i = 0; i < inst.n(); ++i) {
        fs.push_back(expand_to_unit_monomials(
            inst.a()[static_cast<std::size_t>(i)],
            inst.Q()[static_cast<std::size_t>(i)].modulus()));
        Hs.push_back(build_kappa_covering(
            inst.Q()[static_cast<std::size_t>(i)].complement()));
        bound += static_cast<std::int64_t>(fs.back().degree()) *
                 Hs.back().total_degree();
    }
    if (m <= bound)
        throw DegreeBoundViolated("need m > " + std::to_string(bound) +
                                  " (total constraint degree), got m = " +
                                  std::to_string(m));
    GeneralFormPoly gfp;
    gfp.m = m;
    Block product_block;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        for (const FactoredIVP& h : Hs[i].polys()) {
            IntMultiPoly lifted = psi_h(fs[i], to_binomial_basis(h));
            lifted.reduce_mod(2);
            ExplicitPoly factor;
            for (const auto& [mono, c] : lifted.coeffs())
                factor.monomials.push_back(mono);
            product_block.polys.push_back(std::move(factor));
        }
    }
    if (product_block.polys.empty()) {
        // empty product: the constant 1
        product_block.polys.push_back(ExplicitPoly{{Mask{0}}});
    }
    gfp.blocks.push_back(std::move(product_block));
    Block ones_block;
    for (int j = 0; j < m; ++j)
        ones_block.polys.push_back(ExplicitPoly{{Mask{1} << j, Mask{0}}});
    gfp.blocks.push_back(std::move(ones_block));
    // The one full-monomial occurrence: choose x_j in every (x_j + 1) factor.
    TermTuple leftover;
    leftover.block = 1;
    leftover.choice.assign(static_cast<std::size_t>(m), 0);
    gfp.leftover = std::move(leftover);
    return gfp;
}

std::optional<std::vector<int>> solve_olson(const OlsonInstance& inst,
                                            Engine engine,
                                            std::int64_t step_cap,
                                            PathResult* path_out) {
    if (inst.m() == 0) return std::nullopt;
    std::optional<std::vector<int>> J;
    if (engine == Engine::Brute) {
        std::vector<UnitSumPoly> fs;
        for (int i = 0; i < inst.n(); ++i)
            fs.push_back(expand_to_unit_monomials(
                inst.a()[static_cast<std::size_t>(i)],
                inst.Q()[static_cast<std::size_t>(i)].modulus()));
        std::optional<Mask> s = brute_force_cn(inst.m(), fs, inst.Q());
        if (!s) return std::nullopt;
        J = mask_to_columns(*s, inst.m());
    } else {
        GeneralFormPoly gfp = build_ppa_instance(inst);
        PathResult path = follow_path(gfp, step_cap);
        if (path_out) *path_out = path;
        J = mask_to_columns(path.s, inst.m());
    }
    if (!inst.satisfied_by(*J))
        throw Error("solver produced an invalid column set (internal bug)");
    return J;
}

OlsonInstance reduce_even_sum(const OlsonInstance& inst) {
    const std::size_t n = static_cast<std::size_t>(inst.n());
    for (std::size_t i = 0; i < n; ++i)
        if (inst.Q()[i].size() != 1 || !inst.Q()[i].contains(0))
            throw PreconditionViolated(
                "the even-sum reduction requires every target set to be {0}");
    if (inst.d().back() < 1)
        throw PreconditionViolated(
            "the even-sum reduction requires the last exponent to be >= 1");
    std::vector<std::vector<std::int64_t>> b = inst.a();
    for (int j = 0; j < inst.m(); ++j) {
        std::int64_t col = 0;
        for (std::size_t i = 0; i < n; ++i)
            col += inst.a()[i][static_cast<std::size_t>(j)];
        if (col % inst.p() != 0)
            throw ColumnSumNotDivisible("column " + std::to_string(j + 1) +
                                        " sums to " + std::to_string(col));
        b[n - 1][static_cast<std::size_t>(j)] = col / inst.p();
    }
    std::vector<int> d = inst.d();
    d[n - 1] -= 1;
    std::vector<ResidueSet> Q = inst.Q();
    Q[n - 1] = ResidueSet(inst.p(), d[n - 1], {0});
    return OlsonInstance(inst.p(), std::move(d), std::move(b), std::move(Q));
}

OlsonInstance extremal_sequence(const std::vector<std::set<int>>& Rs,
                                std::int64_t p, const std::vector<int>& d) {
    if (Rs.size() != d.size())
        throw Error("one digit set per row is required");
    const std::size_t n = Rs.size();
    std::vector<std::int64_t> widths;
    std::int64_t m = 0;
    for (std::size_t i = 0; i < n; ++i) {
        widths.push_back(sigma(Rs[i], p));
        m += widths.back();
    }
    std::vector<std::vector<std::int64_t>> a(
        n, std::vector<std::int64_t>(static_cast<std::size_t>(m), 0));
    std::int64_t offset = 0;
    std::vector<ResidueSet> Q;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::int64_t j = 0; j < widths[i]; ++j)
            a[i][static_cast<std::size_t>(offset + j)] = -1;
        offset += widths[i];
        Q.push_back(r_zero_set(Rs[i], p, d[i]));
    }
    return OlsonInstance(p, d, std::move(a), std::move(Q));
}

namespace {

// True iff some column multiset of size m admits no valid nonempty J.
// Columns are drawn (nondecreasing) from the P canonical residue vectors.
bool bad_matrix_exists(int m, const std::vector<std::vector<std::int64_t>>& col_res,
                       const std::vector<std::int64_t>& moduli,
                       const std::vector<std::vector<char>>& inQ) {
    const std::size_t P = col_res.size();
    const std::size_t n = moduli.size();
    std::vector<std::size_t> pick(static_cast<std::size_t>(m), 0);
    const std::size_t subsets = std::size_t{1} << m;
    // row sums per subset, filled incrementally via the lowest set bit
    std::vector<std::vector<std::int64_t>> sums(
        n, std::vector<std::int64_t>(subsets, 0));
    while (true) {
        bool solvable = false;
        for (std::size_t s = 1; s < subsets && !solvable; ++s) {
            const std::size_t low = s & (~s + 1);
            int j = 0;
            while ((std::size_t{1} << j) != low) ++j;
            bool ok = true;
            for (std::size_t i = 0; i < n; ++i) {
                std::int64_t v = sums[i][s ^ low] +
                                 col_res[pick[static_cast<std::size_t>(j)]][i];
                if (v >= moduli[i]) v -= moduli[i];
                sums[i][s] = v;
                if (!inQ[i][static_cast<std::size_t>(v)]) ok = false;
            }
            if (ok) solvable = true;
        }
        if (!solvable) return true;
        // next nondecreasing tuple
        int j = m - 1;
        while (j >= 0 && pick[static_cast<std::size_t>(j)] == P - 1) --j;
        if (j < 0) return false;
        const std::size_t v = pick[static_cast<std::size_t>(j)] + 1;
        for (int l = j; l < m; ++l)
            pick[static_cast<std::size_t>(l)] = v;
    }
}

} // namespace

std::int64_t F_exact(std::int64_t p, const std::vector<int>& d,
                     const std::vector<ResidueSet>& Q, int m_cap) {
    const std::size_t n = d.size();
    if (n == 0 || Q.size() != n)
        throw Error("one target set per row is required");
    std::vector<std::int64_t> moduli;
    std::size_t P = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (Q[i].p() != p || Q[i].d() != d[i])
            throw Error("target set modulus mismatch");
        moduli.push_back(Q[i].modulus());
        P *= static_cast<std::size_t>(moduli.back());
    }
    if (P > 128 || m_cap > 16)
        throw CapExceeded("double exhaustion beyond the documented caps");
    std::vector<std::vector<std::int64_t>> col_res;
    col_res.reserve(P);
    for (std::size_t c = 0; c < P; ++c) {
        std::vector<std::int64_t> res(n);
        std::size_t rest = c;
        for (std::size_t i = 0; i < n; ++i) {
            res[i] = static_cast<std::int64_t>(
                rest % static_cast<std::size_t>(moduli[i]));
            rest /= static_cast<std::size_t>(moduli[i]);
        }
        col_res.push_back(std::move(res));
    }
    std::vector<std::vector<char>> inQ;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<char> row(static_cast<std::size_t>(moduli[i]), 0);
        for (std::int64_t q : Q[i].elems())
            row[static_cast<std::size_t>(q)] = 1;
        inQ.push_back(std::move(row));
    }
    for (int m = 1; m <= m_cap; ++m)
        if (!bad_matrix_exists(m, col_res, moduli, inQ))
            return m - 1;
    return m_cap;
}

} // namespace nullsolve
