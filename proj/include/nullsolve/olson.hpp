#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "nullsolve/covering.hpp"
#include "nullsolve/ppa.hpp"

namespace nullsolve {

/// Subset-sum congruence system: find nonempty J with
/// sum_{j in J} a[i][j] mod p^{d[i]} in Q[i] for every row i.
class OlsonInstance {
public:
    /// d must be nonincreasing; each Q[i] has modulus p^{d[i]} and contains 0;
    /// a is n rows by m columns.
    OlsonInstance(std::int64_t p, std::vector<int> d,
                  std::vector<std::vector<std::int64_t>> a,
                  std::vector<ResidueSet> Q);

    std::int64_t p() const { return p_; }
    const std::vector<int>& d() const { return d_; }
    const std::vector<std::vector<std::int64_t>>& a() const { return a_; }
    const std::vector<ResidueSet>& Q() const { return Q_; }
    int n() const { return static_cast<int>(d_.size()); }
    int m() const { return m_; }

    /// True iff the nonempty column set J (0-based) satisfies every row.
    bool satisfied_by(const std::vector<int>& J) const;

    bool operator==(const OlsonInstance&) const = default;

private:
    std::int64_t p_;
    std::vector<int> d_;
    std::vector<std::vector<std::int64_t>> a_;
    std::vector<ResidueSet> Q_;
    int m_;
};

enum class Engine { Brute, Ppa };

/// Columns (0-based, ascending) of a valid nonempty J, or nullopt when no
/// solution exists. Brute engine: lexicographically smallest indicator
/// vector, m <= 24. Ppa engine: p = 2 only, requires the strict degree
/// bound m > sum_i deg(f_i) * kappa(complement of Q_i); optionally reports
/// the traversed path.
std::optional<std::vector<int>> solve_olson(const OlsonInstance& inst,
                                            Engine engine,
                                            std::int64_t step_cap = 0,
                                            PathResult* path_out = nullptr);

/// The End-of-the-Line instance of the Eq-style constraint polynomial
/// f = prod_{i,h} Psi^h(f_i) + prod_j (1 + x_j) over F_2: block 0 lists the
/// lifted factors, block 1 the m factors (x_j + 1), and the single full
/// occurrence (choose x_j everywhere in block 1) is the designated leftover.
GeneralFormPoly build_ppa_instance(const OlsonInstance& inst);

/// Divides out one factor p from the row-sum structure when every column
/// sum is divisible by p and every target is {0}: rows 0..n-2 unchanged,
/// the last row becomes the column sums over p with exponent d_n - 1.
/// Any solution of the result solves the original instance.
OlsonInstance reduce_even_sum(const OlsonInstance& inst);

/// The tight no-solution instance for digit-zero targets: m = sum sigma(R_i)
/// columns, row i equal to -1 on its own block of sigma(R_i) columns and 0
/// elsewhere, Q_i the R_i-zero set.
OlsonInstance extremal_sequence(const std::vector<std::set<int>>& Rs,
                                std::int64_t p, const std::vector<int>& d);

/// Exact threshold by double exhaustion: the largest m <= m_cap for which
/// some matrix (entries over canonical residues) admits no valid nonempty J.
/// Column multisets only; solvability is column-order invariant.
std::int64_t F_exact(std::int64_t p, const std::vector<int>& d,
                     const std::vector<ResidueSet>& Q, int m_cap);

} // namespace nullsolve
