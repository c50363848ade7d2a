#pragma once

#include "kalg/span.hpp"

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace kalg {

/// Antisymmetric scalar table w_{m,n} on the nonzero indices of a window.
/// Only keys with m < n are stored; w_{m,m} = 0 and the convention
/// w_{k,0} = w_{0,k} = 0 are implicit. Entries can be marked "undefined"
/// (e.g. a coboundary whose bracket support escapes the window); lookups
/// there yield nullopt and consumers skip them.
class Cocycle {
public:
    explicit Cocycle(Window w) : window_(w) {}

    const Window& window() const { return window_; }

    /// Sets w_{m,n} (and with it w_{n,m} = -w_{m,n}). Indices must be
    /// distinct, nonzero and inside the window.
    void set(long m, long n, const GaussianRational& v);
    void mark_undefined(long m, long n);

    /// nullopt when the (canonicalized) entry is marked undefined.
    std::optional<GaussianRational> value(long m, long n) const;
    bool is_defined(long m, long n) const { return value(m, n).has_value(); }

    const std::map<std::pair<long, long>, GaussianRational>& entries() const { return table_; }
    const std::set<std::pair<long, long>>& undefined() const { return undefined_; }

    /// The Virasoro cocycle w_{m,n} = delta_{m,-n} m (m^2 - 1) / 12.
    static Cocycle virasoro(Window w);

    /// One line per entry `m n re im`, m < n; absent pairs are zero.
    static Cocycle load(std::istream& in, Window w);
    void save(std::ostream& out) const;

private:
    Window window_;
    std::map<std::pair<long, long>, GaussianRational> table_;
    std::set<std::pair<long, long>> undefined_;
};

/// Entry-wise combination; an entry undefined on either side stays
/// undefined.
Cocycle cocycle_add(const Cocycle& a, const Cocycle& b);
Cocycle cocycle_scale(const Cocycle& w, const GaussianRational& q);

struct CocycleCheckResult {
    bool ok = true;
    std::array<long, 3> violating{0, 0, 0};  // (l, m, n) of the first failure
};

/// Verifies the cyclic 2-cocycle identity on every triple whose needed
/// index sums stay in the window or hit 0, skipping triples that touch
/// undefined entries.
CocycleCheckResult cocycle_check(const Cocycle& w);

/// The commutator-subalgebra basis: [K_n,K_1] and [K_{-n},K_{-1}] for
/// 1 < n < bound, plus [K_{-2},K_1], [K_2,K_{-1}], [K_1,K_{-1}]; 2N-1
/// elements, linear independence verified at construction.
struct CommutatorBasis {
    Window window;
    std::vector<std::pair<std::string, LieElement>> elements;
};

CommutatorBasis commutator_basis(const Window& w);

/// w_{m,n} = mu applied to the K-coefficients of [K_m, K_n] (central part
/// ignored). Entries whose bracket support escapes the window are marked
/// undefined. Missing mu indices count as zero.
Cocycle coboundary_from_mu(const std::map<long, GaussianRational>& mu, const Window& w);

struct ReduceResult {
    std::map<long, GaussianRational> mu;  // functional with coboundary(mu) = off-diagonal part
    GaussianRational t;                   // Virasoro-class coefficient
    Cocycle residual;                     // input minus coboundary(mu)
};

/// The H^2 reduction: builds the functional alpha on the commutator basis
/// from the designated entries, subtracts its coboundary, checks that every
/// interior off-diagonal entry of the residual vanishes and that the
/// interior diagonal is t m (m^2-1) / 12 with t read at (2,-2).
/// Interior margin: |m|, |n|, |m+n| <= bound - 3.
ReduceResult reduce_cocycle(const Cocycle& w);

}  // namespace kalg
