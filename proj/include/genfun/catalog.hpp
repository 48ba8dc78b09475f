#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "genfun/rational.hpp"
#include "genfun/series.hpp"

namespace genfun {

// Where a power series converges: |z| < radius, with a flag for entries
// whose boundary behaviour is tame enough to sample (alternating tails).
struct ConvergenceDomain {
    double radius = 1.0; // +infinity for entire functions
    bool boundary_convergent = false;
    std::string notes;
};

// One verified identity: an exact coefficient rule on one side, an
// independently computed closed form on the other, and the metadata the
// harness needs to sample it honestly.
struct IdentityEntry {
    std::string id;
    std::string description; // human-readable statement of the identity
    std::string anchor;      // reference citation (A&S numbering)
    std::string variable_map; // how the series variable relates to the
                              // closed form's natural argument
    ConvergenceDomain domain;
    std::function<Rational(int)> coefficient; // n >= 0, exact
    std::function<double(double)> closed_form; // may throw DomainError/OutOfDomain
    // For rational generating functions p(z)/q(z): the two coefficient
    // lists, lowest degree first, so long division can reproduce the
    // coefficient rule independently.
    std::optional<std::pair<std::vector<Rational>, std::vector<Rational>>> rational_form;
};

class Catalog {
public:
    Catalog(); // builds every built-in entry, then the tree/Bethe block

    bool contains(const std::string& id) const;
    const IdentityEntry& entry(const std::string& id) const; // UnknownIdentity
    std::vector<std::string> list_identities() const;        // registration order
    std::size_t size() const;

    Rational coefficient(const std::string& id, int n) const;
    // Closed-form value; DomainError from the underlying function is
    // rethrown as OutOfDomain so callers can skip the point.
    double closed_form(const std::string& id, double z) const;
    const ConvergenceDomain& domain(const std::string& id) const;

    // Series of the first order+1 coefficients.
    Series series(const std::string& id, int order) const;

    // Harness sample grid: {-0.5, -0.1, 0.1, 0.5, 0.8} x radius, with the
    // scale capped at 5 for entire functions.
    std::vector<double> sample_points(const std::string& id) const;

    void add(IdentityEntry e); // throws UnknownIdentity on duplicate id

private:
    std::vector<IdentityEntry> entries_;
    std::map<std::string, std::size_t> index_;
};

// Registers the tree sums T_k, the Bethe-lattice family, and the shifted
// central-binomial family; called by the Catalog constructor and kept in
// the Lagrange module, which owns those coefficient rules.
void register_tree_entries(Catalog& catalog);

} // namespace genfun
