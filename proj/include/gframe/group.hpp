#pragma once

#include <string>
#include <vector>

#include "gframe/linalg.hpp"

namespace gframe {

/// A finite group as an indexed multiplication table, together with the
/// Haar weights (counting measure, weight 1 per element) and the values
/// of the modular function (identically 1 on a finite group, but stored
/// per element so every formula is written in full generality).
struct GroupTable {
    int order = 0;
    std::vector<std::vector<int>> product;  // product[a][b] = index of a*b
    std::vector<int> inverse;
    int identity = 0;
    std::vector<double> haar_weight;
    std::vector<double> modular;
    std::vector<std::string> labels;

    int mul(int a, int b) const { return product[a][b]; }
    int inv(int a) const { return inverse[a]; }

    /// Derives identity and inverses from a product table and validates
    /// structure.  Throws StructuralError on malformed input.
    static GroupTable from_product(std::vector<std::vector<int>> product,
                                   std::vector<std::string> labels = {});

    static GroupTable cyclic(int n);
    static GroupTable symmetric3();
    static GroupTable dihedral(int n);  // order 2n

    /// Number of conjugacy classes (independent combinatorial oracle for
    /// the center dimension of the group von Neumann algebra).
    int conjugacy_class_count() const;

    bool same_as(const GroupTable& other) const;
};

enum class IssueKind {
    associativity,
    identity,
    inverse,
    modular_homomorphism,
};

struct ValidationIssue {
    IssueKind kind;
    std::vector<int> elements;  // the witnessing indices
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
};

/// Checks every group axiom and the homomorphism property of the stored
/// modular function.  Malformed tables (index out of range, inconsistent
/// lengths) throw StructuralError instead of being reported.
ValidationReport validate_group(const GroupTable& table);

/// A complex-valued function on the group: the finite model of L2(G).
struct GroupFunction {
    const GroupTable* group = nullptr;
    Vec values;
};

GroupFunction make_function(const GroupTable& g, Vec values);
GroupFunction delta(const GroupTable& g, int s);

void require_same_group(const GroupFunction& f, const GroupFunction& g);

/// Haar-weighted inner product, conjugate-linear in the second argument.
Complex inner_product(const GroupFunction& f, const GroupFunction& g);

double norm(const GroupFunction& f);

}  // namespace gframe
