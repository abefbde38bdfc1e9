#include "gframe/group.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace gframe {

namespace {

void check_table_structure(const std::vector<std::vector<int>>& product) {
    const int n = static_cast<int>(product.size());
    if (n == 0) throw StructuralError("empty product table");
    for (const auto& row : product) {
        if (static_cast<int>(row.size()) != n)
            throw StructuralError("product table is not square");
        for (int v : row)
            if (v < 0 || v >= n)
                throw StructuralError("product table entry out of range");
    }
}

}  // namespace

GroupTable GroupTable::from_product(std::vector<std::vector<int>> product,
                                    std::vector<std::string> labels) {
    check_table_structure(product);
    const int n = static_cast<int>(product.size());
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
        throw StructuralError("labels length does not match group order");

    GroupTable g;
    g.order = n;
    g.product = std::move(product);
    g.labels = std::move(labels);
    g.haar_weight.assign(n, 1.0);
    g.modular.assign(n, 1.0);

    // Identity: the unique e with e*a = a*e = a for all a.
    int identity = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            ok = g.product[e][a] == a && g.product[a][e] == a;
        if (ok) {
            identity = e;
            break;
        }
    }
    if (identity < 0) throw StructuralError("product table has no two-sided identity");
    g.identity = identity;

    g.inverse.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (g.product[a][b] == identity && g.product[b][a] == identity) {
                g.inverse[a] = b;
                break;
            }
        }
        if (g.inverse[a] < 0)
            throw StructuralError("element " + std::to_string(a) + " has no two-sided inverse");
    }
    return g;
}

GroupTable GroupTable::cyclic(int n) {
    if (n < 1) throw StructuralError("cyclic group order must be positive");
    std::vector<std::vector<int>> p(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) p[a][b] = (a + b) % n;
    std::vector<std::string> labels(n);
    for (int a = 0; a < n; ++a) labels[a] = std::to_string(a);
    return from_product(std::move(p), std::move(labels));
}

GroupTable GroupTable::symmetric3() {
    // Elements as permutations of {0,1,2} in a fixed order.
    const std::vector<std::array<int, 3>> perms = {
        {0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
    const std::vector<std::string> labels = {"e", "(01)", "(12)", "(02)", "(012)", "(021)"};
    auto compose = [&](int a, int b) {
        // (a o b)(x) = a(b(x))
        std::array<int, 3> c{};
        for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
        for (int i = 0; i < 6; ++i)
            if (perms[i] == c) return i;
        return -1;
    };
    std::vector<std::vector<int>> p(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) p[a][b] = compose(a, b);
    return from_product(std::move(p), labels);
}

GroupTable GroupTable::dihedral(int n) {
    if (n < 1) throw StructuralError("dihedral parameter must be positive");
    // Elements: r^k (index k) and r^k s (index n+k), with s r s = r^-1.
    const int order = 2 * n;
    auto idx = [&](int rot, int ref) { return (ref ? n : 0) + ((rot % n) + n) % n; };
    std::vector<std::vector<int>> p(order, std::vector<int>(order));
    for (int a = 0; a < order; ++a) {
        const int ra = a % n, fa = a / n;
        for (int b = 0; b < order; ++b) {
            const int rb = b % n, fb = b / n;
            // (r^ra s^fa)(r^rb s^fb) = r^(ra + (-1)^fa rb) s^(fa+fb)
            const int rot = fa ? ra - rb : ra + rb;
            p[a][b] = idx(rot, (fa + fb) % 2);
        }
    }
    std::vector<std::string> labels(order);
    for (int k = 0; k < n; ++k) {
        labels[k] = "r" + std::to_string(k);
        labels[n + k] = "r" + std::to_string(k) + "s";
    }
    return from_product(std::move(p), std::move(labels));
}

int GroupTable::conjugacy_class_count() const {
    std::vector<bool> seen(order, false);
    int classes = 0;
    for (int a = 0; a < order; ++a) {
        if (seen[a]) continue;
        ++classes;
        for (int s = 0; s < order; ++s) seen[mul(mul(s, a), inv(s))] = true;
    }
    return classes;
}

bool GroupTable::same_as(const GroupTable& other) const {
    return this == &other || (order == other.order && product == other.product);
}

ValidationReport validate_group(const GroupTable& table) {
    const int n = table.order;
    if (n <= 0 || static_cast<int>(table.product.size()) != n ||
        static_cast<int>(table.inverse.size()) != n ||
        static_cast<int>(table.haar_weight.size()) != n ||
        static_cast<int>(table.modular.size()) != n)
        throw StructuralError("inconsistent table array lengths");
    check_table_structure(table.product);
    for (int v : table.inverse)
        if (v < 0 || v >= n) throw StructuralError("inverse entry out of range");
    if (table.identity < 0 || table.identity >= n)
        throw StructuralError("identity index out of range");

    ValidationReport report;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table.mul(table.mul(a, b), c) != table.mul(a, table.mul(b, c)))
                    report.issues.push_back({IssueKind::associativity,
                                             {a, b, c},
                                             "associativity fails at (" + std::to_string(a) +
                                                 "," + std::to_string(b) + "," +
                                                 std::to_string(c) + ")"});
    const int e = table.identity;
    for (int a = 0; a < n; ++a)
        if (table.mul(e, a) != a || table.mul(a, e) != a)
            report.issues.push_back({IssueKind::identity,
                                     {a},
                                     "identity is not two-sided at " + std::to_string(a)});
    for (int a = 0; a < n; ++a)
        if (table.mul(a, table.inv(a)) != e || table.mul(table.inv(a), a) != e)
            report.issues.push_back({IssueKind::inverse,
                                     {a},
                                     "inverse fails at " + std::to_string(a)});
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            const double lhs = table.modular[table.mul(s, t)];
            const double rhs = table.modular[s] * table.modular[t];
            if (std::abs(lhs - rhs) > 1e-12 * std::max(1.0, std::abs(rhs)))
                report.issues.push_back({IssueKind::modular_homomorphism,
                                         {s, t},
                                         "modular function is not multiplicative at (" +
                                             std::to_string(s) + "," + std::to_string(t) + ")"});
        }
    return report;
}

GroupFunction make_function(const GroupTable& g, Vec values) {
    if (values.size() != g.order)
        throw StructuralError("function length does not match group order");
    return GroupFunction{&g, std::move(values)};
}

GroupFunction delta(const GroupTable& g, int s) {
    if (s < 0 || s >= g.order) throw StructuralError("element index out of range");
    Vec v = Vec::Zero(g.order);
    v(s) = 1.0;
    return GroupFunction{&g, std::move(v)};
}

void require_same_group(const GroupFunction& f, const GroupFunction& g) {
    if (!f.group || !g.group || !f.group->same_as(*g.group))
        throw PreconditionError("group mismatch between functions");
}

Complex inner_product(const GroupFunction& f, const GroupFunction& g) {
    require_same_group(f, g);
    Complex acc = 0.0;
    for (int s = 0; s < f.group->order; ++s)
        acc += f.group->haar_weight[s] * f.values(s) * std::conj(g.values(s));
    return acc;
}

double norm(const GroupFunction& f) { return std::sqrt(std::real(inner_product(f, f))); }

}  // namespace gframe
