#include "rmx/bicharacter.hpp"

#include <numeric>

#include "rmx/errors.hpp"

namespace rmx {

int Bicharacter::exponent(const GroupElement &a, const GroupElement &b) const {
    if (!spec.valid_element(a) || !spec.valid_element(b))
        throw SpecMismatch("bicharacter argument does not belong to " + spec.str());
    long long e = spec.exponent();
    long long t = 0;
    for (std::size_t i = 0; i < spec.orders.size(); ++i) {
        for (std::size_t j = 0; j < spec.orders.size(); ++j) {
            long long g = std::gcd(spec.orders[i], spec.orders[j]);
            t = (t + (e / g) * K[i][j] % e * a.exps[i] % e * b.exps[j]) % e;
        }
    }
    return static_cast<int>(t);
}

Cyc Bicharacter::evaluate(const GroupElement &a, const GroupElement &b) const {
    return Cyc::root_of_unity(spec.exponent(), exponent(a, b));
}

std::string Bicharacter::k_str() const {
    std::string s;
    for (std::size_t i = 0; i < K.size(); ++i) {
        if (i)
            s += ";";
        for (std::size_t j = 0; j < K[i].size(); ++j) {
            if (j)
                s += ",";
            s += std::to_string(K[i][j]);
        }
    }
    return s;
}

Bicharacter make_bicharacter(const GroupSpec &spec, std::vector<std::vector<int>> k_matrix,
                             bool *reduced) {
    std::size_t k = spec.orders.size();
    if (k_matrix.size() != k)
        throw SpecMismatch("K matrix has " + std::to_string(k_matrix.size()) +
                           " rows, group rank is " + std::to_string(k));
    bool changed = false;
    for (std::size_t i = 0; i < k; ++i) {
        if (k_matrix[i].size() != k)
            throw SpecMismatch("K matrix row " + std::to_string(i) + " has wrong length");
        for (std::size_t j = 0; j < k; ++j) {
            int g = std::gcd(spec.orders[i], spec.orders[j]);
            int v = k_matrix[i][j] % g;
            if (v < 0)
                v += g;
            if (v != k_matrix[i][j])
                changed = true;
            k_matrix[i][j] = v;
        }
    }
    if (reduced)
        *reduced = changed;
    return Bicharacter{spec, std::move(k_matrix)};
}

Bicharacter trivial_bicharacter(const GroupSpec &spec) {
    std::size_t k = spec.orders.size();
    return Bicharacter{spec, std::vector<std::vector<int>>(k, std::vector<int>(k, 0))};
}

Bicharacter cyclic_bicharacter(int n, long long k) {
    GroupSpec spec{{n}};
    int v = static_cast<int>(k % n);
    if (v < 0)
        v += n;
    return Bicharacter{spec, {{v}}};
}

long long bicharacter_count(const GroupSpec &spec) {
    long long count = 1;
    for (int di : spec.orders)
        for (int dj : spec.orders)
            count *= std::gcd(di, dj);
    return count;
}

std::vector<Bicharacter> enumerate_all(const GroupSpec &spec) {
    std::size_t k = spec.orders.size();
    std::vector<int> moduli;
    moduli.reserve(k * k);
    for (int di : spec.orders)
        for (int dj : spec.orders)
            moduli.push_back(std::gcd(di, dj));

    std::vector<Bicharacter> out;
    std::vector<int> cells(k * k, 0);
    while (true) {
        std::vector<std::vector<int>> mat(k, std::vector<int>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                mat[i][j] = cells[i * k + j];
        out.push_back(Bicharacter{spec, std::move(mat)});
        // row-major odometer, last cell fastest
        int i = static_cast<int>(cells.size()) - 1;
        for (; i >= 0; --i) {
            if (++cells[i] < moduli[i])
                break;
            cells[i] = 0;
        }
        if (i < 0)
            break;
    }
    return out;
}

bool is_commutation_factor(const Bicharacter &sigma) {
    std::size_t k = sigma.spec.orders.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            int g = std::gcd(sigma.spec.orders[i], sigma.spec.orders[j]);
            if ((sigma.K[i][j] + sigma.K[j][i]) % g != 0)
                return false;
        }
    return true;
}

Bicharacter transpose(const Bicharacter &sigma) {
    std::size_t k = sigma.K.size();
    std::vector<std::vector<int>> mat(k, std::vector<int>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            mat[i][j] = sigma.K[j][i];
    return Bicharacter{sigma.spec, std::move(mat)};
}

Bicharacter pointwise_product(const Bicharacter &a, const Bicharacter &b) {
    if (a.spec != b.spec)
        throw SpecMismatch("bicharacter product across different groups");
    std::size_t k = a.K.size();
    std::vector<std::vector<int>> mat(k, std::vector<int>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            int g = std::gcd(a.spec.orders[i], a.spec.orders[j]);
            mat[i][j] = (a.K[i][j] + b.K[i][j]) % g;
        }
    return Bicharacter{a.spec, std::move(mat)};
}

Bicharacter pointwise_inverse(const Bicharacter &sigma) {
    std::size_t k = sigma.K.size();
    std::vector<std::vector<int>> mat(k, std::vector<int>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            int g = std::gcd(sigma.spec.orders[i], sigma.spec.orders[j]);
            mat[i][j] = (g - sigma.K[i][j]) % g;
        }
    return Bicharacter{sigma.spec, std::move(mat)};
}

FunctionTable FunctionTable::constant(const GroupSpec &spec, const Cyc &value) {
    if (value.conductor() % spec.exponent() != 0)
        throw ConductorMismatch("table conductor must be a multiple of the group exponent");
    FunctionTable t;
    t.spec = spec;
    t.conductor = value.conductor();
    t.values.assign(spec.order() * spec.order(), value);
    return t;
}

const Cyc &FunctionTable::at(const GroupElement &a, const GroupElement &b) const {
    return values[spec.element_index(a) * spec.order() + spec.element_index(b)];
}

Cyc &FunctionTable::at(const GroupElement &a, const GroupElement &b) {
    return values[spec.element_index(a) * spec.order() + spec.element_index(b)];
}

FunctionTable table_of(const Bicharacter &sigma) {
    int e = sigma.spec.exponent();
    FunctionTable t = FunctionTable::constant(sigma.spec, Cyc::one(e));
    for (const GroupElement &a : sigma.spec.elements())
        for (const GroupElement &b : sigma.spec.elements())
            t.at(a, b) = Cyc::root_of_unity(e, sigma.exponent(a, b));
    return t;
}

FromTableResult from_table(const FunctionTable &table) {
    const GroupSpec &spec = table.spec;
    std::vector<GroupElement> all = spec.elements();

    for (const GroupElement &a : all)
        for (const GroupElement &b : all)
            if (table.at(a, b).is_zero())
                return {std::nullopt, "zero value at " + a.str() + ", " + b.str()};

    // sigma(ab, c) = sigma(a, c) sigma(b, c)
    for (const GroupElement &a : all)
        for (const GroupElement &b : all)
            for (const GroupElement &c : all)
                if (!(table.at(spec.mul(a, b), c) == table.at(a, c) * table.at(b, c)))
                    return {std::nullopt, "multiplicativity in the first slot fails at " +
                                              a.str() + ", " + b.str() + ", " + c.str()};
    // sigma(a, bc) = sigma(a, b) sigma(a, c)
    for (const GroupElement &a : all)
        for (const GroupElement &b : all)
            for (const GroupElement &c : all)
                if (!(table.at(a, spec.mul(b, c)) == table.at(a, b) * table.at(a, c)))
                    return {std::nullopt, "multiplicativity in the second slot fails at " +
                                              a.str() + ", " + b.str() + ", " + c.str()};

    // Read the canonical matrix off the generator values. Multiplicativity
    // forces sigma(e_i, e_j) to be a gcd(d_i, d_j)-th root of unity.
    std::size_t k = spec.orders.size();
    std::vector<std::vector<int>> mat(k, std::vector<int>(k, 0));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            GroupElement ei = spec.identity(), ej = spec.identity();
            ei.exps[i] = spec.orders[i] > 1 ? 1 : 0;
            ej.exps[j] = spec.orders[j] > 1 ? 1 : 0;
            const Cyc &value = table.at(ei, ej);
            int g = std::gcd(spec.orders[i], spec.orders[j]);
            bool found = false;
            for (int t = 0; t < g; ++t) {
                if (value == Cyc::root_of_unity(table.conductor,
                                                static_cast<long long>(t) * table.conductor / g)) {
                    mat[i][j] = t;
                    found = true;
                    break;
                }
            }
            if (!found)
                return {std::nullopt, "generator value at " + ei.str() + ", " + ej.str() +
                                          " is not a root of unity of the expected order"};
        }
    }
    return {Bicharacter{spec, std::move(mat)}, ""};
}

std::pair<Subgroup, Subgroup> kernels(const Bicharacter &sigma) {
    const GroupSpec &spec = sigma.spec;
    std::vector<GroupElement> all = spec.elements();
    std::vector<GroupElement> left, right;
    for (const GroupElement &a : all) {
        bool in_left = true, in_right = true;
        for (const GroupElement &b : all) {
            if (sigma.exponent(a, b) != 0)
                in_left = false;
            if (sigma.exponent(b, a) != 0)
                in_right = false;
            if (!in_left && !in_right)
                break;
        }
        if (in_left)
            left.push_back(a);
        if (in_right)
            right.push_back(a);
    }
    Subgroup n1{spec, std::move(left)}, n2{spec, std::move(right)};
    if (spec.order() / n1.order() != spec.order() / n2.order())
        throw Error("kernel index mismatch"); // cannot happen: sigma induces a
                                              // non-degenerate pairing of the quotients
    return {std::move(n1), std::move(n2)};
}

PairingData induced_pairing(const Bicharacter &sigma) {
    const GroupSpec &spec = sigma.spec;
    int e = spec.exponent();
    long long n = spec.order();
    std::vector<GroupElement> all = spec.elements();

    auto [n1, n2] = kernels(sigma);
    long long m = n / n1.order();
    Subgroup delta1 = annihilator(spec, n1);
    Subgroup delta2 = annihilator(spec, n2);
    if (delta1.order() != m || delta2.order() != m)
        throw Error("annihilator order does not match the kernel index");

    // sigma'(a',b') = (m/n^2) sum_{a,b} sigma(a,b) <a',a>^* <b',b>^*.
    // Every term is a power of zeta_e, so the double sum is collected in an
    // exponent histogram before any field arithmetic happens.
    Rational scale(BigInt(m), BigInt(n) * BigInt(n));
    std::vector<Cyc> tau;
    tau.reserve(m * m);
    for (const Character &a1 : all) {
        for (const Character &a2 : all) {
            std::vector<long long> hist(e, 0);
            for (const GroupElement &a : all) {
                int ta = pairing_exponent(spec, a1, a);
                for (const GroupElement &b : all) {
                    int t = sigma.exponent(a, b) - ta - pairing_exponent(spec, a2, b);
                    hist[((t % e) + e) % e] += 1;
                }
            }
            Cyc value = Cyc::zero(e);
            for (int j = 0; j < e; ++j)
                if (hist[j] != 0)
                    value += Cyc::rational(e, Rational(hist[j])) * Cyc::root_of_unity(e, j);
            value *= Cyc::rational(e, scale);

            bool in_support = delta1.contains(a1) && delta2.contains(a2);
            if (!in_support && !value.is_zero())
                throw Error("induced pairing does not vanish off the annihilators at " +
                            a1.str() + ", " + a2.str());
            if (in_support)
                tau.push_back(std::move(value));
        }
    }

    PairingData data{std::move(n1), std::move(n2), std::move(delta1), std::move(delta2), m,
                     std::move(tau)};

    // tau must be non-degenerate on Delta1 x Delta2.
    for (std::size_t i = 0; i < data.Delta1.elements.size(); ++i) {
        bool row_trivial = true;
        for (std::size_t j = 0; j < data.Delta2.elements.size(); ++j)
            if (!data.tau_at(i, j).is_one())
                row_trivial = false;
        if (row_trivial && data.Delta1.elements[i] != spec.identity())
            throw Error("induced pairing is degenerate in the first slot");
    }
    for (std::size_t j = 0; j < data.Delta2.elements.size(); ++j) {
        bool col_trivial = true;
        for (std::size_t i = 0; i < data.Delta1.elements.size(); ++i)
            if (!data.tau_at(i, j).is_one())
                col_trivial = false;
        if (col_trivial && data.Delta2.elements[j] != spec.identity())
            throw Error("induced pairing is degenerate in the second slot");
    }
    return data;
}

} // namespace rmx
