#include "rmx/hopf.hpp"

#include "rmx/errors.hpp"

namespace rmx {

std::string side_str(Side side) { return side == Side::Star ? "star" : "group"; }

namespace {

void require_same(const GroupSpec &sa, Side a, const GroupSpec &sb, Side b) {
    if (sa != sb)
        throw SpecMismatch("operands over different groups: " + sa.str() + " vs " + sb.str());
    if (a != b)
        throw SpecMismatch("operands on different sides: " + side_str(a) + " vs " + side_str(b));
}

std::string pair_str(const std::pair<GroupElement, GroupElement> &key) {
    return key.first.str() + "(x)" + key.second.str();
}

} // namespace

void HopfElement::add_term(const GroupElement &key, const Cyc &c) {
    if (c.is_zero())
        return;
    auto [it, fresh] = coeffs.emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            coeffs.erase(it);
    }
}

void Tensor2::add_term(const std::pair<GroupElement, GroupElement> &key, const Cyc &c) {
    if (c.is_zero())
        return;
    auto [it, fresh] = coeffs.emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            coeffs.erase(it);
    }
}

void Tensor3::add_term(const std::array<GroupElement, 3> &key, const Cyc &c) {
    if (c.is_zero())
        return;
    auto [it, fresh] = coeffs.emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            coeffs.erase(it);
    }
}

std::string HopfElement::str() const {
    if (coeffs.empty())
        return "0";
    std::string s;
    for (const auto &[key, c] : coeffs) {
        if (!s.empty())
            s += " + ";
        s += "(" + c.str() + ")*" + key.str();
    }
    return s;
}

std::string Tensor2::str() const {
    if (coeffs.empty())
        return "0";
    std::string s;
    for (const auto &[key, c] : coeffs) {
        if (!s.empty())
            s += " + ";
        s += "(" + c.str() + ")*" + pair_str(key);
    }
    return s;
}

HopfElement hopf_zero(const GroupSpec &spec, Side side) { return HopfElement{spec, side, {}}; }

HopfElement hopf_basis(const GroupSpec &spec, Side side, const GroupElement &g) {
    if (!spec.valid_element(g))
        throw SpecMismatch("basis element " + g.str() + " does not belong to " + spec.str());
    HopfElement x{spec, side, {}};
    x.coeffs.emplace(g, Cyc::one(spec.exponent()));
    return x;
}

HopfElement hopf_unit(const GroupSpec &spec, Side side) {
    return hopf_basis(spec, side, spec.identity());
}

Tensor2 tensor2_zero(const GroupSpec &spec, Side side) { return Tensor2{spec, side, {}}; }

Tensor2 tensor2_unit(const GroupSpec &spec, Side side) {
    Tensor2 t{spec, side, {}};
    t.coeffs.emplace(std::make_pair(spec.identity(), spec.identity()), Cyc::one(spec.exponent()));
    return t;
}

Tensor3 tensor3_unit(const GroupSpec &spec, Side side) {
    Tensor3 t{spec, side, {}};
    t.coeffs.emplace(std::array<GroupElement, 3>{spec.identity(), spec.identity(), spec.identity()},
                     Cyc::one(spec.exponent()));
    return t;
}

Tensor2 tensor_product(const HopfElement &a, const HopfElement &b) {
    require_same(a.spec, a.side, b.spec, b.side);
    Tensor2 t{a.spec, a.side, {}};
    for (const auto &[ka, ca] : a.coeffs)
        for (const auto &[kb, cb] : b.coeffs)
            t.add_term({ka, kb}, ca * cb);
    return t;
}

HopfElement operator*(const HopfElement &a, const HopfElement &b) {
    require_same(a.spec, a.side, b.spec, b.side);
    HopfElement r{a.spec, a.side, {}};
    for (const auto &[ka, ca] : a.coeffs)
        for (const auto &[kb, cb] : b.coeffs)
            r.add_term(a.spec.mul(ka, kb), ca * cb);
    return r;
}

Tensor2 operator*(const Tensor2 &a, const Tensor2 &b) {
    require_same(a.spec, a.side, b.spec, b.side);
    Tensor2 r{a.spec, a.side, {}};
    for (const auto &[ka, ca] : a.coeffs)
        for (const auto &[kb, cb] : b.coeffs)
            r.add_term({a.spec.mul(ka.first, kb.first), a.spec.mul(ka.second, kb.second)},
                       ca * cb);
    return r;
}

Tensor3 operator*(const Tensor3 &a, const Tensor3 &b) {
    require_same(a.spec, a.side, b.spec, b.side);
    Tensor3 r{a.spec, a.side, {}};
    for (const auto &[ka, ca] : a.coeffs)
        for (const auto &[kb, cb] : b.coeffs)
            r.add_term({a.spec.mul(ka[0], kb[0]), a.spec.mul(ka[1], kb[1]),
                        a.spec.mul(ka[2], kb[2])},
                       ca * cb);
    return r;
}

HopfElement operator+(const HopfElement &a, const HopfElement &b) {
    require_same(a.spec, a.side, b.spec, b.side);
    HopfElement r = a;
    for (const auto &[k, c] : b.coeffs)
        r.add_term(k, c);
    return r;
}

Tensor2 operator+(const Tensor2 &a, const Tensor2 &b) {
    require_same(a.spec, a.side, b.spec, b.side);
    Tensor2 r = a;
    for (const auto &[k, c] : b.coeffs)
        r.add_term(k, c);
    return r;
}

HopfElement operator-(const HopfElement &a, const HopfElement &b) {
    require_same(a.spec, a.side, b.spec, b.side);
    HopfElement r = a;
    for (const auto &[k, c] : b.coeffs)
        r.add_term(k, -c);
    return r;
}

Tensor2 operator-(const Tensor2 &a, const Tensor2 &b) {
    require_same(a.spec, a.side, b.spec, b.side);
    Tensor2 r = a;
    for (const auto &[k, c] : b.coeffs)
        r.add_term(k, -c);
    return r;
}

HopfElement operator*(const Cyc &c, const HopfElement &a) {
    HopfElement r{a.spec, a.side, {}};
    for (const auto &[k, v] : a.coeffs)
        r.add_term(k, c * v);
    return r;
}

Tensor2 operator*(const Cyc &c, const Tensor2 &a) {
    Tensor2 r{a.spec, a.side, {}};
    for (const auto &[k, v] : a.coeffs)
        r.add_term(k, c * v);
    return r;
}

Tensor2 coproduct(const HopfElement &x) {
    Tensor2 t{x.spec, x.side, {}};
    for (const auto &[k, c] : x.coeffs)
        t.add_term({k, k}, c);
    return t;
}

Cyc counit(const HopfElement &x) {
    Cyc sum = Cyc::zero(x.spec.exponent());
    for (const auto &[k, c] : x.coeffs) {
        if (sum.conductor() != c.conductor())
            sum = sum.lift(c.conductor());
        sum += c;
    }
    return sum;
}

HopfElement antipode(const HopfElement &x) {
    HopfElement r{x.spec, x.side, {}};
    for (const auto &[k, c] : x.coeffs)
        r.add_term(x.spec.inv(k), c);
    return r;
}

HopfElement contract_product(const Tensor2 &t) {
    HopfElement r{t.spec, t.side, {}};
    for (const auto &[k, c] : t.coeffs)
        r.add_term(t.spec.mul(k.first, k.second), c);
    return r;
}

Tensor2 twist(const Tensor2 &t) {
    Tensor2 r{t.spec, t.side, {}};
    for (const auto &[k, c] : t.coeffs)
        r.add_term({k.second, k.first}, c);
    return r;
}

Tensor2 antipode_slot1(const Tensor2 &t) {
    Tensor2 r{t.spec, t.side, {}};
    for (const auto &[k, c] : t.coeffs)
        r.add_term({t.spec.inv(k.first), k.second}, c);
    return r;
}

Tensor2 antipode_slot2(const Tensor2 &t) {
    Tensor2 r{t.spec, t.side, {}};
    for (const auto &[k, c] : t.coeffs)
        r.add_term({k.first, t.spec.inv(k.second)}, c);
    return r;
}

Tensor3 lift12(const Tensor2 &t) {
    Tensor3 r{t.spec, t.side, {}};
    GroupElement id = t.spec.identity();
    for (const auto &[k, c] : t.coeffs)
        r.add_term({k.first, k.second, id}, c);
    return r;
}

Tensor3 lift23(const Tensor2 &t) {
    Tensor3 r{t.spec, t.side, {}};
    GroupElement id = t.spec.identity();
    for (const auto &[k, c] : t.coeffs)
        r.add_term({id, k.first, k.second}, c);
    return r;
}

Tensor3 lift13(const Tensor2 &t) {
    Tensor3 r{t.spec, t.side, {}};
    GroupElement id = t.spec.identity();
    for (const auto &[k, c] : t.coeffs)
        r.add_term({k.first, id, k.second}, c);
    return r;
}

Tensor3 coproduct_slot1(const Tensor2 &t) {
    Tensor3 r{t.spec, t.side, {}};
    for (const auto &[k, c] : t.coeffs)
        r.add_term({k.first, k.first, k.second}, c);
    return r;
}

Tensor3 coproduct_slot2(const Tensor2 &t) {
    Tensor3 r{t.spec, t.side, {}};
    for (const auto &[k, c] : t.coeffs)
        r.add_term({k.first, k.second, k.second}, c);
    return r;
}

HopfElement counit_slot1(const Tensor2 &t) {
    HopfElement r{t.spec, t.side, {}};
    for (const auto &[k, c] : t.coeffs)
        r.add_term(k.second, c);
    return r;
}

HopfElement counit_slot2(const Tensor2 &t) {
    HopfElement r{t.spec, t.side, {}};
    for (const auto &[k, c] : t.coeffs)
        r.add_term(k.first, c);
    return r;
}

Tensor2 counit_slot3(const Tensor3 &t) {
    Tensor2 r{t.spec, t.side, {}};
    for (const auto &[k, c] : t.coeffs)
        r.add_term({k[0], k[1]}, c);
    return r;
}

Cyc hopf_pairing(const HopfElement &star_side, const HopfElement &group_side) {
    if (star_side.spec != group_side.spec)
        throw SpecMismatch("pairing across different groups");
    if (star_side.side != Side::Star || group_side.side != Side::Group)
        throw SpecMismatch("hopf_pairing expects a star-side and a group-side element");
    const GroupSpec &spec = star_side.spec;
    int e = spec.exponent();
    Cyc sum = Cyc::zero(e);
    for (const auto &[chi, c1] : star_side.coeffs)
        for (const auto &[g, c2] : group_side.coeffs)
            sum += c1 * c2 * Cyc::root_of_unity(e, pairing_exponent(spec, chi, g));
    return sum;
}

AxiomReport verify_hopf_pairing_axioms(const GroupSpec &spec) {
    AxiomReport report;
    std::vector<GroupElement> all = spec.elements();
    int e = spec.exponent();

    auto phi = [&](const Character &chi, const GroupElement &g) {
        return Cyc::root_of_unity(e, pairing_exponent(spec, chi, g));
    };

    // phi(Delta a, h (x) h') = phi(a, h h')
    {
        bool pass = true;
        std::string witness;
        for (const Character &chi : all) {
            for (const GroupElement &g : all)
                for (const GroupElement &h : all)
                    if (!(phi(chi, g) * phi(chi, h) == phi(chi, spec.mul(g, h)))) {
                        pass = false;
                        if (witness.empty())
                            witness = chi.str() + ", " + g.str() + ", " + h.str();
                    }
        }
        report.add("pairing splits the star-side coproduct", pass, witness);
    }
    // phi(a a', Delta h) = phi(a a', h)
    {
        bool pass = true;
        std::string witness;
        for (const Character &chi : all)
            for (const Character &psi : all)
                for (const GroupElement &g : all)
                    if (!(phi(chi, g) * phi(psi, g) == phi(spec.mul(chi, psi), g))) {
                        pass = false;
                        if (witness.empty())
                            witness = chi.str() + ", " + psi.str() + ", " + g.str();
                    }
        report.add("pairing splits the group-side coproduct", pass, witness);
    }
    // phi(a, 1) = eps(a), phi(1, h) = eps(h)
    {
        bool pass = true;
        std::string witness;
        for (const GroupElement &g : all) {
            if (!phi(g, spec.identity()).is_one() || !phi(spec.identity(), g).is_one()) {
                pass = false;
                if (witness.empty())
                    witness = g.str();
            }
        }
        report.add("pairing respects units and counits", pass, witness);
    }
    // phi(S a, h) = phi(a, S h)
    {
        bool pass = true;
        std::string witness;
        for (const Character &chi : all)
            for (const GroupElement &g : all)
                if (!(phi(spec.inv(chi), g) == phi(chi, spec.inv(g)))) {
                    pass = false;
                    if (witness.empty())
                        witness = chi.str() + ", " + g.str();
                }
        report.add("pairing intertwines the antipodes", pass, witness);
    }
    return report;
}

int scalar_conductor(const Tensor2 &t) {
    if (t.coeffs.empty())
        return t.spec.exponent();
    return t.coeffs.begin()->second.conductor();
}

HopfElement lift_scalars(const HopfElement &x, int conductor) {
    HopfElement r{x.spec, x.side, {}};
    for (const auto &[k, c] : x.coeffs)
        r.add_term(k, c.lift(conductor));
    return r;
}

Tensor2 lift_scalars(const Tensor2 &t, int conductor) {
    Tensor2 r{t.spec, t.side, {}};
    for (const auto &[k, c] : t.coeffs)
        r.add_term(k, c.lift(conductor));
    return r;
}

FunctionTable function_from_tensor2(const Tensor2 &t) {
    if (t.side != Side::Star)
        throw SpecMismatch("function dictionary expects a star-side tensor");
    const GroupSpec &spec = t.spec;
    int e = spec.exponent();
    int c = scalar_conductor(t);
    FunctionTable table = FunctionTable::constant(spec, Cyc::zero(c));
    for (const GroupElement &a : spec.elements()) {
        for (const GroupElement &b : spec.elements()) {
            Cyc sum = Cyc::zero(c);
            for (const auto &[key, coeff] : t.coeffs) {
                long long ta = pairing_exponent(spec, key.first, a);
                long long tb = pairing_exponent(spec, key.second, b);
                sum += coeff * Cyc::root_of_unity(c, (ta + tb) * (c / e));
            }
            table.at(a, b) = std::move(sum);
        }
    }
    return table;
}

Tensor2 tensor2_from_function(const FunctionTable &table) {
    const GroupSpec &spec = table.spec;
    int e = spec.exponent();
    int c = table.conductor;
    long long n = spec.order();
    Cyc scale = Cyc::rational(c, Rational(BigInt(1), BigInt(n) * BigInt(n)));
    std::vector<GroupElement> all = spec.elements();

    Tensor2 t{spec, Side::Star, {}};
    for (const Character &a1 : all) {
        for (const Character &b1 : all) {
            Cyc sum = Cyc::zero(c);
            for (const GroupElement &a : all) {
                long long ta = pairing_exponent(spec, a1, a);
                for (const GroupElement &b : all) {
                    const Cyc &v = table.at(a, b);
                    if (v.is_zero())
                        continue;
                    long long tb = pairing_exponent(spec, b1, b);
                    sum += v * Cyc::root_of_unity(c, -(ta + tb) * (c / e));
                }
            }
            t.add_term({a1, b1}, sum * scale);
        }
    }
    return t;
}

Tensor2Inverse invert_tensor2(const Tensor2 &t) {
    FunctionTable table = function_from_tensor2(t);
    for (const GroupElement &a : t.spec.elements())
        for (const GroupElement &b : t.spec.elements())
            if (table.at(a, b).is_zero())
                return {std::nullopt,
                        "associated function vanishes at " + a.str() + ", " + b.str()};
    for (Cyc &v : table.values)
        v = v.inverse();
    Tensor2 inv = tensor2_from_function(table);

    Tensor2 unit = lift_scalars(tensor2_unit(t.spec, t.side), scalar_conductor(t));
    if (!(t * inv == unit) || !(inv * t == unit))
        throw Error("tensor inversion failed the product check");
    return {std::move(inv), ""};
}

} // namespace rmx
