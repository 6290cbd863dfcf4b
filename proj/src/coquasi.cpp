#include "rmx/coquasi.hpp"

#include "rmx/errors.hpp"

namespace rmx {

namespace {

// Coproduct terms of a basis element of the group algebra: the group-like
// expansion Delta(g) = g (x) g as an explicit term list, so the convolution
// code below follows the general formula.
std::vector<std::pair<GroupElement, GroupElement>> coproduct_terms(const GroupElement &g) {
    return {{g, g}};
}

void require_same_form(const BilinearForm &a, const BilinearForm &b) {
    if (a.spec != b.spec)
        throw SpecMismatch("bilinear forms over different groups");
    if (a.conductor != b.conductor)
        throw ConductorMismatch("bilinear forms at different conductors");
}

} // namespace

BilinearForm counit_form(const GroupSpec &spec, int conductor) {
    return FunctionTable::constant(spec, Cyc::one(conductor));
}

BilinearForm convolution(const BilinearForm &psi, const BilinearForm &psi2) {
    require_same_form(psi, psi2);
    BilinearForm out = FunctionTable::constant(psi.spec, Cyc::zero(psi.conductor));
    for (const GroupElement &a : psi.spec.elements()) {
        for (const GroupElement &b : psi.spec.elements()) {
            Cyc sum = Cyc::zero(psi.conductor);
            for (const auto &[a1, a2] : coproduct_terms(a))
                for (const auto &[b1, b2] : coproduct_terms(b))
                    sum += psi.at(a1, b1) * psi2.at(a2, b2);
            out.at(a, b) = std::move(sum);
        }
    }
    return out;
}

FormInverse convolution_inverse(const BilinearForm &form) {
    for (const GroupElement &a : form.spec.elements())
        for (const GroupElement &b : form.spec.elements())
            if (form.at(a, b).is_zero())
                return {std::nullopt, "form vanishes at " + a.str() + ", " + b.str()};
    BilinearForm inv = form;
    for (Cyc &v : inv.values)
        v = v.inverse();
    BilinearForm unit = counit_form(form.spec, form.conductor);
    if (!(convolution(form, inv) == unit) || !(convolution(inv, form) == unit))
        throw Error("convolution inverse failed the product check");
    return {std::move(inv), ""};
}

AxiomReport verify_coquasi(const BilinearForm &rho) {
    AxiomReport report;
    const GroupSpec &spec = rho.spec;
    std::vector<GroupElement> all = spec.elements();

    FormInverse inv = convolution_inverse(rho);
    report.add("rho convolution invertible", inv.ok(), inv.zero_witness);

    // sum b1 a1 rho(a2,b2) = sum rho(a1,b1) a2 b2, evaluated in the group
    // algebra for every basis pair
    {
        bool pass = true;
        std::string witness;
        for (const GroupElement &a : all) {
            for (const GroupElement &b : all) {
                HopfElement lhs = hopf_zero(spec, Side::Group);
                HopfElement rhs = hopf_zero(spec, Side::Group);
                for (const auto &[a1, a2] : coproduct_terms(a))
                    for (const auto &[b1, b2] : coproduct_terms(b)) {
                        lhs.add_term(spec.mul(b1, a1), rho.at(a2, b2));
                        rhs.add_term(spec.mul(a2, b2), rho.at(a1, b1));
                    }
                if (!(lhs == rhs)) {
                    pass = false;
                    if (witness.empty())
                        witness = a.str() + ", " + b.str();
                }
            }
        }
        report.add("commutation relation", pass, witness);
    }
    // rho(bc, a) = sum rho(b,a1) rho(c,a2)
    {
        bool pass = true;
        std::string witness;
        for (const GroupElement &a : all)
            for (const GroupElement &b : all)
                for (const GroupElement &c : all) {
                    Cyc rhs = Cyc::zero(rho.conductor);
                    for (const auto &[a1, a2] : coproduct_terms(a))
                        rhs += rho.at(b, a1) * rho.at(c, a2);
                    if (!(rho.at(spec.mul(b, c), a) == rhs)) {
                        pass = false;
                        if (witness.empty())
                            witness = a.str() + ", " + b.str() + ", " + c.str();
                    }
                }
        report.add("rho(bc,a) = rho(b,a1) rho(c,a2)", pass, witness);
    }
    // rho(a, bc) = sum rho(a1,c) rho(a2,b)
    {
        bool pass = true;
        std::string witness;
        for (const GroupElement &a : all)
            for (const GroupElement &b : all)
                for (const GroupElement &c : all) {
                    Cyc rhs = Cyc::zero(rho.conductor);
                    for (const auto &[a1, a2] : coproduct_terms(a))
                        rhs += rho.at(a1, c) * rho.at(a2, b);
                    if (!(rho.at(a, spec.mul(b, c)) == rhs)) {
                        pass = false;
                        if (witness.empty())
                            witness = a.str() + ", " + b.str() + ", " + c.str();
                    }
                }
        report.add("rho(a,bc) = rho(a1,c) rho(a2,b)", pass, witness);
    }
    // rho(1,a) = rho(a,1) = eps(a)
    {
        bool pass = true;
        std::string witness;
        GroupElement id = spec.identity();
        for (const GroupElement &a : all)
            if (!rho.at(id, a).is_one() || !rho.at(a, id).is_one()) {
                pass = false;
                if (witness.empty())
                    witness = a.str();
            }
        report.add("rho(1,a) = rho(a,1) = eps(a)", pass, witness);
    }
    // the table-level characterization: coquasitriangular iff bicharacter
    {
        bool expected = from_table(rho).accepted();
        bool got = report.all_pass();
        report.add("axioms hold iff the table is a bicharacter", expected == got,
                   expected == got ? "" : (expected ? "bicharacter but axioms fail"
                                                    : "axioms hold for a non-bicharacter"));
    }
    return report;
}

bool is_cotriangular(const BilinearForm &rho) {
    AxiomReport axioms = verify_coquasi(rho);
    if (!axioms.all_pass())
        throw Error("cotriangularity is undefined: the form is not coquasitriangular");
    FormInverse inv = convolution_inverse(rho);
    for (const GroupElement &a : rho.spec.elements())
        for (const GroupElement &b : rho.spec.elements())
            if (!(rho.at(b, a) == inv.inverse->at(a, b)))
                return false;
    return true;
}

AxiomReport antipode_relations_check(const BilinearForm &rho) {
    AxiomReport report;
    const GroupSpec &spec = rho.spec;
    FormInverse inv = convolution_inverse(rho);
    if (!inv.ok()) {
        report.add("rho convolution invertible", false, inv.zero_witness);
        return report;
    }
    bool s1 = true, s2 = true, s12 = true;
    std::string w1, w2, w12;
    for (const GroupElement &a : spec.elements()) {
        for (const GroupElement &b : spec.elements()) {
            if (!(rho.at(spec.inv(a), b) == inv.inverse->at(a, b)) && s1) {
                s1 = false;
                w1 = a.str() + ", " + b.str();
            }
            if (!(inv.inverse->at(a, spec.inv(b)) == rho.at(a, b)) && s2) {
                s2 = false;
                w2 = a.str() + ", " + b.str();
            }
            if (!(rho.at(spec.inv(a), spec.inv(b)) == rho.at(a, b)) && s12) {
                s12 = false;
                w12 = a.str() + ", " + b.str();
            }
        }
    }
    report.add("rho(S a, b) = rho'(a, b)", s1, w1);
    report.add("rho'(a, S b) = rho(a, b)", s2, w2);
    report.add("rho(S a, S b) = rho(a, b)", s12, w12);
    return report;
}

} // namespace rmx
