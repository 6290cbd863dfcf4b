#include "rmx/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "rmx/errors.hpp"

namespace rmx {

std::string GroupElement::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(exps[i]);
    }
    return s + ")";
}

long long GroupSpec::order() const {
    long long n = 1;
    for (int d : orders)
        n *= d;
    return n;
}

int GroupSpec::exponent() const {
    long long e = 1;
    for (int d : orders)
        e = std::lcm(e, static_cast<long long>(d));
    return static_cast<int>(e);
}

GroupElement GroupSpec::identity() const {
    return GroupElement{std::vector<int>(orders.size(), 0)};
}

GroupElement GroupSpec::reduce(std::vector<int> raw) const {
    if (raw.size() != orders.size())
        throw SpecMismatch("element rank " + std::to_string(raw.size()) +
                           " does not match group rank " + std::to_string(orders.size()));
    for (std::size_t i = 0; i < raw.size(); ++i) {
        raw[i] %= orders[i];
        if (raw[i] < 0)
            raw[i] += orders[i];
    }
    return GroupElement{std::move(raw)};
}

bool GroupSpec::valid_element(const GroupElement &g) const {
    if (g.exps.size() != orders.size())
        return false;
    for (std::size_t i = 0; i < orders.size(); ++i)
        if (g.exps[i] < 0 || g.exps[i] >= orders[i])
            return false;
    return true;
}

namespace {
void require_element(const GroupSpec &spec, const GroupElement &g) {
    if (!spec.valid_element(g))
        throw SpecMismatch("element " + g.str() + " does not belong to " + spec.str());
}
} // namespace

GroupElement GroupSpec::mul(const GroupElement &a, const GroupElement &b) const {
    require_element(*this, a);
    require_element(*this, b);
    std::vector<int> r(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i)
        r[i] = (a.exps[i] + b.exps[i]) % orders[i];
    return GroupElement{std::move(r)};
}

GroupElement GroupSpec::inv(const GroupElement &a) const {
    require_element(*this, a);
    std::vector<int> r(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i)
        r[i] = (orders[i] - a.exps[i]) % orders[i];
    return GroupElement{std::move(r)};
}

GroupElement GroupSpec::power(const GroupElement &a, long long k) const {
    require_element(*this, a);
    std::vector<int> r(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) {
        long long v = (static_cast<long long>(a.exps[i]) * k) % orders[i];
        if (v < 0)
            v += orders[i];
        r[i] = static_cast<int>(v);
    }
    return GroupElement{std::move(r)};
}

int GroupSpec::element_order(const GroupElement &a) const {
    require_element(*this, a);
    long long ord = 1;
    for (std::size_t i = 0; i < orders.size(); ++i)
        ord = std::lcm(ord, static_cast<long long>(orders[i] / std::gcd(orders[i], a.exps[i])));
    return static_cast<int>(ord);
}

std::vector<GroupElement> GroupSpec::elements() const {
    std::vector<GroupElement> out;
    out.reserve(order());
    GroupElement cur = identity();
    while (true) {
        out.push_back(cur);
        // odometer with the last component fastest, i.e. lexicographic order
        int i = rank() - 1;
        for (; i >= 0; --i) {
            if (++cur.exps[i] < orders[i])
                break;
            cur.exps[i] = 0;
        }
        if (i < 0)
            break;
    }
    return out;
}

long long GroupSpec::element_index(const GroupElement &a) const {
    require_element(*this, a);
    long long idx = 0;
    for (std::size_t i = 0; i < orders.size(); ++i)
        idx = idx * orders[i] + a.exps[i];
    return idx;
}

std::string GroupSpec::str() const {
    if (orders.empty())
        return "1";
    std::string s;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (i)
            s += "x";
        s += "Z" + std::to_string(orders[i]);
    }
    return s;
}

GroupSpec parse_group_spec(const std::string &text) {
    if (text == "1")
        return GroupSpec{};
    GroupSpec spec;
    std::size_t pos = 0;
    while (true) {
        if (pos >= text.size() || (text[pos] != 'Z' && text[pos] != 'z'))
            throw ParseError("expected 'Z'", pos);
        ++pos;
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start)
            throw ParseError("expected cyclic order after 'Z'", pos);
        long long d = 0;
        for (std::size_t i = start; i < pos; ++i) {
            d = d * 10 + (text[i] - '0');
            if (d > 1000000)
                throw ParseError("cyclic order too large", start);
        }
        if (d == 0)
            throw ParseError("cyclic order must be at least 1", start);
        spec.orders.push_back(static_cast<int>(d));
        if (pos == text.size())
            break;
        if (text[pos] != 'x' && text[pos] != 'X')
            throw ParseError("expected 'x' between cyclic factors", pos);
        ++pos;
    }
    return spec;
}

int pairing_exponent(const GroupSpec &spec, const Character &chi, const GroupElement &g) {
    require_element(spec, chi);
    require_element(spec, g);
    long long e = spec.exponent();
    long long t = 0;
    for (std::size_t i = 0; i < spec.orders.size(); ++i)
        t = (t + (e / spec.orders[i]) * chi.exps[i] % e * g.exps[i]) % e;
    return static_cast<int>(t);
}

Cyc pairing(const GroupSpec &spec, const Character &chi, const GroupElement &g) {
    return Cyc::root_of_unity(spec.exponent(), pairing_exponent(spec, chi, g));
}

bool Subgroup::contains(const GroupElement &g) const {
    return std::binary_search(elements.begin(), elements.end(), g);
}

Subgroup subgroup_closure(const GroupSpec &spec, const std::vector<GroupElement> &generators) {
    for (const GroupElement &g : generators)
        require_element(spec, g);
    std::set<GroupElement> closure{spec.identity()};
    std::vector<GroupElement> frontier{spec.identity()};
    while (!frontier.empty()) {
        std::vector<GroupElement> next;
        for (const GroupElement &x : frontier) {
            for (const GroupElement &g : generators) {
                GroupElement y = spec.mul(x, g);
                if (closure.insert(y).second)
                    next.push_back(y);
            }
        }
        frontier = std::move(next);
    }
    return Subgroup{spec, std::vector<GroupElement>(closure.begin(), closure.end())};
}

Subgroup trivial_subgroup(const GroupSpec &spec) {
    return Subgroup{spec, {spec.identity()}};
}

Subgroup full_subgroup(const GroupSpec &spec) {
    return Subgroup{spec, spec.elements()};
}

QuotientData quotient(const GroupSpec &spec, const Subgroup &n) {
    std::set<GroupElement> seen;
    std::vector<GroupElement> reps;
    for (const GroupElement &g : spec.elements()) { // lex order: first hit is the least rep
        if (seen.count(g))
            continue;
        reps.push_back(g);
        for (const GroupElement &h : n.elements)
            seen.insert(spec.mul(g, h));
    }
    return QuotientData{spec, n, std::move(reps)};
}

Subgroup annihilator(const GroupSpec &spec, const Subgroup &n) {
    std::vector<GroupElement> ann;
    for (const Character &chi : spec.elements()) {
        bool trivial_on_n = true;
        for (const GroupElement &g : n.elements) {
            if (pairing_exponent(spec, chi, g) != 0) {
                trivial_on_n = false;
                break;
            }
        }
        if (trivial_on_n)
            ann.push_back(chi);
    }
    return Subgroup{spec, std::move(ann)};
}

OrthogonalityReport check_orthogonality_completeness(const GroupSpec &spec) {
    OrthogonalityReport report;
    report.diagonal = spec.order();
    int e = spec.exponent();
    std::vector<GroupElement> all = spec.elements();
    Cyc n_value = Cyc::rational(e, Rational(spec.order()));
    Cyc zero = Cyc::zero(e);

    // orthogonality: sum over the group, indexed by character pairs
    for (const Character &a1 : all) {
        for (const Character &b1 : all) {
            Cyc sum = Cyc::zero(e);
            for (const GroupElement &g : all) {
                int t = pairing_exponent(spec, a1, g) - pairing_exponent(spec, b1, g);
                sum += Cyc::root_of_unity(e, t);
            }
            const Cyc &expect = (a1 == b1) ? n_value : zero;
            if (!(sum == expect))
                report.failures.push_back("orthogonality fails at characters " + a1.str() +
                                          ", " + b1.str());
        }
    }
    // completeness: sum over the character group, indexed by element pairs
    for (const GroupElement &a : all) {
        for (const GroupElement &b : all) {
            Cyc sum = Cyc::zero(e);
            for (const Character &chi : all) {
                int t = pairing_exponent(spec, chi, a) - pairing_exponent(spec, chi, b);
                sum += Cyc::root_of_unity(e, t);
            }
            const Cyc &expect = (a == b) ? n_value : zero;
            if (!(sum == expect))
                report.failures.push_back("completeness fails at elements " + a.str() + ", " +
                                          b.str());
        }
    }
    report.pass = report.failures.empty();
    return report;
}

} // namespace rmx
