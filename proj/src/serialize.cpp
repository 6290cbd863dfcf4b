#include "rmx/serialize.hpp"

#include "rmx/errors.hpp"

namespace rmx {

Json to_json(const Cyc &value) {
    Json coeffs = Json::array();
    for (const Rational &c : value.coeffs())
        coeffs.push_back(Json::array({c.num().str(), c.den().str()}));
    return Json{{"conductor", value.conductor()}, {"coeffs", coeffs}};
}

Cyc cyc_from_json(const Json &j) {
    int conductor = j.at("conductor").get<int>();
    Cyc value = Cyc::zero(conductor);
    const Json &coeffs = j.at("coeffs");
    if (coeffs.size() != value.coeffs().size())
        throw Error("coefficient count does not match the conductor");
    Cyc sum = Cyc::zero(conductor);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        BigInt num(coeffs[i].at(0).get<std::string>());
        BigInt den(coeffs[i].at(1).get<std::string>());
        sum += Cyc::rational(conductor, Rational(num, den)) *
               Cyc::root_of_unity(conductor, static_cast<long long>(i));
    }
    return sum;
}

Json to_json(const GroupElement &g) {
    Json arr = Json::array();
    for (int a : g.exps)
        arr.push_back(a);
    return arr;
}

GroupElement element_from_json(const Json &j) {
    GroupElement g;
    for (const Json &v : j)
        g.exps.push_back(v.get<int>());
    return g;
}

Json to_json(const Tensor2 &t) {
    Json arr = Json::array();
    for (const auto &[key, c] : t.coeffs) // map order = sorted (a, b)
        arr.push_back(Json{{"a", to_json(key.first)}, {"b", to_json(key.second)},
                           {"c", to_json(c)}});
    return arr;
}

Json to_json(const AxiomReport &report) {
    Json axioms = Json::array();
    for (const CheckItem &item : report.items)
        axioms.push_back(Json{{"name", item.name}, {"pass", item.pass},
                              {"witness", item.witness}});
    return Json{{"axioms", axioms}};
}

std::string degree_key(const GroupElement &g) {
    std::string key;
    for (std::size_t i = 0; i < g.exps.size(); ++i) {
        if (i)
            key += ".";
        key += std::to_string(g.exps[i]);
    }
    return key;
}

GroupElement degree_from_key(const std::string &key, const GroupSpec &spec) {
    std::vector<int> exps;
    if (!key.empty()) {
        std::size_t pos = 0;
        while (true) {
            std::size_t dot = key.find('.', pos);
            std::string part = key.substr(pos, dot == std::string::npos ? dot : dot - pos);
            if (part.empty())
                throw ParseError("empty degree component", pos);
            for (char ch : part)
                if (!std::isdigit(static_cast<unsigned char>(ch)))
                    throw ParseError("degree component is not a number", pos);
            exps.push_back(std::stoi(part));
            if (dot == std::string::npos)
                break;
            pos = dot + 1;
        }
    }
    if (static_cast<int>(exps.size()) != spec.rank())
        throw SpecMismatch("degree '" + key + "' has wrong rank for " + spec.str());
    return spec.reduce(std::move(exps));
}

Json to_json(const GradedSpace &v) {
    Json dims = Json::object();
    for (const auto &[degree, dim] : v.dims())
        dims[degree_key(degree)] = dim;
    return Json{{"dims", dims}};
}

} // namespace rmx
