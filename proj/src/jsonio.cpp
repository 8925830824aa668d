#include "jsonio.hpp"

#include <cmath>

namespace solwave::jsonio {

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        fail(Errc::parse_error, std::string("JSON parse failed: ") + e.what());
    }
}

exact::Rat rat_from_json(const json& v, const char* what) {
    if (v.is_number_integer()) return exact::Rat(v.get<long long>());
    if (v.is_number()) return exact::rat_from_double(v.get<double>());
    if (v.is_string()) return exact::rat_from_string(v.get<std::string>());
    fail(Errc::parse_error, std::string(what) + ": expected a number or rational string");
}

json rat_to_json(const exact::Rat& r) {
    // Emit a plain number when the double round-trips exactly; otherwise the
    // exact string so nothing is lost.
    const double d = exact::rat_to_double(r);
    if (std::isfinite(d) && exact::rat_from_double(d) == r) return json(d);
    return json(exact::rat_to_string(r));
}

MultiplierSymbol symbol_from_json(const json& j) {
    if (!j.is_object()) fail(Errc::parse_error, "symbol: expected an object");
    if (!j.contains("p0")) fail(Errc::parse_error, "symbol: missing p0");
    exact::Rat p0;
    double p0_im = 0;
    const json& jp = j.at("p0");
    if (jp.is_array()) {
        if (jp.size() != 2 || !jp[0].is_number() || !jp[1].is_number())
            fail(Errc::parse_error, "symbol: complex p0 must be [re, im]");
        p0 = exact::rat_from_double(jp[0].get<double>());
        p0_im = jp[1].get<double>();
    } else {
        p0 = rat_from_json(jp, "symbol p0");
    }
    std::vector<HomogeneousTerm> terms;
    if (j.contains("terms")) {
        if (!j.at("terms").is_array()) fail(Errc::parse_error, "symbol: terms must be an array");
        for (const json& t : j.at("terms")) {
            if (!t.is_object() || !t.contains("coeff") || !t.contains("degree"))
                fail(Errc::parse_error, "symbol term: need {coeff, degree}");
            if (!t.at("degree").is_number())
                fail(Errc::parse_error, "symbol term: degree must be a number");
            terms.push_back({rat_from_json(t.at("coeff"), "term coeff"),
                             t.at("degree").get<double>()});
        }
    }
    try {
        return MultiplierSymbol(std::move(p0), std::move(terms), p0_im);
    } catch (const Error& e) {
        if (e.code == Errc::invalid_argument)
            fail(Errc::parse_error, std::string("symbol: ") + e.what());
        throw;
    }
}

json symbol_to_json(const MultiplierSymbol& s) {
    json j;
    if (s.p0_imag() != 0.0)
        j["p0"] = json::array({exact::rat_to_double(s.p0()), s.p0_imag()});
    else
        j["p0"] = rat_to_json(s.p0());
    j["terms"] = json::array();
    for (const auto& t : s.terms())
        j["terms"].push_back({{"coeff", rat_to_json(t.coeff)}, {"degree", t.degree}});
    return j;
}

exact::MonomialNonlinearity nonlinearity_from_json(const json& j) {
    if (!j.is_object() || !j.contains("coeff") || !j.contains("power"))
        fail(Errc::parse_error, "nonlinearity: need {coeff, power}");
    if (!j.at("power").is_number_integer())
        fail(Errc::parse_error, "nonlinearity: power must be an integer");
    return {rat_from_json(j.at("coeff"), "nonlinearity coeff"), j.at("power").get<int>()};
}

json nonlinearity_to_json(const exact::MonomialNonlinearity& nl) {
    return json{{"coeff", rat_to_json(nl.coeff)}, {"power", nl.power}};
}

exact::PowerWeightAnsatz ansatz_from_json(const json& j) {
    if (!j.is_object() || !j.contains("amplitude") || !j.contains("lambda") || !j.contains("dim"))
        fail(Errc::parse_error, "ansatz: need {amplitude, lambda, dim}");
    if (!j.at("lambda").is_number_integer() || !j.at("dim").is_number_integer())
        fail(Errc::parse_error, "ansatz: lambda and dim must be integers");
    return {rat_from_json(j.at("amplitude"), "ansatz amplitude"),
            j.at("lambda").get<long>(), j.at("dim").get<int>()};
}

json ansatz_to_json(const exact::PowerWeightAnsatz& a) {
    return json{{"amplitude", rat_to_json(a.amplitude)}, {"lambda", a.lambda}, {"dim", a.dim}};
}

json reduced_form_to_json(const exact::ReducedForm& rf) {
    json poly = json::array();
    for (std::size_t j = 0; j < rf.poly.size(); ++j)
        poly.push_back(exact::rat_to_string(rf.poly[j]));
    return json{{"scalar_rat", exact::rat_to_string(rf.scale.rat)},
                {"pi_half_pow", rf.scale.pi_half_pow},
                {"poly", poly}};
}

json verification_to_json(const exact::VerificationResult& v) {
    json residual = json::array();
    for (std::size_t j = 0; j < v.residual.size(); ++j)
        residual.push_back(exact::rat_to_string(v.residual[j]));
    return json{{"holds", v.holds},
                {"lhs", reduced_form_to_json(v.lhs)},
                {"rhs", reduced_form_to_json(v.rhs)},
                {"residual_poly", residual},
                {"pi_half_pow", v.pi_half_pow},
                {"detail", v.detail}};
}

json ellipticity_to_json(const EllipticityReport& r) {
    json j{{"ok", r.ok},
           {"lower_bound", r.lower_bound},
           {"tail_radius", r.tail_radius},
           {"tail_constant", r.tail_constant},
           {"min_sampled", r.min_sampled},
           {"min_sampled_at", r.min_sampled_at},
           {"note", r.note}};
    if (r.failure_bracket)
        j["failure_bracket"] = json::array({r.failure_bracket->first, r.failure_bracket->second});
    return j;
}

} // namespace solwave::jsonio
