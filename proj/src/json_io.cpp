#include "schurw/json_io.hpp"

#include <algorithm>

namespace schurw {

Json poly_to_json(const Poly& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json mono = Json::object();
        for (const auto& [n, e] : m.entries())
            mono[std::to_string(n)] = std::to_string(e);
        terms.push_back({{"coeff", rat_to_string(c)}, {"monomial", mono}});
    }
    return terms;
}

Json lincomb_to_json(const LinComb& lc) {
    // weight ascending, then descending-lex labels
    std::vector<std::pair<IntVector, Rational>> rows(lc.terms.begin(),
                                                     lc.terms.end());
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        long wa = weight(a.first), wb = weight(b.first);
        if (wa != wb) return wa < wb;
        return b.first < a.first;
    });
    Json terms = Json::array();
    for (const auto& [label, c] : rows)
        terms.push_back({{"coeff", rat_to_string(c)}, {"partition", label}});
    return Json{{"basis", basis_name(lc.basis)}, {"terms", terms}};
}

Json series_to_json(const Series& s) {
    Json comps = Json::object();
    for (const auto& [n, p] : s.components)
        comps[std::to_string(n)] = poly_to_json(p);
    return Json{{"order", s.order}, {"components", comps}};
}

Json rational_to_json(const Rational& r) { return Json(rat_to_string(r)); }

std::string dump(const Json& j, bool pretty) {
    return pretty ? j.dump(2) : j.dump();
}

}  // namespace schurw
