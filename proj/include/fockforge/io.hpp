#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fockforge/fock.hpp"
#include "fockforge/hilbgen.hpp"
#include "fockforge/lattice.hpp"
#include "fockforge/laurent.hpp"
#include "fockforge/partitions.hpp"
#include "fockforge/series.hpp"

namespace fockforge {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Lattice: {"rank": k, "gram": [[...]], "parity": ["even"|"odd", ...]}
// "parity" may be omitted (all even); "h0_h4_summand": true appends the
// hyperbolic rank-2 block.
// ---------------------------------------------------------------------------

inline Json to_json(const Lattice& lattice) {
    Json j;
    j["rank"] = lattice.rank();
    j["gram"] = lattice.gram();
    std::vector<std::string> parity;
    for (int i = 0; i < lattice.rank(); ++i)
        parity.push_back(lattice.parity(i) == Parity::odd ? "odd" : "even");
    j["parity"] = parity;
    return j;
}

inline Lattice lattice_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("gram"))
        throw UsageError("lattice json: expected an object with a \"gram\" field");
    std::vector<std::vector<long long>> gram;
    for (const auto& row : j.at("gram")) {
        std::vector<long long> r;
        for (const auto& v : row) r.push_back(v.get<long long>());
        gram.push_back(std::move(r));
    }
    std::vector<Parity> parity(gram.size(), Parity::even);
    if (j.contains("parity")) {
        const auto& p = j.at("parity");
        if (p.size() != gram.size())
            throw UsageError("lattice json: parity list length differs from rank");
        for (std::size_t i = 0; i < p.size(); ++i) {
            std::string s = p[i].get<std::string>();
            if (s == "odd")
                parity[i] = Parity::odd;
            else if (s == "even")
                parity[i] = Parity::even;
            else
                throw UsageError("lattice json: parity must be \"even\" or \"odd\"");
        }
    }
    if (j.contains("rank") && j.at("rank").get<std::size_t>() != gram.size())
        throw UsageError("lattice json: rank does not match gram size");
    Lattice lattice(std::move(gram), std::move(parity));
    if (j.value("h0_h4_summand", false)) return lattice.with_h0_h4_summand();
    return lattice;
}

// ---------------------------------------------------------------------------
// Partitions and multipartitions
// ---------------------------------------------------------------------------

inline Json to_json(const Partition& p) { return Json(p.parts()); }

inline Partition partition_from_json(const Json& j) {
    std::vector<int> parts;
    for (const auto& v : j) parts.push_back(v.get<int>());
    return Partition(std::move(parts));
}

inline Json to_json(const Multipartition& m) {
    Json j = Json::object();
    for (const auto& [color, p] : m.components()) j[std::to_string(color)] = to_json(p);
    return j;
}

inline Multipartition multipartition_from_json(const Json& j) {
    std::map<int, Partition> comps;
    for (const auto& [key, val] : j.items()) comps[std::stoi(key)] = partition_from_json(val);
    return Multipartition(std::move(comps));
}

// ---------------------------------------------------------------------------
// Fock states: {"palette": <lattice json>, "terms": [{"mono": ..., "coeff": "p/q"}]}
// ---------------------------------------------------------------------------

inline Json to_json(const FockState& x, const Lattice& lattice) {
    Json j;
    j["palette"] = to_json(lattice);
    Json terms = Json::array();
    for (const auto& [mono, c] : x.terms())
        terms.push_back(Json{{"mono", to_json(mono)}, {"coeff", to_string(c)}});
    j["terms"] = terms;
    return j;
}

inline FockState fock_state_from_json(const Json& j, const Lattice& lattice) {
    if (j.contains("palette")) {
        Lattice own = lattice_from_json(j.at("palette"));
        if (own.gram() != lattice.gram() || own.parities() != lattice.parities())
            throw UsageError("fock state json: palette disagrees with the supplied lattice");
    }
    FockState x = FockState::zero(lattice.odd_palette());
    for (const auto& term : j.at("terms")) {
        Multipartition mono = multipartition_from_json(term.at("mono"));
        Rational c = parse_rational(term.at("coeff").get<std::string>());
        x += FockState::monomial(lattice.odd_palette(), mono, c);
    }
    return x;
}

// ---------------------------------------------------------------------------
// Series and Laurent polynomials
// ---------------------------------------------------------------------------

inline Json to_json(const TruncatedSeries& s) {
    Json j;
    j["variables"] = s.vars();
    j["order"] = s.order();
    Json terms = Json::array();
    for (const auto& [e, c] : s.terms()) {
        Json t = Json::array();
        for (int v = 0; v < s.nvars(); ++v) t.push_back(e[v]);
        t.push_back(to_string(c));
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

template <typename C>
Json to_json(const LaurentPoly<C>& p) {
    Json j;
    j["symbol"] = "q";
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back(Json::array({e, to_string(c)}));
    j["terms"] = terms;
    return j;
}

/// Rows = degree, columns = coefficients; univariate series give one value
/// per row, bivariate ones a row of coefficients per total degree.
inline std::string series_tsv(const TruncatedSeries& s) {
    std::string out;
    if (s.nvars() == 1) {
        out = "degree\tcoefficient\n";
        for (int n = 0; n <= s.order(); ++n)
            out += std::to_string(n) + "\t" + to_string(s.coeff(n)) + "\n";
    } else {
        out = "deg_" + s.vars()[0];
        for (int b = 0; b <= s.order(); ++b) out += "\t" + s.vars()[1] + "^" + std::to_string(b);
        out += "\n";
        for (int a = 0; a <= s.order(); ++a) {
            out += std::to_string(a);
            for (int b = 0; b <= s.order(); ++b) out += "\t" + to_string(s.coeff(a, b));
            out += "\n";
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Hodge diamonds: {"h": {"0,0": 1, "1,1": 1, ...}}
// ---------------------------------------------------------------------------

inline Json to_json(const HodgeDiamond& d) {
    Json h = Json::object();
    for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q)
            if (d.h(p, q) != 0) h[std::to_string(p) + "," + std::to_string(q)] = d.h(p, q);
    return Json{{"h", h}};
}

inline HodgeDiamond hodge_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("h"))
        throw UsageError("hodge json: expected an object with an \"h\" field");
    std::map<std::pair<int, int>, long long> entries;
    for (const auto& [key, val] : j.at("h").items()) {
        auto comma = key.find(',');
        if (comma == std::string::npos) throw UsageError("hodge json: keys must look like \"p,q\"");
        int p = std::stoi(key.substr(0, comma));
        int q = std::stoi(key.substr(comma + 1));
        entries[{p, q}] = val.get<long long>();
    }
    return HodgeDiamond::from_entries(entries);
}

inline Json to_json(const BigradedSeries& s) {
    Json j;
    j["order"] = s.order();
    Json by_n = Json::array();
    for (int n = 0; n <= s.order(); ++n) {
        Json terms = Json::array();
        for (const auto& [bd, c] : s.at(n))
            terms.push_back(Json::array({bd.first, bd.second, to_string(c)}));
        by_n.push_back(Json{{"n", n}, {"terms", terms}, {"total", to_string(s.total(n))}});
    }
    j["pieces"] = by_n;
    return j;
}

/// One row per z-degree: n, total, then (a,b)=coefficient entries.
inline std::string bigraded_tsv(const BigradedSeries& s) {
    std::string out = "n\ttotal\tterms(a,b)=c\n";
    for (int n = 0; n <= s.order(); ++n) {
        out += std::to_string(n) + "\t" + to_string(s.total(n));
        for (const auto& [bd, c] : s.at(n))
            out += "\t(" + std::to_string(bd.first) + "," + std::to_string(bd.second) +
                   ")=" + to_string(c);
        out += "\n";
    }
    return out;
}

} // namespace fockforge
