#pragma once

// JSON views of the library's value types. Key order is fixed (ordered
// json) and rationals serialize as "p/q" strings, so identical inputs
// produce byte-identical documents.

#include <json.hpp>

#include "cubics/hassett.hpp"
#include "cubics/hilb.hpp"
#include "cubics/lattice.hpp"
#include "cubics/schubert.hpp"

namespace cubics {

using Json = nlohmann::ordered_json;

inline Json int_json(const Int& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();  // beyond 64 bits, emit the digits as a string
}

inline Json rat_json(const Rat& r) { return rat_str(r); }

inline Json lattice_json(const IntegralLattice& l) {
    Json gram = Json::array();
    for (long i = 0; i < l.rank(); ++i) {
        Json row = Json::array();
        for (long j = 0; j < l.rank(); ++j) row.push_back(int_json(l.gram.at(i, j)));
        gram.push_back(row);
    }
    return Json{{"rank", l.rank()}, {"gram", gram}};
}

inline Json matrix_json(const IntMat& m) {
    Json rows = Json::array();
    for (long i = 0; i < m.rows; ++i) {
        Json row = Json::array();
        for (long j = 0; j < m.cols; ++j) row.push_back(int_json(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

inline Json vector_json(const LatticeVector& v) {
    Json out = Json::array();
    for (const Int& c : v) out.push_back(int_json(c));
    return out;
}

inline IntMat matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("gram: expected a nonempty array of rows");
    long rows = static_cast<long>(j.size());
    long cols = static_cast<long>(j.at(0).size());
    IntMat m(rows, cols);
    for (long i = 0; i < rows; ++i) {
        const Json& row = j.at(i);
        if (static_cast<long>(row.size()) != cols)
            throw std::invalid_argument("gram: ragged rows");
        for (long k = 0; k < cols; ++k) {
            const Json& cell = row.at(k);
            if (cell.is_string())
                m.at(i, k) = Int(cell.get<std::string>());
            else
                m.at(i, k) = static_cast<long>(cell.get<long long>());
        }
    }
    return m;
}

// Accepts {"rank": r, "gram": [[...]]} or a bare [[...]].
inline IntegralLattice lattice_from_json(const Json& j) {
    if (j.is_object()) {
        IntMat gram = matrix_from_json(j.at("gram"));
        if (j.contains("rank") && j.at("rank").get<long>() != gram.rows)
            throw std::invalid_argument("lattice: rank does not match gram");
        return IntegralLattice(std::move(gram));
    }
    return IntegralLattice(matrix_from_json(j));
}

inline LatticeVector vector_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("vector: expected an array");
    LatticeVector v;
    for (const Json& cell : j) {
        if (cell.is_string())
            v.emplace_back(cell.get<std::string>());
        else
            v.emplace_back(static_cast<long>(cell.get<long long>()));
    }
    return v;
}

inline Json hpoly_json(const HPoly& p) {
    Json out = Json::object();
    for (int e = 0; e < kHPowers; ++e) out["h^" + std::to_string(e)] = rat_json(p[e]);
    return out;
}

inline Json star2_json(const Star2Verdict& v) {
    return Json{{"holds", v.holds},
                {"witness_n", v.witness_n ? int_json(*v.witness_n) : Json(nullptr)},
                {"obstruction", v.holds ? Json(nullptr) : Json(v.obstruction)}};
}

inline Json star2p_json(const Star2pVerdict& v) {
    return Json{{"holds", v.holds}, {"obstruction", v.holds ? Json(nullptr) : Json(v.evidence)}};
}

inline Json star3_json(const Star3Verdict& v) {
    return Json{{"holds", v.holds},
                {"witness_n", v.witness_n ? int_json(*v.witness_n) : Json(nullptr)},
                {"witness_a", v.witness_a ? int_json(*v.witness_a) : Json(nullptr)},
                {"certificate", v.holds ? Json(nullptr) : Json(v.certificate)}};
}

inline Json report_json(const ConditionReport& r) {
    return Json{{"d", int_json(r.d)},
                {"conditions",
                 Json{{"star", r.star},
                      {"star2", star2_json(r.star2)},
                      {"star2p", star2p_json(r.star2p)},
                      {"star3", star3_json(r.star3)},
                      {"star3p", star3_json(r.star3p)}}},
                {"theorem3",
                 Json{{"moduli_of_sheaves", r.moduli_of_sheaves()},
                      {"twisted_moduli", r.twisted_moduli()},
                      {"hilb4", r.hilb4()},
                      {"hilb2", r.hilb2()}}},
                {"c8", r.c8}};
}

inline Json movable_cone_json(const MovableConeResult& r) {
    Json out;
    out["case"] = std::string(1, r.case_name());
    if (r.pell)
        out["pell"] = Json::array({int_json(r.pell->x), int_json(r.pell->y)});
    else
        out["pell"] = nullptr;
    if (r.wall1 && r.wall2)
        out["walls"] = Json::array({Json::array({int_json(r.wall1->x), int_json(r.wall1->y)}),
                                    Json::array({int_json(r.wall2->x), int_json(r.wall2->y)})});
    else
        out["walls"] = nullptr;
    out["congruence_mod_nminus1"] =
        r.congruence_mod_nminus1 ? int_json(*r.congruence_mod_nminus1) : Json(nullptr);
    out["note"] = r.note;
    return out;
}

}  // namespace cubics
