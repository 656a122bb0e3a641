#pragma once

#include <string>
#include <utility>
#include <vector>

#include "twistchar/abelian.hpp"
#include "twistchar/braiding_character.hpp"
#include "twistchar/chromatic.hpp"
#include "twistchar/exterior.hpp"
#include "twistchar/graded_dim.hpp"
#include "twistchar/loop_space.hpp"
#include "twistchar/partition.hpp"
#include "twistchar/series.hpp"
#include "twistchar/signed_unit.hpp"

namespace twistchar::io {

// Insertion-ordered JSON tree with arbitrary-precision integer literals.
// Emission is deterministic: identical values produce identical bytes.
class Json {
public:
    static Json number(const Int& x) { return Json(Kind::Number, x.get_str()); }
    static Json number(long x) { return Json(Kind::Number, std::to_string(x)); }
    static Json number(unsigned long x) { return Json(Kind::Number, std::to_string(x)); }
    static Json boolean(bool b) { return Json(Kind::Bool, b ? "true" : "false"); }
    static Json string(std::string s) { return Json(Kind::String, std::move(s)); }
    static Json array() { return Json(Kind::Array, ""); }
    static Json object() { return Json(Kind::Object, ""); }

    Json& push(Json item) {
        items_.push_back(std::move(item));
        return *this;
    }
    Json& add(std::string key, Json value) {
        fields_.emplace_back(std::move(key), std::move(value));
        return *this;
    }

    std::string dump() const;

private:
    enum class Kind { Bool, Number, String, Array, Object };
    Json(Kind kind, std::string scalar) : kind_(kind), scalar_(std::move(scalar)) {}

    Kind kind_;
    std::string scalar_;
    std::vector<Json> items_;
    std::vector<std::pair<std::string, Json>> fields_;
};

Json to_json(const symgroup::Partition& p);
Json to_json(const symgroup::LoopComponentCyclic& c);
Json to_json(const ring::SignedUnit& x);
Json to_json(const graded::FiniteAbelianGroup& g);

inline Json to_json(const Int& x) { return Json::number(x); }

template <typename R>
Json to_json(const ring::TruncatedSeries<R>& s) {
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push(to_json(c));
    return Json::object().add("order", Json::number(s.order())).add("coeffs", std::move(coeffs));
}

template <typename R>
Json to_json(const graded::GradedDim<R>& d) {
    Json obj = Json::object();
    for (const auto& [degree, value] : d.entries())
        obj.add(std::to_string(degree), to_json(value));
    return obj;
}

template <typename R>
Json to_json(const graded::Twist<R>& twist) {
    Json obj = Json::object().add("kind", Json::string(twist.kind_name()));
    if (twist.kind() == graded::TwistKind::Unit) obj.add("epsilon", to_json(twist.epsilon()));
    return obj;
}

template <typename R>
Json to_json(const braidchar::CharacterTable<R>& table) {
    Json rows = Json::array();
    for (const auto& row : table.rows) {
        rows.push(Json::object()
                      .add("partition", to_json(row.cycle_type))
                      .add("cycles", Json::number(row.cycle_type.num_cycles()))
                      .add("class_size", Json::number(symgroup::class_size(row.cycle_type)))
                      .add("value", to_json(row.value))
                      .add("degree", Json::number(table.degree()))
                      .add("action", Json::string("trivial")));
    }
    Json obj = Json::object().add("m", Json::number(table.m));
    if (table.twist.kind() == graded::TwistKind::Unit)
        obj.add("twist", Json::string("unit")).add("epsilon", to_json(table.twist.epsilon()));
    else
        obj.add("twist", Json::string(table.twist.kind_name()));
    obj.add("dim", to_json(table.dim)).add("rows", std::move(rows));
    return obj;
}

Json to_json(const extalg::ExtSeries& s);
Json to_json(const chromatic::TranschromaticRow& row);

}  // namespace twistchar::io
