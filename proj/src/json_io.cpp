#include "twistchar/json_io.hpp"

#include <cstdio>

namespace twistchar::io {

namespace {

void escape_into(std::string& out, const std::string& s) {
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;  // UTF-8 passes through
                }
        }
    }
}

}  // namespace

std::string Json::dump() const {
    std::string out;
    switch (kind_) {
        case Kind::Bool:
        case Kind::Number:
            out = scalar_;
            break;
        case Kind::String:
            out += '"';
            escape_into(out, scalar_);
            out += '"';
            break;
        case Kind::Array: {
            out += '[';
            for (std::size_t i = 0; i < items_.size(); ++i) {
                if (i > 0) out += ',';
                out += items_[i].dump();
            }
            out += ']';
            break;
        }
        case Kind::Object: {
            out += '{';
            for (std::size_t i = 0; i < fields_.size(); ++i) {
                if (i > 0) out += ',';
                out += '"';
                escape_into(out, fields_[i].first);
                out += "\":";
                out += fields_[i].second.dump();
            }
            out += '}';
            break;
        }
    }
    return out;
}

Json to_json(const symgroup::Partition& p) {
    Json arr = Json::array();
    for (unsigned long part : p.parts()) arr.push(Json::number(part));
    return arr;
}

Json to_json(const symgroup::LoopComponentCyclic& c) {
    Json coords = Json::array();
    for (unsigned long x : c.coords) coords.push(Json::number(x));
    return Json::object()
        .add("coords", std::move(coords))
        .add("valuation", Json::number(c.valuation));
}

Json to_json(const ring::SignedUnit& x) {
    return Json::object().add("a", Json::number(x.a)).add("b", Json::number(x.b));
}

Json to_json(const graded::FiniteAbelianGroup& g) {
    Json orders = Json::array();
    for (const auto& d : g.orders) orders.push(Json::number(d));
    return Json::object().add("orders", std::move(orders));
}

Json to_json(const extalg::ExtSeries& s) {
    auto series = [](const char* normalization, const ring::IntSeries& f) {
        return Json::object()
            .add("normalization", Json::string(normalization))
            .add("order", Json::number(f.order()))
            .add("coeffs", [&] {
                Json arr = Json::array();
                for (const auto& c : f.coeffs()) arr.push(Json::number(c));
                return arr;
            }());
    };
    Json list = Json::array();
    list.push(series("categorical", s.categorical));
    list.push(series("underlying", s.underlying));
    return Json::object()
        .add("twist", Json::string(s.twist.kind_name()))
        .add("dim", Json::number(s.dim))
        .add("order", Json::number(s.order))
        .add("series", std::move(list));
}

Json to_json(const chromatic::TranschromaticRow& row) {
    Json out = to_json(row.component);
    out.add("value", Json::number(static_cast<long>(row.value)))
        .add("action", Json::string(row.action == chromatic::ComponentAction::Trivial
                                        ? "trivial"
                                        : "induced"));
    return out;
}

}  // namespace twistchar::io
