#include "brauer/algebra_io.hpp"

#include <json.hpp>

namespace brauer {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

template <class K, class FromScalar>
StructureConstantAlgebra<K> parse_algebra(const json& j, FromScalar from_scalar) {
    int n = j.at("dim").get<int>();
    std::vector<K> one;
    for (const auto& v : j.at("one")) one.push_back(from_scalar(v));
    std::vector<K> table;
    const auto& t = j.at("table");
    for (const auto& plane : t)
        for (const auto& line : plane)
            for (const auto& v : line) table.push_back(from_scalar(v));
    return StructureConstantAlgebra<K>::make(n, std::move(table), std::move(one));
}

Rat rat_from_json(const json& v) {
    if (v.is_number_integer()) return Rat(v.get<long>());
    return Rat::parse(v.get<std::string>());
}

template <class K, class ToScalar>
ordered emit_algebra(const StructureConstantAlgebra<K>& a, ordered field_tag, ToScalar to_scalar) {
    ordered j;
    j["field"] = std::move(field_tag);
    j["dim"] = a.dim();
    ordered one = ordered::array();
    for (int i = 0; i < a.dim(); ++i) one.push_back(to_scalar(a.one()[static_cast<size_t>(i)]));
    j["one"] = std::move(one);
    ordered table = ordered::array();
    for (int i = 0; i < a.dim(); ++i) {
        ordered plane = ordered::array();
        for (int jj = 0; jj < a.dim(); ++jj) {
            ordered line = ordered::array();
            for (int k = 0; k < a.dim(); ++k) line.push_back(to_scalar(a.c(i, jj, k)));
            plane.push_back(std::move(line));
        }
        table.push_back(std::move(plane));
    }
    j["table"] = std::move(table);
    return j;
}

}  // namespace

AnyAlgebra algebra_from_json(const std::string& text) {
    json j = json::parse(text);
    const auto& field = j.at("field");
    if (field.is_string() && field.get<std::string>() == "Q") {
        return parse_algebra<Rat>(j, rat_from_json);
    }
    if (field.is_object() && field.contains("Fp")) {
        long p = field.at("Fp").get<long>();
        return parse_algebra<FpElem>(j, [p](const json& v) { return FpElem(p, v.get<long>()); });
    }
    if (field.is_object() && field.contains("Qp")) {
        long p = field.at("Qp").at("p").get<long>();
        int prec = field.at("Qp").at("N").get<int>();
        auto ctx = make_padic_context(p, prec);
        return parse_algebra<PadicNumber>(
            j, [&](const json& v) { return PadicNumber::from_rational(rat_from_json(v), ctx); });
    }
    throw std::invalid_argument("unknown field tag in algebra JSON");
}

std::string algebra_to_json(const AnyAlgebra& a) {
    ordered out;
    if (const auto* q = std::get_if<StructureConstantAlgebra<Rat>>(&a)) {
        out = emit_algebra(*q, ordered("Q"), [](const Rat& r) { return r.str(); });
    } else if (const auto* fp = std::get_if<StructureConstantAlgebra<FpElem>>(&a)) {
        ordered tag;
        tag["Fp"] = fp->sample().p();
        out = emit_algebra(*fp, std::move(tag), [](const FpElem& e) { return e.value(); });
    } else {
        const auto& qp = std::get<StructureConstantAlgebra<PadicNumber>>(a);
        ordered tag;
        tag["Qp"]["p"] = qp.sample().ctx().p;
        tag["Qp"]["N"] = qp.sample().ctx().precision;
        out = emit_algebra(qp, std::move(tag),
                           [](const PadicNumber& x) { return x.to_rational().str(); });
    }
    return out.dump(2) + "\n";
}

}  // namespace brauer
