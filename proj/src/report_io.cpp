#include "cphardy/report_io.hpp"

#include <cstdio>
#include <stdexcept>

namespace cphardy {

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

ReportDocument make_report_document(const AffineSymbol& phi) {
    ReportDocument doc;
    doc.a = phi.a;
    doc.b_re = phi.b.real();
    doc.b_im = phi.b.imag();
    doc.report = report(phi);
    return doc;
}

namespace {

json verdict_to_json(const Verdict& v) {
    return json{{"value", to_string(v.value)}, {"provenance", v.provenance}, {"note", v.note}};
}

Verdict verdict_from_json(const json& j) {
    const auto value = verdict_value_from_string(j.at("value").get<std::string>());
    if (!value) throw std::invalid_argument("unknown verdict value");
    return Verdict{*value, j.at("provenance").get<std::string>(),
                   j.at("note").get<std::string>()};
}

json spectrum_to_json(const SpectrumDescriptor& s) {
    json j{{"variant", to_string(s.variant)}};
    if (s.radius) j["radius"] = *s.radius;
    if (s.b) {
        j["b_re"] = s.b->real();
        j["b_im"] = s.b->imag();
    }
    return j;
}

SpectrumDescriptor spectrum_from_json(const json& j) {
    const auto variant = spectrum_variant_from_string(j.at("variant").get<std::string>());
    if (!variant) throw std::invalid_argument("unknown spectrum variant");
    SpectrumDescriptor s{*variant, std::nullopt, std::nullopt};
    if (j.contains("radius")) s.radius = j.at("radius").get<double>();
    if (j.contains("b_re")) s.b = cplx(j.at("b_re").get<double>(), j.at("b_im").get<double>());
    return s;
}

} // namespace

json to_json(const ReportDocument& doc) {
    const DynamicsReport& r = doc.report;
    return json{
        {"schema_version", doc.schema_version},
        {"symbol", json{{"a", doc.a}, {"b_re", doc.b_re}, {"b_im", doc.b_im}}},
        {"report",
         json{
             {"class", to_string(r.symbol_class)},
             {"operator_norm", r.operator_norm},
             {"invertible", r.invertible},
             {"normal", r.normal},
             {"self_adjoint", r.self_adjoint},
             {"unitary", r.unitary},
             {"positively_expansive", verdict_to_json(r.positively_expansive)},
             {"uniformly_positively_expansive",
              verdict_to_json(r.uniformly_positively_expansive)},
             {"expansive", verdict_to_json(r.expansive)},
             {"uniformly_expansive", verdict_to_json(r.uniformly_expansive)},
             {"positive_shadowing", verdict_to_json(r.positive_shadowing)},
             {"li_yorke", verdict_to_json(r.li_yorke)},
             {"spectrum", spectrum_to_json(r.spectrum)},
         }},
    };
}

ReportDocument report_document_from_json(const json& j) {
    ReportDocument doc;
    doc.schema_version = j.at("schema_version").get<std::string>();
    if (doc.schema_version != report_schema_version)
        throw std::invalid_argument("unsupported report schema version");
    const json& sym = j.at("symbol");
    doc.a = sym.at("a").get<double>();
    doc.b_re = sym.at("b_re").get<double>();
    doc.b_im = sym.at("b_im").get<double>();

    const json& r = j.at("report");
    DynamicsReport& rep = doc.report;
    const auto cls = symbol_class_from_string(r.at("class").get<std::string>());
    if (!cls) throw std::invalid_argument("unknown symbol class");
    rep.symbol_class = *cls;
    rep.operator_norm = r.at("operator_norm").get<double>();
    rep.invertible = r.at("invertible").get<bool>();
    rep.normal = r.at("normal").get<bool>();
    rep.self_adjoint = r.at("self_adjoint").get<bool>();
    rep.unitary = r.at("unitary").get<bool>();
    rep.positively_expansive = verdict_from_json(r.at("positively_expansive"));
    rep.uniformly_positively_expansive =
        verdict_from_json(r.at("uniformly_positively_expansive"));
    rep.expansive = verdict_from_json(r.at("expansive"));
    rep.uniformly_expansive = verdict_from_json(r.at("uniformly_expansive"));
    rep.positive_shadowing = verdict_from_json(r.at("positive_shadowing"));
    rep.li_yorke = verdict_from_json(r.at("li_yorke"));
    rep.spectrum = spectrum_from_json(r.at("spectrum"));
    return doc;
}

} // namespace cphardy
