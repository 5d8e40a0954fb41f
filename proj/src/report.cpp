#include "theta/report.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace theta {

namespace {

using nlohmann::ordered_json;

ordered_json json_value(const Integer& z) {
    if (fits_int64(z)) return to_int64(z);
    return z.get_str();
}

ordered_json json_value(const Rational& q) {
    if (is_integer(q)) return json_value(Integer(q.get_num()));
    return to_string(q);
}

template <typename T>
ordered_json json_opt(const std::optional<T>& v) {
    if (!v) return nullptr;
    return json_value(*v);
}

template <typename T>
std::string text_opt(const std::optional<T>& v) {
    return v ? to_string(*v) : std::string();
}

double rounded_millis(double ms) { return std::round(ms * 1000.0) / 1000.0; }

}  // namespace

std::string to_json(const DimensionReport& r) {
    ordered_json j;
    j["group"] = r.group;
    j["order"] = json_value(r.order);
    j["num_classes"] = r.num_classes ? ordered_json(*r.num_classes) : ordered_json(nullptr);
    j["d1"] = json_opt(r.d1);
    j["d2"] = json_opt(r.d2);
    j["dim_Cpi"] = json_opt(r.dim_cpi);
    j["dim_ker_eps"] = json_opt(r.dim_ker);
    j["dim_classhat_Z2"] = json_opt(r.dim_classhat_z2);
    j["method"] = r.method;
    j["millis"] = rounded_millis(r.millis);
    return j.dump();
}

std::string csv_header() { return "group,order,num_classes,d1,d2,dim_Cpi,dim_ker_eps,dim_classhat_Z2,method,millis"; }

std::string to_csv_row(const DimensionReport& r) {
    std::ostringstream os;
    os << r.group << ',' << to_string(r.order) << ',' << (r.num_classes ? std::to_string(*r.num_classes) : "") << ','
       << text_opt(r.d1) << ',' << text_opt(r.d2) << ',' << text_opt(r.dim_cpi) << ',' << text_opt(r.dim_ker) << ','
       << text_opt(r.dim_classhat_z2) << ',' << r.method << ',' << rounded_millis(r.millis);
    return os.str();
}

std::string to_text(const DimensionReport& r) {
    auto show = [](const std::string& s) { return s.empty() ? std::string("-") : s; };
    std::ostringstream os;
    os << "group            " << r.group << '\n'
       << "order            " << to_string(r.order) << '\n'
       << "classes          " << (r.num_classes ? std::to_string(*r.num_classes) : "-") << '\n'
       << "d1               " << show(text_opt(r.d1)) << '\n'
       << "d2               " << show(text_opt(r.d2)) << '\n'
       << "dim A(C pi)      " << show(text_opt(r.dim_cpi)) << '\n'
       << "dim A(Ker eps)   " << show(text_opt(r.dim_ker)) << '\n'
       << "dim (C pi^)_Z2   " << show(text_opt(r.dim_classhat_z2)) << '\n'
       << "method           " << r.method << '\n'
       << "millis           " << rounded_millis(r.millis) << '\n';
    return os.str();
}

}  // namespace theta
