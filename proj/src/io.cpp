#include "shear/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>

namespace shear {
namespace io {

using nlohmann::json;

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {
std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}
}  // namespace

void write_kernel_table_csv(const kernels::KernelTable& table, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "v,Q\n";
    const auto& v = table.v_grid();
    const auto& q = table.values();
    for (size_t i = 0; i < v.size(); ++i)
        out << format_number(v[i]) << "," << format_number(q[i]) << "\n";
}

void write_kernel_table_sidecar(const kernels::KernelTable& table, const std::string& path) {
    json j;
    j["a"] = table.a();
    j["left_tail"] = {{"c0", table.left_c0()}, {"c1", table.left_c1()}};
    j["right_tail"] = {{"coef", table.right_coef()}};
    j["cusp_halfwidth"] = table.cusp_halfwidth();
    std::ofstream out = open_out(path);
    out << j.dump(2) << "\n";
}

void write_profile_csv(const cutoff::CutoffProfile& profile, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "xi,phi,sigma\n";
    const auto& xi = profile.xi_grid();
    const auto& phi = profile.phi();
    for (size_t i = 0; i < xi.size(); ++i)
        out << format_number(xi[i]) << "," << format_number(phi[i]) << ","
            << format_number(std::exp(phi[i])) << "\n";
}

void write_profile_sidecar(const cutoff::CutoffProfile& profile, const std::string& path) {
    json j;
    j["a"] = profile.a();
    j["epsilon"] = profile.epsilon();
    j["beta_hat"] = profile.beta_hat;
    j["residual_sup"] = profile.residual_sup;
    j["k_bar"] = profile.k_bar;
    j["left_tail_slope"] = profile.left_tail_slope();
    j["right_tail_coef"] = profile.right_tail_coef();
    std::ofstream out = open_out(path);
    out << j.dump(2) << "\n";
}

cutoff::CutoffProfile read_profile(const std::string& csv_path, const std::string& sidecar_path) {
    std::ifstream sc(sidecar_path);
    if (!sc) throw std::runtime_error("cannot open " + sidecar_path);
    json j;
    sc >> j;
    std::ifstream in(csv_path);
    if (!in) throw std::runtime_error("cannot open " + csv_path);
    std::string line;
    std::getline(in, line);  // header
    std::vector<double> xi, phi;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const size_t c1 = line.find(',');
        const size_t c2 = line.find(',', c1 + 1);
        xi.push_back(std::stod(line.substr(0, c1)));
        phi.push_back(std::stod(line.substr(c1 + 1, c2 - c1 - 1)));
    }
    cutoff::CutoffProfile p(std::move(xi), std::move(phi), j.at("a").get<double>(),
                            j.at("epsilon").get<double>());
    p.beta_hat = j.value("beta_hat", 0.0);
    p.residual_sup = j.value("residual_sup", 0.0);
    return p;
}

void write_curve_csv(const profiles::ProfileCurve& curve, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "abscissa,value\n";
    const auto& x = curve.abscissae();
    const auto& v = curve.values();
    for (size_t i = 0; i < x.size(); ++i)
        out << format_number(x[i]) << "," << format_number(v[i]) << "\n";
}

void write_curve_sidecar(const profiles::ProfileCurve& curve, const std::string& path) {
    auto tail_json = [](const profiles::TailModel& t) {
        return json{{"power", t.power},
                    {"amp", t.amp},
                    {"logcoef", t.logcoef},
                    {"x_edge", t.x_edge}};
    };
    json j;
    j["kind"] = profiles::curve_kind_name(curve.kind());
    j["left_tail"] = tail_json(curve.left_tail());
    j["right_tail"] = tail_json(curve.right_tail());
    std::ofstream out = open_out(path);
    out << j.dump(2) << "\n";
}

}  // namespace io
}  // namespace shear
