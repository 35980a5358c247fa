#pragma once

#include <string>
#include <vector>

#include "shear/cutoff.hpp"
#include "shear/kernels.hpp"
#include "shear/profiles.hpp"

namespace shear {
namespace io {

/// 17-significant-digit formatting shared by all CSV writers.
std::string format_number(double v);

void write_kernel_table_csv(const kernels::KernelTable& table, const std::string& path);
void write_kernel_table_sidecar(const kernels::KernelTable& table, const std::string& path);

void write_profile_csv(const cutoff::CutoffProfile& profile, const std::string& path);
void write_profile_sidecar(const cutoff::CutoffProfile& profile, const std::string& path);
cutoff::CutoffProfile read_profile(const std::string& csv_path, const std::string& sidecar_path);

void write_curve_csv(const profiles::ProfileCurve& curve, const std::string& path);
void write_curve_sidecar(const profiles::ProfileCurve& curve, const std::string& path);

}  // namespace io
}  // namespace shear
