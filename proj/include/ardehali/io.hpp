#ifndef ARDEHALI_IO_HPP
#define ARDEHALI_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "ardehali/characterization.hpp"
#include "ardehali/types.hpp"

namespace ardehali {

inline constexpr int kSchemaVersion = 1;

/// "2^{m/2}" for odd m, "2^{m/2 reduced}" for even m (e.g. m=3 ->
/// "2^{3/2}", m=4 -> "2^{2}"). m is the numerator over 2.
std::string half_power_string(int numerator);

StateVector read_state(const std::string& path);
void write_state(const std::string& path, const StateVector& state);

MeasurementSettings read_settings(const std::string& path);
void write_settings(const std::string& path,
                    const MeasurementSettings& settings);

void write_unitaries(const std::string& path,
                     const std::vector<Matrix2c>& unitaries);

nlohmann::json state_json(const StateVector& state);
nlohmann::json settings_json(const MeasurementSettings& settings);
nlohmann::json certificate_json(const CertificationReport& report);

StateVector parse_state(const nlohmann::json& j);
MeasurementSettings parse_settings(const nlohmann::json& j);

}  // namespace ardehali

#endif
