#include "uavlink/csv.hpp"

#include <array>
#include <charconv>
#include <stdexcept>

namespace uavlink::csv {

namespace {

std::string escape(const std::string& field)
{
    if (field.find_first_of(",\"\n") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}

} // namespace

std::string format_double(double v)
{
    std::array<char, 32> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc{})
        throw std::runtime_error("cannot format floating-point value");
    return std::string(buf.data(), ptr);
}

void write_csv(std::span<const scenario::SweepRow> rows, std::ostream& out)
{
    std::string text(header);
    text += '\n';
    for (const auto& r : rows) {
        text += std::to_string(r.iteration);
        text += ',';
        text += escape(r.weather);
        for (double v : {r.angle_deg, r.ground_distance_m, r.altitude_m, r.gamma_db_km, r.path_loss_db,
                         r.weather_excess_db, r.sinr, r.spectral_eff, r.ee_bits_per_joule}) {
            text += ',';
            text += format_double(v);
        }
        text += ',';
        if (r.coverage_radius_m)
            text += format_double(*r.coverage_radius_m);
        text += '\n';
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.flush();
    if (!out)
        throw std::runtime_error("failed to write CSV output");
}

} // namespace uavlink::csv
