#pragma once

#include <cstdio>
#include <ostream>
#include <string>

#include <json.hpp>

#include "qwalk/classical_walk.hpp"
#include "qwalk/closed_form.hpp"
#include "qwalk/coin.hpp"
#include "qwalk/quantum_walk.hpp"

namespace qwalk {

/// Shortest-faithful decimal for CSV output (17 significant digits).
inline std::string fmt17(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

/// "j,p" rows over the support (nonzero entries), sites ascending.
inline void write_csv(std::ostream& os, const SpatialDistribution& dist) {
    os << "j,p\n";
    for (int j = -dist.n; j <= dist.n; j += 2)
        if (dist.at(j) > 0.0) os << j << ',' << fmt17(dist.at(j)) << '\n';
}

inline nlohmann::json to_json(const SpatialDistribution& dist) {
    nlohmann::json pmf = nlohmann::json::object();
    for (int j = -dist.n; j <= dist.n; j += 2)
        if (dist.at(j) > 0.0) pmf[std::to_string(j)] = dist.at(j);
    return {{"n", dist.n}, {"pmf", pmf}};
}

/// "j,re_alpha,im_alpha,re_beta,im_beta" rows for amplitude tables.
inline void write_csv(std::ostream& os, const AmplitudeTable& table) {
    os << "j,re_alpha,im_alpha,re_beta,im_beta\n";
    for (int j = -table.n; j <= table.n; j += 2) {
        const complexd a = table.alpha_at(j);
        const complexd b = table.beta_at(j);
        os << j << ',' << fmt17(a.real()) << ',' << fmt17(a.imag()) << ',' << fmt17(b.real())
           << ',' << fmt17(b.imag()) << '\n';
    }
}

/// "j,p_up,p_down" rows over the support of the classical joint state.
inline void write_csv(std::ostream& os, const ClassicalJointState& state) {
    os << "j,p_up,p_down\n";
    for (int j = -state.n; j <= state.n; j += 2)
        if (state.up_at(j) > 0.0 || state.down_at(j) > 0.0)
            os << j << ',' << fmt17(state.up_at(j)) << ',' << fmt17(state.down_at(j)) << '\n';
}

inline nlohmann::json setup_to_json(const CoinSetup& setup) {
    return {{"theta", setup.theta()},
            {"phi1", setup.phi1()},
            {"phi2", setup.phi2()},
            {"varphi", setup.varphi()},
            {"xi", setup.xi()}};
}

inline CoinSetup setup_from_json(const nlohmann::json& j) {
    return CoinSetup(j.at("theta").get<double>(), j.at("phi1").get<double>(),
                     j.at("phi2").get<double>(), j.at("varphi").get<double>(),
                     j.at("xi").get<double>());
}

/// "x,f" rows for density curves and similar samplings.
inline void write_curve_csv(std::ostream& os, const std::vector<std::pair<double, double>>& curve,
                            const char* header = "x,f") {
    os << header << '\n';
    for (const auto& [x, f] : curve) os << fmt17(x) << ',' << fmt17(f) << '\n';
}

} // namespace qwalk
