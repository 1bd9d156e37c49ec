#pragma once

// Compactly supported piecewise-linear radial functions on H^n, the discrete
// stand-in for f in W_0^{1,n}. Profiles are stored over geodesic radii; the
// slope is piecewise constant, so Dirichlet integrands are exact per segment.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyperlab {

struct RadialProfile {
    std::vector<double> knots;   // ascending radii, knots.front() == 0
    std::vector<double> values;  // values.back() == 0 (compact support)
};

inline RadialProfile make_profile(std::vector<double> knots, std::vector<double> values) {
    if (knots.size() < 2 || knots.size() != values.size()) {
        throw std::domain_error("RadialProfile: needs matching knot/value lists with >= 2 entries");
    }
    if (knots.front() != 0.0) {
        throw std::domain_error("RadialProfile: first knot must be 0");
    }
    for (std::size_t i = 1; i < knots.size(); ++i) {
        if (!(knots[i] > knots[i - 1])) {
            throw std::domain_error("RadialProfile: knots must be strictly increasing");
        }
    }
    if (values.back() != 0.0) {
        throw std::domain_error("RadialProfile: last value must be 0 (compact support)");
    }
    return RadialProfile{std::move(knots), std::move(values)};
}

inline double support_radius(const RadialProfile& f) { return f.knots.back(); }

inline bool is_zero_profile(const RadialProfile& f) {
    return std::all_of(f.values.begin(), f.values.end(), [](double v) { return v == 0.0; });
}

struct ProfileSample {
    double value;
    double slope;
};

/// Piecewise-linear interpolant and its one-sided derivative. The slope is
/// taken from the segment left of rho at interior knots (left-continuous);
/// both are exactly 0 beyond the support.
inline ProfileSample evaluate_with_derivative(const RadialProfile& f, double rho) {
    if (!(rho >= 0.0)) {
        throw std::domain_error("evaluate_with_derivative: requires rho >= 0");
    }
    if (rho > f.knots.back()) {
        return {0.0, 0.0};
    }
    auto it = std::lower_bound(f.knots.begin(), f.knots.end(), rho);
    std::size_t seg;
    if (it != f.knots.end() && *it == rho) {
        const std::size_t idx = static_cast<std::size_t>(it - f.knots.begin());
        if (idx == 0) {
            seg = 0;
        } else {
            seg = idx - 1;  // value is the knot value either way
        }
    } else {
        seg = static_cast<std::size_t>(it - f.knots.begin()) - 1;
    }
    const double slope = (f.values[seg + 1] - f.values[seg]) / (f.knots[seg + 1] - f.knots[seg]);
    return {f.values[seg] + slope * (rho - f.knots[seg]), slope};
}

inline double evaluate(const RadialProfile& f, double rho) {
    return evaluate_with_derivative(f, rho).value;
}

/// Tent: 1 at the origin, linear to 0 at R.
inline RadialProfile tent_profile(double R) {
    if (!(R > 0.0)) {
        throw std::domain_error("tent_profile: requires R > 0");
    }
    return make_profile({0.0, R}, {1.0, 0.0});
}

/// Plateau: 1 on [0, r], linear to 0 at R.
inline RadialProfile plateau_profile(double r, double R) {
    if (!(r > 0.0 && r < R)) {
        throw std::domain_error("plateau_profile: requires 0 < r < R");
    }
    return make_profile({0.0, r, R}, {1.0, 1.0, 0.0});
}

/// Nonnegative values on a uniform grid of `segments` segments over [0, R],
/// drawn from a counter-seeded generator; reproducible across platforms.
inline RadialProfile random_profile(std::uint64_t seed, int segments, double R) {
    if (segments < 2) {
        throw std::domain_error("random_profile: requires at least 2 segments");
    }
    if (!(R > 0.0)) {
        throw std::domain_error("random_profile: requires R > 0");
    }
    // splitmix64: tiny, fully portable, plenty for test fixtures
    auto next = [state = seed]() mutable {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    std::vector<double> knots(segments + 1);
    std::vector<double> values(segments + 1);
    for (int i = 0; i <= segments; ++i) {
        knots[i] = R * i / segments;
        values[i] = std::ldexp(static_cast<double>(next() >> 11), -53);
    }
    values[segments] = 0.0;
    return make_profile(std::move(knots), std::move(values));
}

/// Values multiplied by c, knots unchanged.
inline RadialProfile scale(const RadialProfile& f, double c) {
    RadialProfile out = f;
    for (double& v : out.values) {
        v *= c;
    }
    if (!out.values.empty()) {
        out.values.back() = 0.0;  // keep -0.0 and 0*inf artifacts out of the tail
    }
    return out;
}

// --- text serialization -----------------------------------------------------
//
// Two whitespace-separated columns (knot, value) under a one-line header
//   # radial-profile n=<dimension>
// Numbers are printed in the shortest decimal form that round-trips, so
// write -> read -> write is byte-identical.

inline std::string shortest_repr(double x) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

inline void write_profile(std::ostream& os, const RadialProfile& f, int n) {
    os << "# radial-profile n=" << n << "\n";
    for (std::size_t i = 0; i < f.knots.size(); ++i) {
        os << shortest_repr(f.knots[i]) << " " << shortest_repr(f.values[i]) << "\n";
    }
}

inline std::string profile_to_string(const RadialProfile& f, int n) {
    std::ostringstream os;
    write_profile(os, f, n);
    return os.str();
}

inline std::pair<RadialProfile, int> read_profile(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("# radial-profile n=", 0) != 0) {
        throw std::runtime_error("read_profile: missing '# radial-profile n=<n>' header");
    }
    int n = 0;
    {
        const char* b = line.c_str() + 19;
        auto res = std::from_chars(b, line.c_str() + line.size(), n);
        if (res.ec != std::errc{} || n < 2) {
            throw std::runtime_error("read_profile: bad dimension in header");
        }
    }
    std::vector<double> knots;
    std::vector<double> values;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        const char* b = line.c_str();
        const char* e = b + line.size();
        double k = 0.0;
        double v = 0.0;
        auto r1 = std::from_chars(b, e, k);
        if (r1.ec != std::errc{}) {
            throw std::runtime_error("read_profile: bad knot entry: " + line);
        }
        const char* b2 = r1.ptr;
        while (b2 != e && (*b2 == ' ' || *b2 == '\t')) {
            ++b2;
        }
        auto r2 = std::from_chars(b2, e, v);
        if (r2.ec != std::errc{}) {
            throw std::runtime_error("read_profile: bad value entry: " + line);
        }
        knots.push_back(k);
        values.push_back(v);
    }
    return {make_profile(std::move(knots), std::move(values)), n};
}

inline std::pair<RadialProfile, int> profile_from_string(const std::string& text) {
    std::istringstream is(text);
    return read_profile(is);
}

}  // namespace hyperlab
