#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mapflow/format.hpp"
#include "mapflow/linalg.hpp"

namespace mapflow {

/// The eleven catalog designs. Three-letter codes read: source supply
/// (P parallel / S sequential), agent links (D directed / N non-directed),
/// chain end (O open / C closed). P is the link-free baseline; PA and SA
/// are the all-connected variants of the two groups.
enum class Architecture { P, PDO, PDC, PNO, PNC, SDO, SDC, SNO, SNC, PA, SA };

inline constexpr std::array<Architecture, 11> architecture_catalog = {
    Architecture::P,   Architecture::PDO, Architecture::PDC, Architecture::PNO,
    Architecture::PNC, Architecture::SDO, Architecture::SDC, Architecture::SNO,
    Architecture::SNC, Architecture::PA,  Architecture::SA,
};

constexpr std::string_view to_code(Architecture a) {
    switch (a) {
        case Architecture::P:   return "P";
        case Architecture::PDO: return "PDO";
        case Architecture::PDC: return "PDC";
        case Architecture::PNO: return "PNO";
        case Architecture::PNC: return "PNC";
        case Architecture::SDO: return "SDO";
        case Architecture::SDC: return "SDC";
        case Architecture::SNO: return "SNO";
        case Architecture::SNC: return "SNC";
        case Architecture::PA:  return "PA";
        case Architecture::SA:  return "SA";
    }
    return "?";
}

inline std::optional<Architecture> architecture_from_code(std::string_view code) {
    for (Architecture a : architecture_catalog)
        if (code == to_code(a)) return a;
    return std::nullopt;
}

/// true when the source feeds only the first agent
constexpr bool has_sequential_source(Architecture a) {
    switch (a) {
        case Architecture::SDO:
        case Architecture::SDC:
        case Architecture::SNO:
        case Architecture::SNC:
        case Architecture::SA:
            return true;
        default:
            return false;
    }
}

inline std::string_view describe(Architecture a) {
    switch (a) {
        case Architecture::P:   return "parallel supply, no links between agents";
        case Architecture::PDO: return "parallel supply, directed open chain";
        case Architecture::PDC: return "parallel supply, directed closed cycle";
        case Architecture::PNO: return "parallel supply, non-directed open chain";
        case Architecture::PNC: return "parallel supply, non-directed closed cycle";
        case Architecture::SDO: return "sequential supply, directed open chain";
        case Architecture::SDC: return "sequential supply, directed closed cycle";
        case Architecture::SNO: return "sequential supply, non-directed open chain";
        case Architecture::SNC: return "sequential supply, non-directed closed cycle";
        case Architecture::PA:  return "parallel supply, all agents interconnected";
        case Architecture::SA:  return "sequential supply, all agents interconnected";
    }
    return "";
}

struct ArchitectureSpec {
    Architecture kind = Architecture::P;
    int n_agents = 5;
};

/// Concrete per-step linear flow system.
///
/// forward(i, j) is the share of agent j's state delivered to agent i each
/// step. Column j sums to f unless waste_mask[j] is set, in which case the
/// forwarded share f*x_j has no receiver and leaves the system. source[i]
/// is the constant injection into agent i; the entries sum to b.
struct FlowSystem {
    int n_agents = 0;
    Matrix forward;
    std::vector<double> source;
    std::vector<bool> waste_mask;
    double s = 0.0; // kept per step
    double f = 0.0; // forwarded per step
    double e = 0.0; // transformed per step, 1 - s - f
    double b = 0.0; // supply rate
    double w = 1.0; // work share of the transformed fraction
};

namespace detail {

inline std::string num(double v) { return format_double(v); }

} // namespace detail

/// Builds the flow system for one catalog design with N agents.
/// The forwarded fraction f splits equally among out-neighbours; endpoints
/// of non-directed open chains send all of f to their single neighbour.
inline FlowSystem build_architecture(const ArchitectureSpec& spec, double s, double f,
                                     double b, double w = 1.0) {
    if (!(s >= 0.0) || !(f >= 0.0))
        throw std::invalid_argument("fractions s and f must be nonnegative");
    if (s + f > 1.0)
        throw std::invalid_argument("fractions exceed unity: s + f = " + detail::num(s + f));
    if (spec.n_agents < 2)
        throw std::invalid_argument("n_agents must be at least 2, got " +
                                    std::to_string(spec.n_agents));
    if (!(b > 0.0))
        throw std::invalid_argument("b must be positive, got " + detail::num(b));
    if (!(w >= 0.0 && w <= 1.0))
        throw std::invalid_argument("w must be in [0, 1], got " + detail::num(w));

    const auto n = static_cast<std::size_t>(spec.n_agents);
    FlowSystem sys;
    sys.n_agents = spec.n_agents;
    sys.forward = Matrix(n, n);
    sys.waste_mask.assign(n, false);
    sys.s = s;
    sys.f = f;
    sys.e = 1.0 - s - f;
    sys.b = b;
    sys.w = w;

    switch (spec.kind) {
        case Architecture::P:
            sys.waste_mask.assign(n, true);
            break;
        case Architecture::PDO:
        case Architecture::SDO:
            for (std::size_t j = 0; j + 1 < n; ++j) sys.forward(j + 1, j) = f;
            sys.waste_mask[n - 1] = true;
            break;
        case Architecture::PDC:
        case Architecture::SDC:
            for (std::size_t j = 0; j < n; ++j) sys.forward((j + 1) % n, j) = f;
            break;
        case Architecture::PNO:
        case Architecture::SNO:
            for (std::size_t j = 0; j < n; ++j) {
                const bool endpoint = (j == 0 || j + 1 == n);
                const double share = endpoint ? f : f / 2.0;
                if (j > 0) sys.forward(j - 1, j) += share;
                if (j + 1 < n) sys.forward(j + 1, j) += share;
            }
            break;
        case Architecture::PNC:
        case Architecture::SNC:
            for (std::size_t j = 0; j < n; ++j) {
                sys.forward((j + 1) % n, j) += f / 2.0;
                sys.forward((j + n - 1) % n, j) += f / 2.0;
            }
            break;
        case Architecture::PA:
        case Architecture::SA:
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t i = 0; i < n; ++i)
                    if (i != j) sys.forward(i, j) = f / static_cast<double>(n - 1);
            break;
    }

    if (has_sequential_source(spec.kind)) {
        sys.source.assign(n, 0.0);
        sys.source[0] = b;
    } else {
        sys.source.assign(n, b / static_cast<double>(n));
    }
    return sys;
}

/// Diagnostic check of every FlowSystem invariant. Returns one description
/// per violation; empty means valid.
inline std::vector<std::string> validate(const FlowSystem& sys) {
    std::vector<std::string> out;
    const auto n = static_cast<std::size_t>(sys.n_agents > 0 ? sys.n_agents : 0);

    if (sys.n_agents < 1) out.push_back("n_agents must be positive");
    if (sys.forward.rows() != n || sys.forward.cols() != n)
        out.push_back("forward matrix is " + std::to_string(sys.forward.rows()) + "x" +
                      std::to_string(sys.forward.cols()) + ", expected " + std::to_string(n) +
                      "x" + std::to_string(n));
    if (sys.source.size() != n)
        out.push_back("source vector has " + std::to_string(sys.source.size()) +
                      " entries, expected " + std::to_string(n));
    if (sys.waste_mask.size() != n)
        out.push_back("waste mask has " + std::to_string(sys.waste_mask.size()) +
                      " entries, expected " + std::to_string(n));
    if (!out.empty()) return out; // shape is broken; element checks would lie

    if (sys.s + sys.f > 1.0) {
        out.push_back("fractions exceed unity");
    } else if (std::abs(sys.s + sys.f + sys.e - 1.0) > 1e-12) {
        out.push_back("fractions sum to " + detail::num(sys.s + sys.f + sys.e) +
                      ", expected 1");
    }
    for (auto [name, value] : {std::pair<const char*, double>{"s", sys.s},
                               {"f", sys.f},
                               {"e", sys.e},
                               {"w", sys.w}}) {
        if (!(value >= 0.0 && value <= 1.0))
            out.push_back(std::string(name) + " = " + detail::num(value) + " outside [0, 1]");
    }

    for (std::size_t j = 0; j < n; ++j) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double v = sys.forward(i, j);
            if (v < 0.0 || v > sys.f)
                out.push_back("forward entry (" + std::to_string(i + 1) + ", " +
                              std::to_string(j + 1) + ") = " + detail::num(v) +
                              " outside [0, f]");
            sum += v;
        }
        const double expected = sys.waste_mask[j] ? 0.0 : sys.f;
        if (std::abs(sum - expected) > 1e-12)
            out.push_back("column " + std::to_string(j + 1) + " sums to " + detail::num(sum) +
                          ", expected " + detail::num(expected));
    }

    double src_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (sys.source[i] < 0.0)
            out.push_back("source[" + std::to_string(i + 1) + "] = " +
                          detail::num(sys.source[i]) + " is negative");
        src_sum += sys.source[i];
    }
    if (std::abs(src_sum - sys.b) > 1e-12)
        out.push_back("source vector sums to " + detail::num(src_sum) + ", expected b = " +
                      detail::num(sys.b));
    return out;
}

} // namespace mapflow
