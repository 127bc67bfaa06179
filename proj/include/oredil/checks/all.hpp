#pragma once

// Aggregated entry points for the verification suites.  Each suite is a
// self-contained randomized battery returning a VerificationReport; this
// header fixes the default sample counts and the canonical suite order.

#include <stdexcept>
#include <string>
#include <vector>

#include "oredil/checks/check_bc.hpp"
#include "oredil/checks/check_cocycle.hpp"
#include "oredil/checks/check_crossprod.hpp"
#include "oredil/checks/check_dilation.hpp"
#include "oredil/checks/check_limit.hpp"
#include "oredil/checks/check_ore.hpp"
#include "oredil/checks/negative.hpp"
#include "oredil/report.hpp"

namespace oredil {

struct CheckParams {
    std::uint64_t seed = 1;
    std::int64_t samples = 0;  // 0 = per-suite defaults below
    std::int64_t nmax = 12;    // ramification bound for the arithmetic system
    std::int64_t Nmax = 12;    // level bound for periodic-function samples
    std::string instance = ""; // case-id prefix filter, empty = everything
};

namespace detail {
inline std::int64_t pick(std::int64_t requested, std::int64_t dflt) {
    return requested > 0 ? requested : dflt;
}
} // namespace detail

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "ore", "fractions", "cocycle", "dilate", "limit", "crossprod", "bc", "negative"};
    return names;
}

inline VerificationReport run_suite(const std::string& name, const CheckParams& p) {
    using detail::pick;
    if (name == "ore")
        return check_ore(p.seed, pick(p.samples, 200), p.instance);
    if (name == "fractions")
        return check_fractions(p.seed, pick(p.samples, 200), p.instance);
    if (name == "cocycle") {
        CocycleCounts c;
        if (p.samples > 0) {
            c.triples = p.samples;
            c.pairs = p.samples;
            c.gtriples = p.samples;
            c.section_elems = std::min<std::int64_t>(p.samples, 50);
        }
        return check_cocycle(p.seed, c, p.instance);
    }
    if (name == "dilate")
        return check_dilation(p.seed, pick(p.samples, 100), p.instance);
    if (name == "limit")
        return check_limit(p.seed, pick(p.samples, 200), p.nmax, p.Nmax, p.instance);
    if (name == "crossprod") {
        CrossprodCounts c;
        c.nmax = p.nmax;
        c.Nmax = p.Nmax;
        if (p.samples > 0) {
            c.relations = p.samples;
            c.oracle_pairs = p.samples;
            c.fullness = p.samples;
        }
        return check_crossprod(p.seed, c, p.instance);
    }
    if (name == "bc")
        return verify_bc_dilation(p.seed, p.nmax, p.Nmax, pick(p.samples, 64), p.instance);
    if (name == "negative")
        return check_negative(p.seed, p.instance);
    throw std::invalid_argument("unknown suite: " + name);
}

inline std::vector<VerificationReport> run_all(const CheckParams& p) {
    std::vector<VerificationReport> out;
    for (const auto& name : suite_names())
        out.push_back(run_suite(name, p));
    return out;
}

} // namespace oredil
