#include "exspec/report.hpp"

#include <sstream>

#include "exspec/eigen_bounds.hpp"
#include "exspec/errors.hpp"
#include "exspec/hankel.hpp"
#include "exspec/orbit_classify.hpp"
#include "exspec/spectrum_factor.hpp"
#include "exspec/wgp_rates.hpp"

namespace exspec::io {

namespace {

constexpr int kSchemaVersion = 1;

ordered_json rational_array(const std::vector<Rational>& xs, int cap = -1) {
    ordered_json arr = ordered_json::array();
    const std::size_t limit =
        cap < 0 ? xs.size() : std::min(xs.size(), static_cast<std::size_t>(cap));
    for (std::size_t i = 0; i < limit; ++i) arr.push_back(xs[i].str());
    return arr;
}

ordered_json poly_json(const Polynomial& p) {
    ordered_json arr = ordered_json::array();
    for (int k = 0; k <= p.degree(); ++k) arr.push_back(p.coeff(k).str());
    return arr;
}

Rational parse_rational_field(const ordered_json& v, const std::string& where) {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw invalid_input("ParseError", where + ": expected a rational string");
}

SpectralInput normalize_input(const ordered_json& doc, std::vector<std::string>& warnings) {
    SpectralInput in;
    const bool has_poly = doc.contains("poly");
    const bool has_matrix = doc.contains("matrix");
    const bool has_moments = doc.contains("moments");
    if (has_poly + has_matrix + has_moments != 1)
        throw invalid_input("ParseError",
                            "input needs exactly one of \"poly\", \"matrix\", \"moments\"");

    if (has_poly) {
        const auto& arr = doc["poly"];
        if (!arr.is_array() || arr.size() < 2)
            throw invalid_input("ParseError", "\"poly\" must list >= 2 ascending coefficients");
        std::vector<Rational> coeffs;
        for (std::size_t i = 0; i < arr.size(); ++i)
            coeffs.push_back(parse_rational_field(arr[i], "poly[" + std::to_string(i) + "]"));
        Polynomial p(std::move(coeffs));
        if (p.degree() < 1)
            throw invalid_input("ParseError", "polynomial degree must be >= 1");
        if (!p.is_monic()) {
            warnings.push_back("polynomial was not monic; divided by the leading coefficient " +
                               p.leading().str());
            p = p.monic();
        }
        in.cp = std::move(p);
        in.n = in.cp.degree();
        in.moments =
            power_sums_from_coeffs(in.cp, static_cast<std::size_t>(2 * in.n) + 1);
        return in;
    }

    if (has_matrix) {
        const auto& rows = doc["matrix"];
        if (!rows.is_array() || rows.empty())
            throw invalid_input("ParseError", "\"matrix\" must be a non-empty array of rows");
        const long n = static_cast<long>(rows.size());
        ComplexMatrix h(n, n);
        for (long i = 0; i < n; ++i) {
            const auto& row = rows[static_cast<std::size_t>(i)];
            if (!row.is_array() || static_cast<long>(row.size()) != n)
                throw invalid_input("ParseError", "matrix row " + std::to_string(i) +
                                                      " must have " + std::to_string(n) +
                                                      " entries");
            for (long j = 0; j < n; ++j) {
                const auto& cell = row[static_cast<std::size_t>(j)];
                if (!cell.is_array() || cell.size() != 2)
                    throw invalid_input("ParseError", "matrix entries are [re, im] pairs");
                h(i, j) = ComplexRational(parse_rational_field(cell[0], "matrix re"),
                                          parse_rational_field(cell[1], "matrix im"));
            }
        }
        in.n = n;
        in.moments = traces_from_matrix(h, static_cast<std::size_t>(2 * n) + 1);
        in.cp = charpoly_from_traces(in.moments, n);
        return in;
    }

    const auto& arr = doc["moments"];
    if (!arr.is_array() || arr.size() < 2)
        throw invalid_input("ParseError", "\"moments\" must list t_0, t_1, ...");
    MomentSeq t;
    for (std::size_t i = 0; i < arr.size(); ++i)
        t.values.push_back(parse_rational_field(arr[i], "moments[" + std::to_string(i) + "]"));
    if (!t.values[0].is_integer() || t.values[0].sign() <= 0)
        throw invalid_input("ParseError", "t_0 must be a positive integer (the matrix size)");
    const long n = t.values[0].num().get_si();
    t.source_degree = n;
    if (t.size() < static_cast<std::size_t>(n) + 1)
        throw invalid_input("InsufficientMoments",
                            "need at least n+1 moments to rebuild the polynomial");
    in.n = n;
    in.cp = charpoly_from_traces(t, n);
    // Regenerate a full-length sequence; user-provided tails are validated
    // against it so inconsistent input cannot slip through.
    MomentSeq full = power_sums_from_coeffs(in.cp, std::max(t.size(), static_cast<std::size_t>(2 * n) + 1));
    for (std::size_t k = 0; k < t.size(); ++k)
        if (t[k] != full[k])
            throw invalid_input("ParseError",
                                "moment t_" + std::to_string(k) +
                                    " is inconsistent with the leading n+1 moments");
    in.moments = std::move(full);
    return in;
}

int ladder_m_or_throw(const SpectralInput& in, HankelLadder* out = nullptr) {
    HankelLadder ladder = hankel_ladder(in.moments, static_cast<int>(in.n));
    if (out) *out = ladder;
    if (!ladder.valid_real)
        throw invalid_input("NotRealRooted",
                            "Hankel ladder pattern broken at D_" +
                                std::to_string(ladder.first_invalid) +
                                ": spectrum is not real");
    return ladder.m;
}

ordered_json signature_json(const OrbitSignature& sig) {
    ordered_json j;
    j["signature"] = sig.ordered_multiplicities;
    if (sig.lattice) {
        j["lattice"] = {{"origin", sig.lattice->origin.str()},
                        {"step", sig.lattice->step.str()},
                        {"cells", sig.lattice->cells}};
        ordered_json occ = ordered_json::object();
        for (const auto& [q, cells] : sig.occupancy) {
            ordered_json arr = ordered_json::array();
            for (long c : cells) arr.push_back(c);
            occ[std::to_string(q)] = std::move(arr);
        }
        j["occupancy"] = std::move(occ);
    }
    return j;
}

ordered_json groups_json(const MultiplicitySpectrum& spec) {
    ordered_json arr = ordered_json::array();
    for (const auto& g : spec.groups)
        arr.push_back({{"q", g.multiplicity}, {"n", g.count}, {"factor", poly_json(g.factor)}});
    return arr;
}

void attach_iteration(ordered_json& j, const std::string& key, const std::vector<Rational>& xs,
                      int cap) {
    j[key] = rational_array(xs, cap);
    if (xs.size() > static_cast<std::size_t>(cap))
        j[key + "_elided"] = xs.size() - static_cast<std::size_t>(cap);
}

} // namespace

std::optional<Command> command_from_name(const std::string& name) {
    if (name == "analyze") return Command::Analyze;
    if (name == "minpoly") return Command::MinPoly;
    if (name == "factor") return Command::Factor;
    if (name == "gap") return Command::Gap;
    if (name == "bounds") return Command::Bounds;
    if (name == "count") return Command::Count;
    if (name == "rates") return Command::Rates;
    if (name == "classify") return Command::Classify;
    if (name == "compare") return Command::Compare;
    return std::nullopt;
}

std::string command_name(Command c) {
    switch (c) {
        case Command::Analyze: return "analyze";
        case Command::MinPoly: return "minpoly";
        case Command::Factor: return "factor";
        case Command::Gap: return "gap";
        case Command::Bounds: return "bounds";
        case Command::Count: return "count";
        case Command::Rates: return "rates";
        case Command::Classify: return "classify";
        case Command::Compare: return "compare";
    }
    return "?";
}

ParsedRequest parse_request(Command command, const ordered_json& document) {
    if (!document.is_object())
        throw invalid_input("ParseError", "input document must be a JSON object");
    ParsedRequest req;
    req.command = command;

    if (command == Command::Rates) {
        if (!document.contains("m") || !document["m"].is_number_integer())
            throw invalid_input("ParseError", "rates input needs an integer \"m\"");
        req.rates_m = document["m"].get<int>();
        req.rates_delta = document.contains("delta")
                              ? parse_rational_field(document["delta"], "delta")
                              : Rational(Int(1), Int(1000000));
        req.rates_steps = document.contains("steps") ? document["steps"].get<int>() : 24;
        return req;
    }

    if (command == Command::Compare) {
        if (!document.contains("first") || !document.contains("second"))
            throw invalid_input("ParseError", "compare input needs \"first\" and \"second\"");
        req.input = normalize_input(document["first"], req.warnings);
        req.second = normalize_input(document["second"], req.warnings);
        return req;
    }

    req.input = normalize_input(document, req.warnings);
    if (command == Command::Count) {
        if (!document.contains("interval") || !document["interval"].is_array() ||
            document["interval"].size() != 2)
            throw invalid_input("ParseError", "count input needs \"interval\": [a, b]");
        Rational a = parse_rational_field(document["interval"][0], "interval[0]");
        Rational b = parse_rational_field(document["interval"][1], "interval[1]");
        req.interval = {a, b};
    }
    return req;
}

CommandResult run_command(const ParsedRequest& req, const Options& options) {
    CommandResult result;
    ordered_json& j = result.report;
    j["schema"] = kSchemaVersion;
    j["command"] = command_name(req.command);

    switch (req.command) {
        case Command::Analyze: {
            const SpectralInput& in = *req.input;
            j["n"] = in.n;
            HankelLadder ladder = hankel_ladder(in.moments, static_cast<int>(in.n));
            j["dets"] = rational_array(ladder.dets);
            j["valid_real"] = ladder.valid_real;
            if (!ladder.valid_real) {
                j["invalid_at"] = ladder.first_invalid;
                break;
            }
            j["m"] = ladder.m;
            MultiplicitySpectrum spec = multiplicity_spectrum(in.cp);
            j["min_poly"] = poly_json(spec.min_poly);
            j["spectrum"] = groups_json(spec);
            OrbitSignature sig = class_signature(in.cp);
            j["signature"] = sig.ordered_multiplicities;
            break;
        }
        case Command::MinPoly: {
            const SpectralInput& in = *req.input;
            int m = ladder_m_or_throw(in);
            j["n"] = in.n;
            j["m"] = m;
            j["min_poly"] = poly_json(minimal_polynomial(in.moments, m));
            break;
        }
        case Command::Factor: {
            const SpectralInput& in = *req.input;
            MultiplicitySpectrum spec = multiplicity_spectrum(in.cp);
            SyzygyReport syz = syzygy_check(in.cp, spec);
            j["n"] = spec.n;
            j["m"] = spec.m;
            j["min_poly"] = poly_json(spec.min_poly);
            j["groups"] = groups_json(spec);
            ordered_json checks = ordered_json::array();
            for (const auto& c : syz.checks)
                checks.push_back({{"q", c.multiplicity}, {"order", c.order}, {"vanished", c.vanished}});
            j["syzygies"] = {{"count", syz.syzygy_count},
                             {"expected", syz.expected},
                             {"checks", std::move(checks)}};
            break;
        }
        case Command::Gap: {
            const SpectralInput& in = *req.input;
            GapIteration gap = min_gap(in.cp, options.tol, options.max_iter);
            j["m"] = ladder_m_or_throw(*req.input);
            j["converged"] = gap.converged;
            j["iterations"] = gap.iterations;
            attach_iteration(j, "eps_sq", gap.eps_sq, options.trace_cap);
            j["certified_lower"] = gap.certified_lower.str();
            j["certified_lower_exact"] = gap.lower_is_exact;
            if (gap.exact_hit) {
                j["mu_sq"] = gap.eps_sq.back().str();
                if (gap.lower_is_exact) j["mu"] = gap.certified_lower.str();
            }
            j["gap_poly"] = poly_json(gap.gap_poly);
            if (!gap.converged) result.exit_code = 3;
            break;
        }
        case Command::Bounds: {
            const SpectralInput& in = *req.input;
            int m = ladder_m_or_throw(in);
            Polynomial pm = minimal_polynomial(in.moments, m);
            j["m"] = m;
            auto [low0, high0] = initial_outer_bounds(pm);
            j["initial"] = {{"low", low0.str()}, {"high", high0.str()}};
            ExtremalIteration lo = extremal_bound(pm, Side::Min, options.tol,
                                                  options.max_iter > 0 ? options.max_iter : 64);
            ExtremalIteration hi = extremal_bound(pm, Side::Max, options.tol,
                                                  options.max_iter > 0 ? options.max_iter : 64);
            ordered_json jl, jh;
            attach_iteration(jl, "values", lo.values, options.trace_cap);
            jl["certified"] = lo.certified_bound.str();
            jl["converged"] = lo.converged;
            attach_iteration(jh, "values", hi.values, options.trace_cap);
            jh["certified"] = hi.certified_bound.str();
            jh["converged"] = hi.converged;
            j["low"] = std::move(jl);
            j["high"] = std::move(jh);
            if (!lo.converged || !hi.converged) result.exit_code = 3;
            break;
        }
        case Command::Count: {
            const SpectralInput& in = *req.input;
            int m = ladder_m_or_throw(in);
            const auto& [a, b] = *req.interval;
            j["m"] = m;
            j["a"] = a.str();
            j["b"] = b.str();
            j["count"] = count_roots_in_interval(in.moments, m, a, b);
            break;
        }
        case Command::Rates: {
            RateReport r = rate_report(req.rates_m, req.rates_delta, req.rates_steps);
            j["m"] = r.m;
            j["B"] = r.B.str();
            j["A"] = r.A.str();
            j["one_minus_A"] = r.upper_geo.str();
            j["lower_geo"] = r.lower_geo.str();
            j["delta"] = req.rates_delta.str();
            attach_iteration(j, "v_lower", r.v_lower, options.trace_cap);
            ordered_json sand = ordered_json::array();
            for (const auto& s : r.sandwich) {
                const char* state = s.state == SandwichState::Holds      ? "holds"
                                    : s.state == SandwichState::Violated ? "violated"
                                                                         : "undecided";
                sand.push_back({{"k", s.k}, {"state", state}});
            }
            j["sandwich"] = std::move(sand);
            j["k_min"] = r.k_min;
            j["k_max"] = r.k_max;
            break;
        }
        case Command::Classify: {
            const SpectralInput& in = *req.input;
            OrbitSignature sig = class_signature(in.cp);
            j["n"] = in.n;
            j.update(signature_json(sig));
            break;
        }
        case Command::Compare: {
            const SpectralInput& a = *req.input;
            const SpectralInput& b = *req.second;
            bool orbit = same_orbit(a.moments, b.moments);
            OrbitSignature sa = class_signature(a.cp);
            OrbitSignature sb = class_signature(b.cp);
            bool cls = sa.ordered_multiplicities == sb.ordered_multiplicities;
            j["same_orbit"] = orbit;
            j["same_class"] = cls;
            int m = std::max<int>(static_cast<int>(sa.ordered_multiplicities.size()),
                                  static_cast<int>(sb.ordered_multiplicities.size()));
            j["traces_compared"] = 2 * m;
            ordered_json ja, jb;
            ja["traces"] = rational_array(
                std::vector<Rational>(a.moments.values.begin(),
                                      a.moments.values.begin() +
                                          std::min<std::size_t>(a.moments.size(), 2 * m)));
            ja.update(signature_json(sa));
            jb["traces"] = rational_array(
                std::vector<Rational>(b.moments.values.begin(),
                                      b.moments.values.begin() +
                                          std::min<std::size_t>(b.moments.size(), 2 * m)));
            jb.update(signature_json(sb));
            j["first"] = std::move(ja);
            j["second"] = std::move(jb);
            break;
        }
    }
    if (!req.warnings.empty()) j["warnings"] = req.warnings;
    return result;
}

ordered_json error_report(const std::string& name, const std::string& message) {
    ordered_json j;
    j["schema"] = kSchemaVersion;
    j["error"] = {{"name", name}, {"message", message}};
    return j;
}

namespace {

void render_lines(const ordered_json& node, const std::string& prefix, std::ostringstream& out) {
    if (node.is_object()) {
        for (const auto& [key, value] : node.items())
            render_lines(value, prefix.empty() ? key : prefix + "." + key, out);
    } else if (node.is_array()) {
        bool scalars = true;
        for (const auto& v : node)
            if (v.is_object() || v.is_array()) scalars = false;
        if (scalars) {
            out << prefix << ":";
            for (const auto& v : node)
                out << " " << (v.is_string() ? v.get<std::string>() : v.dump());
            out << "\n";
        } else {
            int idx = 0;
            for (const auto& v : node) render_lines(v, prefix + "[" + std::to_string(idx++) + "]", out);
        }
    } else {
        out << prefix << ": " << (node.is_string() ? node.get<std::string>() : node.dump())
            << "\n";
    }
}

} // namespace

std::string render_text(const ordered_json& report) {
    std::ostringstream out;
    render_lines(report, "", out);
    return out.str();
}

} // namespace exspec::io
