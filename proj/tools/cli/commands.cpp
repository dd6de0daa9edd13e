#include "commands.hpp"

#include "dvr/format.hpp"
#include "dvr/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace dvr::cli {
namespace {

using nlohmann::json;

std::string complex_json(Complex z)
{
    return "{\"re\": " + format_real(z.real()) + ", \"im\": " + format_real(z.imag()) + "}";
}

std::string disk_json(const ClosedDisk& d)
{
    return "{\"center_re\": " + format_real(d.center.real()) + ", \"center_im\": "
           + format_real(d.center.imag()) + ", \"radius\": " + format_real(d.radius) + "}";
}

Complex read_complex(const json& j, const char* key)
{
    const json& v = j.at(key);
    return {v.at("re").get<double>(), v.at("im").get<double>()};
}

// Runs `body`, mapping library exceptions onto exit codes.
template <class F>
int guarded(std::ostream& err, F&& body)
{
    try {
        return body();
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const InfeasibleError& e) {
        err << "infeasible: " << e.what() << "\n";
        return kInfeasible;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return kInfeasible;
    } catch (const json::exception& e) {
        err << "usage error: malformed spec document: " << e.what() << "\n";
        return kUsage;
    }
}

Complex lambda_of(Complex z0, Complex w0, std::optional<Complex> w1, std::optional<Complex> lambda)
{
    if (lambda) return *lambda;
    if (!w1) throw UsageError("either --w1 or --lambda is required");
    return lambda_from_w1({z0, w0, w1, std::nullopt});
}

bool degenerate(Complex x) { return std::abs(x) >= 1.0 - kDegenerateThreshold; }

std::string extremal_document(const ExtremalSpec& spec, const Jet3& jet, const ClosedDisk& disk,
                              std::optional<double> theta)
{
    std::ostringstream os;
    os << "{\n  \"spec\": {\"depth\": " << spec.depth() << ", \"z0\": " << complex_json(spec.z0)
       << ", \"u0\": " << complex_json(spec.u0) << ", \"moebius_params\": [";
    for (std::size_t k = 0; k < spec.moebius_params.size(); ++k) {
        os << (k ? ", " : "") << complex_json(spec.moebius_params[k]);
    }
    os << "], \"rotation\": " << complex_json(spec.rotation) << "},\n";
    os << "  \"jet\": {";
    for (int k = 0; k < 4; ++k) {
        os << (k ? ", " : "") << "\"w" << k << "\": " << complex_json(jet.derivative(k));
    }
    os << "},\n  \"disk\": " << disk_json(disk) << ",\n";

    const Complex w3 = jet.derivative(3);
    const double offset = std::abs(std::abs(w3 - disk.center) - disk.radius);
    os << "  \"boundary_angle_check\": {";
    if (disk.radius > 0.0) {
        const double measured = std::arg(w3 - disk.center);
        os << "\"measured_angle\": " << format_real(measured);
        if (theta) {
            const Complex target = disk.center + disk.radius * std::polar(1.0, *theta);
            os << ", \"theta\": " << format_real(*theta) << ", \"angle_error\": "
               << format_real(std::abs(w3 - target));
        }
        os << ", ";
    }
    os << "\"circle_offset\": " << format_real(offset) << "}\n}\n";
    return os.str();
}

ExtremalSpec parse_spec(const std::string& text)
{
    json doc = json::parse(text);
    if (doc.contains("spec")) doc = doc.at("spec");
    ExtremalSpec spec;
    spec.z0 = read_complex(doc, "z0");
    spec.u0 = read_complex(doc, "u0");
    spec.rotation = read_complex(doc, "rotation");
    for (const auto& p : doc.at("moebius_params")) {
        spec.moebius_params.emplace_back(p.at("re").get<double>(), p.at("im").get<double>());
    }
    const int depth = doc.at("depth").get<int>();
    if (depth != spec.depth()) throw UsageError("spec depth does not match its parameter list");
    return spec;
}

struct Box {
    double x0, x1, y0, y1;
};

} // namespace

int run_disk(const DiskArgs& a, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        ClosedDisk disk;
        switch (a.order) {
        case 1:
            disk = disk_order1(a.z0, a.w0);
            break;
        case 2: {
            const Complex beta = a.beta ? *a.beta : lambda_of(a.z0, a.w0, a.w1, a.lambda);
            disk = disk_order2(a.z0, a.w0, beta);
            break;
        }
        case 3: {
            const Complex lambda = lambda_of(a.z0, a.w0, a.w1, a.lambda);
            if (degenerate(lambda)) {
                disk = disk_order3(a.z0, a.w0, lambda, 0.0);
                break;
            }
            Complex mu;
            if (a.mu) {
                mu = *a.mu;
            } else if (a.w2) {
                mu = mu_from_w2({a.z0, a.w0, a.w1, a.w2}, lambda);
            } else {
                throw UsageError("order 3 requires --w2 or --mu (unless |lambda| = 1)");
            }
            disk = disk_order3(a.z0, a.w0, lambda, mu);
            break;
        }
        default:
            throw UsageError("--order must be 1, 2 or 3");
        }
        out << disk_json(disk) << "\n";
        return int{kOk};
    });
}

BoundaryCurve compute_boundary(const BoundaryArgs& a, Regime* regime)
{
    if (a.n < 16) throw UsageError("--n must be at least 16");
    const Complex lambda = lambda_of(a.z0, a.w0, a.w1, a.lambda);
    if (degenerate(lambda)) {
        throw InfeasibleError("degenerate case |lambda| = 1: f''(z0) and f'''(z0) are forced, "
                              "the region is a single point");
    }
    const Complex w1 = a.w1 ? *a.w1 : w1_from_lambda(a.z0, a.w0, lambda);
    const NormalizedConfig cfg = normalize({a.z0, a.w0, w1, std::nullopt});
    const RegionSpec spec = region_spec(cfg.r, cfg.s, cfg.lambda);
    if (regime) *regime = spec.regime();
    return denormalize(sample_boundary(spec, a.n), cfg.phi, cfg.xi);
}

std::string boundary_csv(const BoundaryCurve& curve)
{
    std::string out = "theta,re,im,branch\n";
    for (const auto& p : curve.points) {
        out += format_real(p.theta) + "," + format_real(p.value.real()) + ","
               + format_real(p.value.imag()) + "," + to_string(p.branch) + "\n";
    }
    return out;
}

std::string boundary_svg(const BoundaryCurve& curve, Regime regime)
{
    constexpr double kSize = 800.0;
    // Bounding box of the region and the unit-circle reference.
    Box box{-1.0, 1.0, -1.0, 1.0};
    for (const auto& p : curve.points) {
        box.x0 = std::min(box.x0, p.value.real());
        box.x1 = std::max(box.x1, p.value.real());
        box.y0 = std::min(box.y0, p.value.imag());
        box.y1 = std::max(box.y1, p.value.imag());
    }
    const double span = std::max(box.x1 - box.x0, box.y1 - box.y0);
    const double scale = 0.9 * kSize / span;
    const double cx = 0.5 * (box.x0 + box.x1);
    const double cy = 0.5 * (box.y0 + box.y1);
    auto px = [&](double x) { return format_real(0.5 * kSize + (x - cx) * scale); };
    auto py = [&](double y) { return format_real(0.5 * kSize - (y - cy) * scale); };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n"
       << "  <rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"white\"/>\n"
       << "  <circle cx=\"" << px(0.0) << "\" cy=\"" << py(0.0) << "\" r=\"" << format_real(scale)
       << "\" fill=\"none\" stroke=\"#888888\" stroke-dasharray=\"4 4\"/>\n"
       << "  <path d=\"";
    for (std::size_t k = 0; k < curve.points.size(); ++k) {
        const Complex v = curve.points[k].value;
        os << (k ? " L " : "M ") << px(v.real()) << " " << py(v.imag());
    }
    os << " Z\" fill=\"#3366cc\" fill-opacity=\"0.25\" stroke=\"#3366cc\" stroke-width=\"1.5\"/>\n"
       << "  <text x=\"16\" y=\"28\" font-family=\"sans-serif\" font-size=\"16\">regime "
       << to_string(regime) << "</text>\n"
       << "  <text x=\"16\" y=\"50\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#888888\">"
       << "dashed: unit circle</text>\n"
       << "</svg>\n";
    return os.str();
}

int run_boundary(const BoundaryArgs& a, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        if (a.format != "csv" && a.format != "svg") throw UsageError("--format must be csv or svg");
        Regime regime = Regime::i;
        const BoundaryCurve curve = compute_boundary(a, &regime);
        out << (a.format == "csv" ? boundary_csv(curve) : boundary_svg(curve, regime));
        return int{kOk};
    });
}

int run_extremal(const ExtremalArgs& a, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        if (a.spec_json) {
            const ExtremalSpec spec = parse_spec(*a.spec_json);
            const Jet3 jet = eval_extremal(spec, spec.z0);
            const InterpolationData data{spec.z0, jet.derivative(0), jet.derivative(1), jet.derivative(2)};
            out << extremal_document(spec, jet, disk_order3(data), std::nullopt);
            return int{kOk};
        }
        const Complex lambda = a.lambda;
        int depth = 1;
        std::optional<Complex> w2;
        if (!degenerate(lambda)) {
            if (!a.mu) throw UsageError("--mu is required when |lambda| < 1");
            depth = degenerate(*a.mu) ? 2 : 3;
            w2 = w2_from_lambda_mu(a.z0, a.w0, lambda, *a.mu);
        }
        const Complex w1 = w1_from_lambda(a.z0, a.w0, lambda);
        NormalizedConfig cfg = normalize({a.z0, a.w0, w1, w2});
        if (depth == 1) {
            cfg.lambda /= std::abs(cfg.lambda);
        } else if (depth == 2) {
            cfg.mu = *cfg.mu / std::abs(*cfg.mu);
        }
        const ExtremalSpec spec = extremal_spec(cfg, depth, a.theta);
        const Jet3 jet = eval_extremal(spec, a.z0);
        const ClosedDisk disk = disk_order3(a.z0, a.w0, lambda, a.mu.value_or(0.0));
        out << extremal_document(spec, jet, disk,
                                 depth == 3 ? std::optional<double>(a.theta) : std::nullopt);
        return int{kOk};
    });
}

int run_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        if (a.format != "json" && a.format != "text") throw UsageError("--format must be json or text");
        const std::vector<std::string> known{"membership", "extremal", "fd", "regime2"};
        std::vector<std::string> suites;
        if (a.suite == "all") {
            suites = known;
        } else if (std::find(known.begin(), known.end(), a.suite) != known.end()) {
            suites = {a.suite};
        } else {
            throw UsageError("unknown suite '" + a.suite + "'");
        }

        VerificationReport merged;
        merged.seed = a.seed;
        for (const auto& s : suites) {
            VerificationReport r;
            if (s == "membership") r = membership_audit(a.n, a.max_degree, a.seed);
            if (s == "extremal") r = extremal_audit(a.n, a.seed);
            if (s == "fd") r = fd_audit(a.n, a.seed);
            if (s == "regime2") r = regime2_search(a.grid);
            err << s << ": samples=" << r.samples << " violations=" << r.violations
                << " anomalies=" << r.anomalies << " max_violation=" << format_real(r.max_violation);
            if (!r.note.empty()) err << " (" << r.note << ")";
            err << "\n";
            if (r.worst_case && r.violations > 0) {
                err << "  worst: z0=" << format_complex(r.worst_case->z0) << " "
                    << r.worst_case->detail << "\n";
            }
            merged.merge(r);
        }
        merged.seed = a.seed;
        out << (a.format == "json" ? to_json(merged) : to_key_value(merged));
        return merged.passed() ? int{kOk} : int{kVerificationFailed};
    });
}

} // namespace dvr::cli
