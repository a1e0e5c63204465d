#include "obcalc/klassen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

namespace obcalc::klassen {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDegenerate = 1e-9;  // |sin phase| below this: line levels
constexpr double kBoundaryTol = 1e-6;

struct Vec2 {
    double x, y;
};

double dist(Vec2 a, Vec2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

struct Piece {
    std::vector<Vec2> pts;
};

// Im[(z^2 - 1/4) e^{i phase}] at z = rho e^{i theta} equals
// rho^2 sin(2 theta + phase) - sin(phase)/4.
double im_part(double rho, double theta, double phase) {
    return rho * rho * std::sin(2 * theta + phase) - 0.25 * std::sin(phase);
}

double re_part(double rho, double theta, double phase) {
    return rho * rho * std::cos(2 * theta + phase) - 0.25 * std::cos(phase);
}

bool near_puncture(Vec2 p) {
    return std::hypot(p.x - 0.5, p.y) < 1e-9 || std::hypot(p.x + 0.5, p.y) < 1e-9;
}

// Radial bisection for im_part(rho) = 0 on [0, 1]; the function is linear in
// rho^2, so a sign change brackets the single root.
std::optional<double> radial_root(double theta, double phase) {
    double lo = 0.0, hi = 1.0;
    double glo = im_part(lo, theta, phase), ghi = im_part(hi, theta, phase);
    if (glo == 0.0 && ghi == 0.0) return std::nullopt;  // whole ray: line case
    if ((glo > 0) == (ghi > 0)) return std::nullopt;
    while (hi - lo > 1e-12) {
        double mid = 0.5 * (lo + hi);
        if ((im_part(mid, theta, phase) > 0) == (glo > 0)) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

std::optional<Vec2> hyperbola_point(double theta, double phase) {
    auto rho = radial_root(theta, phase);
    if (!rho) return std::nullopt;
    Vec2 p{*rho * std::cos(theta), *rho * std::sin(theta)};
    if (re_part(*rho, theta, phase) <= 1e-9) return std::nullopt;
    if (near_puncture(p)) return std::nullopt;
    return p;
}

// theta of the boundary crossing rho(theta) = 1, bisected between a valid
// and an invalid angle.
double refine_boundary_angle(double good, double bad, double phase) {
    for (int i = 0; i < 200 && std::abs(bad - good) > 1e-13; ++i) {
        double mid = 0.5 * (good + bad);
        auto p = hyperbola_point(mid, phase);
        (p ? good : bad) = mid;
    }
    return good;
}

void subdivide(std::vector<Vec2>& out, double th0, Vec2 p0, double th1, Vec2 p1,
               double phase, double tol, int depth) {
    if (depth <= 0 || dist(p0, p1) <= tol) {
        out.push_back(p1);
        return;
    }
    double mid = 0.5 * (th0 + th1);
    auto pm = hyperbola_point(mid, phase);
    if (!pm) {
        out.push_back(p1);
        return;
    }
    subdivide(out, th0, p0, mid, *pm, phase, tol, depth - 1);
    subdivide(out, mid, *pm, th1, p1, phase, tol, depth - 1);
}

std::vector<Piece> hyperbola_pieces(double phase, int resolution) {
    const int n = resolution;
    const double dtheta = 2 * kPi / n;
    const double tol = 6.0 / resolution;

    std::vector<std::optional<Vec2>> grid(n);
    for (int k = 0; k < n; ++k) grid[k] = hyperbola_point(k * dtheta, phase);

    // Chain consecutive valid angles, wrapping around.
    std::vector<std::pair<int, int>> runs;  // [first, last] inclusive
    int start = 0;
    while (start < n && grid[start]) ++start;
    if (start == n) {
        // Valid at every angle: a single closed run.
        runs.push_back({0, n - 1});
    } else {
        int k = start;
        for (int step = 0; step < n; ++step) {
            int idx = (start + 1 + step) % n;
            if (grid[idx] && !grid[(idx + n - 1) % n]) k = idx;
            if (grid[idx] && !grid[(idx + 1) % n]) runs.push_back({k, idx});
        }
    }

    std::vector<Piece> pieces;
    for (auto [first, last] : runs) {
        Piece piece;
        int len = (last - first + n) % n + 1;
        piece.pts.push_back(*grid[first]);
        for (int i = 1; i < len; ++i) {
            int prev = (first + i - 1) % n, cur = (first + i) % n;
            subdivide(piece.pts, prev * dtheta, *grid[prev], cur * dtheta, *grid[cur],
                      phase, tol, 14);
        }
        if (len < n) {
            // Polish both free ends: if the run stopped because the root left
            // the disk, extend to the exact boundary crossing.
            int before = (first + n - 1) % n, after = (last + 1) % n;
            double th_first = refine_boundary_angle(first * dtheta, before * dtheta, phase);
            double th_last = refine_boundary_angle(last * dtheta, after * dtheta, phase);
            for (auto [th, front] : {std::pair{th_first, true}, std::pair{th_last, false}}) {
                auto p = hyperbola_point(th, phase);
                if (!p) continue;
                if (front) piece.pts.insert(piece.pts.begin(), *p);
                else piece.pts.push_back(*p);
            }
        }
        pieces.push_back(std::move(piece));
    }
    return pieces;
}

std::vector<Piece> line_pieces(double phase, int resolution) {
    // sin(2 theta + phase) = 0 on two lines through the origin.
    double theta_a = -0.5 * phase;
    theta_a -= kPi * std::floor(theta_a / kPi);
    std::vector<Piece> pieces;
    for (double theta : {theta_a, theta_a + kPi / 2}) {
        double c = std::cos(theta), s = std::sin(theta);
        auto valid = [&](double u) {
            if (std::abs(u) > 1.0) return false;
            Vec2 p{u * c, u * s};
            if (near_puncture(p)) return false;
            return re_part(std::abs(u), theta, phase) > 1e-9;
        };
        Piece run;
        for (int j = 0; j <= resolution; ++j) {
            double u = -1.0 + 2.0 * j / resolution;
            if (valid(u)) {
                run.pts.push_back({u * c, u * s});
            } else if (!run.pts.empty()) {
                pieces.push_back(std::move(run));
                run = Piece{};
            }
        }
        if (!run.pts.empty()) pieces.push_back(std::move(run));
    }
    return pieces;
}

std::vector<Piece> slice_pieces(double phase, int resolution) {
    if (std::abs(std::sin(phase)) < kDegenerate) return line_pieces(phase, resolution);
    return hyperbola_pieces(phase, resolution);
}

int count_components(const std::vector<Piece>& pieces) {
    std::vector<int> parent(pieces.size());
    for (std::size_t i = 0; i < pieces.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    auto unite = [&](int i, int j) { parent[find(i)] = find(j); };

    // Antipodal gluing of boundary endpoints.
    struct End {
        Vec2 p;
        int piece;
    };
    std::vector<End> ends;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (pieces[i].pts.empty()) continue;
        for (const Vec2& p : {pieces[i].pts.front(), pieces[i].pts.back()})
            if (std::hypot(p.x, p.y) >= 1.0 - kBoundaryTol)
                ends.push_back({p, static_cast<int>(i)});
    }
    for (std::size_t i = 0; i < ends.size(); ++i)
        for (std::size_t j = i + 1; j < ends.size(); ++j)
            if (std::hypot(ends[i].p.x + ends[j].p.x, ends[i].p.y + ends[j].p.y) <
                10 * kBoundaryTol)
                unite(ends[i].piece, ends[j].piece);

    int count = 0;
    for (std::size_t i = 0; i < pieces.size(); ++i)
        count += find(static_cast<int>(i)) == static_cast<int>(i);
    return count;
}

double residual_at(Vec2 p, double t) {
    return std::abs(fibration_value(p.x, p.y, t) - std::complex<double>(1.0, 0.0));
}

std::vector<Vec2> flatten(const std::vector<Piece>& pieces) {
    std::vector<Vec2> pts;
    for (const Piece& piece : pieces) pts.insert(pts.end(), piece.pts.begin(), piece.pts.end());
    return pts;
}

}  // namespace

std::complex<double> fibration_value(double x, double y, double t) {
    std::complex<double> z(x, y);
    std::complex<double> w = z * z - 0.25;
    if (std::abs(w) < 1e-12)
        throw std::domain_error("fibration is undefined at the binding punctures +-1/2");
    return w / std::abs(w) * std::exp(std::complex<double>(0.0, 2 * kPi * t));
}

SliceReport cross_section(double t, int n_samples) {
    if (t < 0.0 || t > 1.0) throw std::invalid_argument("level t must lie in [0, 1]");
    if (n_samples < 16) throw std::invalid_argument("need at least 16 samples");
    auto pieces = slice_pieces(2 * kPi * t, n_samples);
    SliceReport report;
    report.t = t;
    report.component_count = count_components(pieces);
    for (const Vec2& p : flatten(pieces)) {
        double res = residual_at(p, t);
        if (res >= 1e-9) continue;  // outside the guaranteed tolerance
        report.points.push_back({p.x, p.y, t, res});
        report.max_residual = std::max(report.max_residual, res);
    }
    return report;
}

int component_count(double t, int resolution) {
    if (resolution < 64) throw std::invalid_argument("resolution below 64 is too coarse");
    if (t < 0.0 || t > 1.0) throw std::invalid_argument("level t must lie in [0, 1]");
    return count_components(slice_pieces(2 * kPi * t, resolution));
}

double translation_check(double s, double t, int n_samples) {
    if (s < 0.0 || s > 1.0 || t < 0.0 || t > 1.0)
        throw std::invalid_argument("levels must lie in [0, 1]");
    // Page F_s at level t solves (z^2-1/4)/|..| e^{2 pi i (t-s)} = 1.
    auto a = flatten(slice_pieces(2 * kPi * t - 2 * kPi * s, n_samples));
    double shifted = t - s - std::floor(t - s);
    auto b = flatten(slice_pieces(2 * kPi * shifted, n_samples));
    if (a.empty() && b.empty()) return 0.0;
    if (a.empty() || b.empty()) return 2.0;  // disk diameter: maximal deviation
    double dev = 0.0;
    for (const auto* from : {&a, &b}) {
        const auto& to = (from == &a) ? b : a;
        for (const Vec2& p : *from) {
            double best = 2.0;
            for (const Vec2& q : to) best = std::min(best, dist(p, q));
            dev = std::max(dev, best);
        }
    }
    return dev;
}

}  // namespace obcalc::klassen
