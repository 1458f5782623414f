#include "lieinv/invariant_function.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>

namespace lieinv {

std::map<int, UniPoly> InvariantFunction::normalized() const {
    std::map<int, UniPoly> out;
    for (const auto& [f, v] : exceptional) {
        auto it = out.find(v);
        if (it == out.end())
            out.emplace(v, f.monic());
        else
            it->second = (it->second * f).monic();
    }
    return out;
}

bool InvariantFunction::operator==(const InvariantFunction& o) const {
    return generic == o.generic && normalized() == o.normalized();
}

WhichFunction which_from_name(const std::string& s) {
    if (s == "psi") return WhichFunction::psi;
    if (s == "psi0") return WhichFunction::psi0;
    if (s == "phi") return WhichFunction::phi;
    if (s == "phi0") return WhichFunction::phi0;
    throw LieInvError("BadInput", "unknown invariant function: " + s);
}

std::string which_name(WhichFunction w) {
    switch (w) {
        case WhichFunction::psi: return "psi";
        case WhichFunction::psi0: return "psi0";
        case WhichFunction::phi: return "phi";
        default: return "phi0";
    }
}

InvariantFunction invariant_function(const StructureConstants& sc, WhichFunction which) {
    if ((which == WhichFunction::phi || which == WhichFunction::phi0) &&
        sc.kind() != AlgKind::lie)
        throw LieInvError("KindMismatch", "phi and phi0 require a lie algebra");
    if (sc.kind() == AlgKind::raw)
        throw LieInvError("KindMismatch", "invariant functions require lie or jordan kind");
    int n = sc.dim();
    UniPoly x = UniPoly::variable();
    UniPoly one(Scalar(1)), zero;
    Matrix<UniPoly> sys;
    size_t ncols = 0;
    switch (which) {
        case WhichFunction::psi:
            sys = derivation_system<UniPoly>(sc, x, one, one);
            ncols = static_cast<size_t>(n) * n;
            break;
        case WhichFunction::psi0:
            sys = derivation_system<UniPoly>(sc, x, one, zero);
            ncols = static_cast<size_t>(n) * n;
            break;
        case WhichFunction::phi:
            sys = two_cocycle_system<UniPoly>(sc, {one, one, one, x, x, x});
            ncols = cochain_dim(n, 2);
            break;
        case WhichFunction::phi0:
            sys = two_cocycle_system<UniPoly>(sc, {zero, one, one, x, one, one});
            ncols = cochain_dim(n, 2);
            break;
    }
    for (auto& row : sys) row.resize(ncols, UniPoly());
    StepRank sr = param_step_rank(sys);
    InvariantFunction f;
    f.generic = static_cast<int>(ncols) - sr.generic_rank;
    for (const auto& [factor, rk] : sr.exceptional)
        f.exceptional.emplace_back(factor, static_cast<int>(ncols) - rk);
    std::sort(f.exceptional.begin(), f.exceptional.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return f;
}

int evaluate(const InvariantFunction& f, const Scalar& point) {
    for (const auto& [factor, v] : f.exceptional)
        if (factor.eval(point).is_zero()) return v;
    return f.generic;
}

namespace {

/// Some rational point where none of the given polynomials vanish.
Scalar spare_point(const std::vector<UniPoly>& avoid) {
    for (long t = 0;; ++t) {
        Scalar p(t);
        bool ok = true;
        for (const auto& f : avoid)
            if (!f.is_zero() && f.eval(p).is_zero()) { ok = false; break; }
        if (ok) return p;
    }
}

std::optional<Scalar> rational_root(const UniPoly& f) {
    if (f.degree() == 1) return -f.coeff(0) / f.coeff(1);
    return std::nullopt;
}

} // namespace

LeqResult leq(const InvariantFunction& f, const InvariantFunction& g) {
    LeqResult res;
    auto fail = [&](const UniPoly& factor, int lhs, int rhs) {
        res.ok = false;
        LeqWitness w;
        w.factor = factor;
        w.lhs = lhs;
        w.rhs = rhs;
        if (factor.is_zero()) {
            std::vector<UniPoly> avoid;
            for (const auto& [p, v] : f.exceptional) avoid.push_back(p);
            for (const auto& [p, v] : g.exceptional) avoid.push_back(p);
            w.point = spare_point(avoid);
        } else {
            w.point = rational_root(factor);
        }
        res.witness = w;
    };
    if (f.generic > g.generic) {
        fail(UniPoly(), f.generic, g.generic);
        return res;
    }
    for (const auto& [p, v] : f.exceptional) {
        UniPoly rest = p;
        for (const auto& [q, w] : g.exceptional) {
            if (rest.degree() < 1) break;
            UniPoly d = poly_gcd(rest, q);
            if (d.degree() < 1) continue;
            if (v > w) {
                fail(d, v, w);
                return res;
            }
            rest = (rest / d).monic();
        }
        if (rest.degree() >= 1 && v > g.generic) {
            fail(rest, v, g.generic);
            return res;
        }
    }
    return res;
}

OccurrenceSignature signature(const InvariantFunction& f) {
    OccurrenceSignature sig;
    sig.generic = f.generic;
    for (const auto& [p, v] : f.exceptional) sig.counts[v] += p.degree();
    return sig;
}

std::string OccurrenceSignature::to_string() const {
    std::string s;
    for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
        s += std::to_string(it->first) + "_" + std::to_string(it->second) + ",";
    }
    s += std::to_string(generic);
    return s;
}

namespace {

std::string format_double10(double re, double im) {
    char buf[64];
    std::string out;
    std::snprintf(buf, sizeof buf, "%.10g", re);
    out = buf;
    if (im != 0) {
        std::snprintf(buf, sizeof buf, "%+.10g", im);
        out += buf;
        out += "i";
    }
    return out;
}

/// Durand-Kerner root approximations (display only).
std::vector<std::complex<double>> numeric_roots(const UniPoly& p) {
    int d = p.degree();
    std::vector<std::complex<double>> c(d + 1);
    for (int k = 0; k <= d; ++k)
        c[k] = {p.coeff(k).re_double(), p.coeff(k).im_double()};
    std::vector<std::complex<double>> r(d);
    for (int k = 0; k < d; ++k) r[k] = std::pow(std::complex<double>(0.4, 0.9), k + 1);
    for (int iter = 0; iter < 200; ++iter) {
        double shift = 0;
        for (int k = 0; k < d; ++k) {
            std::complex<double> num = c[d];
            for (int j = d - 1; j >= 0; --j) num = num * r[k] + c[j];
            std::complex<double> den = c[d];
            for (int j = 0; j < d; ++j)
                if (j != k) den *= (r[k] - r[j]);
            std::complex<double> delta = num / den;
            r[k] -= delta;
            shift = std::max(shift, std::abs(delta));
        }
        if (shift < 1e-14) break;
    }
    return r;
}

} // namespace

std::vector<DisplayPoint> display_points(const InvariantFunction& f) {
    std::vector<DisplayPoint> pts;
    for (const auto& [p, v] : f.exceptional) {
        std::string ftext = p.to_string();
        if (p.degree() == 1) {
            Scalar root = -p.coeff(0) / p.coeff(1);
            DisplayPoint d;
            d.text = root.to_string();
            d.exact = true;
            d.exact_value = root;
            d.factor = ftext;
            d.value = v;
            d.re = root.re_double();
            d.im = root.im_double();
            pts.push_back(std::move(d));
            continue;
        }
        if (p.degree() == 2) {
            // monic x^2 + bx + c: roots (-b +- sqrt(b^2-4c))/2
            Scalar b = p.coeff(1) / p.coeff(2), c = p.coeff(0) / p.coeff(2);
            Scalar disc = b * b - Scalar(4) * c;
            auto rt = disc.sqrt_exact();
            if (rt) {
                for (int s = 0; s < 2; ++s) {
                    Scalar root = (-b + (s ? -*rt : *rt)) / Scalar(2);
                    DisplayPoint d;
                    d.text = root.to_string();
                    d.exact = true;
                    d.exact_value = root;
                    d.factor = ftext;
                    d.value = v;
                    d.re = root.re_double();
                    d.im = root.im_double();
                    pts.push_back(std::move(d));
                }
                continue;
            }
            // closed form with an explicit radical, plus numeric sort keys
            Scalar base = -b / Scalar(2);
            std::string radical = "1/2*sqrt(" + disc.to_string() + ")";
            auto roots = numeric_roots(p);
            std::sort(roots.begin(), roots.end(), [](auto x, auto y) {
                return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
            });
            for (int s = 0; s < 2; ++s) {
                DisplayPoint d;
                std::string head = base.is_zero() ? "" : base.to_string();
                d.text = head + (s ? "-" : "+") + radical;
                d.exact = false;
                d.factor = ftext;
                d.value = v;
                // pair each sign with a consistent numeric approximation
                d.re = roots[s ? 0 : 1].real();
                d.im = roots[s ? 0 : 1].imag();
                pts.push_back(std::move(d));
            }
            continue;
        }
        for (const auto& z : numeric_roots(p)) {
            DisplayPoint d;
            d.text = "~" + format_double10(z.real(), std::abs(z.imag()) < 1e-12 ? 0.0 : z.imag());
            d.exact = false;
            d.factor = ftext;
            d.value = v;
            d.re = z.real();
            d.im = z.imag();
            pts.push_back(std::move(d));
        }
    }
    std::sort(pts.begin(), pts.end(), [](const DisplayPoint& a, const DisplayPoint& b) {
        if (a.value != b.value) return a.value > b.value;
        if (std::abs(a.re - b.re) > 1e-12) return a.re < b.re;
        return a.im < b.im;
    });
    return pts;
}

namespace {

size_t utf8_width(const std::string& s) {
    size_t w = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++w;
    return w;
}

std::string pad_to(const std::string& s, size_t width) {
    std::string out = s;
    size_t w = utf8_width(s);
    if (w < width) out.append(width - w, ' ');
    return out;
}

} // namespace

std::string render_table(const InvariantFunction& f, const std::string& fname) {
    auto pts = display_points(f);
    std::vector<std::string> heads, vals;
    for (const auto& p : pts) {
        heads.push_back(p.exact ? p.text : p.text + " [" + p.factor + "]");
        vals.push_back(std::to_string(p.value));
    }
    heads.push_back("");
    vals.push_back(std::to_string(f.generic));
    size_t w0 = std::max(utf8_width("alpha"), utf8_width(fname));
    std::string line1 = pad_to("alpha", w0) + " |", line2 = pad_to(fname, w0) + " |";
    for (size_t k = 0; k < heads.size(); ++k) {
        size_t w = std::max(utf8_width(heads[k]), utf8_width(vals[k]));
        line1 += " " + pad_to(heads[k], w) + " |";
        line2 += " " + pad_to(vals[k], w) + " |";
    }
    return line1 + "\n" + line2 + "\n";
}

} // namespace lieinv
