#include "core/multipoly.hpp"

#include <algorithm>
#include <cstdio>

namespace tripick {

MultiPoly::MultiPoly(int arity) : arity_(arity) {
    if (arity < 1 || arity > 3) throw_invalid("MultiPoly arity must be 1..3");
}

MultiPoly MultiPoly::constant(int arity, Complex c) {
    MultiPoly p(arity);
    p.add_term({0, 0, 0}, c);
    return p;
}

MultiPoly MultiPoly::variable(int arity, int index) {
    MultiPoly p(arity);
    if (index < 0 || index >= arity) throw_invalid("MultiPoly variable index out of range");
    Exponents e{0, 0, 0};
    e[static_cast<std::size_t>(index)] = 1;
    p.add_term(e, Complex(1.0, 0.0));
    return p;
}

void MultiPoly::add_term(Exponents e, Complex c) {
    for (int v = arity_; v < 3; ++v)
        if (e[static_cast<std::size_t>(v)] != 0) throw_invalid("exponent set beyond arity");
    for (int v = 0; v < 3; ++v)
        if (e[static_cast<std::size_t>(v)] < 0) throw_invalid("negative exponent");
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) it->second += c;
    if (std::abs(it->second) == 0.0) terms_.erase(it);
    prune();
}

void MultiPoly::prune() {
    const double scale = max_coeff_magnitude();
    if (scale == 0.0) {
        terms_.clear();
        return;
    }
    const double cut = kDedupThreshold * scale;
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (std::abs(it->second) < cut)
            it = terms_.erase(it);
        else
            ++it;
    }
}

double MultiPoly::max_coeff_magnitude() const {
    double m = 0.0;
    for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
    return m;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    // graded order: the last term has maximal total degree
    const auto& e = terms_.rbegin()->first;
    return e[0] + e[1] + e[2];
}

bool MultiPoly::is_zero(double tol) const {
    if (tol <= 0.0) throw_invalid("is_zero: tol must be positive");
    double scale = max_coeff_magnitude();
    if (scale == 0.0) scale = 1.0;
    for (const auto& [e, c] : terms_)
        if (!(std::abs(c) < tol * scale)) return false;
    return true;
}

MultiPoly MultiPoly::scaled(Complex c) const {
    MultiPoly r(arity_);
    if (std::abs(c) == 0.0) return r;
    for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
    r.prune();
    return r;
}

Complex MultiPoly::eval(std::span<const Complex> point) const {
    if (static_cast<int>(point.size()) != arity_) throw_invalid("eval: wrong point arity");
    Complex acc = 0.0;
    for (const auto& [e, c] : terms_) {
        Complex t = c;
        for (int v = 0; v < arity_; ++v) {
            const auto sv = static_cast<std::size_t>(v);
            for (int k = 0; k < e[sv]; ++k) t *= point[sv];
        }
        acc += t;
    }
    return acc;
}

void MultiPoly::check_arity(const MultiPoly& p, const MultiPoly& q) {
    if (p.arity_ != q.arity_) throw_invalid("polynomial arity mismatch");
}

MultiPoly operator+(const MultiPoly& p, const MultiPoly& q) {
    MultiPoly::check_arity(p, q);
    MultiPoly r(p.arity_);
    r.terms_ = p.terms_;
    for (const auto& [e, c] : q.terms_) {
        auto [it, inserted] = r.terms_.emplace(e, c);
        if (!inserted) it->second += c;
    }
    r.prune();
    return r;
}

MultiPoly operator-(const MultiPoly& p, const MultiPoly& q) {
    return p + q.scaled(Complex(-1.0, 0.0));
}

MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) {
    MultiPoly::check_arity(p, q);
    MultiPoly r(p.arity_);
    for (const auto& [e1, c1] : p.terms_) {
        for (const auto& [e2, c2] : q.terms_) {
            MultiPoly::Exponents e{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]};
            auto [it, inserted] = r.terms_.emplace(e, c1 * c2);
            if (!inserted) it->second += c1 * c2;
        }
    }
    r.prune();
    return r;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    char buf[128];
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        std::snprintf(buf, sizeof(buf), "(%.17g,%.17g)", c.real(), c.imag());
        out += buf;
        for (int v = 0; v < arity_; ++v) {
            std::snprintf(buf, sizeof(buf), " z%d^%d", v + 1, e[static_cast<std::size_t>(v)]);
            out += buf;
        }
    }
    return out;
}

} // namespace tripick
