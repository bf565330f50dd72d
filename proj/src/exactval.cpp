#include "kneser/exactval.hpp"

#include <mpfr.h>

#include <stdexcept>

namespace kneser {

RootVal::RootVal(Rat a_, Rat b_, Rat d_) : a(std::move(a_)), b(std::move(b_)), d(std::move(d_)) {
    if (d < 0) throw std::invalid_argument("RootVal: negative radicand");
    a.canonicalize();
    b.canonicalize();
    d.canonicalize();
    if (b == 0 || d == 0) {
        b = 0;
        d = 0;
    }
}

Rat RootVal::rational_value() const {
    if (!is_rational()) throw std::logic_error("RootVal: not rational");
    return a;
}

int RootVal::cmp(const Rat& x) const {
    Rat t = a - x;
    if (b == 0 || d == 0) return sgn(t);
    Rat bb = b * b * d;
    if (b > 0) {
        if (t >= 0) return 1;
        // t < 0: sign of b*sqrt(d) - |t|
        return sgn(bb - t * t);
    }
    // b < 0: sign of t - |b|*sqrt(d)
    if (t <= 0) return -1;
    return sgn(t * t - bb);
}

namespace {

constexpr mpfr_prec_t kPrec = 256;

void eval_mpfr(mpfr_t out, const Rat& a, const Rat& b, const Rat& d, mpfr_rnd_t rnd) {
    // directed rounding through each step; flip for the negative-coefficient term
    mpfr_t sq, term;
    mpfr_init2(sq, kPrec);
    mpfr_init2(term, kPrec);
    const bool bneg = b < 0;
    mpfr_rnd_t inner = rnd;
    if (bneg) inner = (rnd == MPFR_RNDD) ? MPFR_RNDU : MPFR_RNDD;
    mpfr_set_q(sq, d.get_mpq_t(), inner);
    mpfr_sqrt(sq, sq, inner);
    mpfr_set_q(term, b.get_mpq_t(), rnd);
    mpfr_mul(term, term, sq, rnd);
    mpfr_set_q(out, a.get_mpq_t(), rnd);
    mpfr_add(out, out, term, rnd);
    mpfr_clear(sq);
    mpfr_clear(term);
}

}  // namespace

double RootVal::approx(Round dir) const {
    mpfr_t v;
    mpfr_init2(v, kPrec);
    mpfr_rnd_t rnd = dir == Round::down ? MPFR_RNDD : MPFR_RNDU;
    eval_mpfr(v, a, b, d, rnd);
    double out = mpfr_get_d(v, rnd);
    mpfr_clear(v);
    return out;
}

std::string RootVal::decimal(Round dir) const {
    mpfr_t v;
    mpfr_init2(v, kPrec);
    mpfr_rnd_t rnd = dir == Round::down ? MPFR_RNDD : MPFR_RNDU;
    eval_mpfr(v, a, b, d, rnd);
    char buf[128];
    mpfr_snprintf(buf, sizeof(buf), "%.12R*g", rnd, v);
    mpfr_clear(v);
    return buf;
}

bool abs_leq_root(const Rat& q, const Rat& c, const Rat& t) {
    if (c < 0 || t < 0) throw std::invalid_argument("abs_leq_root: negative bound parts");
    return q * q <= c * c * t;
}

std::string rat_str(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    return c.get_str();
}

std::string decimal_str(const Rat& q, Round dir) {
    return RootVal(q).decimal(dir);
}

}  // namespace kneser
