#include "einq/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace einq {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

RationalPolynomial RationalPolynomial::constant(Rational c) {
    return RationalPolynomial({std::move(c)});
}

RationalPolynomial RationalPolynomial::linear_root(const Rational& root) {
    return RationalPolynomial({-root, Rational(1)});
}

RationalPolynomial RationalPolynomial::x() {
    return RationalPolynomial({Rational(0), Rational(1)});
}

void RationalPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::coefficient(int power) const {
    if (power < 0 || power >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<size_t>(power)];
}

const Rational& RationalPolynomial::leading_coefficient() const {
    if (coeffs_.empty()) throw std::logic_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Rational RationalPolynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RationalInterval RationalPolynomial::operator()(const RationalInterval& x) const {
    RationalInterval acc{Rational(0), Rational(0)};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * coeffs_[i];
    return RationalPolynomial(std::move(d));
}

RationalPolynomial RationalPolynomial::monic() const {
    if (is_zero()) return {};
    return (Rational(1) / leading_coefficient()) * (*this);
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return RationalPolynomial(std::move(out));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
    return RationalPolynomial(std::move(out));
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RationalPolynomial(std::move(out));
}

RationalPolynomial operator*(const Rational& s, const RationalPolynomial& p) {
    std::vector<Rational> out = p.coeffs_;
    for (auto& c : out) c *= s;
    return RationalPolynomial(std::move(out));
}

RationalPolynomial operator-(const RationalPolynomial& a) { return Rational(-1) * a; }

bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
}

void RationalPolynomial::divmod(const RationalPolynomial& num, const RationalPolynomial& den,
                                RationalPolynomial& quot, RationalPolynomial& rem) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> r = num.coeffs_;
    const int dn = den.degree();
    std::vector<Rational> q(num.degree() >= dn ? static_cast<size_t>(num.degree() - dn + 1) : 0,
                            Rational(0));
    while (true) {
        while (!r.empty() && r.back() == 0) r.pop_back();
        const int dr = static_cast<int>(r.size()) - 1;
        if (dr < dn || r.empty()) break;
        Rational factor = r.back() / den.leading_coefficient();
        q[static_cast<size_t>(dr - dn)] = factor;
        for (int i = 0; i <= dn; ++i)
            r[static_cast<size_t>(dr - dn + i)] -= factor * den.coeffs_[static_cast<size_t>(i)];
        r.pop_back();
    }
    quot = RationalPolynomial(std::move(q));
    rem = RationalPolynomial(std::move(r));
}

RationalPolynomial RationalPolynomial::gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
    RationalPolynomial u = a, v = b;
    while (!v.is_zero()) {
        RationalPolynomial q, r;
        divmod(u, v, q, r);
        u = v;
        v = r.is_zero() ? r : r.monic();
    }
    return u.is_zero() ? u : u.monic();
}

std::string RationalPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<size_t>(i)];
        if (c == 0) continue;
        if (!out.empty()) out += c > 0 ? " + " : " - ";
        else if (c < 0) out += "-";
        Rational a = abs(c);
        if (a != 1 || i == 0) out += a.get_str();
        if (i > 0) {
            if (a != 1) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::vector<SquareFreeFactor> square_free_decomposition(const RationalPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("square-free decomposition of zero polynomial");
    std::vector<SquareFreeFactor> out;
    if (p.degree() == 0) return out;

    // Yun's algorithm on the monic form.
    RationalPolynomial f = p.monic();
    RationalPolynomial fp = f.derivative();
    RationalPolynomial a = RationalPolynomial::gcd(f, fp);
    RationalPolynomial b, c, q, r;
    RationalPolynomial::divmod(f, a, b, r);
    RationalPolynomial::divmod(fp, a, c, r);
    int i = 1;
    while (b.degree() > 0) {
        RationalPolynomial d = c - b.derivative();
        RationalPolynomial g = RationalPolynomial::gcd(b, d);
        if (g.degree() > 0) out.push_back({g, i});
        RationalPolynomial::divmod(b, g, q, r);
        b = q;
        RationalPolynomial::divmod(d, g, c, r);
        ++i;
    }
    return out;
}

std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& p) {
    std::vector<RationalPolynomial> seq;
    if (p.is_zero()) return seq;
    seq.push_back(p);
    if (p.degree() == 0) return seq;
    seq.push_back(p.derivative());
    while (seq.back().degree() > 0) {
        RationalPolynomial q, r;
        RationalPolynomial::divmod(seq[seq.size() - 2], seq.back(), q, r);
        if (r.is_zero()) break;
        seq.push_back(-r);
    }
    return seq;
}

namespace {

int sign_changes(const std::vector<int>& signs) {
    int changes = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

int variations_at(const std::vector<RationalPolynomial>& seq, const Rational& x) {
    std::vector<int> signs;
    signs.reserve(seq.size());
    for (const auto& p : seq) signs.push_back(sign(p(x)));
    return sign_changes(signs);
}

// Divisors of |n| by trial division, capped so pathological coefficients stay
// cheap; returns false when the cap was hit and the list may be incomplete.
bool small_divisors(const mpz_class& n, std::vector<mpz_class>& out, unsigned long cap = 1000000) {
    mpz_class a = ::abs(n);
    if (a == 0) return false;
    out.push_back(1);
    mpz_class d = 2;
    mpz_class rest = a;
    bool complete = true;
    unsigned long steps = 0;
    std::vector<std::pair<mpz_class, int>> factors;
    while (d * d <= rest) {
        if (++steps > cap) {
            complete = false;
            break;
        }
        if (rest % d == 0) {
            int e = 0;
            while (rest % d == 0) {
                rest /= d;
                ++e;
            }
            factors.emplace_back(d, e);
        }
        d += (d == 2) ? 1 : 2;
    }
    if (rest > 1) factors.emplace_back(rest, 1);  // prime (or unfactored tail when capped)
    for (const auto& [prime, mult] : factors) {
        const size_t base = out.size();
        mpz_class pw = 1;
        for (int e = 1; e <= mult; ++e) {
            pw *= prime;
            for (size_t i = 0; i < base; ++i) out.push_back(out[i] * pw);
        }
    }
    return complete;
}

// Scale to a primitive integer polynomial.
std::vector<mpz_class> integer_coefficients(const RationalPolynomial& p) {
    mpz_class lcm_den = 1;
    for (const auto& c : p.coefficients()) {
        mpz_class den(mpq_denref(c.get_mpq_t()));
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
    }
    std::vector<mpz_class> out;
    out.reserve(p.coefficients().size());
    mpz_class content = 0;
    for (const auto& c : p.coefficients()) {
        Rational scaled = c * Rational(lcm_den);
        out.emplace_back(mpq_numref(scaled.get_mpq_t()));
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.back().get_mpz_t());
    }
    if (content > 1)
        for (auto& c : out) c /= content;
    return out;
}

// Rational roots of a square-free polynomial via the rational-root test.
// Best-effort when coefficients exceed the factoring cap; the isolation loop
// below catches any stragglers it actually trips over.
std::vector<Rational> rational_roots(const RationalPolynomial& p) {
    std::vector<Rational> roots;
    if (p.degree() < 1) return roots;
    RationalPolynomial q = p;
    size_t low = 0;
    while (low < q.coefficients().size() && q.coefficients()[low] == 0) ++low;
    if (low > 0) {
        roots.push_back(Rational(0));
        std::vector<Rational> rest(q.coefficients().begin() + static_cast<long>(low),
                                   q.coefficients().end());
        q = RationalPolynomial(std::move(rest));
    }
    if (q.degree() < 1) return roots;
    std::vector<mpz_class> ic = integer_coefficients(q);
    std::vector<mpz_class> nums, dens;
    small_divisors(ic.front(), nums);
    small_divisors(ic.back(), dens);
    for (const auto& n : nums) {
        for (const auto& d : dens) {
            Rational cand(n, d);
            cand.canonicalize();
            if (q(cand) == 0) roots.push_back(cand);
            cand = -cand;
            if (q(cand) == 0) roots.push_back(cand);
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

struct TaggedInterval {
    IsolatingInterval iso;
    RationalPolynomial factor;  // square-free owner, for later shrinking
};

// A point strictly between `from` and the unique root of f in the interval
// toward `toward`, on the same side as `from`, avoiding roots of p.
Rational point_beside_root(const RationalPolynomial& f, const RationalPolynomial& p,
                           const Rational& from, const Rational& toward) {
    const int s = sign(f(from));
    Rational t = (from + toward) / 2;
    while (true) {
        Rational ft = f(t);
        if (ft != 0 && sign(ft) == s && p(t) != 0) return t;
        t = (from + t) / 2;
    }
}

void shrink_once(TaggedInterval& t) {
    IsolatingInterval& iso = t.iso;
    if (iso.exact_root) {
        Rational lo = (*iso.exact_root + iso.lo) / 2;
        Rational hi = (*iso.exact_root + iso.hi) / 2;
        iso.lo = lo;
        iso.hi = hi;
        return;
    }
    Rational mid = (iso.lo + iso.hi) / 2;
    Rational fmid = t.factor(mid);
    if (fmid == 0) {
        iso.exact_root = mid;
        return;
    }
    if (sign(fmid) == sign(t.factor(iso.lo)))
        iso.lo = mid;
    else
        iso.hi = mid;
}

}  // namespace

int sturm_root_count(const std::vector<RationalPolynomial>& seq, const Rational& a,
                     const Rational& b) {
    return variations_at(seq, a) - variations_at(seq, b);
}

Rational cauchy_root_bound(const RationalPolynomial& p) {
    if (p.degree() < 1) return Rational(1);
    Rational m(0);
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, abs(p.coefficient(i)));
    return Rational(1) + m / abs(p.leading_coefficient());
}

std::vector<IsolatingInterval> sturm_isolate(const RationalPolynomial& p, const RootDomain& domain) {
    if (p.is_zero()) throw std::domain_error("cannot isolate roots of the zero polynomial");
    if (p.degree() == 0) return {};

    std::vector<TaggedInterval> tagged;

    for (const auto& factor : square_free_decomposition(p)) {
        const Rational bound = cauchy_root_bound(factor.poly);
        const Rational neg_bound = -bound;
        Rational lo = domain.lo ? std::max(*domain.lo, neg_bound) : neg_bound;
        Rational hi = domain.hi ? std::min(*domain.hi, bound) : bound;
        if (lo >= hi) continue;

        // Pull out every rational root; what stays behind has non-root rational
        // endpoints everywhere we probe, which keeps the Sturm counts clean.
        std::vector<Rational> exact = rational_roots(factor.poly);
        RationalPolynomial rest = factor.poly;
        for (const auto& r : exact) {
            RationalPolynomial q, rem;
            RationalPolynomial::divmod(rest, RationalPolynomial::linear_root(r), q, rem);
            rest = q;
        }
        auto strip_if_root = [&](const Rational& point) {
            while (!rest.is_zero() && rest.degree() > 0 && rest(point) == 0) {
                exact.push_back(point);
                RationalPolynomial q, rem;
                RationalPolynomial::divmod(rest, RationalPolynomial::linear_root(point), q, rem);
                rest = q;
            }
        };
        strip_if_root(lo);
        strip_if_root(hi);

        for (const auto& r : exact) {
            if (r <= lo || r >= hi) continue;
            TaggedInterval t;
            t.iso.exact_root = r;
            Rational below = r - Rational(1, 2);
            Rational above = r + Rational(1, 2);
            t.iso.lo = std::max(below, lo);
            t.iso.hi = std::min(above, hi);
            t.iso.multiplicity = factor.multiplicity;
            t.factor = factor.poly;
            tagged.push_back(std::move(t));
        }

        if (rest.degree() >= 1) {
            auto seq = sturm_sequence(rest);
            struct Segment {
                Rational a, b;
                int count;
            };
            std::vector<Segment> stack{{lo, hi, sturm_root_count(seq, lo, hi)}};
            while (!stack.empty()) {
                Segment seg = stack.back();
                stack.pop_back();
                if (seg.count == 0) continue;
                if (seg.count == 1) {
                    TaggedInterval t;
                    t.iso.lo = seg.a;
                    t.iso.hi = seg.b;
                    t.iso.multiplicity = factor.multiplicity;
                    t.factor = rest;
                    tagged.push_back(std::move(t));
                    continue;
                }
                Rational mid = (seg.a + seg.b) / 2;
                if (rest(mid) == 0) {
                    // Stumbled on a rational root the divisor cap missed.
                    strip_if_root(mid);
                    if (mid > lo && mid < hi) {
                        TaggedInterval t;
                        t.iso.exact_root = mid;
                        t.iso.lo = seg.a;
                        t.iso.hi = seg.b;
                        t.iso.multiplicity = factor.multiplicity;
                        t.factor = factor.poly;
                        tagged.push_back(std::move(t));
                    }
                    seq = sturm_sequence(rest);
                    if (rest.degree() >= 1) {
                        int left = sturm_root_count(seq, seg.a, mid);
                        int right = sturm_root_count(seq, mid, seg.b);
                        stack.push_back({seg.a, mid, left});
                        stack.push_back({mid, seg.b, right});
                    }
                    continue;
                }
                int left = sturm_root_count(seq, seg.a, mid);
                stack.push_back({seg.a, mid, left});
                stack.push_back({mid, seg.b, seg.count - left});
            }
        }
    }

    // Distinct roots, so enough shrinking separates every pair of enclosures.
    auto by_position = [](const TaggedInterval& a, const TaggedInterval& b) {
        return a.iso.lo < b.iso.lo || (a.iso.lo == b.iso.lo && a.iso.hi < b.iso.hi);
    };
    bool dirty = true;
    while (dirty) {
        dirty = false;
        std::sort(tagged.begin(), tagged.end(), by_position);
        for (size_t i = 0; i + 1 < tagged.size(); ++i) {
            if (tagged[i].iso.hi > tagged[i + 1].iso.lo) {
                shrink_once(tagged[i]);
                shrink_once(tagged[i + 1]);
                dirty = true;
            }
        }
    }
    // Endpoints must not be roots of p itself.
    std::vector<IsolatingInterval> out;
    out.reserve(tagged.size());
    for (auto& t : tagged) {
        IsolatingInterval& iso = t.iso;
        if (iso.exact_root) {
            while (p(iso.lo) == 0) iso.lo = (iso.lo + *iso.exact_root) / 2;
            while (p(iso.hi) == 0) iso.hi = (iso.hi + *iso.exact_root) / 2;
        } else {
            if (p(iso.lo) == 0) iso.lo = point_beside_root(t.factor, p, iso.lo, iso.hi);
            if (p(iso.hi) == 0) iso.hi = point_beside_root(t.factor, p, iso.hi, iso.lo);
        }
        out.push_back(iso);
    }
    return out;
}

IsolatingInterval refine(const RationalPolynomial& p, const IsolatingInterval& interval,
                         const Rational& width) {
    IsolatingInterval iso = interval;
    if (iso.exact_root) {
        while (iso.hi - iso.lo > width) {
            iso.lo = (*iso.exact_root + iso.lo) / 2;
            iso.hi = (*iso.exact_root + iso.hi) / 2;
        }
        return iso;
    }

    // Locate the square-free factor owning this root, then sign bisection.
    RationalPolynomial f;
    for (const auto& factor : square_free_decomposition(p)) {
        auto seq = sturm_sequence(factor.poly);
        if (factor.poly(iso.lo) != 0 && factor.poly(iso.hi) != 0 &&
            sturm_root_count(seq, iso.lo, iso.hi) == 1) {
            f = factor.poly;
            break;
        }
    }
    if (f.is_zero()) throw std::invalid_argument("interval does not isolate a root");

    Rational flo = f(iso.lo);
    while (iso.hi - iso.lo > width) {
        Rational mid = (iso.lo + iso.hi) / 2;
        Rational fmid = f(mid);
        if (fmid == 0) {
            iso.exact_root = mid;
            return iso;
        }
        if (sign(fmid) == sign(flo)) {
            iso.lo = mid;
            flo = fmid;
        } else {
            iso.hi = mid;
        }
    }
    return iso;
}

}  // namespace einq
