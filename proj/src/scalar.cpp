#include "nichols/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "nichols/errors.hpp"

namespace nichols {

namespace {

bool is_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

int64_t mod_floor(int64_t a, int64_t n) {
    int64_t r = a % n;
    return r < 0 ? r + n : r;
}

}  // namespace

ScalarContext::ScalarContext(int torsion_order, std::vector<std::string> param_names)
    : torsion_order_(torsion_order), param_names_(std::move(param_names)), field_(torsion_order) {}

ContextPtr ScalarContext::make(int torsion_order, std::vector<std::string> param_names) {
    if (torsion_order < 0) throw std::invalid_argument("torsion order must be nonnegative");
    std::set<std::string> seen;
    for (const auto& name : param_names) {
        if (!is_identifier(name)) throw std::invalid_argument("invalid parameter name '" + name + "'");
        if (name == "z") throw std::invalid_argument("'z' is reserved for the root of unity");
        if (!seen.insert(name).second) throw std::invalid_argument("duplicate parameter name '" + name + "'");
    }
    return ContextPtr(new ScalarContext(torsion_order, std::move(param_names)));
}

std::optional<int> ScalarContext::param_index(const std::string& name) const {
    auto it = std::find(param_names_.begin(), param_names_.end(), name);
    if (it == param_names_.end()) return std::nullopt;
    return int(it - param_names_.begin());
}

bool same_context(const ContextPtr& a, const ContextPtr& b) { return a == b || (a && b && *a == *b); }

void require_same_context(const ContextPtr& a, const ContextPtr& b) {
    if (!same_context(a, b)) throw ContextMismatch();
}

// ---------------------------------------------------------------------------
// UnitMonomial

UnitMonomial::UnitMonomial(ContextPtr ctx)
    : ctx_(std::move(ctx)), torsion_(0), free_(size_t(ctx_->param_count()), 0) {}

UnitMonomial::UnitMonomial(ContextPtr ctx, int64_t torsion_exp, std::vector<int64_t> free_exps)
    : ctx_(std::move(ctx)), torsion_(0), free_(std::move(free_exps)) {
    if (int(free_.size()) != ctx_->param_count()) throw std::invalid_argument("free exponent vector has wrong length");
    const int n = ctx_->torsion_order();
    if (n > 0) {
        torsion_ = mod_floor(torsion_exp, n);
    } else if (torsion_exp != 0) {
        throw std::invalid_argument("root of unity used in a context without a torsion order");
    }
}

UnitMonomial UnitMonomial::root_of_unity(ContextPtr ctx, int64_t k) {
    const int p = ctx->param_count();
    return UnitMonomial(std::move(ctx), k, std::vector<int64_t>(size_t(p), 0));
}

UnitMonomial UnitMonomial::parameter(ContextPtr ctx, int index, int64_t exponent) {
    std::vector<int64_t> e(size_t(ctx->param_count()), 0);
    e.at(size_t(index)) = exponent;
    return UnitMonomial(std::move(ctx), 0, std::move(e));
}

bool UnitMonomial::is_one() const {
    return torsion_ == 0 && std::all_of(free_.begin(), free_.end(), [](int64_t e) { return e == 0; });
}

UnitMonomial UnitMonomial::inverse() const { return pow(-1); }

UnitMonomial UnitMonomial::pow(int64_t k) const {
    std::vector<int64_t> e(free_);
    for (auto& v : e) v *= k;
    const int n = ctx_->torsion_order();
    const int64_t t = n > 0 ? mod_floor(mod_floor(k, n) * torsion_, n) : 0;
    return UnitMonomial(ctx_, t, std::move(e));
}

UnitMonomial operator*(const UnitMonomial& a, const UnitMonomial& b) {
    require_same_context(a.ctx_, b.ctx_);
    std::vector<int64_t> e(a.free_);
    for (size_t k = 0; k < e.size(); ++k) e[k] += b.free_[k];
    return UnitMonomial(a.ctx_, a.torsion_ + b.torsion_, std::move(e));
}

bool operator==(const UnitMonomial& a, const UnitMonomial& b) {
    return same_context(a.ctx_, b.ctx_) && a.torsion_ == b.torsion_ && a.free_ == b.free_;
}

bool operator<(const UnitMonomial& a, const UnitMonomial& b) {
    if (a.torsion_ != b.torsion_) return a.torsion_ < b.torsion_;
    return a.free_ < b.free_;
}

std::string UnitMonomial::to_string() const {
    std::vector<std::string> factors;
    auto factor = [](const std::string& atom, int64_t e) { return e == 1 ? atom : atom + "^" + std::to_string(e); };
    if (torsion_ != 0) factors.push_back(factor("z", torsion_));
    for (size_t k = 0; k < free_.size(); ++k)
        if (free_[k] != 0) factors.push_back(factor(ctx_->param_names()[k], free_[k]));
    if (factors.empty()) return "1";
    std::string out = factors.front();
    for (size_t k = 1; k < factors.size(); ++k) out += "*" + factors[k];
    return out;
}

UnitMonomial unit_mul(const UnitMonomial& a, const UnitMonomial& b) { return a * b; }
UnitMonomial unit_inv(const UnitMonomial& a) { return a.inverse(); }
UnitMonomial unit_pow(const UnitMonomial& a, int64_t k) { return a.pow(k); }
bool is_one(const UnitMonomial& a) { return a.is_one(); }

std::optional<int64_t> multiplicative_order(const UnitMonomial& a) {
    for (int64_t e : a.free_exps())
        if (e != 0) return std::nullopt;
    const int n = a.context()->torsion_order();
    if (n == 0 || a.torsion_exp() == 0) return 1;
    return n / std::gcd(int64_t(n), a.torsion_exp());
}

bool is_qnumber_zero(int64_t m, const UnitMonomial& a) {
    if (m < 1) throw std::invalid_argument("q-number index must be positive");
    const auto d = multiplicative_order(a);
    return d && *d >= 2 && m % *d == 0;
}

std::optional<int64_t> PowerSolutions::least_nonnegative() const {
    switch (kind) {
        case Kind::None: return std::nullopt;
        case Kind::Unique: return value >= 0 ? std::optional<int64_t>(value) : std::nullopt;
        case Kind::Residue: return value;
    }
    return std::nullopt;
}

std::optional<int64_t> PowerSolutions::greatest_nonpositive() const {
    switch (kind) {
        case Kind::None: return std::nullopt;
        case Kind::Unique: return value <= 0 ? std::optional<int64_t>(value) : std::nullopt;
        case Kind::Residue: return value == 0 ? 0 : value - modulus;
    }
    return std::nullopt;
}

PowerSolutions solve_power(const UnitMonomial& base, const UnitMonomial& target) {
    require_same_context(base.context(), target.context());
    PowerSolutions out;
    const auto& f = base.free_exps();
    const auto& g = target.free_exps();
    auto pivot = std::find_if(f.begin(), f.end(), [](int64_t e) { return e != 0; });
    if (pivot != f.end()) {
        const size_t k = size_t(pivot - f.begin());
        if (g[k] % f[k] != 0) return out;
        const int64_t a = g[k] / f[k];
        if (!(base.pow(a) == target)) return out;
        out.kind = PowerSolutions::Kind::Unique;
        out.value = a;
        return out;
    }
    if (std::any_of(g.begin(), g.end(), [](int64_t e) { return e != 0; })) return out;
    const int64_t d = *multiplicative_order(base);
    for (int64_t a = 0; a < d; ++a) {
        if (base.pow(a) == target) {
            out.kind = PowerSolutions::Kind::Residue;
            out.value = a;
            out.modulus = d;
            return out;
        }
    }
    return out;
}

UnitMonomial parse_monomial(const ContextPtr& ctx, const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError(0, "empty monomial");
    UnitMonomial result(ctx);
    if (s == "1") return result;

    size_t pos = 0;
    while (true) {
        size_t end = pos;
        while (end < s.size() && (std::isalnum(static_cast<unsigned char>(s[end])) || s[end] == '_')) ++end;
        const std::string atom = s.substr(pos, end - pos);
        if (atom.empty()) throw ParseError(0, "expected a factor in monomial '" + text + "'");
        pos = end;
        int64_t exponent = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            size_t digits = pos;
            if (digits < s.size() && (s[digits] == '-' || s[digits] == '+')) ++digits;
            size_t stop = digits;
            while (stop < s.size() && std::isdigit(static_cast<unsigned char>(s[stop]))) ++stop;
            if (stop == digits) throw ParseError(0, "malformed exponent in monomial '" + text + "'");
            try {
                exponent = std::stoll(s.substr(pos, stop - pos));
            } catch (const std::exception&) {
                throw ParseError(0, "exponent out of range in monomial '" + text + "'");
            }
            pos = stop;
        }
        if (atom == "z") {
            if (ctx->torsion_order() == 0) throw ParseError(0, "'z' used without an 'order' declaration");
            result = result * UnitMonomial::root_of_unity(ctx, exponent);
        } else if (auto idx = ctx->param_index(atom)) {
            result = result * UnitMonomial::parameter(ctx, *idx, exponent);
        } else {
            throw ParseError(0, "unknown parameter '" + atom + "'");
        }
        if (pos == s.size()) break;
        if (s[pos] != '*') throw ParseError(0, "unexpected character '" + std::string(1, s[pos]) + "' in monomial");
        ++pos;
    }
    return result;
}

// ---------------------------------------------------------------------------
// LaurentScalar

LaurentScalar::LaurentScalar(ContextPtr ctx) : ctx_(std::move(ctx)) {}

LaurentScalar LaurentScalar::one(ContextPtr ctx) { return from_integer(std::move(ctx), 1); }

LaurentScalar LaurentScalar::from_integer(ContextPtr ctx, long value) {
    LaurentScalar out(ctx);
    if (value != 0) out.terms_.emplace(Exponents(size_t(ctx->param_count()), 0), CycloRational{{mpq_class(value)}});
    return out;
}

LaurentScalar LaurentScalar::embed(const UnitMonomial& a) {
    LaurentScalar out(a.context());
    out.terms_.emplace(a.free_exps(), CycloRational{a.context()->field().root_power(a.torsion_exp())});
    return out;
}

int64_t LaurentScalar::total_degree() const {
    int64_t best = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        int64_t d = 0;
        for (auto v : e) d += v < 0 ? -v : v;
        if (first || d > best) best = d;
        first = false;
    }
    return best;
}

void LaurentScalar::add_term(const Exponents& e, const RationalPoly& c) {
    auto [it, inserted] = terms_.try_emplace(e, CycloRational{c});
    if (inserted) return;
    auto& dst = it->second.coeffs;
    if (dst.size() < c.size()) dst.resize(c.size());
    for (size_t k = 0; k < c.size(); ++k) dst[k] += c[k];
    while (!dst.empty() && dst.back() == 0) dst.pop_back();
    if (dst.empty()) terms_.erase(it);
}

LaurentScalar LaurentScalar::operator-() const {
    LaurentScalar out = *this;
    for (auto& [e, c] : out.terms_)
        for (auto& v : c.coeffs) v = -v;
    return out;
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& b) {
    require_same_context(ctx_, b.ctx_);
    for (const auto& [e, c] : b.terms_) add_term(e, c.coeffs);
    return *this;
}

LaurentScalar& LaurentScalar::operator-=(const LaurentScalar& b) { return *this += -b; }

LaurentScalar operator+(const LaurentScalar& a, const LaurentScalar& b) {
    LaurentScalar out = a;
    out += b;
    return out;
}

LaurentScalar operator-(const LaurentScalar& a, const LaurentScalar& b) {
    LaurentScalar out = a;
    out -= b;
    return out;
}

LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
    require_same_context(a.ctx_, b.ctx_);
    LaurentScalar out(a.ctx_);
    const auto& field = a.ctx_->field();
    LaurentScalar::Exponents e;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            e = ea;
            for (size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
            out.add_term(e, field.multiply(ca.coeffs, cb.coeffs));
        }
    return out;
}

LaurentScalar LaurentScalar::times(const UnitMonomial& u) const {
    require_same_context(ctx_, u.context());
    LaurentScalar out(ctx_);
    const auto& field = ctx_->field();
    const RationalPoly twist = field.root_power(u.torsion_exp());
    const bool plain = u.torsion_exp() == 0;
    for (const auto& [e, c] : terms_) {
        Exponents shifted = e;
        for (size_t k = 0; k < shifted.size(); ++k) shifted[k] += u.free_exps()[k];
        out.terms_.emplace_hint(out.terms_.end(), std::move(shifted),
                                plain ? c : CycloRational{field.multiply(c.coeffs, twist)});
    }
    return out;
}

bool operator==(const LaurentScalar& a, const LaurentScalar& b) {
    return same_context(a.ctx_, b.ctx_) && a.terms_ == b.terms_;
}

std::string LaurentScalar::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first_term = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first_term) os << " + ";
        first_term = false;
        os << '(';
        const auto& c = it->second.coeffs;
        bool first = true;
        for (size_t k = 0; k < c.size(); ++k) {
            if (c[k] == 0) continue;
            if (!first) os << " + ";
            first = false;
            os << c[k];
            if (k == 1) os << "*z";
            if (k > 1) os << "*z^" << k;
        }
        os << ')';
        for (size_t k = 0; k < it->first.size(); ++k)
            if (it->first[k] != 0) os << '*' << ctx_->param_names()[k] << '^' << it->first[k];
    }
    return os.str();
}

LaurentScalar exact_divide(const LaurentScalar& a, const LaurentScalar& b) {
    require_same_context(a.context(), b.context());
    if (b.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
    const auto& field = a.context()->field();
    LaurentScalar quotient(a.context());
    if (a.is_zero()) return quotient;

    const auto& [lead_e, lead_c] = *b.terms().rbegin();
    const RationalPoly lead_inv = field.inverse(lead_c.coeffs);
    if (b.term_count() == 1) {
        for (const auto& [e, c] : a.terms()) {
            LaurentScalar::Exponents q = e;
            for (size_t k = 0; k < q.size(); ++k) q[k] -= lead_e[k];
            quotient.add_term(q, field.multiply(c.coeffs, lead_inv));
        }
        return quotient;
    }

    // Lex order on exponent vectors is a group order, so leading terms multiply.
    // Every quotient term is bounded below by lowest(a) / lowest(b).
    LaurentScalar::Exponents floor = a.terms().begin()->first;
    for (size_t k = 0; k < floor.size(); ++k) floor[k] -= b.terms().begin()->first[k];

    LaurentScalar rem = a;
    while (!rem.is_zero()) {
        const auto& [re, rc] = *rem.terms().rbegin();
        LaurentScalar::Exponents qe = re;
        for (size_t k = 0; k < qe.size(); ++k) qe[k] -= lead_e[k];
        if (qe < floor) throw std::domain_error("Laurent polynomial division is not exact");
        LaurentScalar term(a.context());
        term.add_term(qe, field.multiply(rc.coeffs, lead_inv));
        rem -= term * b;
        quotient += term;
    }
    return quotient;
}

}  // namespace nichols
