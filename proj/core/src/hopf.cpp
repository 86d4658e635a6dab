#include "fs19/hopf.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace fs19 {

LawPoly LawPoly::constant(const Rational& c) {
    LawPoly p;
    p.add_term(Mono{0, 0, 0, 0, 0, 0}, c);
    return p;
}

LawPoly LawPoly::var(int v) {
    LawPoly p;
    Mono m{0, 0, 0, 0, 0, 0};
    m[static_cast<size_t>(v)] = 1;
    p.add_term(m, Rational(1));
    return p;
}

void LawPoly::add_term(const Mono& m, const Rational& c) {
    if (c == 0) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

LawPoly LawPoly::operator+(const LawPoly& o) const {
    LawPoly out = *this;
    for (const auto& [m, c] : o.t_) out.add_term(m, c);
    return out;
}

LawPoly LawPoly::operator-(const LawPoly& o) const {
    LawPoly out = *this;
    for (const auto& [m, c] : o.t_) out.add_term(m, -c);
    return out;
}

LawPoly LawPoly::operator*(const LawPoly& o) const {
    LawPoly out;
    for (const auto& [m1, c1] : t_)
        for (const auto& [m2, c2] : o.t_) {
            Mono m;
            for (int i = 0; i < 6; ++i) {
                int e = m1[static_cast<size_t>(i)] + m2[static_cast<size_t>(i)];
                if (e > 255) throw std::overflow_error("LawPoly: exponent overflow");
                m[static_cast<size_t>(i)] = static_cast<uint8_t>(e);
            }
            out.add_term(m, c1 * c2);
        }
    return out;
}

LawPoly LawPoly::scaled(const Rational& s) const {
    LawPoly out;
    if (s == 0) return out;
    for (const auto& [m, c] : t_) out.add_term(m, c * s);
    return out;
}

LawPoly LawPoly::subst(const std::map<int, LawPoly>& repl) const {
    LawPoly out;
    for (const auto& [m, c] : t_) {
        LawPoly term = LawPoly::constant(c);
        for (int v = 0; v < 6; ++v) {
            uint8_t e = m[static_cast<size_t>(v)];
            if (!e) continue;
            auto it = repl.find(v);
            LawPoly base = (it != repl.end()) ? it->second : LawPoly::var(v);
            for (uint8_t k = 0; k < e; ++k) term = term * base;
        }
        out = out + term;
    }
    return out;
}

std::string LawPoly::to_string() const {
    if (t_.empty()) return "0";
    static const char* names[6] = {"x", "y", "w", "z", "u", "v"};
    std::string s;
    for (const auto& [m, c] : t_) {
        if (!s.empty()) s += " + ";
        s += fs19::to_string(c);
        for (int v = 0; v < 6; ++v) {
            uint8_t e = m[static_cast<size_t>(v)];
            if (!e) continue;
            s += "*";
            s += names[v];
            if (e > 1) s += "^" + std::to_string(static_cast<int>(e));
        }
    }
    return s;
}

namespace {

// Linear expression in n: [sign][coeff]['n'][(+|-)const] or a constant.
Rational eval_linear_atom(const std::string& s, long n) {
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && s[i] == ' ') ++i; };
    skip_ws();
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = (s[i] == '-');
        ++i;
    }
    skip_ws();
    std::string digits;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
    Rational value;
    bool have_n = (i < s.size() && s[i] == 'n');
    if (have_n) {
        ++i;
        Rational coeff = digits.empty() ? Rational(1) : parse_rational(digits);
        value = coeff * Rational(n);
    } else {
        if (digits.empty()) throw std::invalid_argument("bad linear expression: " + s);
        value = parse_rational(digits);
    }
    if (neg) value = -value;
    skip_ws();
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        bool neg2 = (s[i] == '-');
        ++i;
        skip_ws();
        std::string d2;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) d2 += s[i++];
        if (d2.empty()) throw std::invalid_argument("bad linear expression: " + s);
        Rational c2 = parse_rational(d2);
        value += neg2 ? -c2 : c2;
    }
    skip_ws();
    if (i != s.size()) throw std::invalid_argument("bad linear expression: " + s);
    return value;
}

}  // namespace

Rational eval_linear_expr(const std::string& expr, long n) {
    size_t slash = expr.find('/');
    if (slash == std::string::npos) return eval_linear_atom(expr, n);
    std::string num = expr.substr(0, slash);
    std::string den = expr.substr(slash + 1);
    // Denominator may be parenthesized.
    auto strip_parens = [](std::string s) {
        size_t a = s.find_first_not_of(' ');
        size_t b = s.find_last_not_of(' ');
        if (a == std::string::npos) return s;
        s = s.substr(a, b - a + 1);
        if (!s.empty() && s.front() == '(' && s.back() == ')')
            s = s.substr(1, s.size() - 2);
        return s;
    };
    Rational nv = eval_linear_atom(strip_parens(num), n);
    Rational dv = eval_linear_atom(strip_parens(den), n);
    if (dv == 0) throw std::invalid_argument("linear expression: zero denominator");
    Rational out = nv / dv;
    out.canonicalize();
    return out;
}

std::vector<HopfFamily> parse_hopf_catalog(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    std::vector<HopfFamily> out;
    for (const auto& f : j.at("families")) {
        HopfFamily fam;
        fam.name = f.at("name").get<std::string>();
        fam.description = f.value("description", "");
        fam.modulus = f.at("modulus").get<std::string>();
        fam.xx_x = f.at("x_square").at("x").get<std::string>();
        fam.xx_y = f.at("x_square").at("y").get<std::string>();
        fam.xx_1 = f.at("x_square").at("const").get<std::string>();
        fam.yy_y = f.at("y_square").at("y").get<std::string>();
        fam.law_coeff = f.at("law_coeff").get<std::string>();
        fam.sy_cross = f.at("sy_cross").get<std::string>();
        fam.expected_annihilation = f.at("expected_annihilation").get<unsigned>();
        out.push_back(std::move(fam));
    }
    if (out.empty()) throw std::invalid_argument("hopf catalog: no families");
    return out;
}

std::vector<HopfFamily> load_hopf_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open hopf catalog: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_hopf_catalog(ss.str());
}

ConcreteHopf instantiate_hopf(const HopfFamily& fam, long n) {
    if (n < 1) throw std::invalid_argument("instantiate_hopf: n >= 1 required");
    ConcreteHopf h;
    h.family = fam.name;
    h.n = n;
    Rational mod = eval_linear_expr(fam.modulus, n);
    if (!is_integer(mod) || mod < 1)
        throw std::invalid_argument("instantiate_hopf: modulus not a positive integer");
    h.modulus = mod.get_num();
    h.ca = eval_linear_expr(fam.xx_x, n);
    h.cb = eval_linear_expr(fam.xx_y, n);
    h.c0 = eval_linear_expr(fam.xx_1, n);
    h.db = eval_linear_expr(fam.yy_y, n);
    h.law_c = eval_linear_expr(fam.law_coeff, n);
    h.cross = eval_linear_expr(fam.sy_cross, n);

    LawPoly x = LawPoly::var(VX), y = LawPoly::var(VY);
    LawPoly w = LawPoly::var(VW), z = LawPoly::var(VZ);
    LawPoly one = LawPoly::constant(Rational(1));
    LawPoly two = LawPoly::constant(Rational(2));
    // Sx = x + w - 2xw + c * yz (1-2x)(1-2w)
    h.Sx = x + w - (two * x * w) +
           (y * z * (one - two * x) * (one - two * w)).scaled(h.law_c);
    // Sy = y + z + e*yz
    h.Sy = y + z + (y * z).scaled(h.cross);
    return h;
}

namespace {

// One rewriting pass for the generator pair (a, b) of one tensor factor:
// a^2 -> ca*a + cb*b + c0, b^2 -> db*b. Returns true if anything changed.
bool reduce_pair_once(const ConcreteHopf& h, LawPoly& p, int a, int b) {
    for (const auto& [m, c] : p.terms()) {
        if (m[static_cast<size_t>(a)] >= 2) {
            Mono m2 = m;
            m2[static_cast<size_t>(a)] = static_cast<uint8_t>(m2[static_cast<size_t>(a)] - 2);
            LawPoly rest;
            rest.add_term(m2, c);
            LawPoly rule = LawPoly::var(a).scaled(h.ca) + LawPoly::var(b).scaled(h.cb) +
                           LawPoly::constant(h.c0);
            LawPoly repl = rest * rule;
            LawPoly dropped;
            dropped.add_term(m, c);
            p = p - dropped + repl;
            return true;
        }
        if (m[static_cast<size_t>(b)] >= 2) {
            Mono m2 = m;
            m2[static_cast<size_t>(b)] = static_cast<uint8_t>(m2[static_cast<size_t>(b)] - 1);
            LawPoly repl;
            repl.add_term(m2, c * h.db);
            LawPoly dropped;
            dropped.add_term(m, c);
            p = p - dropped + repl;
            return true;
        }
    }
    return false;
}

}  // namespace

LawPoly hopf_normal_form(const ConcreteHopf& h, LawPoly p) {
    bool changed = true;
    while (changed) {
        changed = false;
        changed |= reduce_pair_once(h, p, VX, VY);
        changed |= reduce_pair_once(h, p, VW, VZ);
        changed |= reduce_pair_once(h, p, VU, VV);
    }
    return p;
}

bool check_counit(const ConcreteHopf& h) {
    std::map<int, LawPoly> second_zero{{VW, LawPoly()}, {VZ, LawPoly()}};
    std::map<int, LawPoly> first_zero{{VX, LawPoly()}, {VY, LawPoly()}};
    LawPoly x = LawPoly::var(VX), y = LawPoly::var(VY);
    LawPoly w = LawPoly::var(VW), z = LawPoly::var(VZ);
    bool right = hopf_normal_form(h, h.Sx.subst(second_zero) - x).is_zero() &&
                 hopf_normal_form(h, h.Sy.subst(second_zero) - y).is_zero();
    bool left = hopf_normal_form(h, h.Sx.subst(first_zero) - w).is_zero() &&
                hopf_normal_form(h, h.Sy.subst(first_zero) - z).is_zero();
    return left && right;
}

bool check_commutativity(const ConcreteHopf& h) {
    std::map<int, LawPoly> swap{{VX, LawPoly::var(VW)},
                                {VY, LawPoly::var(VZ)},
                                {VW, LawPoly::var(VX)},
                                {VZ, LawPoly::var(VY)}};
    return hopf_normal_form(h, h.Sx.subst(swap) - h.Sx).is_zero() &&
           hopf_normal_form(h, h.Sy.subst(swap) - h.Sy).is_zero();
}

bool check_relations(const ConcreteHopf& h) {
    // Delta must send each relation to zero in A (x) A.
    LawPoly rx = h.Sx * h.Sx - h.Sx.scaled(h.ca) - h.Sy.scaled(h.cb) -
                 LawPoly::constant(h.c0);
    LawPoly ry = h.Sy * h.Sy - h.Sy.scaled(h.db);
    return hopf_normal_form(h, rx).is_zero() && hopf_normal_form(h, ry).is_zero();
}

bool check_coassociativity(const ConcreteHopf& h) {
    if (!check_relations(h)) return false;
    // Shift the second factor to the third: (x,y,w,z) -> (w,z,u,v).
    std::map<int, LawPoly> shift{{VX, LawPoly::var(VW)},
                                 {VY, LawPoly::var(VZ)},
                                 {VW, LawPoly::var(VU)},
                                 {VZ, LawPoly::var(VV)}};
    LawPoly Sx23 = h.Sx.subst(shift);
    LawPoly Sy23 = h.Sy.subst(shift);
    // (Delta x id): first factor splits into factors 1,2; old second -> 3.
    std::map<int, LawPoly> dl{{VX, h.Sx},
                              {VY, h.Sy},
                              {VW, LawPoly::var(VU)},
                              {VZ, LawPoly::var(VV)}};
    // (id x Delta): second factor splits into factors 2,3.
    std::map<int, LawPoly> dr{{VW, Sx23}, {VZ, Sy23}};
    for (const LawPoly* s : {&h.Sx, &h.Sy}) {
        LawPoly left = hopf_normal_form(h, s->subst(dl));
        LawPoly right = hopf_normal_form(h, s->subst(dr));
        if (!(left == right)) return false;
    }
    return true;
}

unsigned annihilation_order(const ConcreteHopf& h, unsigned max_doublings) {
    LawPoly px = LawPoly::var(VX), py = LawPoly::var(VY);
    unsigned order = 1;
    for (unsigned k = 1; k <= max_doublings; ++k) {
        std::map<int, LawPoly> dbl{{VX, px}, {VY, py}, {VW, px}, {VZ, py}};
        LawPoly qx = hopf_normal_form(h, h.Sx.subst(dbl));
        LawPoly qy = hopf_normal_form(h, h.Sy.subst(dbl));
        px = std::move(qx);
        py = std::move(qy);
        order *= 2;
        if (px.is_zero() && py.is_zero()) return order;
    }
    return 0;
}

PointFieldResult point_field_class(const ConcreteHopf& h) {
    PointFieldResult out;
    out.disc = h.ca * h.ca + Rational(4) * (h.cb * h.db + h.c0);
    out.disc.canonicalize();
    out.squarefree = squarefree_class(out.disc);
    return out;
}

bool coefficients_in_localization(const ConcreteHopf& h) {
    std::vector<Rational> cs{h.ca, h.cb, h.c0, h.db, h.law_c, h.cross};
    for (const auto& [m, c] : h.Sx.terms()) cs.push_back(c);
    for (const auto& [m, c] : h.Sy.terms()) cs.push_back(c);
    for (const auto& c : cs)
        if (!divides_power_of(c.get_den(), h.modulus)) return false;
    return true;
}

SequenceMapCheck check_sequence_maps(const ConcreteHopf& h, bool wrong_target) {
    SequenceMapCheck out;
    // Sub piece: kill y (and z in the second factor). The quotient presents
    // the etale Z/2 with law x + w - 2xw; for the x-relation to survive,
    // x^2 - x must lie in the ideal (y).
    out.sub_ring_map = (h.ca == 1 && h.c0 == 0);
    {
        std::map<int, LawPoly> kill{{VY, LawPoly()}, {VZ, LawPoly()}};
        LawPoly x = LawPoly::var(VX), w = LawPoly::var(VW);
        LawPoly expect = x + w - (x * w).scaled(Rational(2));
        out.sub_law = hopf_normal_form(h, h.Sx.subst(kill) - expect).is_zero() &&
                      hopf_normal_form(h, h.Sy.subst(kill)).is_zero();
    }
    // Quotient piece: the one-generator algebra Z'[t]/(t^2 - db t) with law
    // t1 + t2 + e t1 t2 maps in by t -> y (or x for the negative control).
    int tv = wrong_target ? VX : VY;
    int tv2 = wrong_target ? VW : VZ;
    {
        LawPoly t = LawPoly::var(tv);
        out.quotient_ring_map =
            hopf_normal_form(h, t * t - t.scaled(h.db)).is_zero();
    }
    {
        // Consistent (relation, law) pairs: t^2 = -2t with e = +1, or
        // t^2 = t with e = -2.
        Rational expect_e;
        bool pair_known = true;
        if (h.db == -2) expect_e = Rational(1);
        else if (h.db == 1) expect_e = Rational(-2);
        else pair_known = false;
        LawPoly t1 = LawPoly::var(tv), t2 = LawPoly::var(tv2);
        LawPoly expect = t1 + t2 + (t1 * t2).scaled(expect_e);
        const LawPoly& image = wrong_target ? h.Sx : h.Sy;
        out.quotient_law =
            pair_known && hopf_normal_form(h, image - expect).is_zero();
    }
    return out;
}

int ext_mu_dimension(const Int& p, const Int& ell) {
    if (p <= 3 || !is_prime(p)) throw std::invalid_argument("ext_mu_dimension: p must be prime > 3");
    if (!is_prime(ell)) throw std::invalid_argument("ext_mu_dimension: ell must be prime");
    Int num = p * p - 1;
    if (num % 24 != 0) throw std::logic_error("ext_mu_dimension: p^2 - 1 not divisible by 24");
    Int v = num / 24;
    return (v % ell == 0) ? 1 : 0;
}

}  // namespace fs19
