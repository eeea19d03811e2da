#include "sgf/transforms.hpp"

#include "sgf/schur.hpp"

#include <json.hpp>

#include <cmath>

namespace sgf {

Rat CompactMeasure::mass() const {
    Rat t = 0;
    for (const auto& a : atoms) t += a.w;
    for (const auto& p : pieces) t += p.h * (p.b - p.a);
    return t;
}

Rat CompactMeasure::moment(unsigned k) const {
    Rat t = 0;
    for (const auto& a : atoms) t += a.w * rat_pow(a.x, static_cast<long>(k));
    for (const auto& p : pieces) {
        // h (b^{k+1} - a^{k+1})/(k+1)
        t += p.h * (rat_pow(p.b, static_cast<long>(k) + 1) - rat_pow(p.a, static_cast<long>(k) + 1)) /
             Rat(static_cast<long>(k) + 1);
    }
    return t;
}

bool CompactMeasure::density_at_most_one() const {
    if (!atoms.empty()) {
        for (const auto& a : atoms)
            if (a.w != 0) return false;
    }
    // conservative: requires non-overlapping pieces, which construction sites keep
    for (const auto& p : pieces)
        if (p.h > 1) return false;
    return true;
}

CompactMeasure CompactMeasure::scaled(const Rat& c) const {
    CompactMeasure r;
    for (const auto& a : atoms) r.atoms.push_back({a.x * c, a.w});
    for (const auto& p : pieces) {
        Rat a2 = p.a * c, b2 = p.b * c;
        if (a2 > b2) std::swap(a2, b2);
        r.pieces.push_back({a2, b2, p.h / rat_abs(c)});
    }
    return r;
}

std::string compact_measure_to_json(const CompactMeasure& m) {
    nlohmann::json j;
    j["type"] = m.pieces.empty() ? "atomic" : (m.atoms.empty() ? "density" : "mixed");
    nlohmann::json atoms = nlohmann::json::array();
    for (const auto& a : m.atoms)
        atoms.push_back({rat_string(a.x), rat_string(a.w)});
    nlohmann::json pieces = nlohmann::json::array();
    for (const auto& p : m.pieces)
        pieces.push_back({rat_string(p.a), rat_string(p.b), rat_string(p.h)});
    j["atoms"] = atoms;
    j["pieces"] = pieces;
    j["mass"] = rat_string(m.mass());
    return j.dump();
}

namespace {
Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}
}  // namespace

CompactMeasure compact_measure_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    CompactMeasure m;
    for (const auto& a : j.at("atoms"))
        m.atoms.push_back({parse_rat(a.at(0).get<std::string>()),
                           parse_rat(a.at(1).get<std::string>())});
    for (const auto& p : j.at("pieces"))
        m.pieces.push_back({parse_rat(p.at(0).get<std::string>()),
                            parse_rat(p.at(1).get<std::string>()),
                            parse_rat(p.at(2).get<std::string>())});
    return m;
}

CompactMeasure empirical_measure(const Signature& lambda) {
    const int n = lambda.length();
    if (n < 1) throw validation_error("empirical_measure: empty signature");
    CompactMeasure m;
    for (int i = 0; i < n; ++i)
        m.atoms.push_back({Rat(lambda[i] + n - 1 - i, n), Rat(1, n)});
    return m;
}

RSeries cauchy_transform(const CompactMeasure& m, std::size_t M) {
    RSeries s(M + 1);
    for (std::size_t k = 0; k <= M; ++k) s.c[k] = m.moment(static_cast<unsigned>(k));
    return s;
}

RSeries invert_series(const RSeries& moments) {
    if (moments.size() == 0 || moments.c[0] != 1)
        throw validation_error("invert_series: leading behavior must be 1/z (m_0 = 1)");
    const std::size_t n = moments.size();
    // Solve sum_k m_k w^k (1+h(w))^{-k-1} = 1 for h(w) = a_0 w + a_1 w^2 + ...;
    // then C^{(-1)}(w) = (1 + h(w))/w.
    RSeries h(n);  // h.c[j] is the coefficient of w^j; h.c[0] stays 0
    for (std::size_t ord = 1; ord < n; ++ord) {
        // residual at order ord with current h (a_{ord-1} unknown, set 0)
        RSeries acc(ord + 1);
        RSeries one = RSeries::constant(Rat(1), ord + 1);
        RSeries base = one + truncate(h, ord + 1);
        RSeries invp = reciprocal(base, ord + 1);  // (1+h)^{-1}
        RSeries cur = invp;
        for (std::size_t k = 0; k < n && k <= ord; ++k) {
            // cur = (1+h)^{-k-1}; term m_k w^k cur
            for (std::size_t j = 0; j + k <= ord; ++j) acc.c[j + k] += moments.c[k] * cur.c[j];
            cur = mul(cur, invp, ord + 1);
        }
        // acc must equal 1; order-ord coefficient is (known) - a_{ord-1}
        // since d/da of (1+h)^{-1} at order ord is -1.
        h.c[ord] = acc.c[ord];
    }
    RSeries a(n);
    for (std::size_t j = 0; j + 1 < n; ++j) a.c[j] = h.c[j + 1];
    return a;
}

RSeries r_transform(const CompactMeasure& m, std::size_t M) {
    if (m.mass() != 1) throw validation_error("r_transform: probability measure required");
    return truncate(invert_series(cauchy_transform(m, M + 1)), M + 1);
}

RSeries h_prime(const CompactMeasure& m, std::size_t M) {
    if (m.mass() != 1) throw validation_error("h_prime: probability measure required");
    const std::size_t n = M + 3;
    RSeries rho = truncate(invert_series(cauchy_transform(m, n)), n);  // C^{(-1)} - 1/u
    RSeries L = log_one_plus_z<Rat>(n + 1);  // log(1+t)

    // 1/L = (1/t)(1 + e(t)) with L/t = 1 + u(t), u.c[j] = L.c[j+1] for j >= 1
    RSeries u(n);
    for (std::size_t j = 1; j < n; ++j) u.c[j] = L.at(j + 1);
    RSeries inv_u = reciprocal(RSeries::constant(Rat(1), n) + u, n);  // t/L
    // e(t) := t/L - 1
    RSeries e = inv_u;
    e.c[0] -= 1;

    // H'(1+t) = [ (1/L + rho(L)) / (1+t) ] - 1/t
    //         = (e(t) - t)/(t (1+t)) + rho(L(t))/(1+t)
    RSeries em = e;  // e - t
    if (em.size() > 1) em.c[1] -= 1;
    // divide by t
    RSeries em_div(n);
    if (em.c[0] != 0) throw validation_error("h_prime: singular part failed to cancel");
    for (std::size_t j = 1; j < em.size(); ++j) em_div.c[j - 1] = em.c[j];
    RSeries one_plus_t(n);
    one_plus_t.c[0] = 1;
    if (n > 1) one_plus_t.c[1] = 1;
    RSeries part1 = divide(em_div, one_plus_t, n);
    RSeries part2 = divide(compose(rho, truncate(L, n), n), one_plus_t, n);
    return truncate(part1 + part2, M + 1);
}

RSeries voiculescu_F(const LimitSextuple& J, std::size_t M) {
    const std::size_t n = M + 3;
    RSeries out(n);

    // (1/t^2) C_A(1/t) - A(R)/t = sum_{k>=1} m_k[A] t^{k-1}
    for (std::size_t k = 1; k < n; ++k) out.c[k - 1] += J.Aplus.moment(static_cast<unsigned>(k));
    // (1/t^2) C_B(-1/t) + B(R)/t = sum_{k>=1} (-1)^{k+1} m_k[B] t^{k-1}
    for (std::size_t k = 1; k < n; ++k) {
        Rat v = J.Bplus.moment(static_cast<unsigned>(k));
        out.c[k - 1] += (k % 2 == 1) ? v : -v;
    }

    // w := t/(1+t) as a series
    RSeries one_plus_t(n);
    one_plus_t.c[0] = 1;
    if (n > 1) one_plus_t.c[1] = 1;
    RSeries t_series(n);
    if (n > 1) t_series.c[1] = 1;
    RSeries w = divide(t_series, one_plus_t, n);

    // A-: -(1/t^2) C(-(1+t)/t) - mass/(t(1+t)) = sum_{k>=1} (-1)^k m_k w^{k+1}/t^2;
    // B-: -(1/t^2) C((1+t)/t)  + mass/(t(1+t)) = sum_{k>=1}   (-m_k) w^{k+1}/t^2.
    // The k=0 terms cancel the subtracted mass terms exactly.
    auto add_minus_terms = [&](const CompactMeasure& meas, bool is_beta) {
        RSeries acc(n + 2);
        RSeries wk = w;  // w^k, starting at k=1
        for (unsigned k = 1; k + 1 < n + 2; ++k) {
            wk = mul(wk, w, n + 2);  // now w^{k+1}
            Rat mk = meas.moment(k);
            if (mk == 0) continue;
            Rat sign = is_beta ? Rat(-1) : ((k % 2 == 0) ? Rat(1) : Rat(-1));
            for (std::size_t j = 0; j < acc.size(); ++j) acc.c[j] += sign * mk * wk.at(j);
        }
        if (acc.at(0) != 0 || acc.at(1) != 0)
            throw validation_error("voiculescu_F: singular part failed to cancel");
        for (std::size_t j = 2; j < acc.size() && j - 2 < out.size(); ++j)
            out.c[j - 2] += acc.c[j];
    };
    add_minus_terms(J.Aminus, false);
    add_minus_terms(J.Bminus, true);

    // + Gamma+ - Gamma-/(1+t)^2
    out.c[0] += J.Gplus;
    RSeries inv2 = reciprocal(mul(one_plus_t, one_plus_t, n), n);
    for (std::size_t j = 0; j < out.size() && j < inv2.size(); ++j)
        out.c[j] -= J.Gminus * inv2.c[j];

    return truncate(out, M + 1);
}

CharacterAsymptotics check_character_asymptotics(const Signature& lambda,
                                                 const CompactMeasure& m, const Rat& x,
                                                 std::size_t series_order) {
    const int n = lambda.length();
    RationalPoint pt(n, Rat(1));
    pt[0] = x;
    Rat ratio = schur_evaluate(lambda, pt) / schur_dimension(lambda);
    double finite = std::log(to_double(ratio)) / n;

    // H(x) = int_1^x H'(u) du, series in (u-1) integrated term by term
    RSeries hp = h_prime(m, series_order);
    double t = to_double(x) - 1.0;
    double limit = 0.0, pw = t;
    for (std::size_t j = 0; j < hp.size(); ++j) {
        limit += to_double(hp.c[j]) * pw / static_cast<double>(j + 1);
        pw *= t;
    }
    return {finite, limit, std::abs(finite - limit)};
}

}  // namespace sgf
