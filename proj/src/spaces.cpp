#include "idealcalc/spaces.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <system_error>

#include "idealcalc/tolerances.hpp"

namespace idealcalc {

namespace {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& text, const char* what) {
    double v = 0.0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size())
        throw std::invalid_argument(std::string("space spec: malformed ") + what + " '" + text + "'");
    return v;
}

int parse_int(const std::string& text, const char* what) {
    int v = 0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size())
        throw std::invalid_argument(std::string("space spec: malformed ") + what + " '" + text + "'");
    return v;
}

std::vector<double> prefix_sums(const std::vector<double>& w) {
    std::vector<double> sums(w.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        acc += w[i];
        sums[i] = acc;
    }
    return sums;
}

void validate_weights(const std::vector<double>& w, bool allow_unnormalized) {
    if (w.empty()) throw std::invalid_argument("weight table must be nonempty");
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!(w[i] > 0.0)) throw std::invalid_argument("weights must be positive");
        if (i > 0 && w[i] > w[i - 1] + kIneqSlack)
            throw std::invalid_argument("weights must be nonincreasing");
    }
    if (!allow_unnormalized && std::abs(w[0] - 1.0) > kIneqSlack)
        throw std::invalid_argument("weight table must start at w_1 = 1 (unnormalized tables need the explicit flag)");
}

std::string weight_tag(WeightFamily family, double alpha) {
    switch (family) {
        case WeightFamily::harmonic: return "harmonic";
        case WeightFamily::power: return "power:" + format_double(alpha);
        case WeightFamily::ones: return "ones";
        case WeightFamily::custom: return "custom";
    }
    return "custom";
}

}  // namespace

std::vector<double> make_weights(WeightFamily family, int n, double alpha) {
    if (n < 1) throw std::invalid_argument("weight table length must be >= 1");
    std::vector<double> w(static_cast<std::size_t>(n));
    switch (family) {
        case WeightFamily::harmonic:
            for (int i = 0; i < n; ++i) w[i] = 1.0 / (i + 1);
            break;
        case WeightFamily::power:
            if (!(alpha > 0.0 && alpha < 1.0))
                throw std::invalid_argument("power weights need 0 < alpha < 1");
            for (int i = 0; i < n; ++i) w[i] = std::pow(i + 1, -alpha);
            break;
        case WeightFamily::ones:
            for (int i = 0; i < n; ++i) w[i] = 1.0;
            break;
        case WeightFamily::custom:
            throw std::invalid_argument("custom weights have no generator");
    }
    return w;
}

SpaceSpec SpaceSpec::schatten(double p) {
    if (!(p > 0.0)) throw std::invalid_argument("schatten exponent must be positive");
    SpaceSpec s;
    s.kind_ = SpaceKind::schatten;
    s.p_ = p;
    return s;
}

SpaceSpec SpaceSpec::lorentz(WeightFamily family, int n, double p, double alpha) {
    SpaceSpec s = lorentz_custom(make_weights(family, n, alpha), p, false);
    s.family_ = family;
    s.alpha_ = alpha;
    return s;
}

SpaceSpec SpaceSpec::marcinkiewicz(WeightFamily family, int n, double p, double alpha) {
    SpaceSpec s = marcinkiewicz_custom(make_weights(family, n, alpha), p, false);
    s.family_ = family;
    s.alpha_ = alpha;
    return s;
}

SpaceSpec SpaceSpec::lorentz_custom(const std::vector<double>& w, double p,
                                    bool allow_unnormalized) {
    if (!(p >= 1.0)) throw std::invalid_argument("lorentz exponent must satisfy p >= 1");
    validate_weights(w, allow_unnormalized);
    SpaceSpec s;
    s.kind_ = SpaceKind::lorentz;
    s.p_ = p;
    s.family_ = WeightFamily::custom;
    s.weights_ = w;
    s.weight_sums_ = prefix_sums(w);
    s.normalized_ = std::abs(w[0] - 1.0) <= kIneqSlack;
    return s;
}

SpaceSpec SpaceSpec::marcinkiewicz_custom(const std::vector<double>& w, double p,
                                          bool allow_unnormalized) {
    if (!(p >= 1.0)) throw std::invalid_argument("marcinkiewicz exponent must satisfy p >= 1");
    validate_weights(w, allow_unnormalized);
    SpaceSpec s;
    s.kind_ = SpaceKind::marcinkiewicz;
    s.p_ = p;
    s.family_ = WeightFamily::custom;
    s.weights_ = w;
    s.weight_sums_ = prefix_sums(w);
    s.normalized_ = std::abs(w[0] - 1.0) <= kIneqSlack;
    return s;
}

SpaceSpec SpaceSpec::uniform() {
    SpaceSpec s;
    s.kind_ = SpaceKind::uniform;
    return s;
}

SpaceSpec SpaceSpec::parse(const std::string& text) {
    std::vector<std::string> tokens;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t colon = text.find(':', start);
        if (colon == std::string::npos) colon = text.size();
        tokens.push_back(text.substr(start, colon - start));
        start = colon + 1;
    }
    // A token without '=' continues the previous value ("w=power:0.5").
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i == 0 || tokens[i].find('=') != std::string::npos)
            parts.push_back(tokens[i]);
        else if (!parts.empty())
            parts.back() += ":" + tokens[i];
        else
            throw std::invalid_argument("space spec: malformed text '" + text + "'");
    }
    const std::string& kind = parts[0];
    std::string p_text, w_text, n_text;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        const std::size_t eq = parts[i].find('=');
        const std::string key = parts[i].substr(0, eq);
        const std::string value = parts[i].substr(eq + 1);
        if (key == "p") p_text = value;
        else if (key == "w") w_text = value;
        else if (key == "n") n_text = value;
        else throw std::invalid_argument("space spec: unknown key '" + key + "'");
    }

    if (kind == "uniform") {
        if (parts.size() > 1) throw std::invalid_argument("space spec: uniform takes no parameters");
        return uniform();
    }
    if (kind == "schatten") {
        if (p_text.empty()) throw std::invalid_argument("space spec: schatten needs p");
        return schatten(parse_double(p_text, "exponent"));
    }
    if (kind == "lorentz" || kind == "marcinkiewicz") {
        if (p_text.empty() || w_text.empty() || n_text.empty())
            throw std::invalid_argument("space spec: " + kind + " needs p, w and n");
        const double p = parse_double(p_text, "exponent");
        const int n = parse_int(n_text, "length");
        WeightFamily family;
        double alpha = 0.0;
        if (w_text == "harmonic") family = WeightFamily::harmonic;
        else if (w_text == "ones") family = WeightFamily::ones;
        else if (w_text.rfind("power:", 0) == 0) {
            family = WeightFamily::power;
            alpha = parse_double(w_text.substr(6), "alpha");
        } else {
            throw std::invalid_argument("space spec: unknown weight family '" + w_text + "'");
        }
        return kind == "lorentz" ? lorentz(family, n, p, alpha)
                                 : marcinkiewicz(family, n, p, alpha);
    }
    throw std::invalid_argument("space spec: unknown kind '" + kind + "'");
}

std::string SpaceSpec::to_string() const {
    switch (kind_) {
        case SpaceKind::uniform:
            return "uniform";
        case SpaceKind::schatten:
            return "schatten:p=" + format_double(p_);
        case SpaceKind::lorentz:
        case SpaceKind::marcinkiewicz: {
            const std::string head =
                kind_ == SpaceKind::lorentz ? "lorentz" : "marcinkiewicz";
            return head + ":p=" + format_double(p_) + ":w=" + weight_tag(family_, alpha_) +
                   ":n=" + std::to_string(weights_.size());
        }
    }
    return "uniform";
}

bool SpaceSpec::operator==(const SpaceSpec& other) const {
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case SpaceKind::uniform: return true;
        case SpaceKind::schatten: return p_ == other.p_;
        case SpaceKind::lorentz:
        case SpaceKind::marcinkiewicz:
            return p_ == other.p_ && weights_ == other.weights_;
    }
    return false;
}

double seq_norm(const SpaceSpec& space, const Sequence& xi) {
    const Sequence r = decreasing_rearrangement(xi);
    if (r.empty()) return 0.0;
    switch (space.kind()) {
        case SpaceKind::uniform:
            return r[0];
        case SpaceKind::schatten: {
            const double p = space.exponent();
            double acc = 0.0;
            for (double v : r) acc += std::pow(v, p);
            return std::pow(acc, 1.0 / p);
        }
        case SpaceKind::lorentz: {
            if (r.size() > space.weights().size())
                throw std::invalid_argument("seq_norm: sequence longer than the weight table");
            const double p = space.exponent();
            double acc = 0.0;
            for (std::size_t i = 0; i < r.size(); ++i)
                acc += std::pow(r[i], p) * space.weights()[i];
            return std::pow(acc, 1.0 / p);
        }
        case SpaceKind::marcinkiewicz: {
            if (r.size() > space.weights().size())
                throw std::invalid_argument("seq_norm: sequence longer than the weight table");
            const double p = space.exponent();
            double acc = 0.0;
            double best = 0.0;
            for (std::size_t i = 0; i < r.size(); ++i) {
                acc += std::pow(r[i], p);
                best = std::max(best, acc / space.weight_sums()[i]);
            }
            return std::pow(best, 1.0 / p);
        }
    }
    return 0.0;
}

double concavity_modulus(const SpaceSpec& space) {
    if (space.kind() == SpaceKind::schatten && space.exponent() < 1.0)
        return std::pow(2.0, 1.0 / space.exponent() - 1.0);
    return 1.0;
}

double dilation_constant(const SpaceSpec& space, int m) {
    if (m < 1) throw std::invalid_argument("dilation_constant: m must be >= 1");
    if (m == 1) return 1.0;
    const double c = concavity_modulus(space);
    double acc = 0.0;
    double ck = 1.0;
    for (int k = 1; k <= m - 2; ++k) {
        ck *= c;
        acc += ck;
    }
    return acc + 2.0 * std::pow(c, m - 1);
}

MultiplierSpace analytic_multiplier_space(const SpaceSpec& F, const SpaceSpec& G) {
    MultiplierSpace out;
    if (F == G || F.kind() == SpaceKind::uniform) {
        out.kind = MultiplierSpace::Kind::whole_space;
        return out;
    }
    if (G.kind() == SpaceKind::uniform) {
        out.kind = MultiplierSpace::Kind::space;
        out.space = F;
        return out;
    }
    if (F.kind() == SpaceKind::schatten && G.kind() == SpaceKind::schatten) {
        const double r = F.exponent();
        const double p = G.exponent();
        if (r >= p) {
            out.kind = MultiplierSpace::Kind::whole_space;
        } else {
            out.kind = MultiplierSpace::Kind::space;
            out.space = SpaceSpec::schatten(1.0 / (1.0 / r - 1.0 / p));
        }
        return out;
    }
    if (F.kind() == SpaceKind::schatten && G.kind() == SpaceKind::lorentz &&
        F.exponent() == G.exponent()) {
        out.kind = MultiplierSpace::Kind::space;
        if (G.weight_family() != WeightFamily::custom)
            out.space = SpaceSpec::marcinkiewicz(G.weight_family(),
                                                 static_cast<int>(G.weights().size()),
                                                 G.exponent(), G.weight_alpha());
        else
            out.space = SpaceSpec::marcinkiewicz_custom(G.weights(), G.exponent(),
                                                        !G.normalized());
        return out;
    }
    return out;
}

std::vector<SpaceSpec> default_space_registry() {
    std::vector<SpaceSpec> out;
    out.push_back(SpaceSpec::schatten(0.5));
    out.push_back(SpaceSpec::schatten(2.0 / 3.0));
    out.push_back(SpaceSpec::schatten(1.0));
    out.push_back(SpaceSpec::schatten(2.0));
    out.push_back(SpaceSpec::schatten(3.0));
    out.push_back(SpaceSpec::lorentz(WeightFamily::harmonic, 64, 1.0));
    out.push_back(SpaceSpec::lorentz(WeightFamily::harmonic, 64, 2.0));
    out.push_back(SpaceSpec::marcinkiewicz(WeightFamily::harmonic, 64, 1.0));
    out.push_back(SpaceSpec::marcinkiewicz(WeightFamily::harmonic, 64, 2.0));
    out.push_back(SpaceSpec::uniform());
    return out;
}

}  // namespace idealcalc
