#include "core/trace_poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace symtrace {

Word cyclic_canonical(Word w) {
    if (w.size() <= 1) return w;
    Word best = w;
    for (std::size_t r = 1; r < w.size(); ++r) {
        std::rotate(w.begin(), w.begin() + 1, w.end());
        if (w < best) best = w;
    }
    return best;
}

CMatrix word_product(const Word& w, std::span<const CMatrix> vars) {
    const int d = vars.empty() ? 1 : vars[0].rows();
    CMatrix out = CMatrix::identity(d);
    for (int v : w) {
        if (v < 1 || v > (int)vars.size()) throw std::out_of_range("variable index out of range");
        out = out * vars[v - 1];
    }
    return out;
}

void TraceTerm::canonicalize() {
    for (auto& t : traced) t = cyclic_canonical(std::move(t));
    std::sort(traced.begin(), traced.end());
}

void TracePolynomial::add_term(TraceTerm t, const Rational& c) {
    if (c.is_zero()) return;
    t.canonicalize();
    auto it = terms_.find(t);
    if (it == terms_.end()) {
        terms_.emplace(std::move(t), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TracePolynomial TracePolynomial::operator+(const TracePolynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("nvars mismatch");
    TracePolynomial r = *this;
    for (const auto& [t, c] : o.terms_) r.add_term(t, c);
    return r;
}

TracePolynomial TracePolynomial::operator-(const TracePolynomial& o) const {
    return *this + o.scaled(Rational(-1));
}

TracePolynomial TracePolynomial::scaled(const Rational& c) const {
    TracePolynomial r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [t, x] : terms_) r.terms_.emplace(t, c * x);
    return r;
}

CMatrix TracePolynomial::evaluate(std::span<const CMatrix> vars) const {
    if ((int)vars.size() != nvars_) throw std::invalid_argument("variable count mismatch");
    int d = vars.empty() ? 1 : vars[0].rows();
    for (const auto& v : vars)
        if (v.rows() != d || v.cols() != d) throw std::invalid_argument("variables must be square of one size");

    CMatrix out(d, d);
    for (const auto& [t, c] : terms_) {
        cplx scalar = c.to_double();
        for (const auto& tw : t.traced) scalar *= word_product(tw, vars).trace();
        out += word_product(t.word, vars) * scalar;
    }
    return out;
}

TracePolynomial poly_of_group_element(const AlgebraElement& alpha, DictMode mode) {
    const int k = alpha.degree();
    TracePolynomial out(mode == DictMode::identity_in_last_slot ? k - 1 : k);
    for (const auto& [pi, c] : alpha.coeffs()) {
        auto cycles = pi.inverse().canonical_cycles();  // the cycle through k comes last
        TraceTerm term;
        for (std::size_t i = 0; i + 1 < cycles.size(); ++i) term.traced.push_back(cycles[i]);
        Word last = cycles.back();
        switch (mode) {
            case DictMode::full_trace:
                term.traced.push_back(std::move(last));
                break;
            case DictMode::last_slot_output:
                term.word = std::move(last);
                break;
            case DictMode::identity_in_last_slot:
                last.pop_back();  // canonical order puts k at the end
                term.word = std::move(last);
                break;
        }
        out.add_term(std::move(term), c);
    }
    return out;
}

TracePolynomial polarized_ch_map(const Partition& lambda) {
    return poly_of_group_element(central_idempotent(lambda), DictMode::identity_in_last_slot);
}

TracePolynomial witness_map(int k) {
    if (k < 2 || k > 6) throw std::invalid_argument("witness_map expects 2 <= k <= 6");
    std::vector<int> ones(k, 1);
    TracePolynomial f = polarized_ch_map(Partition(ones)).scaled(Rational(factorial(k)));
    TracePolynomial wit(k - 1);
    TraceTerm prod;
    for (int i = 1; i < k; ++i) prod.traced.push_back({i});
    wit.add_term(std::move(prod), Rational(1));
    return wit - f;
}

void TensorTerm::canonicalize() {
    for (auto& t : traced) t = cyclic_canonical(std::move(t));
    std::sort(traced.begin(), traced.end());
}

void TensorPolynomial::add_term(TensorTerm t, const Rational& c) {
    if (c.is_zero()) return;
    if ((int)t.words.size() != t_) throw std::invalid_argument("tensor term arity mismatch");
    t.canonicalize();
    auto it = terms_.find(t);
    if (it == terms_.end()) {
        terms_.emplace(std::move(t), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CMatrix TensorPolynomial::evaluate(std::span<const CMatrix> vars) const {
    if ((int)vars.size() != nvars_) throw std::invalid_argument("variable count mismatch");
    int d = vars.empty() ? 1 : vars[0].rows();
    for (const auto& v : vars)
        if (v.rows() != d || v.cols() != d) throw std::invalid_argument("variables must be square of one size");

    long n = 1;
    for (int i = 0; i < t_; ++i) n *= d;
    CMatrix out((int)n, (int)n);
    for (const auto& [t, c] : terms_) {
        cplx scalar = c.to_double();
        for (const auto& tw : t.traced) scalar *= word_product(tw, vars).trace();
        CMatrix m = word_product(t.words[0], vars);
        for (int i = 1; i < t_; ++i) m = kron(m, word_product(t.words[i], vars));
        out += m * scalar;
    }
    out.with_slots(std::vector<int>(t_, d));
    return out;
}

TensorPolynomial tensor_poly_of_group_element(const AlgebraElement& alpha, int t, bool strict) {
    const int k = alpha.degree();
    if (t < 1 || t > k - 1) throw std::invalid_argument("need 1 <= t <= k-1");
    TensorPolynomial out(k - t, t);
    for (const auto& [pi, c] : alpha.coeffs()) {
        TensorTerm term;
        term.words.assign(t, Word{});
        for (auto& cyc : pi.inverse().canonical_cycles()) {
            int outputs = 0;
            int out_slot = 0;
            for (int v : cyc)
                if (v > k - t) {
                    ++outputs;
                    out_slot = v;
                }
            if (outputs == 0) {
                if (strict)
                    throw std::invalid_argument(
                        "structural violation: a cycle avoids every output slot");
                term.traced.push_back(std::move(cyc));
            } else if (outputs == 1) {
                // the output slot is the cycle's maximum, hence already last
                cyc.pop_back();
                for (int v : cyc)
                    if (v > k - t) throw std::logic_error("output slot not last in cycle");
                term.words[out_slot - (k - t) - 1] = std::move(cyc);
            } else {
                throw std::invalid_argument(
                    "a cycle meets two output slots; no tensor-polynomial form exists");
            }
        }
        out.add_term(std::move(term), c);
    }
    return out;
}

namespace {

std::string letter(int v) {
    if (v >= 1 && v <= 26) return std::string(1, char('A' + v - 1));
    return "X" + std::to_string(v);
}

std::string word_str(const Word& w) {
    std::string s;
    for (int v : w) s += letter(v);
    return s;
}

// least positive rational turning all coefficients into coprime integers
std::vector<std::pair<const TraceTerm*, std::int64_t>> integer_normalized(
    const std::map<TraceTerm, Rational>& terms) {
    std::int64_t L = 1;
    for (const auto& [t, c] : terms) L = lcm64(L, c.den());
    std::int64_t g = 0;
    for (const auto& [t, c] : terms) {
        std::int64_t n = c.num() * (L / c.den());
        g = std::gcd(g, n < 0 ? -n : n);
    }
    if (g == 0) g = 1;
    std::vector<std::pair<const TraceTerm*, std::int64_t>> out;
    for (const auto& [t, c] : terms) out.emplace_back(&t, c.num() * (L / c.den()) / g);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return *a.first < *b.first; });
    return out;
}

}  // namespace

std::string pretty_print(const TracePolynomial& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [term, n] : integer_normalized(p.terms())) {
        if (!first) s += " ";
        if (n < 0) s += "-";
        else if (!first) s += "+";
        std::int64_t an = n < 0 ? -n : n;
        std::string body;
        for (const auto& tw : term->traced) body += "tr(" + word_str(tw) + ")";
        body += word_str(term->word);
        if (term->word.empty()) body += "{}";
        if (an != 1) body = std::to_string(an) + body;
        s += body;
        first = false;
    }
    return s;
}

std::string TensorPolynomial::pretty() const {
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [term, c] : terms_) {
        std::string cs = c.str();
        if (!first) s += (cs[0] == '-') ? " " : " +";
        s += (cs == "1") ? "" : (cs == "-1" ? "-" : cs + " ");
        for (const auto& tw : term.traced) s += "tr(" + word_str(tw) + ")";
        for (int i = 0; i < t_; ++i) {
            if (i) s += " ot ";
            s += term.words[i].empty() ? "{}" : word_str(term.words[i]);
        }
        first = false;
    }
    return s;
}

TracePolynomial parse_pretty(const std::string& text, int nvars) {
    // grammar per term: [sign] [integer] {tr(WORD)} [WORD] ["{}"]
    TracePolynomial out(nvars);
    int maxvar = 0;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
    auto parse_word = [&](const std::string& letters) {
        Word w;
        for (char ch : letters) {
            int v = ch - 'A' + 1;
            maxvar = std::max(maxvar, v);
            w.push_back(v);
        }
        return w;
    };

    skip_ws();
    if (text.substr(i) == "0") return out;
    bool any = false;
    while (i < text.size()) {
        skip_ws();
        if (i >= text.size()) break;
        std::int64_t sign = 1;
        if (text[i] == '+') { ++i; }
        else if (text[i] == '-') { sign = -1; ++i; }
        skip_ws();
        std::int64_t mag = 0;
        bool has_digits = false;
        while (i < text.size() && std::isdigit((unsigned char)text[i])) {
            mag = mag * 10 + (text[i] - '0');
            has_digits = true;
            ++i;
        }
        if (!has_digits) mag = 1;

        TraceTerm term;
        std::string linear;
        bool brace = false;
        while (i < text.size()) {
            if (text.compare(i, 3, "tr(") == 0) {
                std::size_t close = text.find(')', i + 3);
                if (close == std::string::npos) throw std::invalid_argument("unbalanced tr(");
                std::string inside = text.substr(i + 3, close - i - 3);
                term.traced.push_back(parse_word(inside));
                i = close + 1;
            } else if (std::isupper((unsigned char)text[i])) {
                linear += text[i];
                ++i;
            } else if (text.compare(i, 2, "{}") == 0) {
                brace = true;
                i += 2;
            } else {
                break;
            }
        }
        if (!brace && linear.empty() && term.traced.empty() && !has_digits)
            throw std::invalid_argument("empty term in polynomial text");
        term.word = parse_word(linear);
        out.add_term(std::move(term), Rational(sign * mag));
        any = true;
    }
    if (!any) throw std::invalid_argument("no terms parsed");
    if (nvars == 0) {
        TracePolynomial sized(maxvar);
        for (const auto& [t, c] : out.terms()) sized.add_term(t, c);
        return sized;
    }
    return out;
}

// ---- JSON ----

namespace {

using nlohmann::json;

json term_to_json(const TraceTerm& t, const Rational& c) {
    json j;
    j["coeff"] = c.str();
    j["traced"] = t.traced;
    j["word"] = t.word;
    return j;
}

}  // namespace

std::string TracePolynomial::to_json() const {
    json j;
    j["nvars"] = nvars_;
    j["terms"] = json::array();
    for (const auto& [t, c] : terms_) j["terms"].push_back(term_to_json(t, c));
    return j.dump();
}

TracePolynomial TracePolynomial::from_json(const std::string& text) {
    json j = json::parse(text);
    TracePolynomial p(j.at("nvars").get<int>());
    for (const auto& jt : j.at("terms")) {
        TraceTerm t;
        t.traced = jt.at("traced").get<std::vector<Word>>();
        t.word = jt.at("word").get<Word>();
        p.add_term(std::move(t), Rational::parse(jt.at("coeff").get<std::string>()));
    }
    return p;
}

std::string TensorPolynomial::to_json() const {
    json j;
    j["nvars"] = nvars_;
    j["t"] = t_;
    j["terms"] = json::array();
    for (const auto& [t, c] : terms_) {
        json jt;
        jt["coeff"] = c.str();
        jt["traced"] = t.traced;
        jt["words"] = t.words;
        j["terms"].push_back(jt);
    }
    return j.dump();
}

TensorPolynomial TensorPolynomial::from_json(const std::string& text) {
    json j = json::parse(text);
    TensorPolynomial p(j.at("nvars").get<int>(), j.at("t").get<int>());
    for (const auto& jt : j.at("terms")) {
        TensorTerm t;
        t.traced = jt.at("traced").get<std::vector<Word>>();
        t.words = jt.at("words").get<std::vector<Word>>();
        p.add_term(std::move(t), Rational::parse(jt.at("coeff").get<std::string>()));
    }
    return p;
}

}  // namespace symtrace
