// Ring constructions and the ring-spec expression parser.
//
//   spec  := "zmod(" int ")"
//          | "matrix(" spec "," int ")"
//          | "triangular(" spec "," int ")"
//          | "product(" spec {"," spec} ")"
//          | "group_algebra(" spec "," ("C" int | "S3") ")"
//          | "quotient(" spec "," "[" [id {"," id}] "]" ")"
//          | "table{" field {";" field} "}"
//   field := "elements=[" name {"," name} "]" | "add=" rows | "mul=" rows
//          | "one=" name | "zero=" name
//
// Whitespace is ignored; '#' starts a comment running to end of line.

#include <algorithm>
#include <array>
#include <cctype>
#include <map>

#include "orelab/finite_ring.hpp"

namespace orelab {

namespace {

constexpr std::size_t kMaxConstructedSize = 1024;

void guard_size(double size) {
    if (size > static_cast<double>(kMaxConstructedSize))
        throw ArgumentError("construction would exceed " + std::to_string(kMaxConstructedSize) + " elements");
}

// digits[0] is the most significant.
std::vector<Elem> decode(Elem id, std::size_t base, std::size_t len) {
    std::vector<Elem> d(len);
    for (std::size_t i = len; i-- > 0;) {
        d[i] = static_cast<Elem>(id % base);
        id = static_cast<Elem>(id / base);
    }
    return d;
}

Elem encode(const std::vector<Elem>& d, std::size_t base) {
    Elem id = 0;
    for (Elem x : d) id = static_cast<Elem>(id * base + x);
    return id;
}

// Builds tables from per-element digit vectors and a digit-level mul.
template <class Mul>
FiniteRing from_digits(std::string label, const FiniteRing& base, std::size_t len, Mul&& digit_mul,
                       const std::vector<Elem>& one_digits) {
    const std::size_t b = base.size();
    double sz = 1;
    for (std::size_t i = 0; i < len; ++i) sz *= static_cast<double>(b);
    guard_size(sz);
    const std::size_t n = static_cast<std::size_t>(sz);
    std::vector<std::vector<Elem>> dig(n);
    for (Elem x = 0; x < n; ++x) dig[x] = decode(x, b, len);
    std::vector<Elem> add(n * n), mul(n * n);
    std::vector<Elem> tmp(len);
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            for (std::size_t i = 0; i < len; ++i) tmp[i] = base.add(dig[x][i], dig[y][i]);
            add[x * n + y] = encode(tmp, b);
            mul[x * n + y] = encode(digit_mul(dig[x], dig[y]), b);
        }
    std::vector<Elem> zero_digits(len, base.zero());
    return FiniteRing::from_tables(std::move(label), n, std::move(add), std::move(mul), encode(one_digits, b),
                                   encode(zero_digits, b));
}

struct Group {
    std::string name;
    std::size_t order;
    std::vector<std::size_t> table;  // row-major g*h
    std::size_t identity;
};

Group make_group(std::string_view name) {
    if (name == "S3") {
        std::vector<std::array<int, 3>> perms;
        std::array<int, 3> p{0, 1, 2};
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        Group g{"S3", 6, std::vector<std::size_t>(36), 0};
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j) {
                std::array<int, 3> c{};
                for (int k = 0; k < 3; ++k) c[k] = perms[i][perms[j][k]];
                g.table[i * 6 + j] =
                    static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
            }
        return g;
    }
    if (name.size() >= 2 && name[0] == 'C') {
        std::size_t n = 0;
        for (char ch : name.substr(1)) {
            if (!std::isdigit(static_cast<unsigned char>(ch))) throw ArgumentError("bad group name");
            n = n * 10 + static_cast<std::size_t>(ch - '0');
        }
        if (n < 1) throw ArgumentError("cyclic group order must be >= 1");
        Group g{"C" + std::to_string(n), n, std::vector<std::size_t>(n * n), 0};
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) g.table[i * n + j] = (i + j) % n;
        return g;
    }
    throw ArgumentError("unknown group '" + std::string(name) + "' (use C<n> or S3)");
}

}  // namespace

FiniteRing zmod(long n) {
    if (n < 2) throw ArgumentError("zmod(n) requires n >= 2");
    guard_size(static_cast<double>(n));
    const auto m = static_cast<std::size_t>(n);
    std::vector<Elem> add(m * m), mul(m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            add[a * m + b] = static_cast<Elem>((a + b) % m);
            mul[a * m + b] = static_cast<Elem>((a * b) % m);
        }
    return FiniteRing::from_tables("zmod(" + std::to_string(n) + ")", m, std::move(add), std::move(mul), 1, 0);
}

FiniteRing matrix_ring(const FiniteRing& base, int k) {
    if (k < 1) throw ArgumentError("matrix size must be >= 1");
    const std::size_t kk = static_cast<std::size_t>(k);
    auto mul = [&](const std::vector<Elem>& x, const std::vector<Elem>& y) {
        std::vector<Elem> out(kk * kk, base.zero());
        for (std::size_t i = 0; i < kk; ++i)
            for (std::size_t j = 0; j < kk; ++j) {
                Elem acc = base.zero();
                for (std::size_t t = 0; t < kk; ++t) acc = base.add(acc, base.mul(x[i * kk + t], y[t * kk + j]));
                out[i * kk + j] = acc;
            }
        return out;
    };
    std::vector<Elem> one(kk * kk, base.zero());
    for (std::size_t i = 0; i < kk; ++i) one[i * kk + i] = base.one();
    return from_digits("matrix(" + base.label() + "," + std::to_string(k) + ")", base, kk * kk, mul, one);
}

FiniteRing triangular_ring(const FiniteRing& base, int k) {
    if (k < 1) throw ArgumentError("matrix size must be >= 1");
    const std::size_t kk = static_cast<std::size_t>(k);
    // digit slot of entry (i, j), i <= j, in row-major order
    std::vector<std::vector<std::size_t>> slot(kk, std::vector<std::size_t>(kk, 0));
    std::size_t len = 0;
    for (std::size_t i = 0; i < kk; ++i)
        for (std::size_t j = i; j < kk; ++j) slot[i][j] = len++;
    auto mul = [&](const std::vector<Elem>& x, const std::vector<Elem>& y) {
        std::vector<Elem> out(len, base.zero());
        for (std::size_t i = 0; i < kk; ++i)
            for (std::size_t j = i; j < kk; ++j) {
                Elem acc = base.zero();
                for (std::size_t t = i; t <= j; ++t) acc = base.add(acc, base.mul(x[slot[i][t]], y[slot[t][j]]));
                out[slot[i][j]] = acc;
            }
        return out;
    };
    std::vector<Elem> one(len, base.zero());
    for (std::size_t i = 0; i < kk; ++i) one[slot[i][i]] = base.one();
    return from_digits("triangular(" + base.label() + "," + std::to_string(k) + ")", base, len, mul, one);
}

FiniteRing product_ring(const std::vector<FiniteRing>& factors) {
    if (factors.empty()) throw ArgumentError("product needs at least one factor");
    double sz = 1;
    for (const auto& f : factors) sz *= static_cast<double>(f.size());
    guard_size(sz);
    const std::size_t n = static_cast<std::size_t>(sz);
    const std::size_t len = factors.size();
    auto dec = [&](Elem id) {
        std::vector<Elem> d(len);
        for (std::size_t i = len; i-- > 0;) {
            d[i] = static_cast<Elem>(id % factors[i].size());
            id = static_cast<Elem>(id / factors[i].size());
        }
        return d;
    };
    auto enc = [&](const std::vector<Elem>& d) {
        Elem id = 0;
        for (std::size_t i = 0; i < len; ++i) id = static_cast<Elem>(id * factors[i].size() + d[i]);
        return id;
    };
    std::vector<std::vector<Elem>> dig(n);
    for (Elem x = 0; x < n; ++x) dig[x] = dec(x);
    std::vector<Elem> add(n * n), mul(n * n), s(len), p(len);
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            for (std::size_t i = 0; i < len; ++i) {
                s[i] = factors[i].add(dig[x][i], dig[y][i]);
                p[i] = factors[i].mul(dig[x][i], dig[y][i]);
            }
            add[x * n + y] = enc(s);
            mul[x * n + y] = enc(p);
        }
    std::vector<Elem> one(len), zero(len);
    std::string label = "product(";
    for (std::size_t i = 0; i < len; ++i) {
        one[i] = factors[i].one();
        zero[i] = factors[i].zero();
        label += (i ? "," : "") + factors[i].label();
    }
    label += ")";
    return FiniteRing::from_tables(std::move(label), n, std::move(add), std::move(mul), enc(one), enc(zero),
                                   factors);
}

FiniteRing group_algebra(const FiniteRing& base, std::string_view group) {
    Group g = make_group(group);
    auto mul = [&](const std::vector<Elem>& x, const std::vector<Elem>& y) {
        std::vector<Elem> out(g.order, base.zero());
        for (std::size_t i = 0; i < g.order; ++i)
            for (std::size_t j = 0; j < g.order; ++j) {
                std::size_t k = g.table[i * g.order + j];
                out[k] = base.add(out[k], base.mul(x[i], y[j]));
            }
        return out;
    };
    std::vector<Elem> one(g.order, base.zero());
    one[g.identity] = base.one();
    return from_digits("group_algebra(" + base.label() + "," + g.name + ")", base, g.order, mul, one);
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class SpecParser {
public:
    explicit SpecParser(std::string_view text) : s_(text) {}

    FiniteRing parse_all() {
        FiniteRing r = spec();
        skip();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return r;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip() {
        while (pos_ < s_.size()) {
            if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
                ++pos_;
            } else if (s_[pos_] == '#') {
                while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    void expect(char c) {
        skip();
        if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    std::string word() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '-'))
            ++pos_;
        if (start == pos_) fail("expected identifier or number");
        return std::string(s_.substr(start, pos_ - start));
    }
    long integer() {
        skip();
        std::size_t start = pos_;
        std::string w = word();
        try {
            std::size_t used = 0;
            long v = std::stol(w, &used);
            if (used != w.size()) throw std::invalid_argument(w);
            return v;
        } catch (const std::exception&) {
            pos_ = start;
            fail("expected integer");
        }
    }

    FiniteRing spec() {
        std::size_t at = (skip(), pos_);
        std::string head = word();
        if (head == "table") return table();
        expect('(');
        FiniteRing out = [&]() -> FiniteRing {
            if (head == "zmod") {
                long n = integer();
                return zmod(n);
            }
            if (head == "matrix" || head == "triangular") {
                FiniteRing base = spec();
                expect(',');
                long k = integer();
                if (k < 1 || k > 8) fail("matrix size out of range");
                return head == "matrix" ? matrix_ring(base, static_cast<int>(k))
                                        : triangular_ring(base, static_cast<int>(k));
            }
            if (head == "product") {
                std::vector<FiniteRing> fs{spec()};
                while (peek(',')) {
                    expect(',');
                    fs.push_back(spec());
                }
                return product_ring(fs);
            }
            if (head == "group_algebra") {
                FiniteRing base = spec();
                expect(',');
                std::string g = word();
                return group_algebra(base, g);
            }
            if (head == "quotient") {
                FiniteRing base = spec();
                expect(',');
                expect('[');
                std::vector<Elem> gens;
                if (!peek(']')) {
                    do {
                        if (peek(',')) expect(',');
                        long g = integer();
                        if (g < 0 || static_cast<std::size_t>(g) >= base.size()) fail("generator id out of range");
                        gens.push_back(static_cast<Elem>(g));
                    } while (peek(','));
                }
                expect(']');
                IdealData a = ideal_generated_by(base, gens, IdealKind::two_sided);
                std::string label = "quotient(" + base.label() + ",[";
                for (std::size_t i = 0; i < gens.size(); ++i) label += (i ? "," : "") + std::to_string(gens[i]);
                return quotient_ring(base, a).ring.with_label(label + "])");
            }
            pos_ = at;
            fail("unknown ring constructor '" + head + "'");
        }();
        expect(')');
        return out;
    }

    std::vector<std::string> name_list() {
        expect('[');
        std::vector<std::string> out;
        if (!peek(']')) {
            out.push_back(word());
            while (peek(',')) {
                expect(',');
                out.push_back(word());
            }
        }
        expect(']');
        return out;
    }

    FiniteRing table() {
        expect('{');
        std::vector<std::string> names;
        std::vector<std::vector<std::string>> add_rows, mul_rows;
        std::string one, zero;
        std::size_t add_pos = 0, mul_pos = 0;
        while (true) {
            std::string key = word();
            expect('=');
            if (key == "elements") {
                names = name_list();
            } else if (key == "add" || key == "mul") {
                auto& rows = key == "add" ? add_rows : mul_rows;
                (key == "add" ? add_pos : mul_pos) = pos_;
                expect('[');
                do {
                    if (peek(',')) expect(',');
                    rows.push_back(name_list());
                } while (peek(','));
                expect(']');
            } else if (key == "one") {
                one = word();
            } else if (key == "zero") {
                zero = word();
            } else {
                fail("unknown table field '" + key + "'");
            }
            if (peek(';')) {
                expect(';');
                if (peek('}')) break;
                continue;
            }
            break;
        }
        expect('}');
        const std::size_t n = names.size();
        if (n == 0) fail("table needs elements=[...]");
        if (one.empty()) fail("table needs one=<element>");
        std::map<std::string, Elem> index;
        for (Elem i = 0; i < n; ++i) index[names[i]] = i;
        auto resolve = [&](const std::string& t, std::size_t at) -> Elem {
            if (auto it = index.find(t); it != index.end()) return it->second;
            pos_ = at;
            fail("unknown element '" + t + "'");
        };
        auto flatten = [&](const std::vector<std::vector<std::string>>& rows, std::size_t at) {
            if (rows.size() != n) {
                pos_ = at;
                fail("table must have one row per element");
            }
            std::vector<Elem> flat;
            for (const auto& row : rows) {
                if (row.size() != n) {
                    pos_ = at;
                    fail("table row has wrong length");
                }
                for (const auto& t : row) flat.push_back(resolve(t, at));
            }
            return flat;
        };
        std::vector<Elem> add = flatten(add_rows, add_pos);
        std::vector<Elem> mul = flatten(mul_rows, mul_pos);
        std::optional<Elem> z;
        if (!zero.empty()) z = resolve(zero, pos_);
        return FiniteRing::from_tables("table[" + std::to_string(n) + "]", n, std::move(add), std::move(mul),
                                       resolve(one, pos_), z);
    }
};

}  // namespace

FiniteRing build_ring(std::string_view spec) { return SpecParser(spec).parse_all(); }

}  // namespace orelab
