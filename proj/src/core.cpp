#include "carndt/core.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace carndt {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

}  // namespace

bool part_before(Part a, Part b) {
    if (a.value != b.value) return a.value > b.value;
    return !a.marked && b.marked;
}

std::string part_token(Part p) {
    std::string s = std::to_string(p.value);
    if (p.marked) s += '\'';
    return s;
}

Composition::Composition(std::vector<Part> parts) : parts_(std::move(parts)) {
    for (const Part& p : parts_) {
        require(p.value >= 1, "composition parts must be >= 1");
        require(!p.marked || p.value == 1, "only unit parts may be marked");
    }
}

Composition::Composition(std::initializer_list<int> values) {
    parts_.reserve(values.size());
    for (int v : values) {
        require(v >= 1, "composition parts must be >= 1");
        parts_.push_back({v, false});
    }
}

Composition Composition::from_values(const std::vector<int>& values) {
    std::vector<Part> parts;
    parts.reserve(values.size());
    for (int v : values) parts.push_back({v, false});
    return Composition(std::move(parts));
}

Composition Composition::parse(std::string_view text) {
    std::string cleaned;
    cleaned.reserve(text.size());
    for (char c : text) {
        if (c == '(' || c == ')' || c == ' ') continue;
        cleaned += c;
    }
    if (cleaned.empty()) return Composition();

    std::vector<Part> parts;
    if (cleaned.find(',') != std::string::npos) {
        std::size_t pos = 0;
        while (pos <= cleaned.size()) {
            std::size_t comma = cleaned.find(',', pos);
            std::string item = cleaned.substr(pos, comma == std::string::npos ? comma : comma - pos);
            require(!item.empty(), "empty item in composition text");
            bool marked = item.back() == '\'';
            if (marked) item.pop_back();
            require(!item.empty() && item.find_first_not_of("0123456789") == std::string::npos,
                    "bad part '" + item + "'");
            parts.push_back({std::atoi(item.c_str()), marked});
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    } else {
        for (std::size_t i = 0; i < cleaned.size(); ++i) {
            char c = cleaned[i];
            require(c >= '1' && c <= '9', std::string("bad character '") + c + "' in composition text");
            bool marked = i + 1 < cleaned.size() && cleaned[i + 1] == '\'';
            if (marked) ++i;
            parts.push_back({c - '0', marked});
        }
    }
    return Composition(std::move(parts));
}

int Composition::weight() const {
    int sum = 0;
    for (const Part& p : parts_) sum += p.value;
    return sum;
}

bool Composition::has_marks() const {
    return std::any_of(parts_.begin(), parts_.end(), [](Part p) { return p.marked; });
}

std::string Composition::shorthand() const {
    if (parts_.empty()) return "()";
    bool compact = std::all_of(parts_.begin(), parts_.end(), [](Part p) { return p.value <= 9; });
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (!compact && i > 0) out += ',';
        out += part_token(parts_[i]);
    }
    return out;
}

std::string Composition::list_form() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += ',';
        out += part_token(parts_[i]);
    }
    out += ')';
    return out;
}

bool canonical_before(const Composition& a, const Composition& b) {
    return std::lexicographical_compare(a.parts().begin(), a.parts().end(), b.parts().begin(),
                                        b.parts().end(), part_before);
}

Family Family::ca_ge(int k) {
    require(k >= 0, "ca-ge requires k >= 0");
    return {FamilyKind::CAGeK, k};
}

Family Family::ca_le(int k) {
    require(k >= 1, "ca-le requires k >= 1");
    return {FamilyKind::CALeK, k};
}

Family Family::pell_ge(int k) {
    require(k >= 1, "pell-ge requires k >= 1");
    return {FamilyKind::PellGeK, k};
}

Family Family::q_le(int k) {
    require(k >= 1, "q-le requires k >= 1");
    return {FamilyKind::QLeK, k};
}

Family Family::make(FamilyKind kind, std::optional<int> k) {
    if (family_kind_requires_k(kind)) {
        require(k.has_value(), "family requires k");
        switch (kind) {
            case FamilyKind::CAGeK: return ca_ge(*k);
            case FamilyKind::CALeK: return ca_le(*k);
            case FamilyKind::PellGeK: return pell_ge(*k);
            case FamilyKind::QLeK: return q_le(*k);
            default: break;
        }
    }
    require(!k.has_value(), "family does not take k");
    return {kind, 0};
}

bool Family::parameterized() const { return family_kind_requires_k(kind_); }

bool Family::marked_alphabet() const {
    return kind_ == FamilyKind::PellGeK || kind_ == FamilyKind::QLeK;
}

std::string Family::token() const {
    switch (kind_) {
        case FamilyKind::All: return "all";
        case FamilyKind::CA: return "ca";
        case FamilyKind::CAGeK: return "ca-ge";
        case FamilyKind::CALeK: return "ca-le";
        case FamilyKind::NoAdjacentOnes: return "no11";
        case FamilyKind::PellGeK: return "pell-ge";
        case FamilyKind::QLeK: return "q-le";
        case FamilyKind::ArndtStrict: return "arndt";
    }
    return "?";
}

std::string Family::display() const {
    std::string s = token();
    if (parameterized()) s += "(k=" + std::to_string(k_) + ")";
    return s;
}

std::optional<FamilyKind> family_kind_from_token(std::string_view token) {
    if (token == "all") return FamilyKind::All;
    if (token == "ca") return FamilyKind::CA;
    if (token == "ca-ge") return FamilyKind::CAGeK;
    if (token == "ca-le") return FamilyKind::CALeK;
    if (token == "no11") return FamilyKind::NoAdjacentOnes;
    if (token == "pell-ge") return FamilyKind::PellGeK;
    if (token == "q-le") return FamilyKind::QLeK;
    if (token == "arndt") return FamilyKind::ArndtStrict;
    return std::nullopt;
}

bool family_kind_requires_k(FamilyKind kind) {
    return kind == FamilyKind::CAGeK || kind == FamilyKind::CALeK ||
           kind == FamilyKind::PellGeK || kind == FamilyKind::QLeK;
}

bool pair_allowed(FamilyKind kind, int k, int a, int b) {
    switch (kind) {
        case FamilyKind::All: return true;
        case FamilyKind::CA: return a != b;
        case FamilyKind::CAGeK: return std::abs(a - b) >= k;
        case FamilyKind::CALeK: return std::abs(a - b) <= k;
        case FamilyKind::ArndtStrict: return a > b;
        default: throw std::logic_error("pair_allowed: not a pairwise family");
    }
}

namespace {

bool is_pairwise_kind(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::All:
        case FamilyKind::CA:
        case FamilyKind::CAGeK:
        case FamilyKind::CALeK:
        case FamilyKind::ArndtStrict: return true;
        default: return false;
    }
}

bool pell_member(std::span<const Part> parts, int k) {
    for (const Part& p : parts)
        if (p.value != 1 && !(p.value == 2 && !p.marked)) return false;
    if (parts.empty()) return true;
    if (parts.front().value != 1) return false;                       // must open with 1 or 1'
    if (parts.back().value == 1 && parts.back().marked) return false; // cannot close with 1'
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (parts[i].value == 1) {
            // adjacent one-runs of mixed mark
            if (j < parts.size() && parts[j].value == 1) return false;
            // internal one-runs must be long enough
            if (j < parts.size() && j - i < static_cast<std::size_t>(k)) return false;
        }
        i = j;
    }
    return true;
}

bool q_member(std::span<const Part> parts, int k) {
    for (const Part& p : parts)
        if (p.value != 1 && !(p.value % 2 == 0 && !p.marked)) return false;
    if (parts.empty()) return true;
    if (parts.back().value == 1 && parts.back().marked) return false;
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (parts[i].value == 1) {
            if (j < parts.size() && parts[j].value == 1) return false;
            if (j < parts.size() && j - i > static_cast<std::size_t>(k)) return false;
        }
        i = j;
    }
    return true;
}

}  // namespace

bool is_member(const Family& f, std::span<const Part> parts) {
    if (!f.marked_alphabet()) {
        for (const Part& p : parts)
            require(!p.marked, "marked part supplied to family " + f.display());
    }
    switch (f.kind()) {
        case FamilyKind::NoAdjacentOnes:
            for (std::size_t i = 0; i + 1 < parts.size(); ++i)
                if (parts[i].value == 1 && parts[i + 1].value == 1) return false;
            return true;
        case FamilyKind::PellGeK: return pell_member(parts, f.k());
        case FamilyKind::QLeK: return q_member(parts, f.k());
        default:
            for (std::size_t i = 0; i + 1 < parts.size(); i += 2)
                if (!pair_allowed(f.kind(), f.k(), parts[i].value, parts[i + 1].value)) return false;
            return true;
    }
}

bool is_member(const Family& f, const Composition& c) { return is_member(f, c.parts()); }

namespace {

template <class Visit>
void gen_pairwise(FamilyKind kind, int k, int remaining, std::vector<Part>& buf, Visit&& visit) {
    if (remaining == 0) {
        visit(buf);
        return;
    }
    // unpaired final part closes the composition
    buf.push_back({remaining, false});
    visit(buf);
    buf.pop_back();
    for (int a = remaining - 1; a >= 1; --a) {
        for (int b = remaining - a; b >= 1; --b) {
            if (!pair_allowed(kind, k, a, b)) continue;
            buf.push_back({a, false});
            buf.push_back({b, false});
            gen_pairwise(kind, k, remaining - a - b, buf, visit);
            buf.pop_back();
            buf.pop_back();
        }
    }
}

template <class Visit>
void gen_no11(int remaining, std::vector<Part>& buf, Visit&& visit) {
    if (remaining == 0) {
        visit(buf);
        return;
    }
    for (int p = remaining; p >= 1; --p) {
        if (p == 1 && !buf.empty() && buf.back().value == 1) continue;
        buf.push_back({p, false});
        gen_no11(remaining - p, buf, visit);
        buf.pop_back();
    }
}

void push_run(std::vector<Part>& buf, int count, Part p) {
    for (int i = 0; i < count; ++i) buf.push_back(p);
}

void pop_n(std::vector<Part>& buf, int count) { buf.resize(buf.size() - count); }

// pell-ge grammar: blocks (1^g 2^h) or (1'^g 2^h) with g >= k, h >= 1,
// then an optional closing run of plain ones.
template <class Visit>
void gen_pell(int k, int remaining, std::vector<Part>& buf, Visit&& visit) {
    if (remaining == 0) {
        visit(buf);
        return;
    }
    push_run(buf, remaining, {1, false});
    visit(buf);
    pop_n(buf, remaining);
    for (int g = k; g + 2 <= remaining; ++g) {
        for (int h = 1; g + 2 * h <= remaining; ++h) {
            for (bool marked : {false, true}) {
                push_run(buf, g, {1, marked});
                push_run(buf, h, {2, false});
                gen_pell(k, remaining - g - 2 * h, buf, visit);
                pop_n(buf, g + h);
            }
        }
    }
}

// q-le grammar: blocks (1^g e) or (1'^g e) with 1 <= g <= k and e even,
// bare even parts, then an optional closing run of plain ones.
template <class Visit>
void gen_q(int k, int remaining, std::vector<Part>& buf, Visit&& visit) {
    if (remaining == 0) {
        visit(buf);
        return;
    }
    push_run(buf, remaining, {1, false});
    visit(buf);
    pop_n(buf, remaining);
    for (int e = 2; e <= remaining; e += 2) {
        buf.push_back({e, false});
        gen_q(k, remaining - e, buf, visit);
        buf.pop_back();
    }
    for (int g = 1; g <= k && g + 2 <= remaining; ++g) {
        for (int e = 2; g + e <= remaining; e += 2) {
            for (bool marked : {false, true}) {
                push_run(buf, g, {1, marked});
                buf.push_back({e, false});
                gen_q(k, remaining - g - e, buf, visit);
                pop_n(buf, g + 1);
            }
        }
    }
}

template <class Visit>
void generate(const Family& f, int n, Visit&& visit) {
    if (n < 0) return;
    std::vector<Part> buf;
    buf.reserve(static_cast<std::size_t>(n) + 1);
    switch (f.kind()) {
        case FamilyKind::NoAdjacentOnes: gen_no11(n, buf, visit); break;
        case FamilyKind::PellGeK: gen_pell(f.k(), n, buf, visit); break;
        case FamilyKind::QLeK: gen_q(f.k(), n, buf, visit); break;
        default: gen_pairwise(f.kind(), f.k(), n, buf, visit); break;
    }
}

}  // namespace

std::vector<Composition> enumerate_family(const Family& f, int n) {
    std::vector<Composition> out;
    generate(f, n, [&](const std::vector<Part>& buf) { out.emplace_back(buf); });
    std::sort(out.begin(), out.end(), canonical_before);
    return out;
}

BigInt count_family(const Family& f, int n) {
    unsigned long long count = 0;
    generate(f, n, [&](const std::vector<Part>&) { ++count; });
    return BigInt(count);
}

}  // namespace carndt
