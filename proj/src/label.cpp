#include "sqlab/label.hpp"

#include "sqlab/errors.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <utility>

namespace sqlab {

namespace {

constexpr std::array<std::pair<Role, std::string_view>, 12> kRoleNames{{
    {Role::w, "w"},
    {Role::x, "x"},
    {Role::y, "y"},
    {Role::z, "z"},
    {Role::u, "u"},
    {Role::v, "v"},
    {Role::x_prime, "x'"},
    {Role::y_prime, "y'"},
    {Role::part, "p"},
    {Role::chain, "c"},
    {Role::subdivision, "sub"},
    {Role::line, "line"},
}};

Role role_from_name(std::string_view name) {
    for (const auto& [role, text] : kRoleNames)
        if (text == name)
            return role;
    throw SchemaError("unknown vertex role '" + std::string(name) + "'");
}

class LabelParser {
public:
    explicit LabelParser(std::string_view text) : text_(text) {}

    VertexLabel parse_all() {
        VertexLabel label = parse_label();
        if (pos_ != text_.size())
            fail("trailing characters");
        return label;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw SchemaError("bad vertex label '" + std::string(text_) + "': " + what);
    }

    bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

    void expect(char c) {
        if (!peek(c))
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    int parse_int() {
        int value = 0;
        const char* begin = text_.data() + pos_;
        const char* end = text_.data() + text_.size();
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc{})
            fail("expected integer");
        pos_ += static_cast<std::size_t>(ptr - begin);
        return value;
    }

    VertexLabel parse_label() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != '[' && text_[pos_] != '(' && text_[pos_] != ',' &&
               text_[pos_] != ')' && text_[pos_] != '#')
            ++pos_;
        if (start == pos_)
            fail("empty role");
        Role role = role_from_name(text_.substr(start, pos_ - start));

        if (role == Role::subdivision || role == Role::line) {
            expect('(');
            VertexLabel a = parse_label();
            expect(',');
            VertexLabel b = parse_label();
            expect(')');
            int copy = 0;
            if (peek('#')) {
                ++pos_;
                copy = parse_int();
            }
            return VertexLabel::composite(role, std::move(a), std::move(b), copy);
        }

        VertexLabel label{role, {}};
        if (peek('[')) {
            ++pos_;
            label.indices.push_back(parse_int());
            while (peek(',')) {
                ++pos_;
                label.indices.push_back(parse_int());
            }
            expect(']');
        }
        return label;
    }
};

} // namespace

std::string_view role_name(Role r) {
    for (const auto& [role, text] : kRoleNames)
        if (role == r)
            return text;
    return "?";
}

VertexLabel VertexLabel::composite(Role r, VertexLabel a, VertexLabel b, int copy) {
    VertexLabel label{r, {}};
    if (copy != 0)
        label.indices.push_back(copy);
    label.ends.reserve(2);
    label.ends.push_back(std::move(a));
    label.ends.push_back(std::move(b));
    return label;
}

int VertexLabel::copy() const {
    return is_composite() && !indices.empty() ? indices.front() : 0;
}

std::string VertexLabel::str() const {
    std::string out(role_name(role));
    if (is_composite()) {
        out += '(';
        out += ends[0].str();
        out += ',';
        out += ends[1].str();
        out += ')';
        if (copy() != 0) {
            out += '#';
            out += std::to_string(copy());
        }
        return out;
    }
    if (!indices.empty()) {
        out += '[';
        for (std::size_t i = 0; i < indices.size(); ++i) {
            if (i)
                out += ',';
            out += std::to_string(indices[i]);
        }
        out += ']';
    }
    return out;
}

VertexLabel VertexLabel::parse(std::string_view text) {
    return LabelParser(text).parse_all();
}

bool operator==(const VertexLabel& a, const VertexLabel& b) {
    return a.role == b.role && a.indices == b.indices && a.ends == b.ends;
}

bool operator<(const VertexLabel& a, const VertexLabel& b) {
    if (a.role != b.role)
        return a.role < b.role;
    if (a.indices != b.indices)
        return a.indices < b.indices;
    return std::lexicographical_compare(a.ends.begin(), a.ends.end(), b.ends.begin(), b.ends.end());
}

} // namespace sqlab
