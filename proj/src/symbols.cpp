#include "instmod/symbols.hpp"

#include <algorithm>
#include <cctype>

namespace instmod {

std::string print_name(const GenName& name)
{
    std::string out = name.family;
    const bool lower = !name.family.empty() && std::islower(static_cast<unsigned char>(name.family[0]));
    if (!name.sup.present() && lower) {
        out += std::to_string(name.subscript);
        return out;
    }
    out += "_" + std::to_string(name.subscript);
    if (name.sup.present()) {
        out += "^";
        if (name.sup.tag == Superscript::Tag::none) {
            out += std::to_string(name.sup.index);
        } else {
            out += "{" + std::to_string(name.sup.index);
            out += name.sup.tag == Superscript::Tag::plus ? '+' : '-';
            out += "}";
        }
    }
    return out;
}

GenName parse_name(const std::string& text)
{
    std::size_t pos = 0;
    auto fail = [&]() -> GenName {
        throw std::invalid_argument("malformed generator name: '" + text + "'");
    };

    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos])))
        ++pos;
    if (pos == 0)
        fail();
    GenName name;
    name.family = text.substr(0, pos);

    if (pos < text.size() && text[pos] == '_')
        ++pos;
    std::size_t digits = pos;
    while (digits < text.size() && std::isdigit(static_cast<unsigned char>(text[digits])))
        ++digits;
    if (digits == pos)
        fail();
    name.subscript = std::stoi(text.substr(pos, digits - pos));
    pos = digits;

    if (pos == text.size())
        return name;
    if (text[pos] != '^')
        fail();
    ++pos;

    bool braced = pos < text.size() && text[pos] == '{';
    if (braced)
        ++pos;
    digits = pos;
    while (digits < text.size() && std::isdigit(static_cast<unsigned char>(text[digits])))
        ++digits;
    if (digits == pos)
        fail();
    int index = std::stoi(text.substr(pos, digits - pos));
    pos = digits;
    if (braced) {
        if (pos + 1 >= text.size() || text[pos + 1] != '}')
            fail();
        if (text[pos] == '+')
            name.sup = Superscript::plus(index);
        else if (text[pos] == '-')
            name.sup = Superscript::minus(index);
        else
            fail();
        pos += 2;
    } else {
        name.sup = Superscript::bare(index);
    }
    if (pos != text.size())
        fail();
    return name;
}

RingPresentation::RingPresentation(std::vector<GeneratorSpec> gens) : gens_(std::move(gens))
{
    std::sort(gens_.begin(), gens_.end(),
              [](const GeneratorSpec& a, const GeneratorSpec& b) { return canonical_less(a.name, b.name); });
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i].degree < 2 || gens_[i].degree % 2 != 0)
            throw std::invalid_argument("generator degree must be even and >= 2: " + print_name(gens_[i].name));
        if (i > 0 && gens_[i - 1].name == gens_[i].name)
            throw std::invalid_argument("duplicate generator name: " + print_name(gens_[i].name));
    }
}

std::optional<std::size_t> RingPresentation::index_of(const GenName& name) const
{
    auto it = std::lower_bound(gens_.begin(), gens_.end(), name,
                               [](const GeneratorSpec& g, const GenName& n) { return canonical_less(g.name, n); });
    if (it != gens_.end() && it->name == name)
        return static_cast<std::size_t>(it - gens_.begin());
    return std::nullopt;
}

Ring make_ring(std::vector<GeneratorSpec> gens)
{
    return std::make_shared<const RingPresentation>(std::move(gens));
}

}  // namespace instmod
