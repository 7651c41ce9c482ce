#include "wshift/config.hpp"

#include "wshift/errors.hpp"
#include "wshift/measures.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace wshift {

using json = nlohmann::json;

namespace {

// JSON reader with the current field path, for diagnostics.
class Reader {
public:
    Reader(const json& node, std::string path) : node_(node), path_(std::move(path)) {}

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(path_.empty() ? "<root>" : path_, what); }

    const json& node() const { return node_; }
    const std::string& path() const { return path_; }

    Reader field(const std::string& key) const
    {
        if (!node_.is_object()) fail("expected an object");
        auto it = node_.find(key);
        if (it == node_.end()) Reader(node_, join(key)).fail("missing required field");
        return Reader(*it, join(key));
    }

    bool has(const std::string& key) const { return node_.is_object() && node_.contains(key); }

    Reader element(std::size_t i) const { return Reader(node_.at(i), path_ + "[" + std::to_string(i) + "]"); }

    void only_keys(std::initializer_list<const char*> allowed) const
    {
        if (!node_.is_object()) fail("expected an object");
        for (auto it = node_.begin(); it != node_.end(); ++it) {
            bool known = false;
            for (const char* k : allowed) known = known || it.key() == k;
            if (!known) Reader(node_, join(it.key())).fail("unknown field");
        }
    }

    Rational rational() const
    {
        if (!node_.is_string()) fail("expected an exact fraction string such as \"3/4\"");
        try {
            return parse_rational(node_.get<std::string>());
        } catch (const ParseError& e) {
            fail(e.detail());
        }
    }

    std::vector<Rational> rationals() const
    {
        if (!node_.is_array()) fail("expected an array of fraction strings");
        std::vector<Rational> out;
        for (std::size_t i = 0; i < node_.size(); ++i) out.push_back(element(i).rational());
        return out;
    }

    std::size_t count() const
    {
        if (!node_.is_number_integer() || node_.get<long long>() < 0) fail("expected a nonnegative integer");
        return node_.get<std::size_t>();
    }

    long integer() const
    {
        if (!node_.is_number_integer()) fail("expected an integer");
        return node_.get<long>();
    }

    std::string string() const
    {
        if (!node_.is_string()) fail("expected a string");
        return node_.get<std::string>();
    }

private:
    std::string join(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

    const json& node_;
    std::string path_;
};

BaseSpec parse_base(const Reader& r)
{
    const std::string type = r.field("type").string();
    if (type == "rational_tail") {
        r.only_keys({"type", "numerator", "denominator", "prefix", "offset"});
        RationalTailBase b;
        b.numerator = r.field("numerator").rationals();
        b.denominator = r.field("denominator").rationals();
        if (r.has("prefix")) b.prefix = r.field("prefix").rationals();
        if (r.has("offset")) b.offset = r.field("offset").integer();
        return b;
    }
    if (type == "measure") {
        r.only_keys({"type", "atoms", "density"});
        MeasureBase b;
        if (r.has("atoms")) {
            Reader atoms = r.field("atoms");
            if (!atoms.node().is_array()) atoms.fail("expected an array");
            for (std::size_t i = 0; i < atoms.node().size(); ++i) {
                Reader a = atoms.element(i);
                a.only_keys({"at", "mass"});
                Rational at = a.field("at").rational();
                Rational mass = a.field("mass").rational();
                b.atoms.push_back({std::move(at), std::move(mass)});
            }
        }
        if (r.has("density")) {
            Reader dens = r.field("density");
            if (!dens.node().is_array()) dens.fail("expected an array");
            for (std::size_t i = 0; i < dens.node().size(); ++i) {
                Reader d = dens.element(i);
                d.only_keys({"coeff", "exponent"});
                Rational coeff = d.field("coeff").rational();
                Rational exponent = d.field("exponent").rational();
                b.density.push_back({std::move(coeff), std::move(exponent)});
            }
        }
        return b;
    }
    if (type == "constant") {
        r.only_keys({"type", "value"});
        return ConstantBase{r.field("value").rational()};
    }
    if (type == "explicit") {
        r.only_keys({"type", "prefix", "then"});
        return ExplicitBase{r.field("prefix").rationals(), r.field("then").rational()};
    }
    r.field("type").fail("unknown base type \"" + type + "\" (rational_tail, measure, constant, explicit)");
}

FamilyConfig parse_config_node(const Reader& r);

Transform parse_transform(const Reader& r)
{
    if (!r.node().is_object() || r.node().size() != 1) r.fail("a transform is an object with exactly one key");
    const std::string key = r.node().begin().key();
    Reader v = r.field(key);
    if (key == "backstep") return BackstepStep{v.rational()};
    if (key == "power") {
        std::size_t p = v.count();
        if (p == 0) v.fail("power must be at least 1");
        return PowerStep{p};
    }
    if (key == "packet") {
        if (!v.node().is_array() || v.node().size() != 2) v.fail("expected [length, index]");
        return PacketStep{v.element(0).count(), v.element(1).count()};
    }
    if (key == "schur") return SchurStep{std::make_shared<const FamilyConfig>(parse_config_node(v))};
    r.fail("unknown transform \"" + key + "\" (backstep, power, packet, schur)");
}

FamilyConfig parse_config_node(const Reader& r)
{
    r.only_keys({"base", "transforms"});
    FamilyConfig c{parse_base(r.field("base")), {}};
    if (r.has("transforms")) {
        Reader ts = r.field("transforms");
        if (!ts.node().is_array()) ts.fail("expected an array");
        for (std::size_t i = 0; i < ts.node().size(); ++i) c.transforms.push_back(parse_transform(ts.element(i)));
    }
    return c;
}

std::size_t line_of(std::string_view text, std::size_t byte)
{
    std::size_t line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

json rationals_json(const std::vector<Rational>& v)
{
    json out = json::array();
    for (const auto& q : v) out.push_back(to_string(q));
    return out;
}

json to_json(const FamilyConfig& c);

json base_json(const BaseSpec& base)
{
    return std::visit(
        [](const auto& b) -> json {
            using T = std::decay_t<decltype(b)>;
            json j;
            if constexpr (std::is_same_v<T, RationalTailBase>) {
                j["type"] = "rational_tail";
                j["numerator"] = rationals_json(b.numerator);
                j["denominator"] = rationals_json(b.denominator);
                j["prefix"] = rationals_json(b.prefix);
                j["offset"] = b.offset;
            } else if constexpr (std::is_same_v<T, MeasureBase>) {
                j["type"] = "measure";
                j["atoms"] = json::array();
                for (const auto& a : b.atoms) j["atoms"].push_back({{"at", to_string(a.location)}, {"mass", to_string(a.mass)}});
                j["density"] = json::array();
                for (const auto& d : b.density)
                    j["density"].push_back({{"coeff", to_string(d.coeff)}, {"exponent", to_string(d.exponent)}});
            } else if constexpr (std::is_same_v<T, ConstantBase>) {
                j["type"] = "constant";
                j["value"] = to_string(b.value);
            } else {
                j["type"] = "explicit";
                j["prefix"] = rationals_json(b.prefix);
                j["then"] = to_string(b.then);
            }
            return j;
        },
        base);
}

json to_json(const FamilyConfig& c)
{
    json j;
    j["base"] = base_json(c.base);
    j["transforms"] = json::array();
    for (const auto& t : c.transforms) {
        std::visit(
            [&](const auto& step) {
                using T = std::decay_t<decltype(step)>;
                if constexpr (std::is_same_v<T, BackstepStep>) j["transforms"].push_back({{"backstep", to_string(step.s)}});
                else if constexpr (std::is_same_v<T, PowerStep>) j["transforms"].push_back({{"power", step.power}});
                else if constexpr (std::is_same_v<T, PacketStep>)
                    j["transforms"].push_back({{"packet", json::array({step.length, step.index})}});
                else j["transforms"].push_back({{"schur", to_json(*step.other)}});
            },
            t);
    }
    return j;
}

WeightSequenceSq build_base(const BaseSpec& base)
{
    return std::visit(
        [](const auto& b) -> WeightSequenceSq {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, RationalTailBase>) {
                return WeightSequenceSq::rational_tail(b.prefix, UniPoly(b.numerator, "n"), UniPoly(b.denominator, "n"), b.offset);
            } else if constexpr (std::is_same_v<T, MeasureBase>) {
                return shift_from_measure(Measure::probability(b.atoms, b.density));
            } else if constexpr (std::is_same_v<T, ConstantBase>) {
                return WeightSequenceSq::constant(b.value);
            } else {
                return WeightSequenceSq::explicit_then_constant(b.prefix, b.then);
            }
        },
        base);
}

} // namespace

FamilyConfig parse_family_config(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError("line " + std::to_string(line_of(text, e.byte == 0 ? 0 : e.byte - 1)), "malformed JSON");
    }
    return parse_config_node(Reader(doc, ""));
}

FamilyConfig load_family_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError(path.string(), "cannot open config file");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_family_config(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.where(), e.detail());
    }
}

std::string serialize(const FamilyConfig& config)
{
    return to_json(config).dump(2);
}

Family build_family(const FamilyConfig& config)
{
    std::vector<WeightSequenceSq> pieces;
    try {
        pieces.push_back(build_base(config.base));
        for (const auto& t : config.transforms) {
            std::vector<WeightSequenceSq> next;
            for (const auto& w : pieces) {
                std::visit(
                    [&](const auto& step) {
                        using T = std::decay_t<decltype(step)>;
                        if constexpr (std::is_same_v<T, BackstepStep>) {
                            next.push_back(backstep(w, step.s));
                        } else if constexpr (std::is_same_v<T, PowerStep>) {
                            for (auto& p : power_decompose(w, step.power)) next.push_back(std::move(p));
                        } else if constexpr (std::is_same_v<T, PacketStep>) {
                            next.push_back(packet(w, step.length, step.index));
                        } else {
                            Family other = build_family(*step.other);
                            if (other.pieces.size() != 1)
                                throw InvalidFamilyError("a schur operand must denote a single sequence");
                            next.push_back(schur(w, other.pieces.front()));
                        }
                    },
                    t);
            }
            pieces = std::move(next);
        }
    } catch (const InvalidFamilyError&) {
        throw;
    } catch (const Error& e) {
        throw InvalidFamilyError(e.what());
    }
    return {std::move(pieces)};
}

std::optional<Measure> known_measure(const FamilyConfig& config)
{
    if (!config.transforms.empty()) return std::nullopt;
    if (auto m = std::get_if<MeasureBase>(&config.base)) return Measure::probability(m->atoms, m->density);
    if (auto c = std::get_if<ConstantBase>(&config.base)) {
        if (c->value > 0 && c->value <= 1) return Measure::dirac(c->value);
        return std::nullopt;
    }
    if (auto r = std::get_if<RationalTailBase>(&config.base)) {
        if (!r->prefix.empty()) return std::nullopt;
        UniPoly num(r->numerator), den(r->denominator);
        if (num.degree() != 1 || den.degree() != 1) return std::nullopt;
        // normalise to (n + a) / (n + b)
        Rational a = num.coeff(0) / num.coeff(1);
        Rational b = den.coeff(0) / den.coeff(1);
        if (num.coeff(1) != den.coeff(1)) return std::nullopt;
        Rational c = a + r->offset;
        if (b - a != 1 || c <= 0) return std::nullopt;
        return Measure::power_density(c - 1);
    }
    return std::nullopt;
}

bool is_bergman_family(const FamilyConfig& config)
{
    auto mu = known_measure(config);
    return mu && *mu == Measure::power_density(1);
}

} // namespace wshift
